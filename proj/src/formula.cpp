#include "halgeo/formula.hpp"

#include <functional>

#include "halgeo/error.hpp"
#include "lexer.hpp"
#include "term_parser.hpp"

namespace halgeo {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

void require_same_sort(const Formula& f, const Formula& g, const char* what) {
  if (!same_sort(f.sort(), g.sort()))
    throw SortError(std::string(what) + " of formulas over different sorts " + f.sort()->name() + " and " +
                    g.sort()->name());
  if (!same_signature(f.signature(), g.signature())) throw SignatureError(std::string(what) + " across signatures");
}

}  // namespace

Formula Formula::make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) + 1;
  for (const auto& t : n.terms) h = mix(h, t.hash());
  for (const auto& k : n.kids) h = mix(h, k.hash());
  h = mix(h, static_cast<std::size_t>(n.var + 1));
  if (n.subst)
    for (const auto& t : n.subst->images()) h = mix(h, t.hash());
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::equality(const Term& w, const Term& w2) {
  if (!same_sort(w.sort(), w2.sort())) throw SortError("equality of terms over different sorts");
  if (!same_signature(w.signature(), w2.signature())) throw SignatureError("equality of terms over different signatures");
  Node n{FormulaKind::Equality, w.sort(), w.signature()};
  n.terms = {w, w2};
  return make(std::move(n));
}

Formula Formula::negation(const Formula& f) {
  Node n{FormulaKind::Not, f.sort(), f.signature(), f.length() + 1};
  n.kids = {f};
  return make(std::move(n));
}

Formula Formula::conjunction(const Formula& f, const Formula& g) {
  require_same_sort(f, g, "conjunction");
  Node n{FormulaKind::And, f.sort(), f.signature(), f.length() + g.length() + 1};
  n.kids = {f, g};
  return make(std::move(n));
}

Formula Formula::disjunction(const Formula& f, const Formula& g) {
  require_same_sort(f, g, "disjunction");
  Node n{FormulaKind::Or, f.sort(), f.signature(), f.length() + g.length() + 1};
  n.kids = {f, g};
  return make(std::move(n));
}

Formula Formula::exists(int var, const Formula& f) {
  if (var < 0 || static_cast<std::size_t>(var) >= f.sort()->size())
    throw SortError("quantified variable outside sort " + f.sort()->name());
  Node n{FormulaKind::Exists, f.sort(), f.signature(), f.length() + 1, var};
  n.kids = {f};
  return make(std::move(n));
}

Formula Formula::exists(std::string_view var, const Formula& f) {
  auto i = f.sort()->index_of(var);
  if (!i) throw SortError("variable '" + std::string(var) + "' not in sort " + f.sort()->name());
  return exists(*i, f);
}

Formula Formula::substitute(const Substitution& s, const Formula& f) {
  if (!same_sort(s.domain(), f.sort()))
    throw SortError("substitution from " + s.domain()->name() + " applied to a formula of sort " + f.sort()->name());
  if (!same_signature(s.signature(), f.signature())) throw SignatureError("substitution over a different signature");
  Node n{FormulaKind::Subst, s.codomain(), f.signature(), f.length() + 1};
  n.kids = {f};
  n.subst = std::make_shared<const Substitution>(s);
  return make(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.var != y.var || !same_sort(x.sort, y.sort)) return false;
  if (x.terms != y.terms || x.kids != y.kids) return false;
  if (x.subst && !(*x.subst == *y.subst)) return false;
  return true;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case FormulaKind::Equality: return "(" + lhs().to_string() + " == " + rhs().to_string() + ")";
    case FormulaKind::Not: return "~" + child().to_string();
    case FormulaKind::And: return "(" + child(0).to_string() + " & " + child(1).to_string() + ")";
    case FormulaKind::Or: return "(" + child(0).to_string() + " | " + child(1).to_string() + ")";
    case FormulaKind::Exists: return "E " + sort()->var(var()) + ". " + child().to_string();
    case FormulaKind::Subst: {
      const auto& s = substitution();
      std::string out = "[";
      for (std::size_t i = 0; i < s.domain()->size(); ++i) {
        if (i) out += ", ";
        out += s.domain()->var(static_cast<int>(i)) + "->" + s.image(static_cast<int>(i)).to_string();
      }
      return out + " : " + s.domain()->name() + " -> " + s.codomain()->name() + "] " + child().to_string();
    }
  }
  return {};
}

namespace {

using detail::Tok;
using detail::TokenStream;

struct FormulaParser {
  TokenStream& ts;
  const SortRegistry& sorts;
  const SignaturePtr& sig;

  Formula parse(const SortPtr& sort) {
    if (ts.accept(Tok::Tilde)) return Formula::negation(parse(sort));
    if (ts.peek().kind == Tok::Ident && ts.peek().text == "E" && ts.peek(1).kind == Tok::Ident &&
        ts.peek(2).kind == Tok::Dot) {
      ts.next();
      const auto name = ts.next().text;
      ts.next();
      auto i = sort->index_of(name);
      if (!i) throw SortError("quantified variable '" + name + "' not in sort " + sort->name());
      return Formula::exists(*i, parse(sort));
    }
    if (ts.peek().kind == Tok::LBracket) return parse_subst(sort);
    ts.expect(Tok::LParen, "'(', '~', '[' or 'E'");
    const auto k = ts.peek().kind;
    const bool nested = k == Tok::LParen || k == Tok::Tilde || k == Tok::LBracket ||
                        (k == Tok::Ident && ts.peek().text == "E" && ts.peek(1).kind == Tok::Ident &&
                         ts.peek(2).kind == Tok::Dot);
    if (!nested) {
      auto w = detail::parse_term_tokens(ts, sort, sig);
      ts.expect(Tok::EqEq, "'=='");
      auto w2 = detail::parse_term_tokens(ts, sort, sig);
      ts.expect(Tok::RParen, "')'");
      return Formula::equality(w, w2);
    }
    auto f = parse(sort);
    Formula out = f;
    if (ts.accept(Tok::Amp)) {
      out = Formula::conjunction(f, parse(sort));
    } else if (ts.accept(Tok::Bar)) {
      out = Formula::disjunction(f, parse(sort));
    } else {
      ts.fail("expected '&' or '|'");
    }
    ts.expect(Tok::RParen, "')'");
    return out;
  }

  Formula parse_subst(const SortPtr& sort) {
    ts.expect(Tok::LBracket, "'['");
    struct Pending {
      std::string var;
      std::size_t mark;
    };
    // Images are parsed once the codomain sort is known.
    std::vector<Pending> pending;
    do {
      auto var = ts.expect(Tok::Ident, "a variable").text;
      ts.expect(Tok::Arrow, "'->'");
      pending.push_back({var, ts.mark()});
      int depth = 0;
      while (!ts.at_end()) {
        auto k = ts.peek().kind;
        if (depth == 0 && (k == Tok::Comma || k == Tok::Colon)) break;
        if (k == Tok::LParen) ++depth;
        if (k == Tok::RParen) --depth;
        ts.next();
      }
    } while (ts.accept(Tok::Comma));
    ts.expect(Tok::Colon, "':'");
    auto from_name = ts.expect(Tok::Ident, "a sort name").text;
    ts.expect(Tok::Arrow, "'->'");
    auto to_name = ts.expect(Tok::Ident, "a sort name").text;
    ts.expect(Tok::RBracket, "']'");
    const auto body_mark = ts.mark();
    auto from = sorts.find(from_name);
    if (!from) throw SortError("unknown sort '" + from_name + "'");
    auto to = sorts.find(to_name);
    if (!to) throw SortError("unknown sort '" + to_name + "'");
    if (!same_sort(to, sort))
      throw SortError("substitution into " + to_name + " used where sort " + sort->name() + " is expected");
    std::vector<std::optional<Term>> images(from->size());
    for (const auto& p : pending) {
      auto i = from->index_of(p.var);
      if (!i) throw SortError("variable '" + p.var + "' not in sort " + from_name);
      if (images[static_cast<std::size_t>(*i)]) throw SyntaxError("variable '" + p.var + "' mapped twice");
      ts.reset(p.mark);
      images[static_cast<std::size_t>(*i)] = detail::parse_term_tokens(ts, to, sig);
      auto k = ts.peek().kind;
      if (k != Tok::Comma && k != Tok::Colon) ts.fail("expected ',' or ':' after substitution image");
    }
    std::vector<Term> total;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i])
        throw SortError("substitution does not map variable '" + from->var(static_cast<int>(i)) + "' of " + from_name);
      total.push_back(*images[i]);
    }
    ts.reset(body_mark);
    auto body = parse(from);
    return Formula::substitute(Substitution(from, to, std::move(total)), body);
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const SortPtr& sort, const SortRegistry& sorts, const SignaturePtr& sig) {
  TokenStream ts(text);
  FormulaParser p{ts, sorts, sig};
  auto f = p.parse(sort);
  if (!ts.at_end()) ts.fail("expected end of formula");
  return f;
}

}  // namespace halgeo
