#include "halgeo/term.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "halgeo/error.hpp"
#include "term_parser.hpp"

namespace halgeo {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Term::NodePtr make_node(int op, int var, std::vector<Term::NodePtr> kids) {
  auto n = std::make_shared<Term::Node>();
  n->op = op;
  n->var = var;
  std::size_t h = mix(static_cast<std::size_t>(op + 2), static_cast<std::size_t>(var + 2));
  for (const auto& k : kids) {
    n->depth = std::max(n->depth, k->depth + 1);
    n->size += k->size;
    h = mix(h, k->hash);
  }
  n->hash = h;
  n->kids = std::move(kids);
  return n;
}

bool node_equal(const Term::Node& a, const Term::Node& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.op != b.op || a.var != b.var || a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!node_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

int node_compare(const Term::Node& a, const Term::Node& b) {
  if (&a == &b) return 0;
  if (a.depth != b.depth) return a.depth < b.depth ? -1 : 1;
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  // variables before operations
  bool av = a.op < 0, bv = b.op < 0;
  if (av != bv) return av ? -1 : 1;
  if (av) return a.var == b.var ? 0 : (a.var < b.var ? -1 : 1);
  if (a.op != b.op) return a.op < b.op ? -1 : 1;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (int c = node_compare(*a.kids[i], *b.kids[i])) return c;
  return 0;
}

void print_node(const Term::Node& n, const VarSort& sort, const Signature& sig, std::string& out) {
  if (n.op < 0) {
    out += sort.var(n.var);
    return;
  }
  out += sig.op(n.op).name;
  out += '(';
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    if (i) out += ", ";
    print_node(*n.kids[i], sort, sig, out);
  }
  out += ')';
}

}  // namespace

Term Term::variable(SignaturePtr sig, SortPtr sort, int var) {
  if (!sort) throw SortError("term without a sort");
  if (var < 0 || static_cast<std::size_t>(var) >= sort->size())
    throw SortError("variable index " + std::to_string(var) + " outside sort " + sort->name());
  return Term(std::move(sig), std::move(sort), make_node(-1, var, {}));
}

Term Term::variable(SignaturePtr sig, SortPtr sort, std::string_view name) {
  auto idx = sort->index_of(name);
  if (!idx) throw SortError("variable '" + std::string(name) + "' not in sort " + sort->name());
  return variable(std::move(sig), std::move(sort), *idx);
}

Term Term::apply(SignaturePtr sig, SortPtr sort, int op, const std::vector<Term>& args) {
  if (!sig || op < 0 || static_cast<std::size_t>(op) >= sig->size())
    throw UnknownSymbolError("operation index " + std::to_string(op) + " not in signature");
  const auto& sym = sig->op(op);
  if (static_cast<std::size_t>(sym.arity) != args.size())
    throw ArityError("operation '" + sym.name + "' expects " + std::to_string(sym.arity) +
                     " arguments, got " + std::to_string(args.size()));
  std::vector<NodePtr> kids;
  kids.reserve(args.size());
  for (const auto& a : args) {
    if (!same_sort(a.sort(), sort))
      throw SortError("argument of '" + sym.name + "' is over sort " + a.sort()->name() +
                      ", expected " + sort->name());
    if (!same_signature(a.signature(), sig))
      throw SignatureError("argument of '" + sym.name + "' uses a different signature");
    kids.push_back(a.node());
  }
  return Term(std::move(sig), std::move(sort), make_node(op, -1, std::move(kids)));
}

Term Term::from_node(SignaturePtr sig, SortPtr sort, NodePtr node) {
  return Term(std::move(sig), std::move(sort), std::move(node));
}

Term Term::arg(std::size_t i) const { return Term(sig_, sort_, node_->kids.at(i)); }

std::vector<int> Term::support() const {
  std::set<int> vars;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.op < 0) vars.insert(n.var);
    for (const auto& k : n.kids) walk(*k);
  };
  walk(*node_);
  return {vars.begin(), vars.end()};
}

std::string Term::to_string() const {
  std::string out;
  print_node(*node_, *sort_, *sig_, out);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  return same_sort(a.sort_, b.sort_) && node_equal(*a.node_, *b.node_);
}

bool operator<(const Term& a, const Term& b) { return node_compare(*a.node_, *b.node_) < 0; }

namespace detail {

Term parse_term_tokens(TokenStream& ts, const SortPtr& sort, const SignaturePtr& sig) {
  const auto& tok = ts.expect(Tok::Ident, "a variable or operation name");
  std::string name = tok.text;
  if (ts.peek().kind == Tok::LParen) {
    ts.next();
    auto op = sig->find(name);
    if (!op) throw UnknownSymbolError("unknown operation '" + name + "'");
    std::vector<Term> args;
    if (!ts.accept(Tok::RParen)) {
      do {
        args.push_back(parse_term_tokens(ts, sort, sig));
      } while (ts.accept(Tok::Comma));
      ts.expect(Tok::RParen, "')' or ','");
    }
    return Term::apply(sig, sort, *op, args);
  }
  if (auto var = sort->index_of(name)) return Term::variable(sig, sort, *var);
  if (auto op = sig->find(name)) {
    if (sig->op(*op).arity != 0)
      throw ArityError("operation '" + name + "' used without arguments");
    return Term::apply(sig, sort, *op, {});
  }
  throw SortError("variable '" + name + "' not in sort " + sort->name());
}

}  // namespace detail

Term parse_term(std::string_view text, const SortPtr& sort, const SignaturePtr& sig) {
  detail::TokenStream ts(text);
  Term t = detail::parse_term_tokens(ts, sort, sig);
  if (!ts.at_end()) ts.fail("trailing input after term");
  return t;
}

std::vector<Term> enumerate_terms(const SignaturePtr& sig, const SortPtr& sort, int max_depth,
                                  std::size_t limit) {
  std::vector<Term> out;
  auto push = [&](Term t) {
    if (out.size() >= limit)
      throw CapExceeded("term enumeration exceeds " + std::to_string(limit) + " terms");
    out.push_back(std::move(t));
  };
  for (std::size_t v = 0; v < sort->size(); ++v) push(Term::variable(sig, sort, static_cast<int>(v)));
  for (std::size_t op = 0; op < sig->size(); ++op)
    if (sig->op(static_cast<int>(op)).arity == 0) push(Term::apply(sig, sort, static_cast<int>(op), {}));

  std::size_t prev_begin = 0;
  for (int d = 1; d <= max_depth; ++d) {
    const std::size_t known = out.size();
    for (std::size_t op = 0; op < sig->size(); ++op) {
      const int k = sig->op(static_cast<int>(op)).arity;
      if (k == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        // at least one argument must come from the previous depth layer
        bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= prev_begin; });
        if (fresh) {
          std::vector<Term> args;
          for (auto i : idx) args.push_back(out[i]);
          push(Term::apply(sig, sort, static_cast<int>(op), args));
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == known) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
    prev_begin = known;
    if (out.size() == known) break;
  }
  return out;
}

}  // namespace halgeo
