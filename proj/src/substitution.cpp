#include "halgeo/substitution.hpp"

#include <sstream>

#include "halgeo/error.hpp"

namespace halgeo {

Substitution::Substitution(SortPtr domain, SortPtr codomain, std::vector<Term> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw SortError("substitution without sorts");
  if (images_.size() != domain_->size())
    throw SortError("substitution on " + domain_->name() + " must give " +
                    std::to_string(domain_->size()) + " images, got " + std::to_string(images_.size()));
  for (const auto& t : images_) {
    if (!same_sort(t.sort(), codomain_))
      throw SortError("substitution image " + t.to_string() + " is not over sort " + codomain_->name());
    if (!same_signature(t.signature(), images_.front().signature()))
      throw SignatureError("substitution images use different signatures");
  }
}

Substitution Substitution::identity(const SignaturePtr& sig, const SortPtr& sort) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < sort->size(); ++i) images.push_back(Term::variable(sig, sort, static_cast<int>(i)));
  return Substitution(sort, sort, std::move(images));
}

bool Substitution::is_identity() const {
  if (!same_sort(domain_, codomain_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!images_[i].is_variable() || images_[i].var() != static_cast<int>(i)) return false;
  return true;
}

std::string Substitution::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    out << (i ? ", " : "") << domain_->var(static_cast<int>(i)) << "->" << images_[i].to_string();
  out << " : " << domain_->name() << " -> " << codomain_->name();
  return out.str();
}

bool operator==(const Substitution& a, const Substitution& b) {
  return same_sort(a.domain_, b.domain_) && same_sort(a.codomain_, b.codomain_) && a.images_ == b.images_;
}

namespace {

Term::NodePtr substitute(const Term::NodePtr& n, const std::vector<Term>& images, const SignaturePtr& sig,
                         const SortPtr& sort) {
  if (n->op < 0) return images[static_cast<std::size_t>(n->var)].node();
  std::vector<Term> args;
  args.reserve(n->kids.size());
  for (const auto& k : n->kids) args.push_back(Term::from_node(sig, sort, substitute(k, images, sig, sort)));
  return Term::apply(sig, sort, n->op, args).node();
}

}  // namespace

Term apply_substitution(const Substitution& s, const Term& w) {
  if (!same_sort(w.sort(), s.domain()))
    throw SortError("term " + w.to_string() + " is over sort " + w.sort()->name() +
                    ", substitution expects " + s.domain()->name());
  if (!same_signature(w.signature(), s.signature()))
    throw SignatureError("term and substitution use different signatures");
  return Term::from_node(s.signature(), s.codomain(), substitute(w.node(), s.images(), s.signature(), s.codomain()));
}

Substitution compose(const Substitution& s, const Substitution& s2) {
  if (!same_sort(s.codomain(), s2.domain()))
    throw SortError("cannot compose " + s.domain()->name() + "->" + s.codomain()->name() + " with " +
                    s2.domain()->name() + "->" + s2.codomain()->name());
  std::vector<Term> images;
  images.reserve(s.images().size());
  for (const auto& t : s.images()) images.push_back(apply_substitution(s2, t));
  return Substitution(s.domain(), s2.codomain(), std::move(images));
}

Substitution elementary_substitution(const SortPtr& sort, std::string_view x, const Term& w) {
  auto idx = sort->index_of(x);
  if (!idx) throw SortError("variable '" + std::string(x) + "' not in sort " + sort->name());
  if (!same_sort(w.sort(), sort))
    throw SortError("term " + w.to_string() + " is not over sort " + sort->name());
  auto s = Substitution::identity(w.signature(), sort);
  auto images = s.images();
  images[static_cast<std::size_t>(*idx)] = w;
  return Substitution(sort, sort, std::move(images));
}

}  // namespace halgeo
