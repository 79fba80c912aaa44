#include "halgeo/render.hpp"

#include <sstream>

namespace halgeo {

namespace {

std::string join_indices(const std::vector<PointIndex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string map_text(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? " " : "") + a.element_name(static_cast<Element>(i)) + "->" + b.element_name(m[i]);
  return out;
}

std::string map_indices(const ElementMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out;
}

std::string equation_text(const Equation& e) { return "(" + e.first.to_string() + " == " + e.second.to_string() + ")"; }

}  // namespace

std::string point_assignment(const FiniteAlgebra& h, const Point& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.values.size(); ++i)
    out += (i ? ", " : "") + mu.sort->var(static_cast<int>(i)) + "=" + h.element_name(mu.values[i]);
  return out;
}

std::string render_point_set(const PointSet& a, Format f) {
  if (f == Format::Text) return a.to_string();
  return "points=" + std::to_string(a.count()) + "\nmask=" + a.hex() + "\n";
}

std::string render_partition(const Partition& p, Format f) {
  auto classes = p.classes();
  std::ostringstream out;
  if (f == Format::Machine) {
    out << "classes=" << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) out << "class" << i << '=' << join_indices(classes[i]) << '\n';
    return out.str();
  }
  out << "classes " << classes.size() << '\n';
  for (const auto& c : classes) {
    out << "class " << c.front() << ": {";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << format_point(p.algebra, point_at(p.algebra, p.sort, c[i]));
    out << "}\n";
  }
  return out.str();
}

std::string render_bool(std::string_view key, bool value, Format f) {
  return std::string(key) + (f == Format::Machine ? "=" : ": ") + (value ? "true" : "false") + "\n";
}

std::string render_axioms(const AxiomReport& r, Format f) {
  if (f == Format::Text) return r.summary();
  std::ostringstream out;
  out << "result=" << (r.all_passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& t : r.tallies) {
    out << "axiom" << axiom_label(t.axiom) << '=' << t.passed << '/' << t.total << '\n';
    if (t.counterexample) out << "counterexample" << axiom_label(t.axiom) << '=' << *t.counterexample << '\n';
  }
  return out.str();
}

std::string render_ag(const AgResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f) {
  std::ostringstream out;
  const auto& o = r.options;
  if (f == Format::Machine) {
    out << "verdict=" << (r.not_equivalent ? "NOT-EQUIVALENT" : "BOUNDED-EQUIVALENT") << '\n';
    out << "depth=" << o.depth << "\nmax_vars=" << o.max_vars << "\nmax_premises=" << o.max_premises << '\n';
    out << "checks=" << r.checks << "\nbudget_exhausted=" << (r.budget_exhausted ? "true" : "false") << '\n';
    if (r.witness) {
      const auto& w = *r.witness;
      out << "sort=" << w.sort->to_string() << '\n';
      for (std::size_t i = 0; i < w.premises.size(); ++i) out << "premise" << i << '=' << equation_text(w.premises[i]) << '\n';
      out << "conclusion=" << equation_text(w.conclusion) << '\n';
      out << "holds_in=" << (w.holds_in == 0 ? h1 : h2).name() << "\nfails_in=" << (w.holds_in == 0 ? h2 : h1).name() << '\n';
    }
    return out.str();
  }
  if (!r.witness) {
    out << "BOUNDED-EQUIVALENT (depth " << o.depth << ", max-vars " << o.max_vars << ", premises <= " << o.max_premises
        << ", " << r.checks << " checks" << (r.budget_exhausted ? ", budget exhausted" : "") << ")\n";
    return out.str();
  }
  const auto& w = *r.witness;
  out << "NOT-EQUIVALENT; witness {";
  for (std::size_t i = 0; i < w.premises.size(); ++i) out << (i ? ", " : "") << equation_text(w.premises[i]);
  out << "} => " << equation_text(w.conclusion) << "; holds in " << (w.holds_in == 0 ? h1 : h2).name() << ", fails in "
      << (w.holds_in == 0 ? h2 : h1).name() << '\n';
  out << "sort " << w.sort->to_string() << '\n';
  return out.str();
}

namespace {

std::string isotypy_machine(const IsotypyResult& r, const FiniteAlgebra* hs[2], std::string_view verdict) {
  std::ostringstream out;
  out << "verdict=" << verdict << '\n';
  out << "max_vars=" << r.max_vars << "\nrank=" << r.rank << "\nterm_depth=" << r.term_depth << '\n';
  if (r.witness) {
    const auto& w = *r.witness;
    out << "witness_algebra=" << hs[w.side]->name() << "\nwitness_point=" << point_assignment(*hs[w.side], w.point)
        << "\nseparating_rank=" << w.separating_rank << '\n';
    if (w.sentence) out << "sentence=" << w.sentence->to_string() << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_isotypy(const IsotypyResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f) {
  const FiniteAlgebra* hs[2] = {&h1, &h2};
  if (f == Format::Machine) return isotypy_machine(r, hs, r.isotypic ? "ISOTYPIC" : "NOT ISOTYPIC");
  std::ostringstream out;
  if (!r.witness) {
    out << "ISOTYPIC (max-vars " << r.max_vars << ", rank " << r.rank << ")\n";
    return out.str();
  }
  const auto& w = *r.witness;
  out << "NOT ISOTYPIC; witness " << point_assignment(*hs[w.side], w.point) << "; separating rank "
      << w.separating_rank << '\n';
  out << "unmatched point of " << hs[w.side]->name() << " (max-vars " << r.max_vars << ", rank " << r.rank << ")\n";
  if (w.sentence)
    out << "sentence true in " << hs[w.side]->name() << ", false in " << hs[1 - w.side]->name() << ": "
        << w.sentence->to_string() << '\n';
  return out.str();
}

std::string render_lg(const IsotypyResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f) {
  const FiniteAlgebra* hs[2] = {&h1, &h2};
  if (f == Format::Machine) return isotypy_machine(r, hs, r.isotypic ? "EQUIVALENT" : "NOT-EQUIVALENT");
  std::ostringstream out;
  if (!r.witness) {
    out << "EQUIVALENT (max-vars " << r.max_vars << ", rank " << r.rank << ")\n";
    return out.str();
  }
  const auto& w = *r.witness;
  out << "NOT-EQUIVALENT; witness " << (w.sentence ? w.sentence->to_string() : std::string("(no sentence)")) << '\n';
  out << "sentence holds in " << hs[w.side]->name() << ", fails in " << hs[1 - w.side]->name() << "; point "
      << point_assignment(*hs[w.side], w.point) << "; separating rank " << w.separating_rank << " (max-vars "
      << r.max_vars << ", rank " << r.rank << ")\n";
  return out.str();
}

std::string render_homogeneity(const HomogeneityResult& r, const FiniteAlgebra& h, std::string_view word, Format f) {
  std::ostringstream out;
  if (f == Format::Machine) {
    out << "verdict=" << (r.homogeneous ? "" : "NOT ") << word << "\nmax_vars=" << r.max_vars << '\n';
    if (r.rank >= 0) out << "rank=" << r.rank << '\n';
    if (r.counterexample)
      out << "point_a=" << point_assignment(h, r.counterexample->first) << "\npoint_b="
          << point_assignment(h, r.counterexample->second) << '\n';
    return out.str();
  }
  if (!r.counterexample) {
    out << word << " (max-vars " << r.max_vars;
    if (r.rank >= 0) out << ", rank " << r.rank;
    out << ")\n";
    return out.str();
  }
  out << "NOT " << word << "; points " << format_point(h, r.counterexample->first) << " and "
      << format_point(h, r.counterexample->second)
      << (r.rank >= 0 ? " share a type" : " have equal kernels") << " but lie in different orbits\n";
  return out.str();
}

std::string render_automorphisms(const FiniteAlgebra& h, const std::vector<ElementMap>& group, Format f) {
  std::ostringstream out;
  if (f == Format::Machine) {
    out << "count=" << group.size() << '\n';
    for (std::size_t i = 0; i < group.size(); ++i) out << "aut" << i << '=' << map_indices(group[i]) << '\n';
    return out.str();
  }
  out << "automorphisms " << group.size() << '\n';
  for (const auto& s : group) out << "  " << map_text(h, h, s) << '\n';
  return out.str();
}

std::string render_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const std::optional<ElementMap>& map,
                               Format f) {
  if (f == Format::Machine) {
    std::string out = std::string("isomorphic=") + (map ? "true" : "false") + "\n";
    if (map) out += "map=" + map_indices(*map) + "\n";
    return out;
  }
  if (!map) return "NOT ISOMORPHIC\n";
  return "ISOMORPHIC\n  " + map_text(h1, h2, *map) + "\n";
}

std::string render_system(const FormulaSystem& t, std::size_t original_size, Format f) {
  std::ostringstream out;
  if (f == Format::Machine) {
    out << "original=" << original_size << "\nkept=" << t.formulas.size() << '\n';
    for (std::size_t i = 0; i < t.formulas.size(); ++i) out << "formula" << i << '=' << t.formulas[i].to_string() << '\n';
    return out.str();
  }
  out << "# kept " << t.formulas.size() << " of " << original_size << '\n';
  out << "sort " << t.sort->name() << " =";
  for (const auto& v : t.sort->vars()) out << ' ' << v;
  out << '\n';
  for (const auto& g : t.formulas) out << g.to_string() << '\n';
  return out.str();
}

}  // namespace halgeo
