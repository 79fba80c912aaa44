#include "halgeo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "halgeo/algebra_io.hpp"
#include "halgeo/error.hpp"
#include "halgeo/geometry.hpp"
#include "halgeo/halmos_axioms.hpp"
#include "halgeo/morphisms.hpp"
#include "halgeo/render.hpp"
#include "halgeo/types.hpp"

namespace halgeo {

namespace {

const std::vector<std::string> kCommands = {
    "eval",    "theory", "solve-eq",     "solve-log",  "closure-alg", "closure-log",     "definable-closure",
    "lker",    "ker",    "aut",          "orbits",     "types",       "check-axioms",    "ag-equiv",
    "lg-equiv", "isotypic", "homogeneous", "alg-homogeneous", "noetherian-reduce", "iso"};

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string command;
  std::string algebra, second, formula, system, variety, point, points, format = "text";
  std::vector<std::string> sorts;
  std::optional<int> rank;
  int depth = -1;
  int max_vars = -1;
  int premises = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  std::optional<std::uint64_t> cap;
  bool exhaustive = false;
};

class CapGuard {
 public:
  CapGuard() : saved_(point_cap()) {}
  ~CapGuard() { set_point_cap(saved_); }

 private:
  std::uint64_t saved_;
};

std::uint64_t parse_cap(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used == text.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("invalid point cap '") + text + "' from " + origin);
}

struct Workspace {
  const Options& opt;
  Format format;
  std::optional<VarietySpec> variety;
  SortRegistry sorts;
  std::vector<SortPtr> declared;  // --sort values in order

  explicit Workspace(const Options& o) : opt(o), format(o.format == "machine" ? Format::Machine : Format::Text) {
    if (!opt.variety.empty()) variety = load_variety(opt.variety);
    int unnamed = 0;
    for (const auto& s : opt.sorts) declared.push_back(declare_sort(s, unnamed));
  }

  SortPtr declare_sort(const std::string& text, int& unnamed) {
    auto eq = text.find('=');
    std::string name;
    std::string vars_text = text;
    if (eq != std::string::npos) {
      name = text.substr(0, eq);
      name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
      vars_text = text.substr(eq + 1);
    }
    std::istringstream in(vars_text);
    std::vector<std::string> vars;
    for (std::string v; in >> v;) vars.push_back(v);
    if (eq == std::string::npos && vars.size() == 1)
      if (auto known = sorts.find(vars.front())) return known;
    if (name.empty()) name = unnamed++ == 0 ? "X" : "X" + std::to_string(unnamed);
    auto sort = make_sort(name, std::move(vars));
    sorts.add(sort);
    return sort;
  }

  FiniteAlgebra load(const std::string& path, const char* flag) const {
    if (path.empty()) throw UsageError(opt.command + " needs " + flag);
    if (!variety) return load_algebra(path);
    try {
      return parse_algebra(read_text_file(path), *variety);
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }

  FiniteAlgebra first() const { return load(opt.algebra, "--algebra"); }
  FiniteAlgebra second() const { return load(opt.second, "--b"); }

  SortPtr sort() const {
    if (declared.empty()) throw UsageError(opt.command + " needs --sort");
    return declared.front();
  }

  Formula formula(const FiniteAlgebra& h, const SortPtr& sort) const {
    if (opt.formula.empty()) throw UsageError(opt.command + " needs --formula");
    return parse_formula(opt.formula, sort, sorts, h.signature());
  }

  std::string system_text() const {
    if (opt.system.empty()) throw UsageError(opt.command + " needs --system");
    return read_text_file(opt.system);
  }

  EquationSystem equations(const FiniteAlgebra& h) {
    try {
      return parse_equation_system(system_text(), sorts, h.signature());
    } catch (const FormatError& e) {
      throw FormatError(opt.system + ": " + e.what());
    }
  }

  FormulaSystem formulas(const FiniteAlgebra& h) {
    try {
      return parse_formula_system(system_text(), sorts, h.signature());
    } catch (const FormatError& e) {
      throw FormatError(opt.system + ": " + e.what());
    }
  }

  // A point set from --points (indices over --sort) or from a formula system.
  PointSet point_set(const FiniteAlgebra& h) {
    if (!opt.points.empty()) {
      std::vector<PointIndex> idx;
      std::string cleaned = opt.points;
      std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
      std::istringstream in(cleaned);
      for (std::string t; in >> t;) {
        try {
          std::size_t used = 0;
          idx.push_back(std::stoull(t, &used));
          if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
          throw UsageError("invalid point index '" + t + "' in --points");
        }
      }
      return PointSet::from_indices(h, sort(), idx);
    }
    if (!opt.system.empty()) return logical_solve(h, formulas(h));
    throw UsageError(opt.command + " needs --points (with --sort) or --system");
  }

  int max_vars(int fallback) const { return opt.max_vars < 0 ? fallback : opt.max_vars; }
  int depth(int fallback) const { return opt.depth < 0 ? fallback : opt.depth; }
};

const Formula& single_atom(const Formula& f) {
  if (f.kind() != FormulaKind::Equality) throw UsageError("--formula must be a single equation \"(w == w')\" here");
  return f;
}

CliResult run(const Options& opt) {
  Workspace ws(opt);
  const auto fmt = ws.format;
  CliResult r;
  const auto& c = opt.command;
  if (c == "eval") {
    auto h = ws.first();
    r.out = render_point_set(val(h, ws.formula(h, ws.sort())), fmt);
  } else if (c == "theory") {
    auto h = ws.first();
    r.out = render_bool("in_theory", theory_contains(h, ws.formula(h, ws.sort())), fmt);
  } else if (c == "solve-eq") {
    auto h = ws.first();
    r.out = render_point_set(solve_equations(h, ws.equations(h)), fmt);
  } else if (c == "solve-log") {
    auto h = ws.first();
    r.out = render_point_set(logical_solve(h, ws.formulas(h)), fmt);
  } else if (c == "closure-alg") {
    auto h = ws.first();
    auto t = ws.equations(h);
    auto f = ws.formula(h, t.sort);
    const auto& atom = single_atom(f);
    auto ans = algebraic_closure_contains(h, t, atom.lhs(), atom.rhs());
    r.out = render_bool("in_closure", ans.contains, fmt);
    if (ans.empty_set) r.out += render_bool("empty_solution_set", true, fmt);
  } else if (c == "closure-log") {
    auto h = ws.first();
    auto a = ws.point_set(h);
    auto ans = logical_closure_contains(h, a, ws.formula(h, a.sort()));
    r.out = render_bool("in_closure", ans.contains, fmt);
    if (ans.empty_set) r.out += render_bool("empty_point_set", true, fmt);
  } else if (c == "definable-closure") {
    auto h = ws.first();
    r.out = render_point_set(definable_closure(h, ws.point_set(h)), fmt);
  } else if (c == "lker" || c == "ker") {
    auto h = ws.first();
    auto sort = ws.sort();
    if (opt.point.empty()) throw UsageError(c + " needs --point");
    auto mu = parse_point(h, sort, opt.point);
    auto f = ws.formula(h, sort);
    if (c == "lker") {
      r.out = render_bool("in_lker", lker_contains(h, mu, f), fmt);
    } else {
      const auto& atom = single_atom(f);
      r.out = render_bool("in_ker", kernel_contains(h, mu, atom.lhs(), atom.rhs()), fmt);
    }
  } else if (c == "aut") {
    auto h = ws.first();
    r.out = render_automorphisms(h, automorphism_group(h), fmt);
  } else if (c == "orbits") {
    auto h = ws.first();
    r.out = render_partition(orbit_partition(h, ws.sort()), fmt);
  } else if (c == "types") {
    auto h = ws.first();
    auto sort = ws.sort();
    const int rank = opt.rank.value_or(static_cast<int>(h.size() + sort->size()));
    r.out = render_partition(type_partition(h, sort, rank, ws.depth(2)), fmt);
  } else if (c == "check-axioms") {
    auto h = ws.first();
    std::vector<SortPtr> sorts = ws.declared;
    if (sorts.empty()) sorts = {standard_sort(1), standard_sort(2)};
    AxiomReport report;
    if (opt.exhaustive) {
      report = verify_halmos_axioms_exhaustive(h, sorts, ws.depth(1));
    } else {
      AxiomCheckOptions o;
      o.trials = opt.trials;
      o.seed = opt.seed;
      o.term_depth = ws.depth(2);
      report = verify_halmos_axioms(h, sorts, o);
    }
    r.out = render_axioms(report, fmt);
    r.exit_code = report.all_passed() ? 0 : 1;
  } else if (c == "ag-equiv") {
    auto h1 = ws.first(), h2 = ws.second();
    AgOptions o;
    o.depth = ws.depth(2);
    o.max_vars = ws.max_vars(1);
    o.max_premises = opt.premises;
    o.budget = opt.budget;
    auto res = ag_equivalent(h1, h2, o);
    r.out = render_ag(res, h1, h2, fmt);
    r.exit_code = res.not_equivalent ? 1 : 0;
  } else if (c == "lg-equiv" || c == "isotypic") {
    auto h1 = ws.first(), h2 = ws.second();
    IsotypyOptions o;
    o.max_vars = ws.max_vars(2);
    o.rank = opt.rank;
    o.term_depth = ws.depth(2);
    auto res = c == "isotypic" ? isotypic_check(h1, h2, o) : lg_equivalent(h1, h2, o);
    r.out = c == "isotypic" ? render_isotypy(res, h1, h2, fmt) : render_lg(res, h1, h2, fmt);
    r.exit_code = res.isotypic ? 0 : 1;
  } else if (c == "homogeneous") {
    auto h = ws.first();
    auto res = homogeneity_check(h, ws.max_vars(2), opt.rank, ws.depth(2));
    r.out = render_homogeneity(res, h, "HOMOGENEOUS", fmt);
    r.exit_code = res.homogeneous ? 0 : 1;
  } else if (c == "alg-homogeneous") {
    auto h = ws.first();
    auto res = algebraic_homogeneity_check(h, ws.max_vars(2));
    r.out = render_homogeneity(res, h, "ALGEBRAICALLY-HOMOGENEOUS", fmt);
    r.exit_code = res.homogeneous ? 0 : 1;
  } else if (c == "noetherian-reduce") {
    auto h = ws.first();
    auto t = ws.formulas(h);
    r.out = render_system(noetherian_reduce(h, t), t.formulas.size(), fmt);
  } else if (c == "iso") {
    auto h1 = ws.first(), h2 = ws.second();
    auto m = isomorphism_search(h1, h2);
    r.out = render_isomorphism(h1, h2, m, fmt);
    r.exit_code = m ? 0 : 1;
  } else {
    throw UsageError("unknown command '" + c + "'");
  }
  return r;
}

void build_app(CLI::App& app, Options& o) {
  app.add_option("command", o.command, "one of: eval theory solve-eq solve-log closure-alg closure-log "
                                       "definable-closure lker ker aut orbits types check-axioms ag-equiv lg-equiv "
                                       "isotypic homogeneous alg-homogeneous noetherian-reduce iso")
      ->required();
  app.add_option("-a,--a,--algebra", o.algebra, "algebra file");
  app.add_option("--b", o.second, "second algebra file");
  app.add_option("--sort", o.sorts, "variables \"x y\", \"Name=x y\" or a registered sort name (repeatable)");
  app.add_option("--formula", o.formula, "formula text");
  app.add_option("--system", o.system, "equation or formula system file");
  app.add_option("--variety", o.variety, "variety file; algebras must satisfy its identities");
  app.add_option("--point", o.point, "point, e.g. \"x=g, y=e\"");
  app.add_option("--points", o.points, "comma-separated point indices over the first --sort");
  app.add_option("--rank", o.rank, "quantifier rank")->check(CLI::NonNegativeNumber);
  app.add_option("--depth", o.depth, "term depth")->check(CLI::NonNegativeNumber);
  app.add_option("--max-vars", o.max_vars, "largest sort size")->check(CLI::PositiveNumber);
  app.add_option("--premises", o.premises, "equations per system in ag-equiv")->check(CLI::NonNegativeNumber);
  app.add_option("--trials", o.trials, "random trials per axiom")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--budget", o.budget, "quasiidentity checks in ag-equiv")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--cap", o.cap, "point cap (overrides HALGEO_CAP)");
  app.add_flag("--exhaustive", o.exhaustive, "exhaustive axiom check (|H| <= 2, sorts of <= 2 variables)");
}

}  // namespace

CliResult execute(const std::vector<std::string>& args) {
  CapGuard guard;
  CliResult r;
  CLI::App app{"halgeo: algebraic and logical geometry over finite algebras", "halgeo"};
  Options opt;
  build_app(app, opt);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    r.out = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    r.exit_code = 2;
    r.err = std::string("error[usage]: ") + e.what() + "\n";
    return r;
  }
  try {
    if (std::find(kCommands.begin(), kCommands.end(), opt.command) == kCommands.end())
      throw UsageError("unknown command '" + opt.command + "'");
    if (opt.cap) {
      set_point_cap(*opt.cap);
    } else if (const char* env = std::getenv("HALGEO_CAP")) {
      set_point_cap(parse_cap(env, "HALGEO_CAP"));
    }
    if (opt.cap && *opt.cap == 0) throw UsageError("point cap must be positive");
    return run(opt);
  } catch (const UsageError& e) {
    r.err = std::string("error[usage]: ") + e.what() + "\n";
  } catch (const FormatError& e) {
    r.err = std::string("error[file]: ") + e.what() + "\n";
  } catch (const CapExceeded& e) {
    r.err = std::string("error[cap]: ") + e.what() + "\n";
  } catch (const SyntaxError& e) {
    r.err = std::string("error[syntax]: ") + e.what() + "\n";
  } catch (const UnknownSymbolError& e) {
    r.err = std::string("error[syntax]: ") + e.what() + "\n";
  } catch (const ArityError& e) {
    r.err = std::string("error[syntax]: ") + e.what() + "\n";
  } catch (const SortError& e) {
    r.err = std::string("error[sort]: ") + e.what() + "\n";
  } catch (const SignatureError& e) {
    r.err = std::string("error[signature]: ") + e.what() + "\n";
  } catch (const DomainError& e) {
    r.err = std::string("error[domain]: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    r.err = std::string("error[internal]: ") + e.what() + "\n";
  }
  r.exit_code = 2;
  return r;
}

}  // namespace halgeo
