// Criterion 12: the CLI transcript does not depend on the run or on the
// number of OpenMP threads.

#include <omp.h>

#include "criteria.hpp"
#include "halgeo/cli.hpp"
#include "library.hpp"

namespace halgeo::acceptance {

namespace {

std::string alg(const char* n) { return (testing::data_dir() / "algebras" / (std::string(n) + ".alg")).string(); }
std::string sys(const char* n) { return (testing::data_dir() / "systems" / n).string(); }

std::vector<std::vector<std::string>> suite() {
  return {
      {"eval", "-a", alg("s2"), "--sort", "x y", "--formula", "E x.(meet(x,y)==y)"},
      {"eval", "-a", alg("z4"), "--sort", "x y z", "--formula", "E x. (mul(x, y) == z)", "--format", "machine"},
      {"theory", "-a", alg("s2"), "--sort", "x y", "--formula", "(meet(x,x)==x)"},
      {"solve-eq", "-a", alg("s2"), "--system", sys("s2_meet.eqs")},
      {"solve-log", "-a", alg("z3"), "--system", sys("z3_nonid.fs"), "--format", "machine"},
      {"closure-alg", "-a", alg("s2"), "--system", sys("s2_meet.eqs"), "--formula", "(meet(y,x)==x)"},
      {"closure-log", "-a", alg("z3"), "--sort", "x", "--points", "1", "--formula", "~(x==e())"},
      {"definable-closure", "-a", alg("v4"), "--sort", "x y", "--points", "1,6"},
      {"lker", "-a", alg("s2"), "--sort", "x y", "--point", "x=1, y=0", "--formula", "(meet(x,y)==x)"},
      {"ker", "-a", alg("z4"), "--sort", "x", "--point", "x=g2", "--formula", "(mul(x,x)==e())"},
      {"aut", "-a", alg("v4")},
      {"orbits", "-a", alg("z4"), "--sort", "x y"},
      {"types", "-a", alg("z4"), "--sort", "x y", "--rank", "1"},
      {"check-axioms", "-a", alg("z3"), "--trials", "60", "--seed", "3"},
      {"check-axioms", "-a", alg("v4"), "--trials", "40", "--seed", "11", "--format", "machine"},
      {"check-axioms", "-a", alg("s2"), "--exhaustive"},
      {"ag-equiv", "--a", alg("z2"), "--b", alg("z3")},
      {"ag-equiv", "--a", alg("s2"), "--b", alg("s3"), "--depth", "2", "--max-vars", "2"},
      {"lg-equiv", "--a", alg("z4"), "--b", alg("v4")},
      {"isotypic", "--a", alg("z4"), "--b", alg("v4"), "--max-vars", "1"},
      {"isotypic", "--a", alg("z6"), "--b", alg("z2xz3")},
      {"homogeneous", "-a", alg("z6"), "--max-vars", "2"},
      {"alg-homogeneous", "-a", alg("m4"), "--max-vars", "2"},
      {"noetherian-reduce", "-a", alg("s2"), "--system", sys("s2_reduce.fs")},
      {"iso", "--a", alg("z6"), "--b", alg("z2xz3")},
      {"iso", "--a", alg("s2"), "--b", alg("z2")},
      {"frobnicate"},
  };
}

std::string transcript() {
  std::string out;
  for (const auto& args : suite()) {
    out += "$";
    for (const auto& a : args) out += " " + a;
    auto r = execute(args);
    out += "\nexit " + std::to_string(r.exit_code) + "\n" + r.out + r.err;
  }
  return out;
}

}  // namespace

Outcome criterion_12() {
  Tally t;
  omp_set_num_threads(1);
  const auto first = transcript();
  omp_set_num_threads(4);
  const auto second = transcript();
  omp_set_num_threads(2);
  const auto third = transcript();
  t.check(first == second, "1 thread vs 4 threads");
  t.check(first == third, "1 thread vs 2 threads");
  return t.outcome(std::to_string(suite().size()) + " CLI invocations covering every command, three runs on 1, 4 " +
                   "and 2 threads, " + std::to_string(first.size()) + " transcript bytes, byte-identical");
}

}  // namespace halgeo::acceptance
