#include <doctest.h>

#include <cstdlib>

#include "halgeo/cli.hpp"
#include "library.hpp"

using namespace halgeo;

namespace {

std::string alg(const char* name) { return (testing::data_dir() / "algebras" / (std::string(name) + ".alg")).string(); }
std::string sys(const char* name) { return (testing::data_dir() / "systems" / name).string(); }

CliResult run(std::vector<std::string> args) { return execute(args); }

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--algebra", alg("s2"), "--sort", "x y", "--formula", "E x.(meet(x,y)==y)"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "points 4 of 4\n  (x=0, y=0)\n  (x=1, y=0)\n  (x=0, y=1)\n  (x=1, y=1)\nmask f\n");
  auto m = run({"eval", "-a", alg("s2"), "--sort", "x y", "--formula", "~(x==x)", "--format", "machine"});
  CHECK(m.out == "points=0\nmask=0\n");
}

TEST_CASE("check-axioms") {
  auto r = run({"check-axioms", "--algebra", alg("s2"), "--trials", "100", "--seed", "0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "axioms 2,3a,3b,4a,4b: PASS 100/100\n");
  auto e = run({"check-axioms", "--algebra", alg("n2"), "--exhaustive"});
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("PASS") != std::string::npos);
}

TEST_CASE("isotypic") {
  auto r = run({"isotypic", "--a", alg("z4"), "--b", alg("v4"), "--max-vars", "1"});
  CHECK(r.exit_code == 1);
  CHECK(starts_with(r.out, "NOT ISOTYPIC; witness x=g; separating rank 0\n"));
  auto y = run({"isotypic", "--a", alg("z6"), "--b", alg("z2xz3")});
  CHECK(y.exit_code == 0);
  CHECK(starts_with(y.out, "ISOTYPIC"));
}

TEST_CASE("orbits and types") {
  auto r = run({"orbits", "--algebra", alg("z3"), "--sort", "x", "--format", "machine"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "classes=2\nclass0=0\nclass1=1,2\n");
  auto t = run({"types", "--algebra", alg("z3"), "--sort", "x", "--rank", "0"});
  CHECK(t.exit_code == 0);
  CHECK(t.out == "classes 2\nclass 0: {(x=e)}\nclass 1: {(x=g), (x=g2)}\n");
}

TEST_CASE("boolean queries exit 0 either way") {
  auto yes = run({"theory", "-a", alg("s2"), "--sort", "x y", "--formula", "(meet(x,x)==x)", "--format", "machine"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "in_theory=true\n");
  auto no = run({"theory", "-a", alg("s2"), "--sort", "x y", "--formula", "(x==y)"});
  CHECK(no.exit_code == 0);
  CHECK(no.out == "in_theory: false\n");
  auto lk = run({"lker", "-a", alg("s2"), "--sort", "x y", "--point", "x=1, y=0", "--formula", "(meet(x,y)==x)"});
  CHECK(lk.exit_code == 0);
  CHECK(lk.out.find("false") != std::string::npos);
  auto k = run({"ker", "-a", alg("s2"), "--sort", "x y", "--point", "x=0, y=0", "--formula", "(x==y)"});
  CHECK(k.exit_code == 0);
  CHECK(k.out.find("true") != std::string::npos);
  auto notatom = run({"ker", "-a", alg("s2"), "--sort", "x y", "--point", "x=0, y=0", "--formula", "~(x==y)"});
  CHECK(notatom.exit_code == 2);
  auto ca = run({"closure-alg", "-a", alg("s2"), "--system", sys("s2_meet.eqs"), "--formula", "(meet(y,x)==x)"});
  CHECK(ca.exit_code == 0);
  CHECK(ca.out.find("true") != std::string::npos);
  auto cl = run({"closure-log", "-a", alg("z3"), "--sort", "x", "--points", "1", "--formula", "~(x==e())"});
  CHECK(cl.exit_code == 0);
  CHECK(cl.out.find("true") != std::string::npos);
}

TEST_CASE("solving and closures") {
  auto se = run({"solve-eq", "-a", alg("s2"), "--system", sys("s2_meet.eqs"), "--format", "machine"});
  CHECK(se.exit_code == 0);
  CHECK(se.out == "points=3\nmask=d\n");
  auto sl = run({"solve-log", "-a", alg("z3"), "--system", sys("z3_nonid.fs"), "--format", "machine"});
  CHECK(sl.exit_code == 0);
  CHECK(sl.out == "points=2\nmask=6\n");
  auto dc = run({"definable-closure", "-a", alg("z3"), "--sort", "x", "--points", "1", "--format", "machine"});
  CHECK(dc.exit_code == 0);
  CHECK(dc.out == "points=2\nmask=6\n");
  auto nr = run({"noetherian-reduce", "-a", alg("s2"), "--system", sys("s2_reduce.fs")});
  CHECK(nr.exit_code == 0);
  CHECK(nr.out.find("(x == y)") != std::string::npos);
  CHECK(nr.out.find("meet") == std::string::npos);
}

TEST_CASE("structure commands") {
  auto a = run({"aut", "-a", alg("v4")});
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("6") != std::string::npos);
  auto i = run({"iso", "--a", alg("z6"), "--b", alg("z2xz3")});
  CHECK(i.exit_code == 0);
  auto n = run({"iso", "--a", alg("z4"), "--b", alg("v4")});
  CHECK(n.exit_code == 1);
  auto h = run({"homogeneous", "-a", alg("z4"), "--max-vars", "1"});
  CHECK(h.exit_code == 0);
  CHECK(starts_with(h.out, "HOMOGENEOUS"));
  auto ah = run({"alg-homogeneous", "-a", alg("z2xz2m"), "--max-vars", "2"});
  CHECK(ah.exit_code == 0);
  CHECK(starts_with(ah.out, "ALGEBRAICALLY-HOMOGENEOUS"));
  auto an = run({"alg-homogeneous", "-a", alg("m4"), "--max-vars", "1"});
  CHECK(an.exit_code == 1);
  CHECK(starts_with(an.out, "NOT"));
}

TEST_CASE("equivalence commands") {
  auto ag = run({"ag-equiv", "--a", alg("z2"), "--b", alg("z3")});
  CHECK(ag.exit_code == 1);
  CHECK(starts_with(ag.out, "NOT-EQUIVALENT; witness "));
  auto agb = run({"ag-equiv", "--a", alg("z2"), "--b", alg("z2"), "--depth", "2"});
  CHECK(agb.exit_code == 0);
  CHECK(starts_with(agb.out, "BOUNDED-EQUIVALENT"));
  auto lg = run({"lg-equiv", "--a", alg("z4"), "--b", alg("v4"), "--max-vars", "1"});
  CHECK(lg.exit_code == 1);
  CHECK(starts_with(lg.out, "NOT-EQUIVALENT; witness E x. "));
  auto lge = run({"lg-equiv", "--a", alg("z6"), "--b", alg("z2xz3")});
  CHECK(lge.exit_code == 0);
  CHECK(starts_with(lge.out, "EQUIVALENT"));
}

TEST_CASE("errors carry distinct prefixes and exit 2") {
  auto usage = run({"frobnicate"});
  CHECK(usage.exit_code == 2);
  CHECK(starts_with(usage.err, "error[usage]"));
  auto none = run({});
  CHECK(none.exit_code == 2);
  auto file = run({"aut", "-a", "/nonexistent.alg"});
  CHECK(file.exit_code == 2);
  CHECK(starts_with(file.err, "error[file]"));
  auto syntax = run({"eval", "-a", alg("s2"), "--sort", "x y", "--formula", "(x == "});
  CHECK(syntax.exit_code == 2);
  CHECK(starts_with(syntax.err, "error[syntax]"));
  auto sort = run({"eval", "-a", alg("s2"), "--sort", "x y", "--formula", "(x == z)"});
  CHECK(sort.exit_code == 2);
  CHECK(starts_with(sort.err, "error[sort]"));
  auto sig = run({"iso", "--a", alg("s2"), "--b", alg("z2")});
  CHECK(sig.exit_code == 2);
  CHECK(starts_with(sig.err, "error[signature]"));
  auto cap = run({"eval", "-a", alg("z3"), "--sort", "x y z", "--formula", "(x == y)", "--cap", "10"});
  CHECK(cap.exit_code == 2);
  CHECK(starts_with(cap.err, "error[cap]"));
  auto missing = run({"eval", "-a", alg("s2"), "--sort", "x y"});
  CHECK(missing.exit_code == 2);
  CHECK(starts_with(missing.err, "error[usage]"));
  auto badfmt = run({"eval", "-a", alg("s2"), "--sort", "x y", "--formula", "(x==y)", "--format", "xml"});
  CHECK(badfmt.exit_code == 2);
}

TEST_CASE("HALGEO_CAP") {
  setenv("HALGEO_CAP", "10", 1);
  auto r = run({"eval", "-a", alg("z3"), "--sort", "x y z", "--formula", "(x == y)"});
  CHECK(r.exit_code == 2);
  CHECK(starts_with(r.err, "error[cap]"));
  auto flag = run({"eval", "-a", alg("z3"), "--sort", "x y z", "--formula", "(x == y)", "--cap", "100"});
  CHECK(flag.exit_code == 0);
  unsetenv("HALGEO_CAP");
  auto ok = run({"eval", "-a", alg("z3"), "--sort", "x y z", "--formula", "(x == y)"});
  CHECK(ok.exit_code == 0);
}

TEST_CASE("same input, same bytes") {
  std::vector<std::string> args{"check-axioms", "-a", alg("z3"), "--trials", "30", "--seed", "5"};
  CHECK(run(args).out == run(args).out);
}
