// Serial reference kernels against the OpenMP ones on one large point space.
//
//   bench_kernels [--vars N] [--reps R] [--threads T]
//
// Z4 over N variables (4^N points, default N = 11). Exits 1 if any pair of
// results differs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "halgeo/constructions.hpp"
#include "halgeo/kernels.hpp"
#include "halgeo/morphisms.hpp"

using namespace halgeo;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t vars = 11;
  int reps = 3;
  int threads = omp_get_max_threads();
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--vars")) vars = std::strtoul(argv[i + 1], nullptr, 10);
    else if (!std::strcmp(argv[i], "--reps")) reps = std::atoi(argv[i + 1]);
    else if (!std::strcmp(argv[i], "--threads")) threads = std::atoi(argv[i + 1]);
  }
  omp_set_num_threads(threads);
  auto h = cyclic_group(4);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i + 1));
  auto X = make_sort("X", names);
  auto sig = h.signature();
  auto v = [&](int i) { return Term::variable(sig, X, i % static_cast<int>(vars)); };
  auto mul = [&](const Term& a, const Term& b) { return Term::apply(sig, X, 0, {a, b}); };
  const Term w = mul(mul(v(0), v(1)), mul(v(2), v(0)));
  const Term w2 = mul(v(3), mul(v(1), v(1)));
  std::vector<Term> images;
  for (std::size_t i = 0; i < vars; ++i) images.push_back(mul(v(static_cast<int>(i)), v(static_cast<int>(i) + 1)));
  const auto group = automorphism_group(h);
  const std::uint64_t points = space_size(4, vars);

  std::printf("Z4, %zu variables, %llu points, %d threads, best of %d\n", vars,
              static_cast<unsigned long long>(points), threads, reps);
  std::printf("%-10s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
  bool same = true;
  auto row = [&](const char* name, const std::function<void()>& serial, const std::function<void()>& parallel,
                 const std::function<bool()>& agree) {
    const double s = best_of(reps, serial), p = best_of(reps, parallel);
    const bool ok = agree();
    same = same && ok;
    std::printf("%-10s %12.2f %12.2f %7.2fx%s\n", name, s * 1e3, p * 1e3, s / p, ok ? "" : "  MISMATCH");
  };

  kernels::Mask es, ep;
  row("equality", [&] { kernels::serial::equality_mask(h, vars, w, w2, es); },
      [&] { kernels::equality_mask(h, vars, w, w2, ep); }, [&] { return es == ep; });
  kernels::Mask xs, xp;
  row("exists", [&] { kernels::serial::exists_mask(4, vars, vars / 2, es, xs); },
      [&] { kernels::exists_mask(4, vars, vars / 2, es, xp); }, [&] { return xs == xp; });
  kernels::Mask ts, tp;
  row("transport", [&] { kernels::serial::transport_mask(h, vars, images, vars, es, ts); },
      [&] { kernels::transport_mask(h, vars, images, vars, es, tp); }, [&] { return ts == tp; });
  std::vector<PointIndex> os, op;
  row("orbits", [&] { kernels::serial::orbit_minima(4, vars, group, os); },
      [&] { kernels::orbit_minima(4, vars, group, op); }, [&] { return os == op; });
  return same ? 0 : 1;
}
