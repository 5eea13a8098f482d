// Benchmark harness: times the randomized verification sweep with the
// OpenMP-parallel path against the serial reference, then reports the
// rewriting size growth on path queries with the fitted log-log slope.

#include <chrono>
#include <cstdio>

#include "twr/randgen.hpp"

using namespace twr;

namespace {

double timed_sweep(bool parallel, size_t trials, size_t& mismatches) {
  VerifyOptions opt;
  opt.trials = trials;
  opt.depth = 1;
  opt.seed = 42;
  opt.parallel = parallel;
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep = verify_random(opt);
  auto stop = std::chrono::steady_clock::now();
  mismatches += rep.mismatches;
  for (const auto& f : rep.failures) std::fprintf(stderr, "%s\n", f.c_str());
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  const size_t trials = 120;
  size_t mismatches = 0;
  double serial_ms = timed_sweep(false, trials, mismatches);
  double parallel_ms = timed_sweep(true, trials, mismatches);
  std::printf("verify sweep, %zu trials\n", trials);
  std::printf("  serial   : %8.1f ms\n", serial_ms);
  std::printf("  parallel : %8.1f ms\n", parallel_ms);
  std::printf("  speedup  : %.2fx\n", serial_ms / parallel_ms);
  std::printf("  mismatches: %zu\n", mismatches);

  auto rows = bench_growth({4, 8, 16, 32, 64});
  std::printf("\n%s", bench_csv(rows).c_str());
  std::printf("fitted_exponent: %.3f\n", fit_exponent(rows));
  return mismatches == 0 ? 0 : 1;
}
