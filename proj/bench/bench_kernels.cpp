// Timing harness for the parallel kernels against their serial references:
// the 4^n signature enumeration and the tuple sweep crosscheck.

#include "cantordiff/central.hpp"
#include "cantordiff/oracle.hpp"
#include "cantordiff/scantor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace cantordiff;
using central::CentralCantor;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  int max_depth = 9;
  if (argc > 1) max_depth = std::atoi(argv[1]);
  if (max_depth < 5) max_depth = 5;
  if (max_depth > 10) max_depth = 10;

  if (const char* env = std::getenv("CANTORVAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) set_threads(n);
  }
  const int threads = max_threads();

  const CentralCantor a(SequenceSpec({}, {rat(1, 2), rat(1, 4), rat(2, 7)}));
  const CentralCantor b(SequenceSpec({}, {rat(1, 4), rat(1, 3)}));

  std::printf("kernel,param,serial_s,parallel_s,speedup,threads,equal\n");

  for (int depth = 7; depth <= max_depth; ++depth) {
    auto t0 = std::chrono::steady_clock::now();
    const IntervalUnion serial = central::difference_at_depth_serial(
        a, b, static_cast<std::size_t>(depth));
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const IntervalUnion parallel =
        central::difference_at_depth(a, b, static_cast<std::size_t>(depth));
    const double tp = seconds_since(t0);

    std::printf("difference_at_depth,%d,%.3f,%.3f,%.2f,%d,%s\n", depth, ts, tp,
                tp > 0 ? ts / tp : 0.0, threads,
                serial == parallel ? "yes" : "NO");
  }

  {
    set_threads(1);
    auto t0 = std::chrono::steady_clock::now();
    const auto sweep1 = oracle::verify_sweep(7, 3);
    const double ts = seconds_since(t0);

    set_threads(threads);
    t0 = std::chrono::steady_clock::now();
    const auto sweepN = oracle::verify_sweep(7, 3);
    const double tp = seconds_since(t0);

    std::printf("verify_sweep,p<=7 depth 3,%.3f,%.3f,%.2f,%d,%s\n", ts, tp,
                tp > 0 ? ts / tp : 0.0, threads,
                (sweep1.failures == sweepN.failures &&
                 sweep1.tuples == sweepN.tuples)
                    ? "yes"
                    : "NO");
  }
  return 0;
}
