// Benchmark of the OpenMP kernels against their serial reference
// implementations, with output equality checked on every run.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "intdec/fixtures.hpp"
#include "intdec/kernels.hpp"
#include "intdec/null_ideal.hpp"

using namespace intdec;

namespace {

double now_sec() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_sec();
    fn();
    best = std::min(best, now_sec() - t0);
  }
  return best;
}

void bench_eval(const char* label, const StructureAlgebra& alg, int64_t p, int64_t k, int64_t d) {
  FiniteAlgebra a(alg, p, k);
  int64_t n = a.card();
  std::vector<int64_t> serial_out, parallel_out;
  double ts = time_best_of(3, [&] { serial_out = eval_block_full(a, 0, n, d, Exec::serial); });
  double tp = time_best_of(3, [&] { parallel_out = eval_block_full(a, 0, n, d, Exec::parallel); });
  bool same = serial_out == parallel_out;
  std::printf("eval_block_full   %-18s |A|=%-8lld d=%-2lld serial %8.3f ms  omp %8.3f ms  speedup %5.2fx  %s\n",
              label, (long long)n, (long long)d, ts * 1e3, tp * 1e3, ts / tp, same ? "match" : "MISMATCH");
}

void bench_scan(const char* label, const StructureAlgebra& alg, int64_t p, int64_t k) {
  FiniteAlgebra a(alg, p, k);
  int64_t n = a.card();
  std::vector<uint8_t> serial_out, parallel_out;
  double ts = time_best_of(3, [&] { serial_out = nil_generator_scan(a, n, Exec::serial); });
  double tp = time_best_of(3, [&] { parallel_out = nil_generator_scan(a, n, Exec::parallel); });
  bool same = serial_out == parallel_out;
  std::printf("nil_generator_scan %-17s |A|=%-8lld      serial %8.3f ms  omp %8.3f ms  speedup %5.2fx  %s\n",
              label, (long long)n, ts * 1e3, tp * 1e3, ts / tp, same ? "match" : "MISMATCH");
}

void bench_null(const char* label, const StructureAlgebra& alg, int64_t p, int64_t k, int64_t d) {
  FiniteAlgebra a(alg, p, k);
  int64_t n = a.card();
  DegreewiseModule ms, mp;
  double ts = time_best_of(3, [&] { ms = full_null_ideal(a, d, n, Exec::serial); });
  double tp = time_best_of(3, [&] { mp = full_null_ideal(a, d, n, Exec::parallel); });
  bool same = ms.basis == mp.basis;
  std::printf("full_null_ideal   %-18s |A|=%-8lld d=%-2lld serial %8.3f ms  omp %8.3f ms  speedup %5.2fx  %s\n",
              label, (long long)n, (long long)d, ts * 1e3, tp * 1e3, ts / tp, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both paths run serially\n");
#endif

  const Fixture* quat = find_fixture("quaternion");
  const Fixture* gauss = find_fixture("gaussian");
  const Fixture* m2 = find_fixture("m2z");

  bench_eval("quaternion mod 9", quat->algebra, 3, 2, 8);
  bench_eval("gaussian mod 128", gauss->algebra, 2, 7, 12);
  bench_eval("m2z mod 8", m2->algebra, 2, 3, 8);

  bench_scan("quaternion mod 9", quat->algebra, 3, 2);
  bench_scan("m2z mod 4", m2->algebra, 2, 2);

  bench_null("quaternion mod 9", quat->algebra, 3, 2, 8);
  bench_null("gaussian mod 64", gauss->algebra, 2, 6, 10);
  return 0;
}
