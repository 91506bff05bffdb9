#include "intdec/kernels.hpp"

namespace intdec {

namespace {

Exec g_default_exec = Exec::parallel;

// One element's slice of the scalar evaluation block.
void scalar_slice(const FiniteAlgebra& a, int64_t d, int64_t t, int64_t cols, int64_t e,
                  const Elem& alpha, std::vector<int64_t>& out) {
  Elem pw = a.unity();
  for (int64_t i = 0; i <= d; ++i) {
    if (i > 0) pw = a.multiply(pw, alpha);
    int64_t r = d - i;
    for (int64_t l = 0; l < t; ++l) out[size_t(r * cols + e * t + l)] = pw[size_t(l)];
  }
}

void full_slice(const FiniteAlgebra& a, int64_t d, int64_t t, int64_t cols, int64_t e,
                const Elem& alpha, std::vector<int64_t>& out) {
  const Ring& R = a.ring();
  Elem pw = a.unity();
  for (int64_t i = 0; i <= d; ++i) {
    if (i > 0) pw = a.multiply(pw, alpha);
    for (int64_t m = 0; m < t; ++m) {
      int64_t r = (d - i) * t + m;
      // e_m * pw
      for (int64_t l = 0; l < t; ++l) {
        int64_t acc = 0;
        for (int64_t j = 0; j < t; ++j) {
          int64_t cj = a.c(m, j, l);
          if (cj) acc = (acc + cj * pw[size_t(j)]) % R.mod;
        }
        out[size_t(r * cols + e * t + l)] = R.reduce(acc);
      }
    }
  }
}

}  // namespace

Exec default_exec() { return g_default_exec; }
void set_default_exec(Exec e) { g_default_exec = e; }

std::vector<int64_t> eval_block_scalar(const FiniteAlgebra& a, int64_t first, int64_t count, int64_t d,
                                       Exec exec) {
  int64_t t = a.rank();
  int64_t cols = count * t;
  std::vector<int64_t> out(size_t((d + 1) * cols), 0);
  if (exec == Exec::serial) {
    for (int64_t e = 0; e < count; ++e) scalar_slice(a, d, t, cols, e, a.element(first + e), out);
  } else {
#pragma omp parallel for schedule(static)
    for (int64_t e = 0; e < count; ++e) scalar_slice(a, d, t, cols, e, a.element(first + e), out);
  }
  return out;
}

std::vector<int64_t> eval_block_full(const FiniteAlgebra& a, int64_t first, int64_t count, int64_t d,
                                     Exec exec) {
  int64_t t = a.rank();
  int64_t cols = count * t;
  std::vector<int64_t> out(size_t((d + 1) * t * cols), 0);
  if (exec == Exec::serial) {
    for (int64_t e = 0; e < count; ++e) full_slice(a, d, t, cols, e, a.element(first + e), out);
  } else {
#pragma omp parallel for schedule(static)
    for (int64_t e = 0; e < count; ++e) full_slice(a, d, t, cols, e, a.element(first + e), out);
  }
  return out;
}

std::vector<uint8_t> nil_generator_scan(const FiniteAlgebra& a, int64_t budget, Exec exec) {
  require_enumerable(a, budget);
  int64_t n = a.card();
  std::vector<uint8_t> out(size_t(n), 0);
  if (exec == Exec::serial) {
    for (int64_t idx = 0; idx < n; ++idx)
      out[size_t(idx)] = a.span_is_nilpotent(a.ideal_generated_by(a.element(idx))) ? 1 : 0;
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t idx = 0; idx < n; ++idx)
      out[size_t(idx)] = a.span_is_nilpotent(a.ideal_generated_by(a.element(idx))) ? 1 : 0;
  }
  return out;
}

}  // namespace intdec
