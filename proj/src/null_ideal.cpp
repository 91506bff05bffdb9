#include "intdec/null_ideal.hpp"

#include <algorithm>

namespace intdec {

namespace {

constexpr int64_t kChunk = 2048;

// Intersect the row span of K with the left kernel of the block B.
ModMatrix intersect_kernel(const ModMatrix& K, const std::vector<int64_t>& block, int64_t cols) {
  ModMatrix B(K.ring, K.cols, cols);
  B.a = block;
  ModMatrix C = mat_mul(K, B);
  return howell_form(mat_mul(kernel(C), K));
}

ModMatrix identity_matrix(Ring ring, int64_t n) {
  ModMatrix m(ring, n, n);
  for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DegreewiseModule null_ideal_impl(const FiniteAlgebra& a, int64_t d, int64_t budget, Exec exec, bool full) {
  require_enumerable(a, budget);
  int64_t t = a.rank();
  int64_t rpd = full ? t : 1;
  int64_t unknowns = (d + 1) * rpd;
  ModMatrix K = identity_matrix(a.ring(), unknowns);
  for (int64_t first = 0; first < a.card() && K.rows > 0; first += kChunk) {
    int64_t count = std::min(kChunk, a.card() - first);
    auto block = full ? eval_block_full(a, first, count, d, exec)
                      : eval_block_scalar(a, first, count, d, exec);
    K = intersect_kernel(K, block, count * t);
  }
  DegreewiseModule mod;
  mod.degree_bound = d;
  mod.rank_per_degree = rpd;
  mod.basis = std::move(K);
  return mod;
}

}  // namespace

ModMatrix DegreewiseModule::degree_slice(int64_t j) const {
  int64_t cut = (degree_bound - j) * rank_per_degree;
  std::vector<std::vector<int64_t>> rows;
  for (int64_t i = 0; i < basis.rows; ++i) {
    auto r = basis.row(i);
    bool ok = true;
    for (int64_t c = 0; c < cut && ok; ++c)
      if (r[size_t(c)] != 0) ok = false;
    if (ok) rows.push_back(std::move(r));
  }
  return ModMatrix::from_rows(basis.ring, basis.cols, rows);
}

int64_t DegreewiseModule::leading_valuation(int64_t j) const {
  if (rank_per_degree != 1) throw std::invalid_argument("leading_valuation: scalar modules only");
  const Ring& R = basis.ring;
  int64_t col = degree_bound - j;
  for (int64_t i = 0; i < basis.rows; ++i) {
    auto r = basis.row(i);
    int64_t lead = 0;
    while (lead < basis.cols && r[size_t(lead)] == 0) ++lead;
    if (lead == col) return R.val(r[size_t(col)]);
  }
  return R.k;
}

std::optional<int64_t> DegreewiseModule::minimal_monic_degree() const {
  for (int64_t j = 0; j <= degree_bound; ++j)
    if (leading_valuation(j) == 0) return j;
  return std::nullopt;
}

DegreewiseModule scalar_null_ideal(const FiniteAlgebra& a, int64_t d, int64_t budget, Exec exec) {
  return null_ideal_impl(a, d, budget, exec, false);
}

DegreewiseModule full_null_ideal(const FiniteAlgebra& a, int64_t d, int64_t budget, Exec exec) {
  return null_ideal_impl(a, d, budget, exec, true);
}

DegreewiseModule generated_module(const FiniteAlgebra& a, const DegreewiseModule& scalar_null) {
  int64_t t = a.rank();
  int64_t d = scalar_null.degree_bound;
  std::vector<std::vector<int64_t>> rows;
  for (int64_t i = 0; i < scalar_null.basis.rows; ++i) {
    ScalarPoly f = unflatten_scalar(a.ring(), d, scalar_null.basis.row(i));
    for (int64_t m = 0; m < t; ++m) {
      AlgebraPoly g;
      g.ring = a.ring();
      g.rank = t;
      Elem em(size_t(t), 0);
      em[size_t(m)] = 1;
      for (auto c : f.coeffs) g.coeffs.push_back(a.scalar_mul(c, em));
      g.trim();
      rows.push_back(flatten_poly(g, d));
    }
  }
  DegreewiseModule mod;
  mod.degree_bound = d;
  mod.rank_per_degree = t;
  mod.basis = howell_form(ModMatrix::from_rows(a.ring(), (d + 1) * t, rows));
  return mod;
}

NDecompResult is_N_decomposable(const FiniteAlgebra& a, int64_t d, int64_t budget, Exec exec) {
  DegreewiseModule scalar = scalar_null_ideal(a, d, budget, exec);
  DegreewiseModule full = full_null_ideal(a, d, budget, exec);
  DegreewiseModule gen = generated_module(a, scalar);

  NDecompResult res;
  res.tested_degree = d;
  for (int64_t j = 0; j <= d; ++j) {
    ModMatrix fj = full.degree_slice(j);
    ModMatrix gj = gen.degree_slice(j);
    if (span_equal(fj, gj)) continue;
    res.decomposable = false;
    res.first_failing_degree = j;
    ModMatrix gh = howell_form(gj);
    for (int64_t i = 0; i < fj.rows; ++i) {
      if (!span_contains(gh, fj.row(i))) {
        res.witness = unflatten_poly(a.ring(), a.rank(), d, fj.row(i));
        break;
      }
    }
    break;
  }
  return res;
}

int64_t default_null_degree(const FiniteAlgebra& a) {
  return std::min<int64_t>(2 * a.ring().mod * a.rank(), 12);
}

}  // namespace intdec
