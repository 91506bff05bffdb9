#pragma once

#include <string>
#include <vector>

#include "intdec/algebra.hpp"
#include "intdec/zmod.hpp"

namespace intdec {

/// Polynomial over Z/p^k, ascending coefficients, trailing zeros trimmed.
struct ScalarPoly {
  Ring ring;
  std::vector<int64_t> coeffs;

  int64_t degree() const { return int64_t(coeffs.size()) - 1; }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
};

/// Polynomial with algebra coefficients, ascending. The indeterminate
/// commutes with coefficients formally; evaluation places coefficients to
/// the left: f(b) = sum c_i b^i. Evaluation is not multiplicative.
struct AlgebraPoly {
  Ring ring;
  int64_t rank = 0;
  std::vector<Elem> coeffs;

  int64_t degree() const { return int64_t(coeffs.size()) - 1; }
  void trim();
  bool is_zero() const { return coeffs.empty(); }
};

Elem evaluate(const FiniteAlgebra& a, const AlgebraPoly& f, const Elem& b);
Elem evaluate_scalar(const FiniteAlgebra& a, const ScalarPoly& f, const Elem& b);

AlgebraPoly scalar_to_algebra(const FiniteAlgebra& a, const ScalarPoly& f);

AlgebraPoly poly_product(const FiniteAlgebra& a, const AlgebraPoly& f, const AlgebraPoly& g);

// Flattened coefficient vectors use the descending-degree-major layout:
// position (d - i) * rank + m holds the e_m-coordinate of the X^i
// coefficient, for a fixed degree bound d. High-degree-first keeps the
// degree filtration aligned with Howell leading columns.
std::vector<int64_t> flatten_poly(const AlgebraPoly& f, int64_t d);
AlgebraPoly unflatten_poly(Ring ring, int64_t rank, int64_t d, const std::vector<int64_t>& row);

std::vector<int64_t> flatten_scalar(const ScalarPoly& f, int64_t d);
ScalarPoly unflatten_scalar(Ring ring, int64_t d, const std::vector<int64_t>& row);

/// Ascending-degree rendering, e.g. "(1 + i)*X + (1 + i)*X^2".
std::string render_poly(const AlgebraPoly& f, const std::vector<std::string>& basis_names);
std::string render_scalar(const ScalarPoly& f);
std::string render_scalar_int(const std::vector<int64_t>& ascending);

}  // namespace intdec
