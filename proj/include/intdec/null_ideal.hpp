#pragma once

#include <optional>

#include "intdec/kernels.hpp"
#include "intdec/poly.hpp"

namespace intdec {

/// Degree-bounded module of flattened polynomials (descending-degree-major
/// layout; see poly.hpp). Basis kept in Howell form, so two modules are
/// equal iff their bases are identical.
struct DegreewiseModule {
  int64_t degree_bound = 0;
  int64_t rank_per_degree = 1;  // 1 for scalar coefficients, t for algebra coefficients
  ModMatrix basis;

  /// Rows spanning the degree <= j slice (valid because the layout puts
  /// high degrees in leading columns).
  ModMatrix degree_slice(int64_t j) const;

  /// Leading-coefficient ideal at exact degree j, as a p-adic valuation
  /// exponent; ring.k means the zero ideal. Scalar modules only.
  int64_t leading_valuation(int64_t j) const;

  /// Smallest degree <= degree_bound carrying a monic member (scalar
  /// modules), or nullopt.
  std::optional<int64_t> minimal_monic_degree() const;
};

/// Basis of {f in (Z/p^k)[X], deg <= d : f(alpha) = 0 for all alpha}.
DegreewiseModule scalar_null_ideal(const FiniteAlgebra& a, int64_t d, int64_t budget,
                                   Exec exec = default_exec());

/// Basis of {f in A_k[X], deg <= d : f(alpha) = 0 for all alpha}.
DegreewiseModule full_null_ideal(const FiniteAlgebra& a, int64_t d, int64_t budget,
                                 Exec exec = default_exec());

struct NDecompResult {
  bool decomposable = true;   // verified up to tested_degree only
  int64_t tested_degree = 0;
  int64_t first_failing_degree = -1;
  std::optional<AlgebraPoly> witness;  // in N(A_k), outside the generated module
};

/// Degreewise test of Definition-style N-decomposability: the module
/// generated by scalar null polynomials times algebra elements must equal
/// the full null ideal at every degree <= d.
NDecompResult is_N_decomposable(const FiniteAlgebra& a, int64_t d, int64_t budget,
                                Exec exec = default_exec());

/// The generated module span{f * e_m} in full-layout coordinates.
DegreewiseModule generated_module(const FiniteAlgebra& a, const DegreewiseModule& scalar_null);

/// Default degree bound: min(2 p^k t, 12), the documented sufficiency
/// heuristic for witness search.
int64_t default_null_degree(const FiniteAlgebra& a);

}  // namespace intdec
