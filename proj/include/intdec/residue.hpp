#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intdec/kernels.hpp"

namespace intdec {

/// Basis (Howell form) of the Jacobson radical of A/pA. Requires k = 1.
/// Uses the characteristic-p-safe iterated chain over p-power coefficients
/// of characteristic polynomials of the regular representation; the plain
/// trace form is wrong at small primes.
ModMatrix jacobson_radical(const FiniteAlgebra& a);

/// Basis of {z : z e_i = e_i z for all i}, via the stacked commutator kernel.
ModMatrix center_basis(const FiniteAlgebra& a);

struct WedderburnComponent {
  int64_t q = 0;  // order of the component's center field
  int64_t n = 0;  // component is an n x n matrix ring over that center
  auto operator<=>(const WedderburnComponent&) const = default;
};

struct WedderburnProfile {
  int64_t p = 0;
  int64_t radical_dim = 0;
  std::vector<WedderburnComponent> components;  // sorted by (q, n)
  uint64_t seed = 0;                            // seed used for idempotent splitting

  /// Zero radical and a single repeated (q, n).
  bool uniform() const;
  /// Zero radical and all components equal to (p, 1).
  bool split_scalar(int64_t p) const;
  std::string to_string() const;
};

/// Structure of A/pA: radical dimension plus the multiset {(q_i, n_i)} of
/// simple components. Aborts (throws logic_error) if internal dimension
/// bookkeeping fails; that signals a bug, never bad input.
WedderburnProfile wedderburn_profile(const FiniteAlgebra& a, uint64_t seed = 0x5eed5eed);

struct TowerLevelReport {
  int64_t level = 0;         // k
  bool consistent = false;   // nil-generator set equals the ideal (p)
  int64_t nil_count = 0;     // |{x : ideal(x) nilpotent}|
  int64_t p_ideal_card = 0;  // |p A_k|
};

/// For k = 1..k_max: whether {x : ideal(x) nilpotent} in A/p^k A is exactly
/// the two-sided ideal generated by p. This is the finite-level shadow of an
/// unramified chain-ring decomposition; decision authority stays with the
/// k = 1 profile.
std::vector<TowerLevelReport> residue_tower_diagnostic(const StructureAlgebra& a, int64_t p, int64_t k_max,
                                                       int64_t budget, Exec exec = default_exec());

}  // namespace intdec
