#pragma once

#include <optional>

#include "intdec/null_ideal.hpp"
#include "intdec/residue.hpp"

namespace intdec {

/// One degree of the local integer-valued polynomial data at p: the largest
/// denominator exponent nu achievable by a monic integer numerator of this
/// degree, and the witness numerator (monic, coefficients lifted to
/// [0, p^nu), lexicographically smallest in ascending coefficient order).
struct NuEntry {
  int64_t nu = 0;
  bool saturated = false;  // search cap hit; the true value may exceed nu
  std::vector<int64_t> witness_ascending;
};

struct NuSequence {
  int64_t p = 0;
  int64_t cap = 0;  // K_max
  std::vector<NuEntry> entries;  // index = degree
};

/// nu_j = max{e <= cap : some monic degree-j integer polynomial lands in
/// N_{Z/p^e}(A/p^e A)}, with witnesses. Constants and X give nu_0 = nu_1 = 0.
NuSequence nu_sequence(const StructureAlgebra& a, int64_t p, int64_t d, int64_t cap, int64_t budget,
                       Exec exec = default_exec());

/// Numerators at denominator level p^k: basis of {g in A_k[X], deg <= d :
/// g(A) in p^k A}. Equals the full null ideal of A/p^k A; that identity is
/// asserted against integer-arithmetic spot checks.
DegreewiseModule int_module_basis(const StructureAlgebra& a, int64_t p, int64_t d, int64_t k, int64_t budget,
                                  Exec exec = default_exec());

struct PhiResult {
  bool surjective = true;      // at denominator level p^k, degree <= d
  int64_t level = 0;           // k
  int64_t tested_degree = 0;   // d
  int64_t first_failing_degree = -1;
  std::optional<AlgebraPoly> witness;  // numerator; denominator is p^level
  NuSequence nu;                       // witnesses used for the image span
};

/// Brute-force check that scalar-numerator times algebra-element spans
/// reach every integer-valued numerator at level p^k, degree <= d. Runs the
/// degreewise coherence cross-checks mandated for this operation and throws
/// logic_error on any internal disagreement.
PhiResult verify_phi(const StructureAlgebra& a, int64_t p, int64_t d, int64_t k, int64_t budget,
                     Exec exec = default_exec());

struct IntkResult {
  bool equals = false;  // Int_K(A) = Int(D) at this prime
  WedderburnProfile profile;
  bool nu_checked = false;
  bool nu_matches = false;
  int64_t nu_degree = 0;
};

/// Residue test: profile must be t copies of (p, 1) with zero radical.
/// When true, corroborated by comparing nu_j(A) with the factorial-valuation
/// sequence of Z up to d_report (budget permitting).
IntkResult intk_equals_intd(const StructureAlgebra& a, int64_t p, int64_t d_report, int64_t budget,
                            uint64_t seed = 0x5eed5eed, Exec exec = default_exec());

/// Legendre's formula: v_p(j!).
int64_t legendre_valuation(int64_t p, int64_t j);

}  // namespace intdec
