#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intdec/residue.hpp"

namespace intdec {

enum class VerdictReason { nonzero_radical, nonuniform_field, nonuniform_matrix_size, uniform };

const char* reason_name(VerdictReason r);

struct PrimeVerdict {
  int64_t p = 0;
  bool decomposable = false;
  WedderburnProfile profile;
  VerdictReason reason = VerdictReason::uniform;
};

/// Residue-criterion verdict at one prime: decomposable iff the profile has
/// zero radical and a single repeated component type. Exact; independent of
/// any degree bound.
PrimeVerdict decide_at_prime(const StructureAlgebra& a, int64_t p, uint64_t seed = 0x5eed5eed);

struct DiscriminantInfo {
  bool degenerate = false;    // zero trace-form determinant
  std::vector<int64_t> primes;
  int64_t determinant = 0;    // 0 when degenerate
  int64_t residual = 1;       // unfactored cofactor after trial division
};

/// Primes dividing the determinant of the regular trace form
/// tr(L_{e_i} L_{e_j}), exact over Z. A necessary filter for radical
/// behaviour only; profile non-uniformity can occur off this list.
DiscriminantInfo discriminant_primes(const StructureAlgebra& a, int64_t search_bound = 1000);

/// Provenance certificate attached by constructors/fixtures; lets reports
/// state more than finite-prime testing can.
struct AlgebraCertificate {
  enum class Kind { none, matrix_sum, quadratic_order };
  Kind kind = Kind::none;
  int64_t n = 0;       // matrix size (matrix_sum)
  int64_t copies = 0;  // number of summands (matrix_sum)
  int64_t disc = 0;    // field discriminant (quadratic_order)
};

struct GlobalReport {
  std::string algebra;
  DiscriminantInfo disc;
  std::vector<PrimeVerdict> verdicts;  // ascending prime
  bool all_tested_decomposable = true;
  int64_t first_failing_prime = -1;
  std::vector<std::string> notes;
};

/// Per-prime verdicts plus summary. Never claims an all-primes verdict from
/// finite testing unless a constructor certificate warrants it.
GlobalReport decide_over_primes(const StructureAlgebra& a, std::vector<int64_t> primes,
                                const AlgebraCertificate& cert = {}, uint64_t seed = 0x5eed5eed);

/// Discriminant primes united with primes below 20. nullopt when the trace
/// form is degenerate (an explicit prime list is then required).
std::optional<std::vector<int64_t>> default_prime_list(const StructureAlgebra& a);

}  // namespace intdec
