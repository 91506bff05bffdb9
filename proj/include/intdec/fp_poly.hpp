#pragma once

#include <cstdint>
#include <vector>

#include "intdec/zmod.hpp"

namespace intdec {

// Univariate polynomial utilities over F_p. Polynomials are ascending
// coefficient vectors with nonzero leading coefficient (or empty for zero).

using FpPoly = std::vector<int64_t>;

FpPoly fp_trim(FpPoly f);
FpPoly fp_mul(const Ring& R, const FpPoly& f, const FpPoly& g);
FpPoly fp_mod(const Ring& R, FpPoly f, const FpPoly& g);
FpPoly fp_divexact(const Ring& R, const FpPoly& f, const FpPoly& g);
FpPoly fp_gcd(const Ring& R, FpPoly f, FpPoly g);  // monic
FpPoly fp_monic(const Ring& R, FpPoly f);
FpPoly fp_powmod(const Ring& R, FpPoly base, int64_t e, const FpPoly& mod);

/// Monic irreducible factors with multiplicity, sorted lexicographically by
/// ascending coefficient vector. Deterministic Berlekamp; intended for the
/// small primes this project works at.
std::vector<FpPoly> berlekamp_factor(const Ring& R, FpPoly f);

}  // namespace intdec
