#pragma once

#include <cstdint>
#include <vector>

#include "intdec/howell.hpp"
#include "intdec/zmod.hpp"

namespace intdec {

/// Characteristic polynomial of a square matrix over F_p (ring.k must be 1),
/// ascending coefficients, monic of degree n. Hessenberg reduction; only
/// field divisions are used, so this is valid in any characteristic.
std::vector<int64_t> charpoly_fp(const ModMatrix& m);

/// Matrix inverse over F_p; throws if singular.
ModMatrix inverse_fp(const ModMatrix& m);

int64_t rank_fp(const ModMatrix& m);

}  // namespace intdec
