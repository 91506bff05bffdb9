#pragma once

#include <cstdint>
#include <vector>

#include "intdec/algebra.hpp"

namespace intdec {

/// Execution policy for the data-parallel inner loops. The serial variants
/// are the reference implementations; the OpenMP variants must produce
/// bit-identical output (per-element results land in disjoint slots, so the
/// schedule cannot change the result).
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// Evaluation block for the scalar null-ideal system over elements
/// [first, first+count). Row (d - i) holds, for each element e and
/// coordinate l, the l-coordinate of alpha_e^i; columns are e*t + l.
/// Output is row-major with cols = count * t.
std::vector<int64_t> eval_block_scalar(const FiniteAlgebra& a, int64_t first, int64_t count, int64_t d,
                                       Exec exec);

/// Evaluation block for the full null-ideal system: row (d - i)*t + m holds
/// coordinates of e_m * alpha_e^i.
std::vector<int64_t> eval_block_full(const FiniteAlgebra& a, int64_t first, int64_t count, int64_t d,
                                     Exec exec);

/// For each element x of A (by index), whether the two-sided ideal
/// generated by x is nilpotent.
std::vector<uint8_t> nil_generator_scan(const FiniteAlgebra& a, int64_t budget, Exec exec);

}  // namespace intdec
