#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intdec/zmod.hpp"

namespace intdec {

/// Dense matrix over Z/p^k, row-major. Rows are the carriers of module
/// generating sets throughout; all span computations canonicalize through
/// the Howell normal form, which is unique per row span (unlike echelon
/// forms, which lose that property over Z/p^k for k > 1).
struct ModMatrix {
  Ring ring;
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<int64_t> a;

  ModMatrix() = default;
  ModMatrix(Ring r, int64_t nrows, int64_t ncols)
      : ring(r), rows(nrows), cols(ncols), a(size_t(nrows * ncols), 0) {}

  int64_t& at(int64_t i, int64_t j) { return a[size_t(i * cols + j)]; }
  int64_t at(int64_t i, int64_t j) const { return a[size_t(i * cols + j)]; }

  std::vector<int64_t> row(int64_t i) const {
    return std::vector<int64_t>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
  void set_row(int64_t i, const std::vector<int64_t>& v) {
    for (int64_t j = 0; j < cols; ++j) at(i, j) = ring.reduce(v[size_t(j)]);
  }
  static ModMatrix from_rows(Ring r, int64_t ncols, const std::vector<std::vector<int64_t>>& rws) {
    ModMatrix m(r, int64_t(rws.size()), ncols);
    for (size_t i = 0; i < rws.size(); ++i) m.set_row(int64_t(i), rws[i]);
    return m;
  }
  bool operator==(const ModMatrix&) const = default;
};

/// Canonical Howell normal form; zero rows dropped. Two matrices span the
/// same row module iff their Howell forms are identical.
ModMatrix howell_form(const ModMatrix& m);

/// Generating set (rows, in Howell form) of {v : v M = 0}.
ModMatrix kernel(const ModMatrix& m);

/// v in the row span of basis (decided by system solving, not enumeration).
bool span_contains(const ModMatrix& basis, const std::vector<int64_t>& v);

bool span_equal(const ModMatrix& a, const ModMatrix& b);

/// Some x with x M = b, or nullopt.
std::optional<std::vector<int64_t>> solve_left(const ModMatrix& m, const std::vector<int64_t>& b);

/// Number of elements of the row span.
int64_t span_cardinality(const ModMatrix& m);

/// Lexicographically smallest element of x0 + rowspan(gens), comparing
/// coordinates in the given priority order (all columns when empty).
std::vector<int64_t> lex_min_in_coset(const std::vector<int64_t>& x0, const ModMatrix& gens,
                                      const std::vector<int64_t>& col_order = {});

/// Rows of a stacked under rows of b (same cols, same ring).
ModMatrix vstack(const ModMatrix& a, const ModMatrix& b);

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

std::vector<int64_t> row_times_mat(const Ring& ring, const std::vector<int64_t>& v, const ModMatrix& m);

}  // namespace intdec
