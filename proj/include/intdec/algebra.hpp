#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "intdec/howell.hpp"
#include "intdec/zmod.hpp"

namespace intdec {

/// Coordinate vector of an algebra element in the structure basis.
using Elem = std::vector<int64_t>;

struct AssocWitness {
  int64_t i, j, k;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AssocWitness> assoc_failures;
  std::vector<int64_t> unity_failures;
  bool overflow = false;
  std::string message() const;
};

/// Enumeration refusal; names the budget the caller would need.
struct BudgetError : std::runtime_error {
  int64_t required;
  BudgetError(int64_t required_budget, const std::string& what)
      : std::runtime_error(what), required(required_budget) {}
};

/// Finite-rank associative unital Z-algebra given by structure constants
/// c[i][j][l], meaning e_i e_j = sum_l c[i][j][l] e_l. Immutable after
/// construction; construction validates associativity and the unity.
class StructureAlgebra {
 public:
  StructureAlgebra(int64_t rank, std::vector<int64_t> table, std::vector<int64_t> unity,
                   std::string name = "", bool standard_assumptions = true);

  static ValidationReport validate(int64_t rank, const std::vector<int64_t>& table,
                                   const std::vector<int64_t>& unity);

  int64_t rank() const { return t_; }
  int64_t c(int64_t i, int64_t j, int64_t l) const { return table_[size_t((i * t_ + j) * t_ + l)]; }
  const std::vector<int64_t>& table() const { return table_; }
  const Elem& unity() const { return unity_; }
  const std::string& name() const { return name_; }
  bool standard_assumptions() const { return standard_assumptions_; }

  const std::vector<std::string>& basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names);

  /// Exact product over Z; throws on int64 overflow.
  Elem multiply(const Elem& x, const Elem& y) const;

  /// Integer left-multiplication matrix: column j holds e_interpretation...
  /// entry (l, j) is the e_l-coordinate of x * e_j.
  std::vector<int64_t> left_mul_int(const Elem& x) const;

 private:
  int64_t t_;
  std::vector<int64_t> table_;
  Elem unity_;
  std::string name_;
  bool standard_assumptions_;
  std::vector<std::string> basis_names_;
};

/// A structure algebra reduced over Z/p^k with cached tables. Immutable.
class FiniteAlgebra {
 public:
  FiniteAlgebra(const StructureAlgebra& base, int64_t p, int64_t k);

  const Ring& ring() const { return ring_; }
  int64_t rank() const { return t_; }
  const StructureAlgebra& base() const { return *base_; }

  /// (p^k)^t, saturated at INT64_MAX on overflow.
  int64_t card() const { return card_; }

  int64_t c(int64_t i, int64_t j, int64_t l) const { return table_[size_t((i * t_ + j) * t_ + l)]; }
  const Elem& unity() const { return unity_; }

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem scalar_mul(int64_t s, const Elem& x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem power(const Elem& x, int64_t n) const;

  /// Mixed-radix decode; coordinate 0 varies fastest.
  Elem element(int64_t index) const;

  /// Matrix of left multiplication by x acting on coordinate columns.
  ModMatrix left_mul_matrix(const Elem& x) const;

  /// Two-sided ideal generated by x, as a Howell basis.
  ModMatrix ideal_generated_by(const Elem& x) const;

  /// True when span * span stabilizes to zero.
  bool span_is_nilpotent(const ModMatrix& span_basis) const;

  /// Howell basis of the product span {a*b : a in s1, b in s2}.
  ModMatrix span_product(const ModMatrix& s1, const ModMatrix& s2) const;

 private:
  const StructureAlgebra* base_;
  Ring ring_;
  int64_t t_;
  int64_t card_;
  std::vector<int64_t> table_;
  Elem unity_;
};

/// Throws BudgetError unless |A| <= budget.
void require_enumerable(const FiniteAlgebra& a, int64_t budget);

/// Visits every element exactly once, in index order.
void for_each_element(const FiniteAlgebra& a, int64_t budget, const std::function<void(int64_t, const Elem&)>& fn);

// Fixture constructors. Basis orderings are part of the contract:
// matrix units row-major; group elements in table order; 1,i,j,k;
// upper-triangular units row-major; powers 1,w,...,w^{t-1}.
StructureAlgebra matrix_algebra(int64_t n);
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);
StructureAlgebra group_algebra(const std::vector<std::vector<int64_t>>& table, std::string name);
StructureAlgebra quaternion_algebra();
StructureAlgebra triangular_algebra(int64_t n);
/// Z[X]/(m), m monic given by ascending coefficients (leading 1 included).
StructureAlgebra monogenic_ring(const std::vector<int64_t>& monic_ascending, std::string name);

}  // namespace intdec
