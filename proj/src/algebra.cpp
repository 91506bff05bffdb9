#include "intdec/algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace intdec {

namespace {

constexpr int64_t kCoeffLimit = int64_t(1) << 40;

bool add_checked(__int128 acc, int64_t& out) {
  if (acc > std::numeric_limits<int64_t>::max() || acc < std::numeric_limits<int64_t>::min()) return false;
  out = int64_t(acc);
  return true;
}

}  // namespace

std::string ValidationReport::message() const {
  if (ok) return "valid";
  std::ostringstream os;
  if (overflow) os << "coefficient overflow during validation; ";
  if (!assoc_failures.empty()) {
    os << "associativity fails at basis triples:";
    for (const auto& w : assoc_failures) os << " (" << w.i << "," << w.j << "," << w.k << ")";
    os << "; ";
  }
  if (!unity_failures.empty()) {
    os << "unity fails on basis elements:";
    for (auto i : unity_failures) os << " " << i;
  }
  return os.str();
}

StructureAlgebra::StructureAlgebra(int64_t rank, std::vector<int64_t> table, std::vector<int64_t> unity,
                                   std::string name, bool standard_assumptions)
    : t_(rank),
      table_(std::move(table)),
      unity_(std::move(unity)),
      name_(std::move(name)),
      standard_assumptions_(standard_assumptions) {
  auto report = validate(t_, table_, unity_);
  if (!report.ok) throw std::invalid_argument("invalid structure algebra '" + name_ + "': " + report.message());
  basis_names_.reserve(size_t(t_));
  for (int64_t i = 0; i < t_; ++i) basis_names_.push_back("e" + std::to_string(i));
}

void StructureAlgebra::set_basis_names(std::vector<std::string> names) {
  if (int64_t(names.size()) != t_) throw std::invalid_argument("basis name count must equal rank");
  basis_names_ = std::move(names);
}

ValidationReport StructureAlgebra::validate(int64_t rank, const std::vector<int64_t>& table,
                                            const std::vector<int64_t>& unity) {
  ValidationReport rep;
  if (rank <= 0 || int64_t(table.size()) != rank * rank * rank || int64_t(unity.size()) != rank) {
    rep.ok = false;
    rep.overflow = false;
    return rep;
  }
  for (int64_t v : table)
    if (v > kCoeffLimit || v < -kCoeffLimit) {
      rep.ok = false;
      rep.overflow = true;
      return rep;
    }
  auto c = [&](int64_t i, int64_t j, int64_t l) { return table[size_t((i * rank + j) * rank + l)]; };

  // Associativity on basis triples: (e_i e_j) e_k == e_i (e_j e_k).
  for (int64_t i = 0; i < rank && int64_t(rep.assoc_failures.size()) < 8; ++i)
    for (int64_t j = 0; j < rank; ++j)
      for (int64_t k = 0; k < rank; ++k) {
        bool bad = false;
        for (int64_t l = 0; l < rank && !bad; ++l) {
          __int128 lhs = 0, rhs = 0;
          for (int64_t m = 0; m < rank; ++m) {
            lhs += __int128(c(i, j, m)) * c(m, k, l);
            rhs += __int128(c(j, k, m)) * c(i, m, l);
          }
          if (lhs != rhs) bad = true;
        }
        if (bad) {
          rep.assoc_failures.push_back({i, j, k});
          if (int64_t(rep.assoc_failures.size()) >= 8) break;
        }
      }

  for (int64_t i = 0; i < rank; ++i) {
    bool bad = false;
    for (int64_t l = 0; l < rank && !bad; ++l) {
      __int128 left = 0, right = 0;
      for (int64_t m = 0; m < rank; ++m) {
        left += __int128(unity[size_t(m)]) * c(m, i, l);
        right += __int128(unity[size_t(m)]) * c(i, m, l);
      }
      if (left != (l == i ? 1 : 0) || right != (l == i ? 1 : 0)) bad = true;
    }
    if (bad) rep.unity_failures.push_back(i);
  }

  rep.ok = rep.assoc_failures.empty() && rep.unity_failures.empty();
  return rep;
}

Elem StructureAlgebra::multiply(const Elem& x, const Elem& y) const {
  if (int64_t(x.size()) != t_ || int64_t(y.size()) != t_)
    throw std::invalid_argument("multiply: rank mismatch");
  Elem out(size_t(t_), 0);
  for (int64_t l = 0; l < t_; ++l) {
    __int128 acc = 0;
    for (int64_t i = 0; i < t_; ++i) {
      if (x[size_t(i)] == 0) continue;
      for (int64_t j = 0; j < t_; ++j) {
        if (y[size_t(j)] == 0) continue;
        acc += __int128(x[size_t(i)]) * y[size_t(j)] * c(i, j, l);
      }
    }
    if (!add_checked(acc, out[size_t(l)])) throw std::overflow_error("multiply: int64 overflow");
  }
  return out;
}

std::vector<int64_t> StructureAlgebra::left_mul_int(const Elem& x) const {
  std::vector<int64_t> m(size_t(t_ * t_), 0);
  for (int64_t j = 0; j < t_; ++j)
    for (int64_t l = 0; l < t_; ++l) {
      __int128 acc = 0;
      for (int64_t i = 0; i < t_; ++i) acc += __int128(x[size_t(i)]) * c(i, j, l);
      if (!add_checked(acc, m[size_t(l * t_ + j)])) throw std::overflow_error("left_mul_int: overflow");
    }
  return m;
}

FiniteAlgebra::FiniteAlgebra(const StructureAlgebra& base, int64_t p, int64_t k)
    : base_(&base), ring_(Ring::make(p, k)), t_(base.rank()) {
  table_.resize(size_t(t_ * t_ * t_));
  for (size_t i = 0; i < table_.size(); ++i) table_[i] = ring_.reduce(base.table()[i]);
  unity_.resize(size_t(t_));
  for (int64_t i = 0; i < t_; ++i) unity_[size_t(i)] = ring_.reduce(base.unity()[size_t(i)]);
  __int128 card = 1;
  for (int64_t i = 0; i < t_; ++i) {
    card *= ring_.mod;
    if (card > std::numeric_limits<int64_t>::max()) {
      card_ = std::numeric_limits<int64_t>::max();
      return;
    }
  }
  card_ = int64_t(card);
}

Elem FiniteAlgebra::multiply(const Elem& x, const Elem& y) const {
  if (int64_t(x.size()) != t_ || int64_t(y.size()) != t_)
    throw std::invalid_argument("multiply: rank mismatch");
  Elem out(size_t(t_), 0);
  for (int64_t i = 0; i < t_; ++i) {
    if (x[size_t(i)] == 0) continue;
    for (int64_t j = 0; j < t_; ++j) {
      int64_t xy = ring_.mul(x[size_t(i)], y[size_t(j)]);
      if (xy == 0) continue;
      for (int64_t l = 0; l < t_; ++l) {
        int64_t cl = c(i, j, l);
        if (cl) out[size_t(l)] = (out[size_t(l)] + xy * cl) % ring_.mod;
      }
    }
  }
  return out;
}

Elem FiniteAlgebra::scalar_mul(int64_t s, const Elem& x) const {
  Elem out(x);
  s = ring_.reduce(s);
  for (auto& v : out) v = ring_.mul(v, s);
  return out;
}

Elem FiniteAlgebra::add(const Elem& x, const Elem& y) const {
  Elem out(x);
  for (size_t i = 0; i < out.size(); ++i) out[i] = ring_.add(out[i], y[i]);
  return out;
}

Elem FiniteAlgebra::power(const Elem& x, int64_t n) const {
  Elem acc = unity_;
  for (int64_t i = 0; i < n; ++i) acc = multiply(acc, x);
  return acc;
}

Elem FiniteAlgebra::element(int64_t index) const {
  Elem out(size_t(t_), 0);
  for (int64_t i = 0; i < t_; ++i) {
    out[size_t(i)] = index % ring_.mod;
    index /= ring_.mod;
  }
  return out;
}

ModMatrix FiniteAlgebra::left_mul_matrix(const Elem& x) const {
  ModMatrix m(ring_, t_, t_);
  for (int64_t j = 0; j < t_; ++j)
    for (int64_t l = 0; l < t_; ++l) {
      int64_t acc = 0;
      for (int64_t i = 0; i < t_; ++i) acc = (acc + x[size_t(i)] * c(i, j, l)) % ring_.mod;
      m.at(l, j) = acc;
    }
  return m;
}

ModMatrix FiniteAlgebra::ideal_generated_by(const Elem& x) const {
  ModMatrix gens(ring_, t_ * t_, t_);
  Elem ei(size_t(t_), 0), ej(size_t(t_), 0);
  for (int64_t i = 0; i < t_; ++i) {
    std::fill(ei.begin(), ei.end(), 0);
    ei[size_t(i)] = 1;
    Elem eix = multiply(ei, x);
    for (int64_t j = 0; j < t_; ++j) {
      std::fill(ej.begin(), ej.end(), 0);
      ej[size_t(j)] = 1;
      gens.set_row(i * t_ + j, multiply(eix, ej));
    }
  }
  return howell_form(gens);
}

ModMatrix FiniteAlgebra::span_product(const ModMatrix& s1, const ModMatrix& s2) const {
  ModMatrix gens(ring_, s1.rows * s2.rows, t_);
  for (int64_t i = 0; i < s1.rows; ++i)
    for (int64_t j = 0; j < s2.rows; ++j)
      gens.set_row(i * s2.rows + j, multiply(s1.row(i), s2.row(j)));
  return howell_form(gens);
}

bool FiniteAlgebra::span_is_nilpotent(const ModMatrix& span_basis) const {
  // Repeated squaring of the span; stabilization at nonzero means a
  // multiplicatively closed nonzero span, which can never reach zero.
  ModMatrix cur = howell_form(span_basis);
  while (cur.rows != 0) {
    ModMatrix next = span_product(cur, cur);
    if (next.rows == 0) return true;
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

void require_enumerable(const FiniteAlgebra& a, int64_t budget) {
  __int128 card = 1;
  for (int64_t i = 0; i < a.rank(); ++i) card *= a.ring().mod;
  if (card > budget) {
    int64_t req = card > std::numeric_limits<int64_t>::max() ? std::numeric_limits<int64_t>::max() : int64_t(card);
    std::ostringstream os;
    os << "enumeration refused: |A| = " << a.ring().mod << "^" << a.rank() << " exceeds budget " << budget
       << "; rerun with budget >= " << req;
    throw BudgetError(req, os.str());
  }
}

void for_each_element(const FiniteAlgebra& a, int64_t budget,
                      const std::function<void(int64_t, const Elem&)>& fn) {
  require_enumerable(a, budget);
  for (int64_t idx = 0; idx < a.card(); ++idx) fn(idx, a.element(idx));
}

// ---------------------------------------------------------------------------
// Constructors

StructureAlgebra matrix_algebra(int64_t n) {
  if (n <= 0) throw std::invalid_argument("matrix_algebra: n must be positive");
  int64_t t = n * n;
  std::vector<int64_t> table(size_t(t * t * t), 0);
  // Basis E_{ab} at index a*n+b (row-major). E_{ab} E_{cd} = delta_{bc} E_{ad}.
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b)
      for (int64_t c = 0; c < n; ++c)
        for (int64_t d = 0; d < n; ++d)
          if (b == c) {
            int64_t i = a * n + b, j = c * n + d, l = a * n + d;
            table[size_t((i * t + j) * t + l)] = 1;
          }
  std::vector<int64_t> unity(size_t(t), 0);
  for (int64_t a = 0; a < n; ++a) unity[size_t(a * n + a)] = 1;
  StructureAlgebra alg(t, std::move(table), std::move(unity), "M" + std::to_string(n) + "(Z)");
  std::vector<std::string> names;
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b)
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  alg.set_basis_names(std::move(names));
  return alg;
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  int64_t ta = a.rank(), tb = b.rank(), t = ta + tb;
  std::vector<int64_t> table(size_t(t * t * t), 0);
  for (int64_t i = 0; i < ta; ++i)
    for (int64_t j = 0; j < ta; ++j)
      for (int64_t l = 0; l < ta; ++l)
        table[size_t((i * t + j) * t + l)] = a.c(i, j, l);
  for (int64_t i = 0; i < tb; ++i)
    for (int64_t j = 0; j < tb; ++j)
      for (int64_t l = 0; l < tb; ++l)
        table[size_t(((ta + i) * t + (ta + j)) * t + (ta + l))] = b.c(i, j, l);
  std::vector<int64_t> unity(size_t(t), 0);
  for (int64_t i = 0; i < ta; ++i) unity[size_t(i)] = a.unity()[size_t(i)];
  for (int64_t i = 0; i < tb; ++i) unity[size_t(ta + i)] = b.unity()[size_t(i)];
  StructureAlgebra alg(t, std::move(table), std::move(unity), a.name() + " + " + b.name());
  std::vector<std::string> names;
  for (const auto& n : a.basis_names()) names.push_back("a." + n);
  for (const auto& n : b.basis_names()) names.push_back("b." + n);
  alg.set_basis_names(std::move(names));
  return alg;
}

StructureAlgebra group_algebra(const std::vector<std::vector<int64_t>>& table, std::string name) {
  int64_t n = int64_t(table.size());
  if (n == 0) throw std::invalid_argument("group_algebra: empty table");
  for (const auto& row : table) {
    if (int64_t(row.size()) != n) throw std::invalid_argument("group_algebra: table is not square");
    for (auto v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group_algebra: table entry out of range");
  }
  // Group axioms: two-sided identity, associativity, inverses.
  int64_t id = -1;
  for (int64_t e = 0; e < n; ++e) {
    bool ok = true;
    for (int64_t g = 0; g < n; ++g)
      if (table[size_t(e)][size_t(g)] != g || table[size_t(g)][size_t(e)] != g) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("group_algebra: table has no identity");
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j)
      for (int64_t k = 0; k < n; ++k)
        if (table[size_t(table[size_t(i)][size_t(j)])][size_t(k)] !=
            table[size_t(i)][size_t(table[size_t(j)][size_t(k)])])
          throw std::invalid_argument("group_algebra: table is not associative");
  for (int64_t g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int64_t h = 0; h < n; ++h)
      if (table[size_t(g)][size_t(h)] == id && table[size_t(h)][size_t(g)] == id) has_inv = true;
    if (!has_inv) throw std::invalid_argument("group_algebra: missing inverse");
  }

  std::vector<int64_t> c(size_t(n * n * n), 0);
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j)
      c[size_t((i * n + j) * n + table[size_t(i)][size_t(j)])] = 1;
  std::vector<int64_t> unity(size_t(n), 0);
  unity[size_t(id)] = 1;
  StructureAlgebra alg(n, std::move(c), std::move(unity), std::move(name));
  std::vector<std::string> names;
  for (int64_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g));
  alg.set_basis_names(std::move(names));
  return alg;
}

StructureAlgebra quaternion_algebra() {
  // Basis 1, i, j, k with i^2 = j^2 = -1 and ij = k = -ji.
  auto idx = [](int64_t i, int64_t j, int64_t l) { return size_t((i * 4 + j) * 4 + l); };
  std::vector<int64_t> c(64, 0);
  // Multiplication table rows/cols in basis order; (target, sign) pairs.
  const int64_t target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int64_t sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int64_t i = 0; i < 4; ++i)
    for (int64_t j = 0; j < 4; ++j) c[idx(i, j, target[i][j])] = sign[i][j];
  StructureAlgebra alg(4, std::move(c), {1, 0, 0, 0}, "quaternion order");
  alg.set_basis_names({"1", "i", "j", "k"});
  return alg;
}

StructureAlgebra triangular_algebra(int64_t n) {
  if (n <= 0) throw std::invalid_argument("triangular_algebra: n must be positive");
  // Basis E_{ab}, a <= b, row-major over pairs.
  std::vector<std::pair<int64_t, int64_t>> pairs;
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = a; b < n; ++b) pairs.emplace_back(a, b);
  int64_t t = int64_t(pairs.size());
  auto find = [&](int64_t a, int64_t b) {
    for (int64_t i = 0; i < t; ++i)
      if (pairs[size_t(i)] == std::pair<int64_t, int64_t>{a, b}) return i;
    return int64_t(-1);
  };
  std::vector<int64_t> c(size_t(t * t * t), 0);
  for (int64_t i = 0; i < t; ++i)
    for (int64_t j = 0; j < t; ++j) {
      auto [a, b] = pairs[size_t(i)];
      auto [d, e] = pairs[size_t(j)];
      if (b == d) c[size_t((i * t + j) * t + find(a, e))] = 1;
    }
  std::vector<int64_t> unity(size_t(t), 0);
  for (int64_t a = 0; a < n; ++a) unity[size_t(find(a, a))] = 1;
  StructureAlgebra alg(t, std::move(c), std::move(unity), "T" + std::to_string(n) + "(Z)");
  std::vector<std::string> names;
  for (auto [a, b] : pairs) names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  alg.set_basis_names(std::move(names));
  return alg;
}

StructureAlgebra monogenic_ring(const std::vector<int64_t>& monic_ascending, std::string name) {
  int64_t deg = int64_t(monic_ascending.size()) - 1;
  if (deg < 1 || monic_ascending[size_t(deg)] != 1)
    throw std::invalid_argument("monogenic_ring: polynomial must be monic of degree >= 1");
  int64_t t = deg;
  // Powers w^s mod m for s = 0..2(t-1), computed by the companion recurrence.
  std::vector<std::vector<int64_t>> pw(size_t(2 * t - 1), std::vector<int64_t>(size_t(t), 0));
  pw[0][0] = 1;
  for (int64_t s = 1; s < 2 * t - 1; ++s) {
    // Multiply previous power by w.
    std::vector<int64_t>& prev = pw[size_t(s - 1)];
    std::vector<int64_t>& cur = pw[size_t(s)];
    int64_t top = prev[size_t(t - 1)];
    for (int64_t i = t - 1; i >= 1; --i) cur[size_t(i)] = prev[size_t(i - 1)];
    cur[0] = 0;
    if (top != 0)
      for (int64_t i = 0; i < t; ++i) {
        __int128 v = __int128(cur[size_t(i)]) - __int128(top) * monic_ascending[size_t(i)];
        if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
          throw std::overflow_error("monogenic_ring: coefficient overflow");
        cur[size_t(i)] = int64_t(v);
      }
  }
  std::vector<int64_t> c(size_t(t * t * t), 0);
  for (int64_t i = 0; i < t; ++i)
    for (int64_t j = 0; j < t; ++j)
      for (int64_t l = 0; l < t; ++l) c[size_t((i * t + j) * t + l)] = pw[size_t(i + j)][size_t(l)];
  std::vector<int64_t> unity(size_t(t), 0);
  unity[0] = 1;
  StructureAlgebra alg(t, std::move(c), std::move(unity), std::move(name));
  std::vector<std::string> names{"1"};
  if (t > 1) names.push_back("w");
  for (int64_t s = 2; s < t; ++s) names.push_back("w^" + std::to_string(s));
  alg.set_basis_names(std::move(names));
  return alg;
}

}  // namespace intdec
