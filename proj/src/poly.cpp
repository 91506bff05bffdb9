#include "intdec/poly.hpp"

#include <sstream>

namespace intdec {

void AlgebraPoly::trim() {
  auto zero = [](const Elem& e) {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  };
  while (!coeffs.empty() && zero(coeffs.back())) coeffs.pop_back();
}

Elem evaluate(const FiniteAlgebra& a, const AlgebraPoly& f, const Elem& b) {
  if (f.rank != a.rank() || !(f.ring == a.ring())) throw std::invalid_argument("evaluate: ring mismatch");
  Elem acc(size_t(a.rank()), 0);
  Elem pw = a.unity();
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) pw = a.multiply(pw, b);
    acc = a.add(acc, a.multiply(f.coeffs[i], pw));
  }
  return acc;
}

Elem evaluate_scalar(const FiniteAlgebra& a, const ScalarPoly& f, const Elem& b) {
  Elem acc(size_t(a.rank()), 0);
  Elem pw = a.unity();
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) pw = a.multiply(pw, b);
    acc = a.add(acc, a.scalar_mul(f.coeffs[i], pw));
  }
  return acc;
}

AlgebraPoly scalar_to_algebra(const FiniteAlgebra& a, const ScalarPoly& f) {
  AlgebraPoly g;
  g.ring = a.ring();
  g.rank = a.rank();
  for (auto c : f.coeffs) g.coeffs.push_back(a.scalar_mul(c, a.unity()));
  g.trim();
  return g;
}

AlgebraPoly poly_product(const FiniteAlgebra& a, const AlgebraPoly& f, const AlgebraPoly& g) {
  AlgebraPoly h;
  h.ring = a.ring();
  h.rank = a.rank();
  if (f.coeffs.empty() || g.coeffs.empty()) return h;
  h.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, Elem(size_t(a.rank()), 0));
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    for (size_t j = 0; j < g.coeffs.size(); ++j)
      h.coeffs[i + j] = a.add(h.coeffs[i + j], a.multiply(f.coeffs[i], g.coeffs[j]));
  h.trim();
  return h;
}

std::vector<int64_t> flatten_poly(const AlgebraPoly& f, int64_t d) {
  if (f.degree() > d) throw std::invalid_argument("flatten_poly: degree exceeds bound");
  std::vector<int64_t> row(size_t((d + 1) * f.rank), 0);
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    for (int64_t m = 0; m < f.rank; ++m)
      row[size_t((d - int64_t(i)) * f.rank + m)] = f.coeffs[i][size_t(m)];
  return row;
}

AlgebraPoly unflatten_poly(Ring ring, int64_t rank, int64_t d, const std::vector<int64_t>& row) {
  AlgebraPoly f;
  f.ring = ring;
  f.rank = rank;
  f.coeffs.assign(size_t(d + 1), Elem(size_t(rank), 0));
  for (int64_t i = 0; i <= d; ++i)
    for (int64_t m = 0; m < rank; ++m)
      f.coeffs[size_t(i)][size_t(m)] = row[size_t((d - i) * rank + m)];
  f.trim();
  return f;
}

std::vector<int64_t> flatten_scalar(const ScalarPoly& f, int64_t d) {
  if (f.degree() > d) throw std::invalid_argument("flatten_scalar: degree exceeds bound");
  std::vector<int64_t> row(size_t(d + 1), 0);
  for (size_t i = 0; i < f.coeffs.size(); ++i) row[size_t(d - int64_t(i))] = f.coeffs[i];
  return row;
}

ScalarPoly unflatten_scalar(Ring ring, int64_t d, const std::vector<int64_t>& row) {
  ScalarPoly f;
  f.ring = ring;
  f.coeffs.assign(size_t(d + 1), 0);
  for (int64_t i = 0; i <= d; ++i) f.coeffs[size_t(i)] = row[size_t(d - i)];
  f.trim();
  return f;
}

namespace {

std::string monomial(int64_t deg) {
  if (deg == 0) return "";
  if (deg == 1) return "X";
  return "X^" + std::to_string(deg);
}

std::string coeff_string(const Elem& c, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (names[m] == "1")
      os << c[m];
    else if (c[m] == 1)
      os << names[m];
    else
      os << c[m] << "*" << names[m];
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

std::string render_poly(const AlgebraPoly& f, const std::vector<std::string>& basis_names) {
  if (f.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    std::string cs = coeff_string(f.coeffs[i], basis_names);
    if (cs == "0") continue;
    if (!first) os << " + ";
    first = false;
    bool plain = cs.find(' ') == std::string::npos;
    std::string mono = monomial(int64_t(i));
    if (mono.empty())
      os << (plain ? cs : "(" + cs + ")");
    else if (cs == "1")
      os << mono;
    else
      os << (plain ? cs : "(" + cs + ")") << "*" << mono;
  }
  if (first) return "0";
  return os.str();
}

std::string render_scalar(const ScalarPoly& f) {
  std::vector<int64_t> asc(f.coeffs.begin(), f.coeffs.end());
  return render_scalar_int(asc);
}

std::string render_scalar_int(const std::vector<int64_t>& ascending) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < ascending.size(); ++i) {
    if (ascending[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono = monomial(int64_t(i));
    if (mono.empty())
      os << ascending[i];
    else if (ascending[i] == 1)
      os << mono;
    else
      os << ascending[i] << "*" << mono;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace intdec
