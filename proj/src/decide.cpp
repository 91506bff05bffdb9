#include "intdec/decide.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace intdec {

const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::nonzero_radical: return "nonzero_radical";
    case VerdictReason::nonuniform_field: return "nonuniform_field";
    case VerdictReason::nonuniform_matrix_size: return "nonuniform_matrix_size";
    case VerdictReason::uniform: return "uniform";
  }
  return "?";
}

PrimeVerdict decide_at_prime(const StructureAlgebra& a, int64_t p, uint64_t seed) {
  PrimeVerdict v;
  v.p = p;
  FiniteAlgebra a1(a, p, 1);
  v.profile = wedderburn_profile(a1, seed);
  if (v.profile.radical_dim != 0) {
    v.reason = VerdictReason::nonzero_radical;
  } else {
    bool same_q = true, same_n = true;
    for (const auto& c : v.profile.components) {
      if (c.q != v.profile.components[0].q) same_q = false;
      if (c.n != v.profile.components[0].n) same_n = false;
    }
    if (!same_q)
      v.reason = VerdictReason::nonuniform_field;
    else if (!same_n)
      v.reason = VerdictReason::nonuniform_matrix_size;
    else
      v.reason = VerdictReason::uniform;
  }
  v.decomposable = v.reason == VerdictReason::uniform;
  return v;
}

namespace {

// Fraction-free determinant (Bareiss) with magnitude guards.
__int128 bareiss_det(std::vector<__int128> m, int64_t n) {
  const __int128 lim = __int128(1) << 100;
  auto at = [&](int64_t i, int64_t j) -> __int128& { return m[size_t(i * n + j)]; };
  __int128 prev = 1;
  int sign = 1;
  for (int64_t col = 0; col < n - 1; ++col) {
    if (at(col, col) == 0) {
      int64_t piv = -1;
      for (int64_t r = col + 1; r < n; ++r)
        if (at(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int64_t j = 0; j < n; ++j) std::swap(at(col, j), at(piv, j));
      sign = -sign;
    }
    for (int64_t r = col + 1; r < n; ++r)
      for (int64_t j = col + 1; j < n; ++j) {
        __int128 v = at(col, col) * at(r, j) - at(r, col) * at(col, j);
        if (v > lim || v < -lim) throw std::overflow_error("discriminant: determinant exceeds guard bound");
        at(r, j) = v / prev;
      }
    prev = at(col, col);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace

DiscriminantInfo discriminant_primes(const StructureAlgebra& a, int64_t search_bound) {
  int64_t t = a.rank();
  // Gram matrix of the regular trace form.
  std::vector<std::vector<int64_t>> lmats;
  for (int64_t i = 0; i < t; ++i) {
    Elem e(size_t(t), 0);
    e[size_t(i)] = 1;
    lmats.push_back(a.left_mul_int(e));
  }
  std::vector<__int128> gram(size_t(t * t));
  for (int64_t i = 0; i < t; ++i)
    for (int64_t j = 0; j < t; ++j) {
      __int128 tr = 0;
      for (int64_t r = 0; r < t; ++r)
        for (int64_t s = 0; s < t; ++s)
          tr += __int128(lmats[size_t(i)][size_t(r * t + s)]) * lmats[size_t(j)][size_t(s * t + r)];
      gram[size_t(i * t + j)] = tr;
    }

  DiscriminantInfo info;
  __int128 det = bareiss_det(std::move(gram), t);
  if (det == 0) {
    info.degenerate = true;
    return info;
  }
  __int128 abs = det < 0 ? -det : det;
  if (abs > __int128(std::numeric_limits<int64_t>::max()))
    info.determinant = det < 0 ? std::numeric_limits<int64_t>::min() : std::numeric_limits<int64_t>::max();
  else
    info.determinant = int64_t(det);
  for (int64_t p = 2; p <= search_bound && abs > 1; ++p) {
    if (abs % p == 0) {
      info.primes.push_back(p);
      while (abs % p == 0) abs /= p;
    }
  }
  info.residual = abs > __int128(std::numeric_limits<int64_t>::max())
                      ? std::numeric_limits<int64_t>::max()
                      : int64_t(abs);
  return info;
}

GlobalReport decide_over_primes(const StructureAlgebra& a, std::vector<int64_t> primes,
                                const AlgebraCertificate& cert, uint64_t seed) {
  GlobalReport rep;
  rep.algebra = a.name();
  rep.disc = discriminant_primes(a);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (int64_t p : primes) {
    rep.verdicts.push_back(decide_at_prime(a, p, seed));
    if (!rep.verdicts.back().decomposable && rep.all_tested_decomposable) {
      rep.all_tested_decomposable = false;
      rep.first_failing_prime = p;
    }
  }

  if (rep.disc.degenerate)
    rep.notes.push_back("trace form is degenerate: all primes potentially relevant");
  else if (rep.disc.residual > 1)
    rep.notes.push_back("trace-form determinant has an unfactored residual " + std::to_string(rep.disc.residual) +
                        "; its prime divisors are also relevant");

  if (cert.kind == AlgebraCertificate::Kind::matrix_sum) {
    std::ostringstream os;
    os << "certificate: direct sum of " << cert.copies << " copies of M" << cert.n
       << "(Z); decomposable at every prime, not only the tested ones";
    rep.notes.push_back(os.str());
  } else if (cert.kind == AlgebraCertificate::Kind::quadratic_order) {
    std::ostringstream os;
    os << "quadratic order, field discriminant " << cert.disc
       << ": ramified primes must fail, and over Q some prime always fails";
    rep.notes.push_back(os.str());
  } else {
    rep.notes.push_back("verdicts cover the tested primes only; no all-primes certificate attached");
  }
  return rep;
}

std::optional<std::vector<int64_t>> default_prime_list(const StructureAlgebra& a) {
  DiscriminantInfo info = discriminant_primes(a);
  if (info.degenerate) return std::nullopt;
  std::set<int64_t> ps(info.primes.begin(), info.primes.end());
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) ps.insert(p);
  return std::vector<int64_t>(ps.begin(), ps.end());
}

}  // namespace intdec
