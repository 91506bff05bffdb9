#include "intdec/fp_linalg.hpp"

#include <stdexcept>

namespace intdec {

std::vector<int64_t> charpoly_fp(const ModMatrix& m) {
  if (m.ring.k != 1) throw std::invalid_argument("charpoly_fp: field case only");
  if (m.rows != m.cols) throw std::invalid_argument("charpoly_fp: square matrices only");
  const Ring& R = m.ring;
  int64_t n = m.rows;
  ModMatrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (int64_t col = 0; col + 2 < n; ++col) {
    int64_t piv = -1;
    for (int64_t r = col + 1; r < n; ++r)
      if (h.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int64_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
      for (int64_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
    }
    int64_t inv = R.inv(h.at(col + 1, col));
    for (int64_t r = col + 2; r < n; ++r) {
      int64_t f = R.mul(h.at(r, col), inv);
      if (f == 0) continue;
      for (int64_t j = 0; j < n; ++j) h.at(r, j) = R.sub(h.at(r, j), R.mul(f, h.at(col + 1, j)));
      for (int64_t i = 0; i < n; ++i) h.at(i, col + 1) = R.add(h.at(i, col + 1), R.mul(f, h.at(i, r)));
    }
  }

  // chi_m(X) = (X - h[m-1][m-1]) chi_{m-1}
  //           - sum_i h[m-1-i][m-1] (prod of subdiagonals) chi_{m-1-i}.
  std::vector<std::vector<int64_t>> chi(size_t(n + 1));
  chi[0] = {1};
  for (int64_t mm = 1; mm <= n; ++mm) {
    std::vector<int64_t> cur(size_t(mm + 1), 0);
    const auto& prev = chi[size_t(mm - 1)];
    for (size_t s = 0; s < prev.size(); ++s) {
      cur[s + 1] = R.add(cur[s + 1], prev[s]);
      cur[s] = R.sub(cur[s], R.mul(h.at(mm - 1, mm - 1), prev[s]));
    }
    int64_t sub = 1;
    for (int64_t i = 1; i < mm; ++i) {
      sub = R.mul(sub, h.at(mm - i, mm - i - 1));
      if (sub == 0) break;
      int64_t coeff = R.mul(h.at(mm - 1 - i, mm - 1), sub);
      if (coeff == 0) continue;
      const auto& lower = chi[size_t(mm - 1 - i)];
      for (size_t s = 0; s < lower.size(); ++s) cur[s] = R.sub(cur[s], R.mul(coeff, lower[s]));
    }
    chi[size_t(mm)] = std::move(cur);
  }
  return chi[size_t(n)];
}

ModMatrix inverse_fp(const ModMatrix& m) {
  if (m.ring.k != 1) throw std::invalid_argument("inverse_fp: field case only");
  if (m.rows != m.cols) throw std::invalid_argument("inverse_fp: square matrices only");
  const Ring& R = m.ring;
  int64_t n = m.rows;
  ModMatrix a = m;
  ModMatrix inv(m.ring, n, n);
  for (int64_t i = 0; i < n; ++i) inv.at(i, i) = 1;
  for (int64_t col = 0; col < n; ++col) {
    int64_t piv = -1;
    for (int64_t r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse_fp: singular matrix");
    if (piv != col)
      for (int64_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    int64_t f = R.inv(a.at(col, col));
    for (int64_t j = 0; j < n; ++j) {
      a.at(col, j) = R.mul(a.at(col, j), f);
      inv.at(col, j) = R.mul(inv.at(col, j), f);
    }
    for (int64_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      int64_t g = a.at(r, col);
      for (int64_t j = 0; j < n; ++j) {
        a.at(r, j) = R.sub(a.at(r, j), R.mul(g, a.at(col, j)));
        inv.at(r, j) = R.sub(inv.at(r, j), R.mul(g, inv.at(col, j)));
      }
    }
  }
  return inv;
}

int64_t rank_fp(const ModMatrix& m) {
  if (m.ring.k != 1) throw std::invalid_argument("rank_fp: field case only");
  return howell_form(m).rows;
}

}  // namespace intdec
