#include "intdec/howell.hpp"

#include <algorithm>
#include <cassert>

namespace intdec {

namespace {

int64_t leading_col(const std::vector<int64_t>& r) {
  for (size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) return int64_t(j);
  return int64_t(r.size());
}

void axpy(const Ring& ring, std::vector<int64_t>& r, int64_t c, const std::vector<int64_t>& s) {
  for (size_t j = 0; j < r.size(); ++j) r[j] = ring.reduce(r[j] - c * s[j] % ring.mod);
}

void scale(const Ring& ring, std::vector<int64_t>& r, int64_t c) {
  for (auto& x : r) x = ring.mul(x, c);
}

}  // namespace

ModMatrix howell_form(const ModMatrix& m) {
  const Ring& R = m.ring;
  std::vector<std::vector<int64_t>> work;
  for (int64_t i = 0; i < m.rows; ++i) {
    auto r = m.row(i);
    if (leading_col(r) < m.cols) work.push_back(std::move(r));
  }

  std::vector<std::vector<int64_t>> out;
  for (int64_t col = 0; col < m.cols; ++col) {
    // Partition off the rows leading in this column.
    std::vector<std::vector<int64_t>> cand, rest;
    for (auto& r : work) (leading_col(r) == col ? cand : rest).push_back(std::move(r));
    work = std::move(rest);
    if (cand.empty()) continue;

    size_t best = 0;
    for (size_t i = 1; i < cand.size(); ++i)
      if (R.val(cand[i][size_t(col)]) < R.val(cand[best][size_t(col)])) best = i;
    std::swap(cand[0], cand[best]);

    int64_t v = R.val(cand[0][size_t(col)]);
    int64_t pv = R.pow_p(v);
    // Normalize the pivot entry to exactly p^v.
    scale(R, cand[0], R.inv(cand[0][size_t(col)] / pv));

    for (size_t i = 1; i < cand.size(); ++i) {
      axpy(R, cand[i], cand[i][size_t(col)] / pv, cand[0]);
      if (leading_col(cand[i]) < m.cols) work.push_back(std::move(cand[i]));
    }
    // Howell completion: the annihilator multiple of the pivot row keeps the
    // span's deeper columns reachable from later pivots.
    if (v > 0) {
      auto ann = cand[0];
      scale(R, ann, R.pow_p(R.k - v));
      if (leading_col(ann) < m.cols) work.push_back(std::move(ann));
    }
    out.push_back(std::move(cand[0]));
  }

  // Reduce entries above each pivot modulo the pivot value.
  for (size_t i = 0; i < out.size(); ++i) {
    int64_t col = leading_col(out[i]);
    int64_t pv = out[i][size_t(col)];
    for (size_t r = 0; r < i; ++r) axpy(R, out[r], out[r][size_t(col)] / pv, out[i]);
  }
  return ModMatrix::from_rows(m.ring, m.cols, out);
}

ModMatrix vstack(const ModMatrix& a, const ModMatrix& b) {
  assert(a.cols == b.cols && a.ring == b.ring);
  ModMatrix m(a.ring, a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), m.a.begin());
  std::copy(b.a.begin(), b.a.end(), m.a.begin() + a.rows * a.cols);
  return m;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols != b.rows || !(a.ring == b.ring)) throw std::invalid_argument("mat_mul: shape or ring mismatch");
  ModMatrix c(a.ring, a.rows, b.cols);
  for (int64_t i = 0; i < a.rows; ++i)
    for (int64_t l = 0; l < a.cols; ++l) {
      int64_t x = a.at(i, l);
      if (x == 0) continue;
      for (int64_t j = 0; j < b.cols; ++j)
        c.at(i, j) = (c.at(i, j) + x * b.at(l, j)) % a.ring.mod;
    }
  return c;
}

std::vector<int64_t> row_times_mat(const Ring& ring, const std::vector<int64_t>& v, const ModMatrix& m) {
  if (int64_t(v.size()) != m.rows) throw std::invalid_argument("row_times_mat: dimension mismatch");
  std::vector<int64_t> out(size_t(m.cols), 0);
  for (int64_t i = 0; i < m.rows; ++i) {
    if (v[size_t(i)] == 0) continue;
    for (int64_t j = 0; j < m.cols; ++j)
      out[size_t(j)] = (out[size_t(j)] + v[size_t(i)] * m.at(i, j)) % ring.mod;
  }
  return out;
}

namespace {

// Augmented Howell form [M | I]; rows are (z M, z).
ModMatrix howell_augmented(const ModMatrix& m) {
  ModMatrix aug(m.ring, m.rows, m.cols + m.rows);
  for (int64_t i = 0; i < m.rows; ++i) {
    for (int64_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  return howell_form(aug);
}

}  // namespace

ModMatrix kernel(const ModMatrix& m) {
  ModMatrix h = howell_augmented(m);
  std::vector<std::vector<int64_t>> gens;
  for (int64_t i = 0; i < h.rows; ++i) {
    auto r = h.row(i);
    if (leading_col(r) >= m.cols)
      gens.emplace_back(r.begin() + m.cols, r.end());
  }
  return howell_form(ModMatrix::from_rows(m.ring, m.rows, gens));
}

bool span_contains(const ModMatrix& basis, const std::vector<int64_t>& v) {
  if (int64_t(v.size()) != basis.cols) throw std::invalid_argument("span_contains: dimension mismatch");
  const Ring& R = basis.ring;
  ModMatrix h = howell_form(basis);
  std::vector<int64_t> w(v);
  for (auto& x : w) x = R.reduce(x);
  int64_t i = 0;
  while (true) {
    int64_t lead = leading_col(w);
    if (lead >= basis.cols) return true;
    while (i < h.rows && leading_col(h.row(i)) < lead) ++i;
    if (i >= h.rows) return false;
    auto hr = h.row(i);
    int64_t pc = leading_col(hr);
    if (pc != lead) return false;
    int64_t pv = hr[size_t(pc)];
    if (w[size_t(lead)] % pv != 0) return false;
    axpy(R, w, w[size_t(lead)] / pv, hr);
  }
}

bool span_equal(const ModMatrix& a, const ModMatrix& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("span_equal: ring mismatch");
  if (a.cols != b.cols) throw std::invalid_argument("span_equal: column mismatch");
  return howell_form(a) == howell_form(b);
}

std::optional<std::vector<int64_t>> solve_left(const ModMatrix& m, const std::vector<int64_t>& b) {
  if (int64_t(b.size()) != m.cols) throw std::invalid_argument("solve_left: dimension mismatch");
  const Ring& R = m.ring;
  ModMatrix h = howell_augmented(m);
  std::vector<int64_t> w(size_t(m.cols + m.rows), 0);
  for (int64_t j = 0; j < m.cols; ++j) w[size_t(j)] = R.reduce(b[size_t(j)]);

  int64_t i = 0;
  while (true) {
    int64_t lead = leading_col(w);
    if (lead >= m.cols) break;
    while (i < h.rows && leading_col(h.row(i)) < lead) ++i;
    if (i >= h.rows) return std::nullopt;
    auto hr = h.row(i);
    if (leading_col(hr) != lead) return std::nullopt;
    int64_t pv = hr[size_t(lead)];
    if (w[size_t(lead)] % pv != 0) return std::nullopt;
    axpy(R, w, w[size_t(lead)] / pv, hr);
  }
  // Residual tail is -x for the combination used.
  std::vector<int64_t> x(size_t(m.rows));
  for (int64_t j = 0; j < m.rows; ++j) x[size_t(j)] = R.neg(w[size_t(m.cols + j)]);
  return x;
}

int64_t span_cardinality(const ModMatrix& m) {
  ModMatrix h = howell_form(m);
  int64_t card = 1;
  for (int64_t i = 0; i < h.rows; ++i) {
    auto r = h.row(i);
    card *= h.ring.pow_p(h.ring.k - h.ring.val(r[size_t(leading_col(r))]));
  }
  return card;
}

std::vector<int64_t> lex_min_in_coset(const std::vector<int64_t>& x0, const ModMatrix& gens,
                                      const std::vector<int64_t>& col_order) {
  const Ring& R = gens.ring;
  if (int64_t(x0.size()) != gens.cols) throw std::invalid_argument("lex_min_in_coset: dimension mismatch");
  std::vector<int64_t> x(x0);
  for (auto& v : x) v = R.reduce(v);
  ModMatrix g = howell_form(gens);

  std::vector<int64_t> order(col_order);
  if (order.empty())
    for (int64_t c = 0; c < gens.cols; ++c) order.push_back(c);

  for (int64_t col : order) {
    if (g.rows == 0) break;
    // Smallest valuation in this column over the current stabilizer.
    int64_t w = R.k;
    int64_t src = -1;
    for (int64_t i = 0; i < g.rows; ++i)
      if (R.val(g.at(i, col)) < w) {
        w = R.val(g.at(i, col));
        src = i;
      }
    if (w < R.k) {
      int64_t pw = R.pow_p(w);
      int64_t target = x[size_t(col)] % pw;
      int64_t delta = R.sub(target, x[size_t(col)]);
      // delta is a multiple of p^w; cancel via the row attaining valuation w.
      int64_t mu = R.mul(delta / pw, R.inv(g.at(src, col) / pw));
      auto gr = g.row(src);
      for (size_t j = 0; j < x.size(); ++j) x[j] = R.add(x[j], R.mul(mu, gr[j]));
    }
    // Restrict to the stabilizer of this column.
    ModMatrix colmat(R, g.rows, 1);
    for (int64_t i = 0; i < g.rows; ++i) colmat.at(i, 0) = g.at(i, col);
    g = howell_form(mat_mul(kernel(colmat), g));
  }
  return x;
}

}  // namespace intdec
