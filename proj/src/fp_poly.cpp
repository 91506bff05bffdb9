#include "intdec/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "intdec/howell.hpp"

namespace intdec {

FpPoly fp_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly fp_mul(const Ring& R, const FpPoly& f, const FpPoly& g) {
  if (f.empty() || g.empty()) return {};
  FpPoly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = R.add(h[i + j], R.mul(f[i], g[j]));
  return fp_trim(std::move(h));
}

FpPoly fp_mod(const Ring& R, FpPoly f, const FpPoly& g) {
  if (g.empty()) throw std::invalid_argument("fp_mod: zero modulus");
  f = fp_trim(std::move(f));
  int64_t lg = R.inv(g.back());
  while (f.size() >= g.size()) {
    int64_t q = R.mul(f.back(), lg);
    size_t off = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) f[off + i] = R.sub(f[off + i], R.mul(q, g[i]));
    f = fp_trim(std::move(f));
  }
  return f;
}

FpPoly fp_divexact(const Ring& R, const FpPoly& f, const FpPoly& g) {
  FpPoly rem = fp_trim(f);
  FpPoly q(rem.size() >= g.size() ? rem.size() - g.size() + 1 : 0, 0);
  int64_t lg = R.inv(g.back());
  while (rem.size() >= g.size() && !rem.empty()) {
    int64_t c = R.mul(rem.back(), lg);
    size_t off = rem.size() - g.size();
    q[off] = c;
    for (size_t i = 0; i < g.size(); ++i) rem[off + i] = R.sub(rem[off + i], R.mul(c, g[i]));
    rem = fp_trim(std::move(rem));
  }
  if (!rem.empty()) throw std::invalid_argument("fp_divexact: not divisible");
  return fp_trim(std::move(q));
}

FpPoly fp_monic(const Ring& R, FpPoly f) {
  f = fp_trim(std::move(f));
  if (f.empty()) return f;
  int64_t inv = R.inv(f.back());
  for (auto& c : f) c = R.mul(c, inv);
  return f;
}

FpPoly fp_gcd(const Ring& R, FpPoly f, FpPoly g) {
  f = fp_trim(std::move(f));
  g = fp_trim(std::move(g));
  while (!g.empty()) {
    FpPoly r = fp_mod(R, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return fp_monic(R, std::move(f));
}

FpPoly fp_powmod(const Ring& R, FpPoly base, int64_t e, const FpPoly& mod) {
  FpPoly acc{1};
  base = fp_mod(R, std::move(base), mod);
  while (e > 0) {
    if (e & 1) acc = fp_mod(R, fp_mul(R, acc, base), mod);
    base = fp_mod(R, fp_mul(R, base, base), mod);
    e >>= 1;
  }
  return acc;
}

namespace {

FpPoly derivative(const Ring& R, const FpPoly& f) {
  FpPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(R.mul(int64_t(i) % R.mod, f[i]));
  return fp_trim(std::move(d));
}

// Deterministic Berlekamp on monic squarefree input.
std::vector<FpPoly> berlekamp_squarefree(const Ring& R, const FpPoly& f) {
  int64_t n = int64_t(f.size()) - 1;
  if (n <= 1) return n == 1 ? std::vector<FpPoly>{f} : std::vector<FpPoly>{};

  // Frobenius matrix: row i holds X^{ip} mod f.
  ModMatrix frob(R, n, n);
  for (int64_t i = 0; i < n; ++i) {
    FpPoly xi(size_t(i) + 1, 0);
    xi.back() = 1;
    FpPoly xp = fp_powmod(R, xi, R.p, f);
    for (size_t j = 0; j < xp.size(); ++j) frob.at(i, int64_t(j)) = xp[j];
    frob.at(i, i) = R.sub(frob.at(i, i), 1);
  }
  ModMatrix berl = kernel(frob);
  int64_t nfactors = berl.rows;
  if (nfactors == 1) return {f};

  std::vector<FpPoly> factors{f};
  for (int64_t v = 0; v < berl.rows && int64_t(factors.size()) < nfactors; ++v) {
    FpPoly vp = fp_trim(berl.row(v));
    if (vp.size() <= 1) continue;  // constants cannot split anything
    for (size_t idx = 0; idx < factors.size() && int64_t(factors.size()) < nfactors; ++idx) {
      if (factors[idx].size() <= 2) continue;
      FpPoly h = factors[idx];
      FpPoly vh = fp_mod(R, vp, h);
      for (int64_t c = 0; c < R.p && int64_t(factors.size()) < nfactors; ++c) {
        FpPoly shifted = vh;
        if (shifted.empty()) shifted = {0};
        shifted[0] = R.sub(shifted[0], c);
        FpPoly g = fp_gcd(R, h, shifted);
        if (g.size() > 1 && g.size() < h.size()) {
          FpPoly rest = fp_divexact(R, h, g);
          factors[idx] = g;
          factors.push_back(rest);
          h = g;
          vh = fp_mod(R, vp, h);
        }
      }
    }
  }
  if (int64_t(factors.size()) != nfactors)
    throw std::runtime_error("berlekamp: splitting failed to reach the kernel dimension");
  return factors;
}

}  // namespace

std::vector<FpPoly> berlekamp_factor(const Ring& R, FpPoly f) {
  if (R.k != 1) throw std::invalid_argument("berlekamp_factor: field case only");
  f = fp_monic(R, std::move(f));
  std::vector<FpPoly> out;
  if (f.size() <= 1) return out;

  std::vector<FpPoly> stack{f};
  while (!stack.empty()) {
    FpPoly cur = std::move(stack.back());
    stack.pop_back();
    if (cur.size() <= 1) continue;
    if (cur.size() == 2) {
      out.push_back(cur);
      continue;
    }
    FpPoly d = derivative(R, cur);
    if (d.empty()) {
      // cur = h(X^p) = h(X)^p over the prime field.
      FpPoly h;
      for (size_t i = 0; i < cur.size(); i += size_t(R.p)) h.push_back(cur[i]);
      for (int64_t rep = 0; rep < R.p; ++rep) stack.push_back(h);
      continue;
    }
    FpPoly g = fp_gcd(R, cur, d);
    if (g.size() == 1) {
      auto fs = berlekamp_squarefree(R, cur);
      out.insert(out.end(), fs.begin(), fs.end());
    } else {
      stack.push_back(g);
      stack.push_back(fp_divexact(R, cur, g));
    }
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

}  // namespace intdec
