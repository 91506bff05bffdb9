#include "intdec/residue.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "intdec/fp_linalg.hpp"
#include "intdec/fp_poly.hpp"

namespace intdec {

namespace {

ModMatrix identity_matrix(Ring ring, int64_t n) {
  ModMatrix m(ring, n, n);
  for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace

ModMatrix jacobson_radical(const FiniteAlgebra& a) {
  if (a.ring().k != 1) throw std::invalid_argument("jacobson_radical: requires k = 1");
  const Ring& R = a.ring();
  int64_t t = a.rank();

  ModMatrix V = identity_matrix(R, t);
  int64_t pw = 1;  // p^{level-1}, the characteristic coefficient index
  while (pw <= t && V.rows > 0) {
    // Constraints: c_pw(charpoly(L_{x y})) = 0 for all y in the current
    // ideal. This is linear in x once all lower p-power coefficients vanish
    // on products, which the chain guarantees.
    ModMatrix M(R, V.rows, V.rows);
    for (int64_t s = 0; s < V.rows; ++s)
      for (int64_t u = 0; u < V.rows; ++u) {
        Elem z = a.multiply(V.row(s), V.row(u));
        auto chi = charpoly_fp(a.left_mul_matrix(z));
        M.at(s, u) = chi[size_t(t - pw)];
      }
    V = howell_form(mat_mul(kernel(M), V));
    pw *= R.p;
  }
  return V;
}

ModMatrix center_basis(const FiniteAlgebra& a) {
  const Ring& R = a.ring();
  int64_t t = a.rank();
  // Row s: for each (i, l), the e_l-coordinate of e_s e_i - e_i e_s.
  ModMatrix comm(R, t, t * t);
  for (int64_t s = 0; s < t; ++s)
    for (int64_t i = 0; i < t; ++i)
      for (int64_t l = 0; l < t; ++l)
        comm.at(s, i * t + l) = R.sub(a.c(s, i, l), a.c(i, s, l));
  return kernel(comm);
}

bool WedderburnProfile::uniform() const {
  if (radical_dim != 0 || components.empty()) return false;
  for (const auto& c : components)
    if (!(c == components[0])) return false;
  return true;
}

bool WedderburnProfile::split_scalar(int64_t prime) const {
  if (radical_dim != 0 || components.empty()) return false;
  for (const auto& c : components)
    if (c.q != prime || c.n != 1) return false;
  return true;
}

std::string WedderburnProfile::to_string() const {
  std::ostringstream os;
  os << "radical_dim=" << radical_dim << " components={";
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << ", ";
    os << "(q=" << components[i].q << ", n=" << components[i].n << ")";
  }
  os << "}";
  return os.str();
}

namespace {

// Finite algebra built from raw mod-p tables (quotients, components).
// Associativity is rechecked mod p as a tripwire.
struct FpAlgebra {
  Ring ring;
  int64_t t;
  std::vector<int64_t> table;  // c[i][j][l]
  Elem unity;

  int64_t c(int64_t i, int64_t j, int64_t l) const { return table[size_t((i * t + j) * t + l)]; }

  Elem multiply(const Elem& x, const Elem& y) const {
    Elem out(size_t(t), 0);
    for (int64_t i = 0; i < t; ++i) {
      if (x[size_t(i)] == 0) continue;
      for (int64_t j = 0; j < t; ++j) {
        int64_t xy = ring.mul(x[size_t(i)], y[size_t(j)]);
        if (xy == 0) continue;
        for (int64_t l = 0; l < t; ++l) {
          int64_t cl = c(i, j, l);
          if (cl) out[size_t(l)] = (out[size_t(l)] + xy * cl) % ring.mod;
        }
      }
    }
    return out;
  }

  void check_associative() const {
    Elem ei(size_t(t), 0), ej(size_t(t), 0), ek(size_t(t), 0);
    for (int64_t i = 0; i < t; ++i)
      for (int64_t j = 0; j < t; ++j)
        for (int64_t k = 0; k < t; ++k) {
          std::fill(ei.begin(), ei.end(), 0);
          std::fill(ej.begin(), ej.end(), 0);
          std::fill(ek.begin(), ek.end(), 0);
          ei[size_t(i)] = 1;
          ej[size_t(j)] = 1;
          ek[size_t(k)] = 1;
          if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
            throw std::logic_error("quotient algebra lost associativity");
        }
  }
};

// Quotient of A (k = 1) by the span of rad; returns the quotient algebra and
// the projection (full coordinates -> quotient coordinates).
struct Quotient {
  FpAlgebra alg;
  ModMatrix lift;       // rows: complement basis in A coordinates
  ModMatrix basis_inv;  // inverse of [complement; rad] stacked
  int64_t dim;

  Elem project(const Elem& v) const {
    // v = y * [C; R]; quotient coords are the first dim entries of y.
    Elem full(size_t(basis_inv.rows), 0);
    for (int64_t j = 0; j < basis_inv.rows; ++j) {
      int64_t acc = 0;
      for (int64_t i = 0; i < basis_inv.rows; ++i)
        acc = (acc + v[size_t(i)] * basis_inv.at(i, j)) % basis_inv.ring.mod;
      full[size_t(j)] = acc;
    }
    return Elem(full.begin(), full.begin() + dim);
  }
};

Quotient build_quotient(const FiniteAlgebra& a, const ModMatrix& rad) {
  const Ring& R = a.ring();
  int64_t t = a.rank();
  int64_t dim = t - rad.rows;

  // Greedily extend rad to a full basis with standard vectors.
  std::vector<std::vector<int64_t>> chosen;
  ModMatrix current = rad;
  for (int64_t i = 0; i < t && int64_t(chosen.size()) < dim; ++i) {
    std::vector<int64_t> e(size_t(t), 0);
    e[size_t(i)] = 1;
    if (!span_contains(current, e)) {
      chosen.push_back(e);
      current = howell_form(vstack(current, ModMatrix::from_rows(R, t, {e})));
    }
  }
  if (int64_t(chosen.size()) != dim) throw std::logic_error("quotient: complement construction failed");

  ModMatrix stacked(R, t, t);
  for (int64_t i = 0; i < dim; ++i) stacked.set_row(i, chosen[size_t(i)]);
  for (int64_t i = 0; i < rad.rows; ++i) stacked.set_row(dim + i, rad.row(i));

  Quotient q;
  q.dim = dim;
  q.lift = ModMatrix::from_rows(R, t, chosen);
  // y * stacked = v  =>  y = v * stacked^{-1}; we store the inverse acting on
  // the right of row vectors, i.e. solve stacked^T.
  ModMatrix inv = inverse_fp(stacked);
  q.basis_inv = inv;

  q.alg.ring = R;
  q.alg.t = dim;
  q.alg.table.assign(size_t(dim * dim * dim), 0);
  for (int64_t i = 0; i < dim; ++i)
    for (int64_t j = 0; j < dim; ++j) {
      Elem prod = a.multiply(chosen[size_t(i)], chosen[size_t(j)]);
      Elem pc = q.project(prod);
      for (int64_t l = 0; l < dim; ++l) q.alg.table[size_t((i * dim + j) * dim + l)] = pc[size_t(l)];
    }
  q.alg.unity = q.project(a.unity());
  q.alg.check_associative();
  return q;
}

// Minimal polynomial of z inside the unital subalgebra with unity e,
// computed from the first linear dependence among e, z, z^2, ...
FpPoly minpoly_in(const FpAlgebra& s, const Elem& z, const Elem& e) {
  const Ring& R = s.ring;
  std::vector<std::vector<int64_t>> pows{e};
  Elem cur = e;
  while (true) {
    cur = s.multiply(cur, z);
    ModMatrix m = ModMatrix::from_rows(R, s.t, pows);
    if (auto rel = solve_left(m, cur)) {
      // z^n = sum rel_i z^i  =>  minpoly = X^n - sum rel_i X^i.
      FpPoly f(pows.size() + 1, 0);
      f.back() = 1;
      for (size_t i = 0; i < rel->size(); ++i) f[i] = R.neg((*rel)[i]);
      return f;
    }
    pows.push_back(cur);
    if (int64_t(pows.size()) > s.t + 1) throw std::logic_error("minpoly: no dependence found");
  }
}

Elem eval_poly_in(const FpAlgebra& s, const FpPoly& f, const Elem& z, const Elem& e) {
  Elem acc(size_t(s.t), 0);
  Elem pw = e;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i > 0) pw = s.multiply(pw, z);
    for (int64_t l = 0; l < s.t; ++l) acc[size_t(l)] = s.ring.add(acc[size_t(l)], s.ring.mul(f[i], pw[size_t(l)]));
  }
  return acc;
}

}  // namespace

WedderburnProfile wedderburn_profile(const FiniteAlgebra& a, uint64_t seed) {
  if (a.ring().k != 1) throw std::invalid_argument("wedderburn_profile: requires k = 1");
  const Ring& R = a.ring();
  int64_t t = a.rank();

  WedderburnProfile prof;
  prof.p = R.p;
  prof.seed = seed;

  ModMatrix rad = jacobson_radical(a);
  prof.radical_dim = rad.rows;

  Quotient q = build_quotient(a, rad);
  const FpAlgebra& S = q.alg;
  int64_t sdim = S.t;

  // Center of the semisimple quotient.
  ModMatrix comm(R, sdim, sdim * sdim);
  for (int64_t s = 0; s < sdim; ++s)
    for (int64_t i = 0; i < sdim; ++i)
      for (int64_t l = 0; l < sdim; ++l)
        comm.at(s, i * sdim + l) = R.sub(S.c(s, i, l), S.c(i, s, l));
  ModMatrix Z = kernel(comm);
  int64_t zdim = Z.rows;

  // Component count: dim ker(Frobenius - id) on the center.
  ModMatrix frob(R, zdim, zdim);
  for (int64_t u = 0; u < zdim; ++u) {
    Elem zu = Z.row(u);
    Elem pw = S.unity;
    for (int64_t i = 0; i < R.p; ++i) pw = S.multiply(pw, zu);
    auto coords = solve_left(Z, pw);
    if (!coords) throw std::logic_error("wedderburn: Frobenius left the center");
    for (int64_t v = 0; v < zdim; ++v) frob.at(u, v) = (*coords)[size_t(v)];
    frob.at(u, u) = R.sub(frob.at(u, u), 1);
  }
  int64_t expected_components = kernel(frob).rows;

  // Split the center into primitive idempotents, deterministically seeded.
  std::vector<Elem> blocks{S.unity};
  std::mt19937_64 rng(seed);
  int64_t attempts = 0;
  int64_t next_basis = 0;
  while (int64_t(blocks.size()) < expected_components) {
    if (++attempts > 512) throw std::logic_error("wedderburn: idempotent splitting did not converge");
    Elem z(size_t(sdim), 0);
    if (next_basis < zdim) {
      z = Z.row(next_basis++);
    } else {
      for (int64_t u = 0; u < zdim; ++u) {
        int64_t c = int64_t(rng() % uint64_t(R.p));
        for (int64_t l = 0; l < sdim; ++l)
          z[size_t(l)] = R.add(z[size_t(l)], R.mul(c, Z.at(u, l)));
      }
    }
    std::vector<Elem> next_blocks;
    for (const Elem& e : blocks) {
      Elem ze = S.multiply(z, e);
      FpPoly mu = minpoly_in(S, ze, e);
      auto factors = berlekamp_factor(R, mu);
      if (factors.size() <= 1) {
        next_blocks.push_back(e);
        continue;
      }
      for (const auto& f : factors) {
        // Idempotent for factor f: h * (mu/f) evaluated at ze, where
        // h * (mu/f) = 1 mod f (CRT in F_p[X]/(mu); mu squarefree here).
        FpPoly cof = fp_divexact(R, mu, f);
        // Find h with h*cof = 1 mod f via the extended Euclid on (cof, f).
        // Compute gcd chain tracking the cof-coefficient only.
        FpPoly r0 = f, r1 = fp_mod(R, cof, f);
        FpPoly s0 = {}, s1 = {1};
        while (!r1.empty()) {
          // q, r = divmod(r0, r1)
          FpPoly q_;
          FpPoly rem = r0;
          int64_t lg = R.inv(r1.back());
          q_.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
          while (rem.size() >= r1.size() && !rem.empty()) {
            int64_t c = R.mul(rem.back(), lg);
            size_t off = rem.size() - r1.size();
            if (off < q_.size()) q_[off] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[off + i] = R.sub(rem[off + i], R.mul(c, r1[i]));
            rem = fp_trim(std::move(rem));
          }
          FpPoly s2 = s0;
          FpPoly qs1 = fp_mul(R, q_, s1);
          s2.resize(std::max(s2.size(), qs1.size()), 0);
          for (size_t i = 0; i < qs1.size(); ++i) s2[i] = R.sub(s2[i], qs1[i]);
          s2 = fp_trim(std::move(s2));
          r0 = std::move(r1);
          r1 = std::move(rem);
          s0 = std::move(s1);
          s1 = std::move(s2);
        }
        // r0 = gcd = unit (f irreducible, cof coprime to f); normalize.
        if (r0.size() != 1) throw std::logic_error("wedderburn: idempotent CRT gcd is not a unit");
        int64_t norm = R.inv(r0[0]);
        for (auto& c : s0) c = R.mul(c, norm);
        FpPoly g = fp_mul(R, s0, cof);
        Elem idem = eval_poly_in(S, g, ze, e);
        bool zero = std::all_of(idem.begin(), idem.end(), [](int64_t v) { return v == 0; });
        if (!zero) next_blocks.push_back(idem);
      }
    }
    blocks = std::move(next_blocks);
    if (int64_t(blocks.size()) > expected_components)
      throw std::logic_error("wedderburn: more idempotents than Frobenius predicts");
  }

  // Per-component invariants.
  int64_t dim_total = 0;
  for (const Elem& e : blocks) {
    std::vector<std::vector<int64_t>> ez, es;
    for (int64_t u = 0; u < zdim; ++u) ez.push_back(S.multiply(e, Z.row(u)));
    for (int64_t b = 0; b < sdim; ++b) {
      Elem eb(size_t(sdim), 0);
      eb[size_t(b)] = 1;
      es.push_back(S.multiply(e, eb));
    }
    int64_t qdim = rank_fp(ModMatrix::from_rows(R, sdim, ez));
    int64_t cdim = rank_fp(ModMatrix::from_rows(R, sdim, es));
    if (qdim <= 0 || cdim % qdim != 0)
      throw std::logic_error("wedderburn: component dimension is not a multiple of its center");
    int64_t nsq = cdim / qdim;
    int64_t n = 0;
    while (n * n < nsq) ++n;
    if (n * n != nsq) throw std::logic_error("wedderburn: component dimension is not a perfect square");
    WedderburnComponent comp;
    comp.q = 1;
    for (int64_t i = 0; i < qdim; ++i) comp.q *= R.p;
    comp.n = n;
    prof.components.push_back(comp);
    dim_total += nsq * qdim;
  }
  std::sort(prof.components.begin(), prof.components.end());

  if (dim_total + prof.radical_dim != t)
    throw std::logic_error("wedderburn: dimension bookkeeping failed: " + prof.to_string());
  return prof;
}

std::vector<TowerLevelReport> residue_tower_diagnostic(const StructureAlgebra& a, int64_t p, int64_t k_max,
                                                       int64_t budget, Exec exec) {
  std::vector<TowerLevelReport> out;
  for (int64_t k = 1; k <= k_max; ++k) {
    FiniteAlgebra ak(a, p, k);
    require_enumerable(ak, budget);
    const Ring& R = ak.ring();
    int64_t t = ak.rank();

    ModMatrix p_ideal(R, t, t);
    for (int64_t i = 0; i < t; ++i) p_ideal.at(i, i) = R.reduce(p);
    p_ideal = howell_form(p_ideal);

    auto nil = nil_generator_scan(ak, budget, exec);
    TowerLevelReport rep;
    rep.level = k;
    rep.p_ideal_card = span_cardinality(p_ideal);
    rep.consistent = true;
    for (int64_t idx = 0; idx < ak.card(); ++idx) {
      if (!nil[size_t(idx)]) continue;
      ++rep.nil_count;
      if (rep.consistent && !span_contains(p_ideal, ak.element(idx))) rep.consistent = false;
    }
    if (rep.nil_count != rep.p_ideal_card && rep.consistent) rep.consistent = false;
    out.push_back(rep);
  }
  return out;
}

}  // namespace intdec
