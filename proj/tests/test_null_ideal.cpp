#include "doctest.h"
#include "intdec/fixtures.hpp"
#include "intdec/null_ideal.hpp"
#include "oracles.hpp"

using namespace intdec;

namespace {

constexpr int64_t kBudget = 1 << 20;

const StructureAlgebra& fx(const char* key) { return find_fixture(key)->algebra; }

// Checks f(alpha) = 0 for every element, by direct evaluation.
void check_kills(const FiniteAlgebra& a, const AlgebraPoly& f) {
  for_each_element(a, kBudget, [&](int64_t, const Elem& alpha) {
    Elem v = evaluate(a, f, alpha);
    for (auto x : v) CHECK(x == 0);
  });
}

}  // namespace

TEST_CASE("scalar null ideal of Z mod p contains the Fermat polynomial") {
  FiniteAlgebra z2(fx("z"), 2, 1);
  DegreewiseModule n2 = scalar_null_ideal(z2, 2, kBudget);
  // X^2 + X kills Z/2; the whole degree-<=2 slice is spanned by it and X
  // multiples; rank 1 at degree exactly 2.
  ScalarPoly fermat{z2.ring(), {0, 1, 1}};
  CHECK(span_contains(n2.basis, flatten_scalar(fermat, 2)));
  CHECK(n2.basis.rows == 1);

  FiniteAlgebra z3(fx("z"), 3, 1);
  DegreewiseModule n3 = scalar_null_ideal(z3, 3, kBudget);
  ScalarPoly fermat3{z3.ring(), {0, 2, 0, 1}};  // X^3 - X
  CHECK(span_contains(n3.basis, flatten_scalar(fermat3, 3)));
}

TEST_CASE("scalar null ideal of M2(Z) mod 2: minimal monic degree is 6") {
  FiniteAlgebra m2(fx("m2z"), 2, 1);
  DegreewiseModule nul = scalar_null_ideal(m2, 8, kBudget);
  auto monic = nul.minimal_monic_degree();
  REQUIRE(monic.has_value());
  // Golden value, frozen from the exhaustive evaluation oracle: the product
  // of X^2, (X+1)^2 and (X^2+X+1) is the least monic killer.
  CHECK(*monic == 6);
  // Cross-check by brute force at degrees 5 and 6.
  CHECK_FALSE(test::exhaustive_monic_killer_exists(fx("m2z"), 2, 1, 5));
  CHECK(test::exhaustive_monic_killer_exists(fx("m2z"), 2, 1, 6));
  // Every basis member kills everything.
  for (int64_t i = 0; i < nul.basis.rows; ++i) {
    ScalarPoly f = unflatten_scalar(m2.ring(), 8, nul.basis.row(i));
    AlgebraPoly g = scalar_to_algebra(m2, f);
    check_kills(m2, g);
  }
}

TEST_CASE("full null ideal of Z mod p equals the scalar one") {
  FiniteAlgebra z9(fx("z"), 3, 2);
  DegreewiseModule s = scalar_null_ideal(z9, 6, kBudget);
  DegreewiseModule f = full_null_ideal(z9, 6, kBudget);
  CHECK(s.basis == f.basis);  // rank 1 flattening coincides
}

TEST_CASE("full null ideal of Z[i] mod 2 contains (1+i)(X^2+X)") {
  FiniteAlgebra zi(fx("gaussian"), 2, 1);
  DegreewiseModule f = full_null_ideal(zi, 2, kBudget);
  AlgebraPoly w;
  w.ring = zi.ring();
  w.rank = 2;
  w.coeffs = {Elem{0, 0}, Elem{1, 1}, Elem{1, 1}};
  CHECK(span_contains(f.basis, flatten_poly(w, 2)));
  check_kills(zi, w);
  // And it is the only generator at degree <= 2.
  CHECK(f.basis.rows == 1);
}

TEST_CASE("scalar null embeds into full null (containment by construction)") {
  for (const char* key : {"z", "gaussian", "golden", "quaternion", "t2z", "c2"}) {
    FiniteAlgebra a(fx(key), 2, 2);
    int64_t d = 5;
    DegreewiseModule s = scalar_null_ideal(a, d, kBudget);
    DegreewiseModule f = full_null_ideal(a, d, kBudget);
    for (int64_t i = 0; i < s.basis.rows; ++i) {
      ScalarPoly sp = unflatten_scalar(a.ring(), d, s.basis.row(i));
      AlgebraPoly g = scalar_to_algebra(a, sp);
      CHECK(span_contains(f.basis, flatten_poly(g, d)));
    }
  }
}

TEST_CASE("level compatibility: null basis mod p^k reduces into level k-1") {
  for (const char* key : {"gaussian", "quaternion", "c3"}) {
    FiniteAlgebra a2(fx(key), 3, 2);
    FiniteAlgebra a1(fx(key), 3, 1);
    int64_t d = 4;
    DegreewiseModule n2 = scalar_null_ideal(a2, d, kBudget);
    DegreewiseModule n1 = scalar_null_ideal(a1, d, kBudget);
    for (int64_t i = 0; i < n2.basis.rows; ++i) {
      auto row = n2.basis.row(i);
      for (auto& v : row) v %= 3;
      bool zero = true;
      for (auto v : row) zero = zero && v == 0;
      if (!zero) CHECK(span_contains(n1.basis, row));
    }
  }
}

TEST_CASE("null ideal kernels agree between serial and parallel paths") {
  for (const char* key : {"gaussian", "quaternion", "m2z"}) {
    FiniteAlgebra a(fx(key), 2, 2);
    DegreewiseModule s1 = scalar_null_ideal(a, 6, kBudget, Exec::serial);
    DegreewiseModule s2 = scalar_null_ideal(a, 6, kBudget, Exec::parallel);
    CHECK(s1.basis == s2.basis);
    DegreewiseModule f1 = full_null_ideal(a, 6, kBudget, Exec::serial);
    DegreewiseModule f2 = full_null_ideal(a, 6, kBudget, Exec::parallel);
    CHECK(f1.basis == f2.basis);
  }
}

TEST_CASE("N-decomposability: Z[i] mod 2 fails with the ramified witness") {
  FiniteAlgebra zi(fx("gaussian"), 2, 1);
  NDecompResult res = is_N_decomposable(zi, 4, kBudget);
  CHECK_FALSE(res.decomposable);
  CHECK(res.first_failing_degree == 2);
  REQUIRE(res.witness.has_value());
  // Witness must kill A and must not lie in the generated module; both are
  // re-verified here independently of the search.
  check_kills(zi, *res.witness);
  DegreewiseModule scal = scalar_null_ideal(zi, 4, kBudget);
  DegreewiseModule gen = generated_module(zi, scal);
  CHECK_FALSE(span_contains(gen.basis, flatten_poly(*res.witness, 4)));
  // The witness is exactly (1+i)(X^2+X) up to the stated degree bound.
  REQUIRE(res.witness->coeffs.size() == 3);
  CHECK(res.witness->coeffs[1] == Elem{1, 1});
  CHECK(res.witness->coeffs[2] == Elem{1, 1});
  CHECK(res.witness->coeffs[0] == Elem{0, 0});
}

TEST_CASE("N-decomposability: M2(Z) mod 4 holds up to degree 8") {
  FiniteAlgebra m2(fx("m2z"), 2, 2);
  NDecompResult res = is_N_decomposable(m2, 8, kBudget);
  CHECK(res.decomposable);
}

TEST_CASE("N-decomposability: group algebra C3 mod 3 fails") {
  FiniteAlgebra c3(fx("c3"), 3, 1);
  NDecompResult res = is_N_decomposable(c3, 4, kBudget);
  CHECK_FALSE(res.decomposable);
  REQUIRE(res.witness.has_value());
  check_kills(c3, *res.witness);
}

TEST_CASE("degree-0 slice is the annihilator of the algebra") {
  // In Z/4, the constants killing everything are the multiples of 4 = {0};
  // in Z/2 x Z/2 reduced from zxz mod 2, also only 0. A torsion example:
  // constants c with c*A = 0 in Z/9 are multiples of 9, i.e. zero only.
  FiniteAlgebra z9(fx("z"), 3, 2);
  DegreewiseModule n0 = scalar_null_ideal(z9, 0, kBudget);
  CHECK(n0.basis.rows == 0);
}
