#include "doctest.h"
#include "intdec/fixtures.hpp"
#include "intdec/ivp.hpp"
#include "oracles.hpp"

using namespace intdec;

namespace {

constexpr int64_t kBudget = 1 << 20;

const StructureAlgebra& fx(const char* key) { return find_fixture(key)->algebra; }

// Witness soundness: g_j must kill A mod p^{nu_j}.
void check_witnesses(const StructureAlgebra& alg, const NuSequence& nu) {
  for (size_t j = 0; j < nu.entries.size(); ++j) {
    const NuEntry& e = nu.entries[j];
    CHECK(e.witness_ascending.size() == j + 1);
    CHECK(e.witness_ascending.back() == 1);
    if (e.nu == 0) continue;
    FiniteAlgebra ak(alg, nu.p, e.nu);
    ScalarPoly g{ak.ring(), e.witness_ascending};
    for_each_element(ak, kBudget, [&](int64_t, const Elem& alpha) {
      Elem v = evaluate_scalar(ak, g, alpha);
      for (auto x : v) CHECK(x == 0);
    });
  }
}

}  // namespace

TEST_CASE("nu sequence of Z at 2 follows the factorial valuations") {
  NuSequence nu = nu_sequence(fx("z"), 2, 4, 4, kBudget);
  REQUIRE(nu.entries.size() == 5);
  CHECK(nu.entries[0].nu == 0);
  CHECK(nu.entries[1].nu == 0);
  CHECK(nu.entries[2].nu == 1);
  CHECK(nu.entries[3].nu == 1);
  CHECK(nu.entries[4].nu == 3);
  for (auto& e : nu.entries) CHECK_FALSE(e.saturated);
  // Factorial-valuation oracle, computed factor by factor.
  for (int64_t j = 0; j <= 4; ++j) {
    CHECK(nu.entries[size_t(j)].nu == test::factorial_valuation(2, j));
    CHECK(legendre_valuation(2, j) == test::factorial_valuation(2, j));
  }
  check_witnesses(fx("z"), nu);
  // The degree-2 witness is the falling factorial X(X-1) = X^2 + X mod 2.
  CHECK(nu.entries[2].witness_ascending == std::vector<int64_t>{0, 1, 1});
}

TEST_CASE("nu saturation flag fires at the cap") {
  NuSequence nu = nu_sequence(fx("z"), 2, 4, 2, kBudget);
  CHECK(nu.entries[4].nu == 2);  // true value is 3
  CHECK(nu.entries[4].saturated);
  CHECK_FALSE(nu.entries[2].saturated);  // exactly 1 < cap
}

TEST_CASE("nu of Z[i] at 2: no monic quadratic kills mod 2") {
  NuSequence nu = nu_sequence(fx("gaussian"), 2, 2, 4, kBudget);
  CHECK(nu.entries[2].nu == 0);
  // Exhaustive cross-check over all four monic quadratics mod 2.
  CHECK_FALSE(test::exhaustive_monic_killer_exists(fx("gaussian"), 2, 1, 2));
}

TEST_CASE("nu of M2(Z) at 2: first nonzero entry sits at the oracle degree") {
  NuSequence nu = nu_sequence(fx("m2z"), 2, 8, 2, kBudget);
  int64_t first = -1;
  for (size_t j = 0; j < nu.entries.size(); ++j)
    if (nu.entries[j].nu > 0) {
      first = int64_t(j);
      break;
    }
  CHECK(first == 6);  // matches the exhaustive minimal-monic oracle in the null tests
  check_witnesses(fx("m2z"), nu);
}

TEST_CASE("nu maximality: level nu_j + 1 is infeasible (exhaustive, small cases)") {
  NuSequence nu = nu_sequence(fx("z"), 2, 3, 3, kBudget);
  CHECK(nu.entries[2].nu == 1);
  CHECK(test::exhaustive_monic_killer_exists(fx("z"), 2, 1, 2));
  CHECK_FALSE(test::exhaustive_monic_killer_exists(fx("z"), 2, 2, 2));
  CHECK(nu.entries[3].nu == 1);
  CHECK_FALSE(test::exhaustive_monic_killer_exists(fx("z"), 2, 2, 3));

  // At a ramified prime a monic killer must vanish doubly at every residue,
  // so even there low degrees stay at nu = 0: golden-ratio order at 5.
  NuSequence gold = nu_sequence(fx("golden"), 5, 2, 3, kBudget);
  CHECK(gold.entries[2].nu == 0);
  CHECK_FALSE(test::exhaustive_monic_killer_exists(fx("golden"), 5, 1, 2));
}

TEST_CASE("int module basis: Z[i] level 1 contains the ramified numerator") {
  DegreewiseModule m = int_module_basis(fx("gaussian"), 2, 2, 1, kBudget);
  AlgebraPoly w;
  w.ring = Ring::make(2, 1);
  w.rank = 2;
  w.coeffs = {Elem{0, 0}, Elem{1, 1}, Elem{1, 1}};
  CHECK(span_contains(m.basis, flatten_poly(w, 2)));
}

TEST_CASE("verify_phi: Gaussian counterexample at 2 with exact witness") {
  PhiResult res = verify_phi(fx("gaussian"), 2, 4, 1, kBudget);
  CHECK_FALSE(res.surjective);
  CHECK(res.first_failing_degree == 2);
  REQUIRE(res.witness.has_value());
  REQUIRE(res.witness->coeffs.size() == 3);
  CHECK(res.witness->coeffs[0] == Elem{0, 0});
  CHECK(res.witness->coeffs[1] == Elem{1, 1});
  CHECK(res.witness->coeffs[2] == Elem{1, 1});
  CHECK(res.nu.entries[2].nu == 0);
}

TEST_CASE("verify_phi: matrix algebra passes at 2 up to degree 6, levels 1 and 2") {
  for (int64_t k : {1, 2}) {
    PhiResult res = verify_phi(fx("m2z"), 2, 6, k, kBudget);
    CHECK(res.surjective);
  }
}

TEST_CASE("verify_phi: Z is trivially surjective at several parameters") {
  for (int64_t p : {2, 3}) {
    for (int64_t k : {1, 2}) {
      PhiResult res = verify_phi(fx("z"), p, 5, k, kBudget);
      CHECK(res.surjective);
    }
  }
}

TEST_CASE("intk_equals_intd: Z + Z is true with matching nu; matrix and quadratic cases") {
  IntkResult zz2 = intk_equals_intd(fx("zxz"), 2, 6, kBudget);
  CHECK(zz2.equals);
  CHECK(zz2.nu_checked);
  CHECK(zz2.nu_matches);
  IntkResult zz5 = intk_equals_intd(fx("zxz"), 5, 6, kBudget);
  CHECK(zz5.equals);

  // Gaussian: true exactly at split primes.
  CHECK_FALSE(intk_equals_intd(fx("gaussian"), 2, 4, kBudget).equals);
  CHECK_FALSE(intk_equals_intd(fx("gaussian"), 3, 4, kBudget).equals);
  CHECK(intk_equals_intd(fx("gaussian"), 5, 4, kBudget).equals);
  CHECK(intk_equals_intd(fx("gaussian"), 13, 2, kBudget).equals);
  CHECK_FALSE(intk_equals_intd(fx("gaussian"), 7, 4, kBudget).equals);

  CHECK_FALSE(intk_equals_intd(fx("m2z"), 3, 2, kBudget).equals);
}

TEST_CASE("prop-2.7 direction: scalar-split profiles at all small primes imply phi passes") {
  // zxz has profile (p,1)^2 at every prime; phi must pass wherever tested.
  for (int64_t p : {2, 3, 5}) {
    CHECK(intk_equals_intd(fx("zxz"), p, 4, kBudget).equals);
    PhiResult res = verify_phi(fx("zxz"), p, 4, 1, kBudget);
    CHECK(res.surjective);
  }
}
