#include "doctest.h"
#include "intdec/fixtures.hpp"
#include "intdec/poly.hpp"

using namespace intdec;

namespace {

AlgebraPoly mkpoly(const FiniteAlgebra& a, std::vector<Elem> coeffs) {
  AlgebraPoly f;
  f.ring = a.ring();
  f.rank = a.rank();
  f.coeffs = std::move(coeffs);
  return f;
}

}  // namespace

TEST_CASE("scalar evaluation: X^2 - X is even on Z") {
  FiniteAlgebra z4(find_fixture("z")->algebra, 2, 2);
  ScalarPoly f{z4.ring(), {0, 3, 1}};  // X^2 - X mod 4
  for (int64_t a = 0; a < 4; ++a) {
    Elem v = evaluate_scalar(z4, f, {a});
    CHECK(v[0] % 2 == 0);
  }
}

TEST_CASE("evaluation with algebra coefficients: (1+i)X at i") {
  FiniteAlgebra zi(find_fixture("gaussian")->algebra, 5, 1);  // any odd modulus keeps -1 visible
  AlgebraPoly f = mkpoly(zi, {Elem{0, 0}, Elem{1, 1}});       // (1+i) X
  Elem at_i = evaluate(zi, f, {0, 1});
  CHECK(at_i == Elem{4, 1});  // (1+i)i = -1+i = 4+i mod 5
}

TEST_CASE("evaluation is not multiplicative: E12 X * E21 X at E11") {
  FiniteAlgebra m2(find_fixture("m2z")->algebra, 3, 1);
  Elem e11{1, 0, 0, 0}, e12{0, 1, 0, 0}, e21{0, 0, 1, 0}, zero(4, 0);
  AlgebraPoly g = mkpoly(m2, {zero, e12});  // E12 X
  AlgebraPoly h = mkpoly(m2, {zero, e21});  // E21 X
  AlgebraPoly f = poly_product(m2, g, h);   // E11 X^2
  CHECK(f.coeffs.size() == 3);
  CHECK(f.coeffs[2] == e11);
  Elem fa = evaluate(m2, f, e11);
  Elem ga = evaluate(m2, g, e11);
  Elem ha = evaluate(m2, h, e11);
  CHECK(fa == e11);
  CHECK(m2.multiply(ga, ha) == zero);
  CHECK(fa != m2.multiply(ga, ha));
}

TEST_CASE("flatten layout is descending-degree-major and round-trips") {
  FiniteAlgebra zi(find_fixture("gaussian")->algebra, 2, 1);
  AlgebraPoly f = mkpoly(zi, {Elem{0, 0}, Elem{1, 1}, Elem{1, 1}});  // (1+i)X + (1+i)X^2
  auto row = flatten_poly(f, 2);
  // Columns: [X^2 coeff (1,1)] [X^1 coeff (1,1)] [X^0 coeff (0,0)]
  CHECK(row == std::vector<int64_t>{1, 1, 1, 1, 0, 0});
  AlgebraPoly back = unflatten_poly(zi.ring(), 2, 2, row);
  CHECK(back.coeffs == f.coeffs);

  ScalarPoly s{zi.ring(), {1, 0, 1}};
  auto srow = flatten_scalar(s, 4);
  CHECK(srow == std::vector<int64_t>{0, 0, 1, 0, 1});
  CHECK(unflatten_scalar(zi.ring(), 4, srow).coeffs == s.coeffs);
}

TEST_CASE("rendering is ascending with explicit basis names") {
  FiniteAlgebra zi(find_fixture("gaussian")->algebra, 2, 1);
  AlgebraPoly f = mkpoly(zi, {Elem{0, 0}, Elem{1, 1}, Elem{1, 1}});
  CHECK(render_poly(f, {"1", "i"}) == "(1 + i)*X + (1 + i)*X^2");
  CHECK(render_scalar_int({0, 2, 3, 1}) == "2*X + 3*X^2 + X^3");
  CHECK(render_scalar_int({}) == "0");
  AlgebraPoly zero = mkpoly(zi, {});
  CHECK(render_poly(zero, {"1", "i"}) == "0");
}
