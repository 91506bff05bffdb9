#include "intdec/fixtures.hpp"

#include <algorithm>
#include <array>

namespace intdec {

namespace {

std::vector<std::vector<int64_t>> cyclic_table(int64_t n) {
  std::vector<std::vector<int64_t>> t(size_t(n), std::vector<int64_t>(size_t(n), 0));
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j) t[size_t(i)][size_t(j)] = (i + j) % n;
  return t;
}

std::vector<std::vector<int64_t>> s3_table() {
  // Permutations of {0,1,2} in lexicographic one-line order; composition
  // (s * u)(x) = s(u(x)).
  std::vector<std::array<int64_t, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::array<int64_t, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return int64_t(i);
    return int64_t(-1);
  };
  std::vector<std::vector<int64_t>> t(6, std::vector<int64_t>(6));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      std::array<int64_t, 3> comp;
      for (int64_t x = 0; x < 3; ++x) comp[size_t(x)] = perms[i][size_t(perms[j][size_t(x)])];
      t[i][j] = index_of(comp);
    }
  return t;
}

AlgebraCertificate matrix_sum_cert(int64_t n, int64_t copies) {
  AlgebraCertificate c;
  c.kind = AlgebraCertificate::Kind::matrix_sum;
  c.n = n;
  c.copies = copies;
  return c;
}

AlgebraCertificate quadratic_cert(int64_t disc) {
  AlgebraCertificate c;
  c.kind = AlgebraCertificate::Kind::quadratic_order;
  c.disc = disc;
  return c;
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;

  StructureAlgebra z = monogenic_ring({0, 1}, "Z");
  out.push_back({"z", "the integers", z, matrix_sum_cert(1, 1)});
  out.push_back({"zxz", "Z + Z componentwise", direct_sum(z, z), matrix_sum_cert(1, 2)});

  StructureAlgebra gauss = monogenic_ring({1, 0, 1}, "Z[i]");
  gauss.set_basis_names({"1", "i"});
  out.push_back({"gaussian", "Gaussian integers Z[i] (w^2 = -1)", gauss, quadratic_cert(-4)});

  StructureAlgebra golden = monogenic_ring({-1, -1, 1}, "Z[phi]");
  golden.set_basis_names({"1", "phi"});
  out.push_back({"golden", "golden-ratio order Z[X]/(X^2 - X - 1)", golden, quadratic_cert(5)});

  StructureAlgebra m2 = matrix_algebra(2);
  StructureAlgebra m3 = matrix_algebra(3);
  out.push_back({"m2z", "2x2 integer matrices", m2, matrix_sum_cert(2, 1)});
  out.push_back({"m3z", "3x3 integer matrices", m3, matrix_sum_cert(3, 1)});
  out.push_back({"m2zxm2z", "M2(Z) + M2(Z)", direct_sum(m2, m2), matrix_sum_cert(2, 2)});
  out.push_back({"m2zxm1z", "M2(Z) + M1(Z), mixed sizes", direct_sum(m2, matrix_algebra(1)), {}});

  out.push_back({"quaternion", "quaternion order (1,i,j,k; i^2=j^2=-1, ij=k=-ji)", quaternion_algebra(), {}});

  out.push_back({"t2z", "2x2 upper triangular matrices", triangular_algebra(2), {}});
  out.push_back({"t3z", "3x3 upper triangular matrices", triangular_algebra(3), {}});

  out.push_back({"c2", "group algebra Z[C_2]", group_algebra(cyclic_table(2), "Z[C2]"), {}});
  out.push_back({"c3", "group algebra Z[C_3]", group_algebra(cyclic_table(3), "Z[C3]"), {}});
  out.push_back({"s3", "group algebra Z[S_3]", group_algebra(s3_table(), "Z[S3]"), {}});

  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture* find_fixture(const std::string& key) {
  for (const auto& f : fixture_catalog())
    if (f.key == key) return &f;
  return nullptr;
}

}  // namespace intdec
