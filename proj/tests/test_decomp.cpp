#include "gzkit/decomp.hpp"

#include "test_support.hpp"

#include <random>

using namespace gzkit;

namespace {

CVector vec(std::initializer_list<Complex> vals) {
  CVector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index k = 0;
  for (const Complex& c : vals) v[k++] = c;
  return v;
}

void test_partition_basics() {
  const Partition p = make_partition({3, 2, 2, 1});
  CHECK(p.total() == 8);
  CHECK(p.count() == 4);
  CHECK_THROWS(make_partition({1, 2}), BadInput);
  CHECK_THROWS(make_partition({2, 0}), BadInput);

  const auto d = make_decomposition_data({make_partition({1}), make_partition({2})});
  CHECK(d.n == 2);
  CHECK_THROWS(make_decomposition_data({make_partition({2})}), BadInput);
}

void test_class_of() {
  CMatrix d3 = CMatrix::Zero(3, 3);
  d3.diagonal() << 1.0, 2.0, 3.0;
  CHECK(class_of(d3) == make_partition({1, 1, 1}));

  // Eigenvalues {2, 2, 5} with a genuine 2x2 Jordan block is regular.
  CMatrix jb = CMatrix::Zero(3, 3);
  jb.diagonal() << 2.0, 2.0, 5.0;
  jb(0, 1) = 1.0;
  CHECK(class_of(jb) == make_partition({2, 1}));

  CMatrix e = CMatrix::Zero(3, 3);
  e(1, 0) = 1.0;
  e(2, 1) = 1.0;
  CHECK(class_of(e) == make_partition({3}));

  // diag(2, 2, 5) has a two-dimensional eigenspace: not regular.
  CMatrix nr = CMatrix::Zero(3, 3);
  nr.diagonal() << 2.0, 2.0, 5.0;
  CHECK_THROWS(class_of(nr), NotRegular);
}

void test_canonical_rep() {
  CHECK_MATRIX_NEAR(canonical_rep(make_partition({1, 1}), vec({1.0, 3.0})),
                    CMatrix(CVector(vec({1.0, 3.0})).asDiagonal()), 0.0);

  CMatrix expected(2, 2);
  expected << 5.0, 1.0, 0.0, 5.0;
  CHECK_MATRIX_NEAR(canonical_rep(make_partition({2}), vec({5.0})), expected, 0.0);

  CMatrix expected3 = CMatrix::Zero(3, 3);
  expected3.diagonal() << 2.0, 2.0, 5.0;
  expected3(0, 1) = 1.0;
  CHECK_MATRIX_NEAR(canonical_rep(make_partition({2, 1}), vec({2.0, 5.0})), expected3, 0.0);

  CHECK_THROWS(canonical_rep(make_partition({1, 1}), vec({2.0, 2.0})), RepeatedEigenvalue);
}

// class_of inverts canonical_rep across all partitions of totals <= 6.
void test_class_roundtrip() {
  std::mt19937_64 gen(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int total = 1; total <= 6; ++total)
    for (const Partition& lambda : partitions_of(total)) {
      CVector values(lambda.count());
      bool ok = false;
      while (!ok) {
        for (int k = 0; k < values.size(); ++k) values[k] = Complex(u(gen), u(gen));
        ok = true;
        for (int a = 0; a < values.size() && ok; ++a)
          for (int b = a + 1; b < values.size(); ++b)
            if (std::abs(values[a] - values[b]) < 0.2) ok = false;
      }
      CHECK_MSG(class_of(canonical_rep(lambda, values)) == lambda,
                "roundtrip failed at total " + std::to_string(total));
    }
}

void test_sigma_order() {
  const auto rs3 = make_decomposition_data(
      {make_partition({1}), make_partition({1, 1}), make_partition({1, 1, 1})});
  CHECK(sigma_order(rs3) == 12);  // 1! 2! 3!

  const auto distinct = make_decomposition_data(
      {make_partition({1}), make_partition({2}), make_partition({2, 1})});
  CHECK(sigma_order(distinct) == 1);

  const auto n2 = make_decomposition_data({make_partition({1}), make_partition({1, 1})});
  CHECK(sigma_order(n2) == 2);
}

void test_zd_dimension() {
  const auto d = make_decomposition_data(
      {make_partition({1}), make_partition({2}), make_partition({2, 1})});
  const ZdDimension z = zd_dimension(d);
  CHECK(z.r == std::vector<int>({1, 1, 2}));
  CHECK(z.s == std::vector<int>({0, 1, 1}));
  CHECK(z.total == 3);

  const auto rs = make_decomposition_data(
      {make_partition({1}), make_partition({1, 1}), make_partition({1, 1, 1})});
  const ZdDimension zrs = zd_dimension(rs);
  CHECK(zrs.s == std::vector<int>({0, 0, 0}));

  const auto single = make_decomposition_data(
      {make_partition({1}), make_partition({2}), make_partition({3})});
  const ZdDimension zs = zd_dimension(single);
  CHECK(zs.r == std::vector<int>({1, 1, 1}));
  CHECK(zs.s == std::vector<int>({0, 1, 2}));

  // The total is n choose 2 for every stratum.
  for (int n = 1; n <= 5; ++n)
    for (const auto& dd : enumerate_strata(n))
      CHECK(zd_dimension(dd).total == n * (n - 1) / 2);
}

void test_in_tower() {
  CMatrix x(2, 2);
  x << 1.0, 1.0, 0.0, 2.0;
  CHECK(in_tower(x, make_decomposition_data({make_partition({1}), make_partition({1, 1})})));

  CMatrix jb(2, 2);
  jb << 1.0, 1.0, 0.0, 1.0;
  CHECK(in_tower(jb, make_decomposition_data({make_partition({1}), make_partition({2})})));

  CMatrix d(2, 2);
  d << 1.0, 0.0, 0.0, 2.0;
  CHECK(!in_tower(d, make_decomposition_data({make_partition({1}), make_partition({1, 1})})));

  // Strata partition the strongly regular set: exactly one label matches.
  int matches = 0;
  for (const auto& dd : enumerate_strata(2))
    if (in_tower(x, dd)) ++matches;
  CHECK(matches == 1);
}

void test_generic_counts() {
  GenericCounts g = generic_counts({vec({1.0}), vec({1.0, 3.0})});
  CHECK(g.j == std::vector<int>({1}));
  CHECK(g.orbit_count == 2);
  CHECK(!g.generic);

  g = generic_counts({vec({1.0}), vec({2.0, 3.0}), vec({4.0, 5.0, 6.0})});
  CHECK(g.orbit_count == 1);
  CHECK(g.generic);

  g = generic_counts({vec({1.0}), vec({1.0, 2.0}), vec({2.0, 5.0, 7.0})});
  CHECK(g.j == std::vector<int>({1, 1}));
  CHECK(g.orbit_count == 4);

  CHECK_THROWS(generic_counts({vec({1.0}), vec({2.0, 2.0})}), DuplicateWithinLevel);
}

void test_enumeration_and_atlas() {
  CHECK(partitions_of(4).size() == 5);
  CHECK(enumerate_strata(3).size() == 6);
  CHECK(enumerate_strata(4).size() == 30);

  for (int n = 2; n <= 5; ++n) {
    const auto rows = atlas(n);
    for (const AtlasRow& row : rows) {
      CHECK(row.dim_x == row.dim_z + n * n - n * (n + 1) / 2);
      CHECK(row.zd.total == n * (n - 1) / 2);
      CHECK(row.sigma >= 1);
    }
  }
  // Regular semisimple data has the torus dimension and full deck group.
  const auto rows = atlas(3);
  bool found_rs = false;
  for (const AtlasRow& row : rows)
    if (row.dim_z == 6) {
      found_rs = true;
      CHECK(row.sigma == 12);
    }
  CHECK(found_rs);
}

}  // namespace

int main() {
  test_partition_basics();
  test_class_of();
  test_canonical_rep();
  test_class_roundtrip();
  test_sigma_order();
  test_zd_dimension();
  test_in_tower();
  test_generic_counts();
  test_enumeration_and_atlas();
  return testkit::summary("test_decomp");
}
