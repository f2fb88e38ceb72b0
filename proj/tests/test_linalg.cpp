#include "gzkit/linalg.hpp"

#include "test_support.hpp"

#include <random>

using namespace gzkit;

namespace {

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix random_matrix(std::mt19937_64& gen, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(u(gen), u(gen));
  return m;
}

void test_charpoly() {
  CMatrix z(1, 1);
  z << 0.0;
  CVector c = charpoly(z);
  CHECK(c.size() == 1);
  CHECK_NEAR(c[0], Complex(0.0), 1e-15);

  c = charpoly(CMatrix::Identity(2, 2));
  CHECK_NEAR(c[0], Complex(1.0), 1e-15);   // t^2 - 2t + 1
  CHECK_NEAR(c[1], Complex(-2.0), 1e-15);

  c = charpoly(mat2(1, 1, 0, 2));
  CHECK_NEAR(c[0], Complex(2.0), 1e-15);   // t^2 - 3t + 2
  CHECK_NEAR(c[1], Complex(-3.0), 1e-15);
}

// Faddeev-LeVerrier output must match the product over eigensolver roots.
void test_charpoly_vs_eigenvalues() {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 5);  // up to 6
    const CMatrix m = random_matrix(gen, n);
    const CVector c = charpoly(m);

    Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
    std::vector<Complex> poly{1.0};  // ascending, leading last
    for (int k = 0; k < n; ++k) {
      const Complex root = solver.eigenvalues()[k];
      std::vector<Complex> next(poly.size() + 1, 0.0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= root * poly[d];
      }
      poly = next;
    }
    double scale = 1.0 + m.norm();
    for (int j = 0; j < n; ++j)
      CHECK_NEAR(c[j], poly[static_cast<std::size_t>(j)], 1e-8 * std::pow(scale, n));
  }
}

void test_clustered_spectrum() {
  CMatrix d3 = CMatrix::Zero(3, 3);
  d3.diagonal() << 1.0, 1.0, 5.0;
  ClusteredSpectrum s = clustered_spectrum(d3, 1e-8);
  CHECK(s.count() == 2);
  CHECK_NEAR(s.values[0], Complex(1.0), 1e-12);
  CHECK(s.multiplicities[0] == 2);
  CHECK_NEAR(s.values[1], Complex(5.0), 1e-12);
  CHECK(s.multiplicities[1] == 1);

  s = clustered_spectrum(mat2(1, 1, 0, 2), 1e-8);
  CHECK(s.count() == 2);
  CHECK(s.multiplicities[0] == 1 && s.multiplicities[1] == 1);

  CMatrix near = CMatrix::Zero(2, 2);
  near(1, 1) = 1e-12;
  s = clustered_spectrum(near, 1e-8);
  CHECK(s.count() == 1);
  CHECK(s.multiplicities[0] == 2);
  CHECK_NEAR(s.values[0], Complex(0.5e-12), 1e-14);

  // Two genuine clusters separated by less than 2*tol must refuse.
  CMatrix amb = CMatrix::Zero(2, 2);
  amb(1, 1) = 1.5e-6;
  CHECK_THROWS(clustered_spectrum(amb, 1e-6), ClusterAmbiguity);
}

void test_jordan_chevalley() {
  const CMatrix a = mat2(1, 1, 0, 1);
  JordanChevalley jc = jordan_chevalley(a);
  CHECK_MATRIX_NEAR(jc.s, CMatrix::Identity(2, 2), 1e-12);
  CHECK_MATRIX_NEAR(jc.n, mat2(0, 1, 0, 0), 1e-12);

  CMatrix e = CMatrix::Zero(3, 3);
  e(1, 0) = 1.0;
  e(2, 1) = 1.0;
  jc = jordan_chevalley(e);
  CHECK_MATRIX_NEAR(jc.s, CMatrix::Zero(3, 3), 1e-12);
  CHECK_MATRIX_NEAR(jc.n, e, 1e-12);

  const CMatrix b = mat2(1, 1, 0, 2);
  jc = jordan_chevalley(b);
  CHECK_MATRIX_NEAR(jc.s, b, 1e-10);
  CHECK_MATRIX_NEAR(jc.n, CMatrix::Zero(2, 2), 1e-10);
}

void test_jordan_chevalley_properties() {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 5);
    const CMatrix m = random_matrix(gen, n);
    JordanChevalley jc;
    try {
      jc = jordan_chevalley(m);
    } catch (const ClusterAmbiguity&) {
      continue;  // random spectra can be legitimately ambiguous
    }
    const double scale = 1.0 + m.norm();
    CHECK_MATRIX_NEAR(jc.s + jc.n, m, 0.0);  // exact by construction
    CHECK((jc.s * jc.n - jc.n * jc.s).norm() <= 1e-8 * scale * scale);
    CHECK(matrix_power(jc.n, n).norm() <= 1e-8 * std::pow(scale, n));
  }
}

void test_spectral_projector() {
  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 1.0, 3.0;
  ClusteredSpectrum s = clustered_spectrum(d, 1e-8);
  CMatrix p1 = spectral_projector(d, s, 1);
  CHECK_MATRIX_NEAR(p1, mat2(1, 0, 0, 0), 1e-12);

  const CMatrix b = mat2(1, 1, 0, 2);
  s = clustered_spectrum(b, 1e-8);
  p1 = spectral_projector(b, s, 1);
  CHECK_MATRIX_NEAR(p1, mat2(1, -1, 0, 0), 1e-12);  // q(t) = 2 - t
  CHECK_MATRIX_NEAR(p1 * p1, p1, 1e-12);

  CHECK_THROWS(spectral_projector(b, s, 3), IndexOutOfRange);

  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 5);
    const CMatrix m = random_matrix(gen, n);
    ClusteredSpectrum spec;
    try {
      spec = clustered_spectrum(m, 1e-6);
    } catch (const ClusterAmbiguity&) {
      continue;
    }
    CMatrix sum = CMatrix::Zero(n, n);
    for (int j = 1; j <= spec.count(); ++j) {
      const CMatrix pj = spectral_projector(m, spec, j);
      sum += pj;
      CHECK((pj * pj - pj).norm() <= 1e-8);
      CHECK(std::abs(pj.trace() - Complex(spec.multiplicities[static_cast<std::size_t>(j - 1)])) <= 1e-6);
    }
    CHECK_MATRIX_NEAR(sum, CMatrix::Identity(n, n), 1e-8);
  }
}

void test_centralizer_basis() {
  CHECK(centralizer_basis(CMatrix::Identity(2, 2)).size() == 4);
  CHECK(centralizer_basis(mat2(1, 1, 0, 2)).size() == 2);

  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 1.0, 1.0, 2.0;
  CHECK(centralizer_basis(d).size() == 5);  // gl(2) + gl(1)

  // Regular element: centralizer is spanned by the powers.
  const CMatrix m = mat2(1, 1, 0, 2);
  auto basis = centralizer_basis(m);
  std::vector<CMatrix> all = basis;
  all.push_back(CMatrix::Identity(2, 2));
  all.push_back(m);
  CHECK(numerical_rank(all) == 2);

  // Orthonormality in the Frobenius inner product.
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex ip = (basis[a].adjoint() * basis[b]).trace();
      CHECK_NEAR(ip, a == b ? Complex(1.0) : Complex(0.0), 1e-10);
    }
}

void test_numerical_rank() {
  const CMatrix id = CMatrix::Identity(2, 2);
  CHECK(numerical_rank({id, 2.0 * id}) == 1);

  CMatrix e11 = CMatrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  CMatrix e22 = CMatrix::Zero(2, 2);
  e22(1, 1) = 1.0;
  CHECK(numerical_rank({e11, e22}) == 2);

  // Cayley-Hamilton: m^2 = 3m - 2I for charpoly t^2 - 3t + 2.
  const CMatrix m = mat2(1, 1, 0, 2);
  CHECK(numerical_rank({id, m, m * m}) == 2);

  CHECK(numerical_rank({CMatrix::Zero(2, 2)}) == 0);
  CHECK_THROWS(numerical_rank({id, CMatrix::Zero(3, 3)}), DimensionMismatch);
}

void test_subspace_intersection() {
  CMatrix e11 = CMatrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  CMatrix e22 = CMatrix::Zero(2, 2);
  e22(1, 1) = 1.0;
  const CMatrix id = CMatrix::Identity(2, 2) / std::sqrt(2.0);
  CHECK(subspace_intersection_rank({e11}, {e22}) == 0);
  CHECK(subspace_intersection_rank({e11}, {e11}) == 1);
  // span{E11, E22} meets span{I} in one direction
  CHECK(subspace_intersection_rank({e11, e22}, {id}) == 1);
}

void test_matrix_exp() {
  CHECK_MATRIX_NEAR(matrix_exp(CMatrix::Zero(3, 3)), CMatrix::Identity(3, 3), 1e-14);

  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 1.0, -2.0;
  CMatrix expected = CMatrix::Zero(2, 2);
  expected.diagonal() << std::exp(1.0), std::exp(-2.0);
  CHECK_MATRIX_NEAR(matrix_exp(d), expected, 1e-12);

  // Jordan block: exp([[a,1],[0,a]]) = e^a [[1,1],[0,1]]
  const CMatrix jb = mat2(0.3, 1.0, 0.0, 0.3);
  const double ea = std::exp(0.3);
  CHECK_MATRIX_NEAR(matrix_exp(jb), mat2(ea, ea, 0.0, ea), 1e-12);

  // exp(tm) exp(-tm) = I for random m.
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 4);
    const CMatrix m = random_matrix(gen, n);
    const CMatrix a = matrix_exp(m);
    const CMatrix b = matrix_exp(CMatrix(-m));
    CHECK((a * b - CMatrix::Identity(n, n)).norm() <= 1e-9 * std::exp(2.0 * m.norm()));
  }
}

void test_conjugate_embed() {
  const CMatrix m = mat2(1, 2, 3, 4);
  const CMatrix g = mat2(2, 0, 0, 1);
  CMatrix expected = mat2(1, 4, 1.5, 4);
  CHECK_MATRIX_NEAR(conjugate_by(g, m), expected, 1e-14);

  CMatrix corner(1, 1);
  corner << 7.0;
  CMatrix padded = embed_corner(corner, 3);
  CHECK_NEAR(padded(0, 0), Complex(7.0), 0.0);
  CHECK_NEAR(padded.norm(), 7.0, 0.0);
  CMatrix padded_id = embed_corner_identity(corner, 3);
  CHECK_NEAR(padded_id(1, 1), Complex(1.0), 0.0);
  CHECK_NEAR(padded_id(2, 2), Complex(1.0), 0.0);
}

}  // namespace

int main() {
  test_charpoly();
  test_charpoly_vs_eigenvalues();
  test_clustered_spectrum();
  test_jordan_chevalley();
  test_jordan_chevalley_properties();
  test_spectral_projector();
  test_centralizer_basis();
  test_numerical_rank();
  test_subspace_intersection();
  test_matrix_exp();
  test_conjugate_embed();
  return testkit::summary("test_linalg");
}
