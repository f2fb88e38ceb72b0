#include "gzkit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gzkit {

namespace {

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw DimensionMismatch(std::string(who) + ": expected a square matrix of dim >= 1");
  if (!m.allFinite())
    throw BadInput(std::string(who) + ": matrix has non-finite entries");
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

int ClusteredSpectrum::dim() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

CVector charpoly(const CMatrix& m) {
  require_square(m, "charpoly");
  const int n = static_cast<int>(m.rows());
  // det(tI - m) = t^n + c[n-1] t^{n-1} + ... + c[0]
  CVector c = CVector::Zero(n);
  CMatrix mk = CMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    CMatrix am = m * mk;
    const Complex coeff = -am.trace() / static_cast<double>(k);
    c[n - k] = coeff;
    mk = am + coeff * CMatrix::Identity(n, n);
  }
  return c;
}

ClusteredSpectrum clustered_spectrum(const CMatrix& m, double tol) {
  require_square(m, "clustered_spectrum");
  if (tol < 0.0) throw BadInput("clustered_spectrum: tol must be nonnegative");
  const int n = static_cast<int>(m.rows());

  std::vector<Complex> eigs(n);
  if (n == 1) {
    eigs[0] = m(0, 0);
  } else {
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw BadInput("clustered_spectrum: eigensolver did not converge");
    for (int k = 0; k < n; ++k) eigs[k] = solver.eigenvalues()[k];
  }
  std::sort(eigs.begin(), eigs.end(), complex_less);

  // Single-linkage agglomeration: merge the closest pair of clusters while
  // their member gap is within tol.
  std::vector<std::vector<Complex>> clusters;
  for (const Complex& e : eigs) clusters.push_back({e});
  auto cluster_gap = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double gap = std::numeric_limits<double>::infinity();
    for (const Complex& u : a)
      for (const Complex& v : b) gap = std::min(gap, std::abs(u - v));
    return gap;
  };
  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double gap = cluster_gap(clusters[i], clusters[j]);
        if (gap < best) {
          best = gap;
          bi = i;
          bj = j;
        }
      }
    if (best > tol) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  std::vector<Complex> centroids;
  std::vector<int> mults;
  for (const auto& cl : clusters) {
    Complex sum = 0.0;
    for (const Complex& e : cl) sum += e;
    centroids.push_back(sum / static_cast<double>(cl.size()));
    mults.push_back(static_cast<int>(cl.size()));
  }
  std::vector<int> order(centroids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return complex_less(centroids[a], centroids[b]); });

  ClusteredSpectrum spec;
  spec.cluster_tol = tol;
  spec.values = CVector(static_cast<int>(order.size()));
  for (std::size_t k = 0; k < order.size(); ++k) {
    spec.values[static_cast<int>(k)] = centroids[order[k]];
    spec.multiplicities.push_back(mults[order[k]]);
  }

  for (int i = 0; i < spec.count(); ++i)
    for (int j = i + 1; j < spec.count(); ++j)
      if (std::abs(spec.values[i] - spec.values[j]) <= 2.0 * tol)
        throw ClusterAmbiguity(
            "clustered_spectrum: clusters closer than twice the tolerance; "
            "multiplicity detection is ill posed for this input");
  return spec;
}

CMatrix hermite_cluster_poly(const CMatrix& m, const ClusteredSpectrum& spec,
                             const CVector& values) {
  require_square(m, "hermite_cluster_poly");
  const int n = static_cast<int>(m.rows());
  if (spec.dim() != n)
    throw DimensionMismatch("hermite_cluster_poly: spectrum does not match matrix size");
  if (values.size() != spec.values.size())
    throw DimensionMismatch("hermite_cluster_poly: one value per cluster required");

  // Confluent nodes: cluster value repeated with its multiplicity. The
  // interpolated function is constant near each node, so divided differences
  // between equal nodes vanish.
  std::vector<Complex> nodes;
  std::vector<int> owner;
  for (int j = 0; j < spec.count(); ++j)
    for (int r = 0; r < spec.multiplicities[static_cast<std::size_t>(j)]; ++r) {
      nodes.push_back(spec.values[j]);
      owner.push_back(j);
    }

  std::vector<std::vector<Complex>> dd(nodes.size(), std::vector<Complex>(nodes.size(), 0.0));
  for (std::size_t a = 0; a < nodes.size(); ++a) dd[a][a] = values[owner[a]];
  for (std::size_t len = 1; len < nodes.size(); ++len)
    for (std::size_t a = 0; a + len < nodes.size(); ++a) {
      const std::size_t b = a + len;
      if (owner[a] == owner[b]) {
        dd[a][b] = 0.0;  // higher derivatives of a locally constant function
      } else {
        dd[a][b] = (dd[a + 1][b] - dd[a][b - 1]) / (nodes[b] - nodes[a]);
      }
    }

  CMatrix result = CMatrix::Zero(n, n);
  CMatrix basis = CMatrix::Identity(n, n);  // prod_{l<k} (m - node_l I)
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    result += dd[0][k] * basis;
    if (k + 1 < nodes.size())
      basis = (m - nodes[k] * CMatrix::Identity(n, n)) * basis;
  }
  return result;
}

JordanChevalley jordan_chevalley(const CMatrix& m, double tol) {
  const ClusteredSpectrum spec = clustered_spectrum(m, tol);
  const int n = static_cast<int>(m.rows());
  JordanChevalley jc;
  if (spec.count() == 1) {
    jc.s = spec.values[0] * CMatrix::Identity(n, n);
  } else {
    jc.s = hermite_cluster_poly(m, spec, spec.values);
  }
  jc.n = m - jc.s;
  return jc;
}

CMatrix spectral_projector(const CMatrix& m, const ClusteredSpectrum& spec, int j) {
  if (j < 1 || j > spec.count())
    throw IndexOutOfRange("spectral_projector: cluster index out of range");
  const int n = static_cast<int>(m.rows());
  if (spec.count() == 1) return CMatrix::Identity(n, n);
  CVector indicator = CVector::Zero(spec.values.size());
  indicator[j - 1] = 1.0;
  return hermite_cluster_poly(m, spec, indicator);
}

std::vector<CMatrix> centralizer_basis(const CMatrix& m, double tol) {
  require_square(m, "centralizer_basis");
  const int n = static_cast<int>(m.rows());
  const int nn = n * n;

  // Commutator operator on vec(y), column-major: vec(my - ym).
  CMatrix ad = CMatrix::Zero(nn, nn);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      const int out = col * n + row;
      for (int k = 0; k < n; ++k) {
        ad(out, col * n + k) += m(row, k);       // (m y)_{row,col}
        ad(out, k * n + row) -= m(k, col);       // (y m)_{row,col}
      }
    }

  Eigen::JacobiSVD<CMatrix> svd(ad, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv[0] : 0.0;
  int nullity = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv[k] <= tol * top) ++nullity;

  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(nullity));
  for (int k = nn - nullity; k < nn; ++k) {
    CVector v = svd.matrixV().col(k);
    basis.push_back(Eigen::Map<const CMatrix>(v.data(), n, n));
  }
  return basis;
}

int numerical_rank_rows(const CMatrix& stacked_rows, double tol) {
  if (stacked_rows.rows() == 0 || stacked_rows.cols() == 0)
    throw DimensionMismatch("numerical_rank: empty input");
  Eigen::JacobiSVD<CMatrix> svd(stacked_rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= tol) return 0;
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv[k] > tol * sv[0]) ++rank;
  return rank;
}

int numerical_rank(const std::vector<CMatrix>& vectors, double tol) {
  if (vectors.empty()) throw DimensionMismatch("numerical_rank: empty list");
  const Eigen::Index rows = vectors[0].rows();
  const Eigen::Index cols = vectors[0].cols();
  CMatrix stacked(static_cast<Eigen::Index>(vectors.size()), rows * cols);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].rows() != rows || vectors[k].cols() != cols)
      throw DimensionMismatch("numerical_rank: inputs have mixed dimensions");
    stacked.row(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const CVector>(vectors[k].data(), rows * cols).transpose();
  }
  return numerical_rank_rows(stacked, tol);
}

int subspace_intersection_rank(const std::vector<CMatrix>& a,
                               const std::vector<CMatrix>& b, double cos_tol) {
  if (a.empty() || b.empty()) return 0;
  const Eigen::Index len = a[0].size();
  CMatrix u(len, static_cast<Eigen::Index>(a.size()));
  CMatrix w(len, static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].size() != len) throw DimensionMismatch("subspace_intersection_rank: mixed dims");
    u.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const CVector>(a[k].data(), len);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k].size() != len) throw DimensionMismatch("subspace_intersection_rank: mixed dims");
    w.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const CVector>(b[k].data(), len);
  }
  Eigen::JacobiSVD<CMatrix> svd(u.adjoint() * w);
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] >= cos_tol) ++rank;
  return rank;
}

CMatrix matrix_exp(const CMatrix& m, double cluster_tol) {
  require_square(m, "matrix_exp");
  const int n = static_cast<int>(m.rows());

  // For the exponential a merged cluster is harmless (the truncated nilpotent
  // series is off by O(diameter^n)), so escalate the merge distance instead
  // of failing on ambiguous spectra.
  ClusteredSpectrum spec;
  double tol = cluster_tol;
  for (;;) {
    try {
      spec = clustered_spectrum(m, tol);
      break;
    } catch (const ClusterAmbiguity&) {
      tol *= 4.0;
      if (tol > 1e-2 * (1.0 + m.norm()))
        throw ClusterAmbiguity("matrix_exp: spectrum could not be separated into clusters");
    }
  }

  CMatrix exp_s;
  CMatrix s;
  if (spec.count() == 1) {
    s = spec.values[0] * CMatrix::Identity(n, n);
    exp_s = std::exp(spec.values[0]) * CMatrix::Identity(n, n);
  } else {
    s = hermite_cluster_poly(m, spec, spec.values);
    CVector exp_values(spec.values.size());
    for (int k = 0; k < spec.values.size(); ++k) exp_values[k] = std::exp(spec.values[k]);
    exp_s = hermite_cluster_poly(m, spec, exp_values);
  }

  const CMatrix nil = m - s;
  CMatrix exp_n = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    term = (nil * term) / static_cast<double>(k);
    exp_n += term;
  }
  return exp_s * exp_n;
}

CMatrix matrix_power(const CMatrix& m, int k) {
  require_square(m, "matrix_power");
  if (k < 0) throw BadInput("matrix_power: negative exponent");
  CMatrix result = CMatrix::Identity(m.rows(), m.cols());
  for (int r = 0; r < k; ++r) result = result * m;
  return result;
}

CMatrix conjugate_by(const CMatrix& g, const CMatrix& x) {
  if (g.rows() != x.rows() || g.cols() != x.cols())
    throw DimensionMismatch("conjugate_by: size mismatch");
  // (g x) g^{-1} as two triangular solves on the transposed system.
  Eigen::PartialPivLU<CMatrix> lu(g.transpose());
  return lu.solve((g * x).transpose()).transpose();
}

CMatrix embed_corner(const CMatrix& corner, int n) {
  if (corner.rows() > n)
    throw DimensionMismatch("embed_corner: corner larger than target");
  CMatrix out = CMatrix::Zero(n, n);
  out.topLeftCorner(corner.rows(), corner.cols()) = corner;
  return out;
}

CMatrix embed_corner_identity(const CMatrix& corner, int n) {
  if (corner.rows() > n)
    throw DimensionMismatch("embed_corner_identity: corner larger than target");
  CMatrix out = CMatrix::Identity(n, n);
  out.topLeftCorner(corner.rows(), corner.cols()) = corner;
  return out;
}

}  // namespace gzkit
