#include "gzkit/gz.hpp"

#include <algorithm>
#include <cmath>

namespace gzkit {

namespace {

void require_level(const CMatrix& x, int i, const char* who) {
  if (i < 1 || i > x.rows())
    throw IndexOutOfRange(std::string(who) + ": level index out of range");
}

void require_pair(const CMatrix& x, int i, int j, const char* who) {
  require_level(x, i, who);
  if (j < 1 || j > i)
    throw IndexOutOfRange(std::string(who) + ": power index out of range");
}

}  // namespace

GZValue GZValue::zero(int n) {
  GZValue c;
  for (int i = 1; i <= n; ++i) c.levels.push_back(CVector::Zero(i));
  return c;
}

double gzvalue_distance(const GZValue& a, const GZValue& b) {
  if (a.n() != b.n()) throw DimensionMismatch("gzvalue_distance: level counts differ");
  double out = 0.0;
  for (int i = 0; i < a.n(); ++i)
    out = std::max(out, (a.levels[static_cast<std::size_t>(i)] -
                         b.levels[static_cast<std::size_t>(i)]).lpNorm<Eigen::Infinity>());
  return out;
}

CMatrix cutoff(const CMatrix& x, int i) {
  require_level(x, i, "cutoff");
  return x.topLeftCorner(i, i);
}

Complex gz_function(const CMatrix& x, int i, int j) {
  require_pair(x, i, j, "gz_function");
  return matrix_power(cutoff(x, i), j).trace();
}

GZValue kw_map(const CMatrix& x) {
  if (x.rows() != x.cols() || x.rows() < 1)
    throw DimensionMismatch("kw_map: square matrix required");
  GZValue c;
  for (int i = 1; i <= x.rows(); ++i) c.levels.push_back(charpoly(cutoff(x, i)));
  return c;
}

CMatrix gz_gradient(const CMatrix& x, int i, int j) {
  require_pair(x, i, j, "gz_gradient");
  const int n = static_cast<int>(x.rows());
  return static_cast<double>(j) * embed_corner(matrix_power(cutoff(x, i), j - 1), n);
}

CMatrix gz_field(const CMatrix& x, int i, int j) {
  const CMatrix g = gz_gradient(x, i, j);
  return g * x - x * g;
}

CMatrix gz_flow(const CMatrix& x, int i, int j, Complex t, double cluster_tol) {
  require_pair(x, i, j, "gz_flow");
  const int n = static_cast<int>(x.rows());
  const CMatrix corner = t * static_cast<double>(j) * matrix_power(cutoff(x, i), j - 1);
  const CMatrix g = embed_corner_identity(matrix_exp(corner, cluster_tol), n);
  return conjugate_by(g, x);
}

Complex lie_poisson_bracket(GZIndex fa, GZIndex fb, const CMatrix& x) {
  const CMatrix a = gz_gradient(x, fa.i, fa.j);
  const CMatrix b = gz_gradient(x, fb.i, fb.j);
  return (x * (a * b - b * a)).trace();
}

StrongRegularityCertificate is_strongly_regular(const CMatrix& x, double tol) {
  if (x.rows() != x.cols() || x.rows() < 1)
    throw DimensionMismatch("is_strongly_regular: square matrix required");
  const int n = static_cast<int>(x.rows());

  StrongRegularityCertificate cert;
  std::vector<std::vector<CMatrix>> centralizers;
  centralizers.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    centralizers.push_back(centralizer_basis(cutoff(x, i), tol));
    cert.per_level_regular.push_back(static_cast<int>(centralizers.back().size()) == i);
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<CMatrix> padded;
    for (const CMatrix& b : centralizers[static_cast<std::size_t>(i - 1)])
      padded.push_back(embed_corner(b, i + 1));
    cert.intersection_ranks.push_back(subspace_intersection_rank(
        padded, centralizers[static_cast<std::size_t>(i)], 1.0 - tol));
  }

  cert.is_sreg = std::all_of(cert.per_level_regular.begin(), cert.per_level_regular.end(),
                             [](bool b) { return b; }) &&
                 std::all_of(cert.intersection_ranks.begin(), cert.intersection_ranks.end(),
                             [](int r) { return r == 0; });
  return cert;
}

ATangentSpan a_tangent_span(const CMatrix& x, double tol) {
  const int n = static_cast<int>(x.rows());
  ATangentSpan span;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) span.basis.push_back(gz_field(x, i, j));
  span.rank = span.basis.empty() ? 0 : numerical_rank(span.basis, tol);
  return span;
}

KksIsotropy kks_isotropy_check(const CMatrix& x, double tol) {
  if (!is_strongly_regular(x, tol).is_sreg)
    throw NotStronglyRegular("kks_isotropy_check: point is not strongly regular");
  const int n = static_cast<int>(x.rows());

  std::vector<CMatrix> grads;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) grads.push_back(gz_gradient(x, i, j));

  KksIsotropy out;
  const double xnorm = x.norm();
  for (std::size_t a = 0; a < grads.size(); ++a)
    for (std::size_t b = a + 1; b < grads.size(); ++b) {
      const CMatrix comm = grads[a] * grads[b] - grads[b] * grads[a];
      out.max_pairing = std::max(out.max_pairing, std::abs((x * comm).trace()));
      out.scale = std::max(out.scale, grads[a].norm() * grads[b].norm() * xnorm);
    }

  const int orbit_dim = n * n - static_cast<int>(centralizer_basis(x, tol).size());
  out.is_lagrangian = 2 * a_tangent_span(x, tol).rank == orbit_dim;
  return out;
}

int phi_jacobian_rank(const CMatrix& x, double tol) {
  const int n = static_cast<int>(x.rows());
  std::vector<CMatrix> grads;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) grads.push_back(gz_gradient(x, i, j));
  return numerical_rank(grads, tol);
}

}  // namespace gzkit
