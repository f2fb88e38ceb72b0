#include "gzkit/hessenberg.hpp"

#include <vector>

namespace gzkit {

bool is_hessenberg(const CMatrix& x, double tol) {
  if (x.rows() != x.cols() || x.rows() < 1) return false;
  const int n = static_cast<int>(x.rows());
  for (int c = 0; c < n; ++c)
    for (int r = c + 1; r < n; ++r) {
      const Complex expected = (r == c + 1) ? Complex(1.0) : Complex(0.0);
      if (std::abs(x(r, c) - expected) > tol) return false;
    }
  return true;
}

HessenbergMatrix phi_inverse(const GZValue& c) {
  const int n = c.n();
  if (n < 1) throw BadInput("phi_inverse: empty value");
  for (int i = 1; i <= n; ++i)
    if (c.levels[static_cast<std::size_t>(i - 1)].size() != i)
      throw BadInput("phi_inverse: level " + std::to_string(i) + " must have " +
                     std::to_string(i) + " coefficients");

  CMatrix h = CMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) h(k + 1, k) = 1.0;

  // cutoffs[k]: monic ascending coefficients of the k x k cutoff polynomial.
  std::vector<std::vector<Complex>> cutoffs;
  cutoffs.push_back({Complex(1.0)});

  for (int i = 0; i < n; ++i) {
    // Monic target polynomial for level i+1.
    std::vector<Complex> target(static_cast<std::size_t>(i) + 2, Complex(0.0));
    for (int k = 0; k <= i; ++k) target[static_cast<std::size_t>(k)] = c.levels[static_cast<std::size_t>(i)][k];
    target[static_cast<std::size_t>(i) + 1] = 1.0;

    // r = target - t * p_i, degree <= i.
    std::vector<Complex> r(static_cast<std::size_t>(i) + 1, Complex(0.0));
    for (int k = 0; k <= i + 1; ++k) {
      Complex shifted = (k >= 1) ? cutoffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)]
                                 : Complex(0.0);
      const Complex diff = target[static_cast<std::size_t>(k)] - shifted;
      if (k <= i) r[static_cast<std::size_t>(k)] = diff;
      // The leading terms cancel exactly; nothing to record at degree i+1.
    }

    // Back substitution against the monic triangular basis p_i, ..., p_0.
    for (int k = i; k >= 0; --k) {
      const Complex gamma = r[static_cast<std::size_t>(k)];
      const auto& basis = cutoffs[static_cast<std::size_t>(k)];
      for (int d = 0; d <= k; ++d) r[static_cast<std::size_t>(d)] -= gamma * basis[static_cast<std::size_t>(d)];
      h(k, i) = -gamma;
    }

    cutoffs.push_back(std::move(target));
  }
  return h;
}

HessenbergMatrix hessenberg_section(const CMatrix& x) { return phi_inverse(kw_map(x)); }

Trivialization trivialize(const CoverPoint& p, double tol, double cluster_tol) {
  if (!generic_counts(p.z, cluster_tol).generic)
    throw NotGeneric("trivialize: consecutive levels share an eigenvalue");

  Trivialization out;
  out.section = hessenberg_section(mu(p));
  const CoverPoint section_point = make_cover_point(out.section, p.z, tol, cluster_tol);
  auto k = transporter(section_point, p, tol, cluster_tol);
  if (!k)
    throw DomainError("transport_failed",
                      "trivialize: no transporter found on a generic fiber");
  out.k = std::move(*k);
  return out;
}

}  // namespace gzkit
