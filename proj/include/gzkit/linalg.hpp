#pragma once

#include "gzkit/types.hpp"

#include <vector>

namespace gzkit {

/// Distinct eigenvalues of a matrix with multiplicities, obtained by merging
/// the raw eigensolver output into clusters. Distinct values are guaranteed
/// to be more than 2*cluster_tol apart; multiplicities sum to the dimension.
struct ClusteredSpectrum {
  CVector values;
  std::vector<int> multiplicities;
  double cluster_tol = 0.0;

  int count() const { return static_cast<int>(values.size()); }
  int dim() const;
};

/// Additive Jordan decomposition m = s + n with s diagonalizable, n
/// nilpotent and [s, n] = 0.
struct JordanChevalley {
  CMatrix s;
  CMatrix n;
};

/// Non-leading characteristic polynomial coefficients, ascending: entry j is
/// the coefficient of t^j in det(tI - m). Computed by the Faddeev-LeVerrier
/// recurrence, independent of any eigensolve.
CVector charpoly(const CMatrix& m);

/// Eigenvalues merged into clusters by single-linkage at distance tol.
/// Throws ClusterAmbiguity when two resulting clusters are closer than
/// 2*tol, since multiplicities cannot be assigned reliably then.
ClusteredSpectrum clustered_spectrum(const CMatrix& m, double tol = kDefaultClusterTol);

/// Merges the spectrum into exactly count clusters (callers with stratum
/// knowledge force the count; raw eigenvalues of a defective matrix spread
/// far beyond any fixed merge tolerance). The result is certified by rank
/// tests of (m - value)^multiplicity; failure throws ClusterAmbiguity.
ClusteredSpectrum clustered_spectrum_forced(const CMatrix& m, int count,
                                            double tol = kDefaultTol);

/// Multiplicity detection without prior knowledge: scans the merge
/// hierarchy and keeps the unique clustering certified by rank tests and
/// eigenvector independence. Zero or several certified candidates throw
/// ClusterAmbiguity.
ClusteredSpectrum multiplicity_spectrum(const CMatrix& m, double tol = kDefaultTol);

/// Evaluates at m the polynomial taking value values[j] on cluster j of
/// spec, with vanishing derivatives up to the cluster multiplicity. Newton
/// form with confluent divided differences.
CMatrix hermite_cluster_poly(const CMatrix& m, const ClusteredSpectrum& spec,
                             const CVector& values);

JordanChevalley jordan_chevalley(const CMatrix& m, double tol = kDefaultClusterTol);

/// Projector onto the generalized eigenspace of cluster j (1-based) of spec.
CMatrix spectral_projector(const CMatrix& m, const ClusteredSpectrum& spec, int j);

/// Orthonormal basis (Frobenius inner product) of {y : my = ym}, from the
/// SVD nullspace of the dim^2 x dim^2 commutator operator.
std::vector<CMatrix> centralizer_basis(const CMatrix& m, double tol = kDefaultTol);

/// Number of singular values above tol relative to the largest; 0 when
/// everything is below tol in absolute terms.
int numerical_rank(const std::vector<CMatrix>& vectors, double tol = kDefaultTol);
int numerical_rank_rows(const CMatrix& stacked_rows, double tol = kDefaultTol);

/// Dimension of the intersection of the spans of two orthonormal families,
/// counted as principal-angle cosines above cos_tol.
int subspace_intersection_rank(const std::vector<CMatrix>& a,
                               const std::vector<CMatrix>& b,
                               double cos_tol = 1.0 - kDefaultTol);

/// exp(m) through the Jordan decomposition: exp(s) from spectral projectors,
/// exp(n) from the finite nilpotent series. Exact up to round-off, no
/// scaling-and-squaring. Cluster merging is escalated on ambiguity; merged
/// clusters only contribute O(diameter^dim) error here.
CMatrix matrix_exp(const CMatrix& m, double cluster_tol = kDefaultClusterTol);

/// m^k by repeated multiplication, k >= 0.
CMatrix matrix_power(const CMatrix& m, int k);

/// g x g^{-1} via LU solves, without forming the inverse.
CMatrix conjugate_by(const CMatrix& g, const CMatrix& x);

/// Pads an i x i corner block to n x n with zeros.
CMatrix embed_corner(const CMatrix& corner, int n);

/// Identity outside the corner instead of zeros (group-element padding).
CMatrix embed_corner_identity(const CMatrix& corner, int n);

}  // namespace gzkit
