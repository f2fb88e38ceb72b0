#pragma once

#include "gzkit/cover.hpp"
#include "gzkit/gz.hpp"
#include "gzkit/types.hpp"

namespace gzkit {

/// Unit subdiagonal, zeros below it, within absolute tolerance.
bool is_hessenberg(const CMatrix& x, double tol = kDefaultTol);

/// The unique Hessenberg matrix with the prescribed cutoff characteristic
/// polynomials. Column by column: the cutoff polynomials of a unit
/// subdiagonal matrix satisfy p_{i+1} = (t - a) p_i - sum_k b_k p_{k-1},
/// so each new column solves a monic-triangular linear system by back
/// substitution in the basis p_0, ..., p_i.
HessenbergMatrix phi_inverse(const GZValue& c);

/// The Hessenberg representative of the fiber through x.
HessenbergMatrix hessenberg_section(const CMatrix& x);

struct Trivialization {
  ZDElement k;
  HessenbergMatrix section;
};

/// On a generic fiber (no shared eigenvalues between consecutive levels)
/// every cover point is reached from the Hessenberg section by a unique
/// group element; returns that element and the section. The section is
/// lifted with the same tuple ordering as p, pinning the covering sheet.
Trivialization trivialize(const CoverPoint& p, double tol = kDefaultTol,
                          double cluster_tol = kDefaultClusterTol);

}  // namespace gzkit
