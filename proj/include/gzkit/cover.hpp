#pragma once

#include "gzkit/decomp.hpp"
#include "gzkit/gz.hpp"
#include "gzkit/types.hpp"

#include <optional>
#include <vector>

namespace gzkit {

/// Point of the covering of a stratum: a strongly regular matrix together
/// with one ordered eigenvalue tuple per level, listing the eigenvalues of
/// the cutoffs in block order. The block sizes (weakly decreasing, cached in
/// strata) are the multiplicities of the listed values.
struct CoverPoint {
  CMatrix x;
  std::vector<CVector> z;
  std::vector<Partition> strata;

  int n() const { return static_cast<int>(x.rows()); }
  RegularDecompositionData stratum() const;
};

/// Validates membership: x strongly regular, every tuple value matching a
/// distinct spectral cluster of the cutoff, multiplicities weakly
/// decreasing along each tuple.
CoverPoint make_cover_point(CMatrix x, std::vector<CVector> z,
                            double tol = kDefaultTol,
                            double cluster_tol = kDefaultClusterTol);

/// All cover points over x in the stratum d: one per admissible assignment
/// of cluster values to blocks. Exactly sigma_order(d) points.
std::vector<CoverPoint> lift(const CMatrix& x, const RegularDecompositionData& d,
                             double tol = kDefaultTol,
                             double cluster_tol = kDefaultClusterTol);

inline const CMatrix& mu(const CoverPoint& p) { return p.x; }
inline const std::vector<CVector>& kappa(const CoverPoint& p) { return p.z; }

/// Deck transformation: per-level permutations that may only exchange
/// positions whose block sizes agree.
CoverPoint deck(const std::vector<std::vector<int>>& sigma, const CoverPoint& p);

/// Centralizer generators of the level-i cutoff in the block order of the
/// point, padded to full size: projectors[j] is the spectral projector for
/// z_{i,j}; nilpotents holds N^m projectors[j] for 1 <= m < block size,
/// block-major. Together they span the centralizer of the cutoff.
struct LevelGenerators {
  int level = 1;
  std::vector<int> part_sizes;
  std::vector<CMatrix> projectors;               // r_i entries
  std::vector<CMatrix> nilpotents;               // s_i entries
  std::vector<std::pair<int, int>> nil_index;    // (block j, power m), 1-based
};

LevelGenerators level_generators(const CoverPoint& p, int i,
                                 double cluster_tol = kDefaultClusterTol);

/// Invariant coordinates on the cover: q pairs the higher cutoffs with the
/// scaled projector, p with the nilpotent generators.
Complex q_function(const CoverPoint& p, int i, int j,
                   double cluster_tol = kDefaultClusterTol);
Complex p_function(const CoverPoint& p, int i, int k,
                   double cluster_tol = kDefaultClusterTol);

/// Exact flows on the cover: conjugation by exp(-t projector/blocksize)
/// respectively exp(-t nilpotent). Tuples are unchanged; cutoffs up to the
/// level are unchanged; strong regularity is preserved.
CoverPoint q_flow(const CoverPoint& p, int i, int j, Complex t,
                  double cluster_tol = kDefaultClusterTol);
CoverPoint p_flow(const CoverPoint& p, int i, int k, Complex t,
                  double cluster_tol = kDefaultClusterTol);

/// Element of the abelian group attached to the stratum: per level, one
/// nonzero scalar per block (semisimple part) and one parameter per
/// nilpotent generator (unipotent part, block-major).
struct ZdLevel {
  CVector s;
  CVector t;
};

struct ZDElement {
  std::vector<ZdLevel> levels;  // n-1 entries
};

ZDElement zd_identity(const std::vector<Partition>& strata);
ZDElement zd_identity(const CoverPoint& p);

/// Componentwise group law: scalars multiply, unipotent parameters add.
ZDElement zd_compose(const ZDElement& a, const ZDElement& b);
ZDElement zd_inverse(const ZDElement& a);

/// The group element of one level: (sum_j s_j P_j + complement identity)
/// times the finite exponential of the nilpotent combination.
CMatrix zd_group_element(const LevelGenerators& gens, const ZdLevel& k, int n);

/// All per-level group elements of k at p, for diagnostics and comparisons.
std::vector<CMatrix> zd_group_elements(const ZDElement& k, const CoverPoint& p,
                                       double cluster_tol = kDefaultClusterTol);

/// Free action on the cover: conjugates x by the ordered product of the
/// per-level group elements, all built from the point being acted on.
CoverPoint zd_act(const ZDElement& k, const CoverPoint& p,
                  double cluster_tol = kDefaultClusterTol);

/// Solves k . p_from = p_to level by level through the linear intertwining
/// systems. Empty result means the points lie in distinct orbits.
std::optional<ZDElement> transporter(const CoverPoint& p_from, const CoverPoint& p_to,
                                     double tol = kDefaultTol,
                                     double cluster_tol = kDefaultClusterTol);

/// The brackets of x with the level generators must span exactly the
/// Gelfand-Zeitlin tangent directions at x.
bool lift_span_check(const CoverPoint& p, double tol = kDefaultTol,
                     double cluster_tol = kDefaultClusterTol);

}  // namespace gzkit
