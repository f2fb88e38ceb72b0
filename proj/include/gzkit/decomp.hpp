#pragma once

#include "gzkit/gz.hpp"
#include "gzkit/types.hpp"

#include <vector>

namespace gzkit {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const;
  int count() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition&) const = default;
};

Partition make_partition(std::vector<int> parts);

/// One regular class label per level: the i-th partition has total i. The
/// label of a stratum of the strongly regular set.
struct RegularDecompositionData {
  int n = 0;
  std::vector<Partition> strata;

  const Partition& level(int i) const { return strata[static_cast<std::size_t>(i - 1)]; }
  bool operator==(const RegularDecompositionData&) const = default;
};

RegularDecompositionData make_decomposition_data(std::vector<Partition> strata);

/// Jordan type of a regular matrix: the sorted multiplicities of its
/// clustered spectrum. Regular elements carry one block per distinct
/// eigenvalue, so multiplicities are block sizes.
Partition class_of(const CMatrix& xi, double tol = kDefaultTol,
                   double cluster_tol = kDefaultClusterTol);

/// Block diagonal representative: block j is eigenvalues[j] I plus the
/// regular nilpotent Jordan block (superdiagonal ones).
CMatrix canonical_rep(const Partition& lambda, const CVector& eigenvalues);

/// Order of the deck group: product over levels of (multiplicity of each
/// repeated part size)!.
long sigma_order(const RegularDecompositionData& d);

struct ZdDimension {
  std::vector<int> r;  // parts per level, n entries
  std::vector<int> s;  // i - r_i per level, n entries
  int total = 0;       // sum of r_i + s_i over i < n
};

ZdDimension zd_dimension(const RegularDecompositionData& d);

bool in_tower(const CMatrix& x, const RegularDecompositionData& d,
              double tol = kDefaultTol, double cluster_tol = kDefaultClusterTol);

struct GenericCounts {
  std::vector<int> j;      // shared eigenvalue counts between consecutive levels
  long orbit_count = 1;    // 2^(sum of j)
  bool generic = true;     // all j zero
};

/// Shared-eigenvalue counts of consecutive level tuples; entries within a
/// level must be pairwise distinct.
GenericCounts generic_counts(const std::vector<CVector>& z,
                             double tol = kDefaultClusterTol);

std::vector<Partition> partitions_of(int total);

/// All regular decomposition data for gl(n), lexicographic per level.
std::vector<RegularDecompositionData> enumerate_strata(int n);

struct AtlasRow {
  RegularDecompositionData d;
  ZdDimension zd;
  long sigma = 1;
  int dim_z = 0;   // sum of r_i over all levels
  int dim_x = 0;   // dim_z + n^2 - n(n+1)/2
};

std::vector<AtlasRow> atlas(int n);

}  // namespace gzkit
