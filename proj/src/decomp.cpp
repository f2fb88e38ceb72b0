#include "gzkit/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gzkit {

int Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition make_partition(std::vector<int> parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) throw BadInput("make_partition: parts must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw BadInput("make_partition: parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

RegularDecompositionData make_decomposition_data(std::vector<Partition> strata) {
  RegularDecompositionData d;
  d.n = static_cast<int>(strata.size());
  if (d.n < 1) throw BadInput("make_decomposition_data: at least one level required");
  for (int i = 1; i <= d.n; ++i)
    if (strata[static_cast<std::size_t>(i - 1)].total() != i)
      throw BadInput("make_decomposition_data: level " + std::to_string(i) +
                     " partition must have total " + std::to_string(i));
  d.strata = std::move(strata);
  return d;
}

Partition class_of(const CMatrix& xi, double tol, double cluster_tol) {
  const int dim = static_cast<int>(xi.rows());
  if (static_cast<int>(centralizer_basis(xi, tol).size()) != dim)
    throw NotRegular("class_of: matrix is not regular");
  const ClusteredSpectrum spec = clustered_spectrum(xi, cluster_tol);
  std::vector<int> parts = spec.multiplicities;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition{std::move(parts)};
}

CMatrix canonical_rep(const Partition& lambda, const CVector& eigenvalues) {
  if (eigenvalues.size() != lambda.count())
    throw DimensionMismatch("canonical_rep: one eigenvalue per part required");
  for (int a = 0; a < eigenvalues.size(); ++a)
    for (int b = a + 1; b < eigenvalues.size(); ++b)
      if (eigenvalues[a] == eigenvalues[b])
        throw RepeatedEigenvalue("canonical_rep: eigenvalues must be pairwise distinct");

  const int n = lambda.total();
  CMatrix m = CMatrix::Zero(n, n);
  int offset = 0;
  for (int j = 0; j < lambda.count(); ++j) {
    const int size = lambda.parts[static_cast<std::size_t>(j)];
    for (int k = 0; k < size; ++k) {
      m(offset + k, offset + k) = eigenvalues[j];
      if (k + 1 < size) m(offset + k, offset + k + 1) = 1.0;
    }
    offset += size;
  }
  return m;
}

long sigma_order(const RegularDecompositionData& d) {
  long order = 1;
  for (const Partition& lambda : d.strata) {
    std::map<int, long> size_counts;
    for (int p : lambda.parts) ++size_counts[p];
    for (const auto& [size, count] : size_counts)
      for (long k = 2; k <= count; ++k) order *= k;
  }
  return order;
}

ZdDimension zd_dimension(const RegularDecompositionData& d) {
  ZdDimension out;
  for (int i = 1; i <= d.n; ++i) {
    out.r.push_back(d.level(i).count());
    out.s.push_back(i - d.level(i).count());
  }
  for (int i = 0; i < d.n - 1; ++i) out.total += out.r[static_cast<std::size_t>(i)] +
                                                 out.s[static_cast<std::size_t>(i)];
  return out;
}

bool in_tower(const CMatrix& x, const RegularDecompositionData& d, double tol,
              double cluster_tol) {
  if (x.rows() != d.n) throw DimensionMismatch("in_tower: dimension mismatch");
  if (!is_strongly_regular(x, tol).is_sreg) return false;
  for (int i = 1; i <= d.n; ++i)
    if (!(class_of(cutoff(x, i), tol, cluster_tol) == d.level(i))) return false;
  return true;
}

GenericCounts generic_counts(const std::vector<CVector>& z, double tol) {
  const int n = static_cast<int>(z.size());
  if (n < 1) throw BadInput("generic_counts: at least one level required");
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < z[static_cast<std::size_t>(i)].size(); ++a)
      for (int b = a + 1; b < z[static_cast<std::size_t>(i)].size(); ++b)
        if (std::abs(z[static_cast<std::size_t>(i)][a] - z[static_cast<std::size_t>(i)][b]) <= tol)
          throw DuplicateWithinLevel("generic_counts: repeated value within level " +
                                     std::to_string(i + 1));
  GenericCounts out;
  for (int i = 0; i + 1 < n; ++i) {
    int shared = 0;
    for (int a = 0; a < z[static_cast<std::size_t>(i)].size(); ++a)
      for (int b = 0; b < z[static_cast<std::size_t>(i + 1)].size(); ++b)
        if (std::abs(z[static_cast<std::size_t>(i)][a] - z[static_cast<std::size_t>(i + 1)][b]) <= tol)
          ++shared;
    out.j.push_back(shared);
    out.generic = out.generic && shared == 0;
    out.orbit_count <<= shared;
  }
  return out;
}

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  recurse(recurse, total, total);
  return out;
}

std::vector<RegularDecompositionData> enumerate_strata(int n) {
  std::vector<std::vector<Partition>> per_level;
  for (int i = 1; i <= n; ++i) per_level.push_back(partitions_of(i));

  std::vector<RegularDecompositionData> out;
  std::vector<Partition> current;
  auto recurse = [&](auto&& self, int level) -> void {
    if (level > n) {
      out.push_back(make_decomposition_data(current));
      return;
    }
    for (const Partition& p : per_level[static_cast<std::size_t>(level - 1)]) {
      current.push_back(p);
      self(self, level + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

std::vector<AtlasRow> atlas(int n) {
  std::vector<AtlasRow> rows;
  for (RegularDecompositionData& d : enumerate_strata(n)) {
    AtlasRow row;
    row.zd = zd_dimension(d);
    row.sigma = sigma_order(d);
    row.dim_z = std::accumulate(row.zd.r.begin(), row.zd.r.end(), 0);
    row.dim_x = row.dim_z + n * n - n * (n + 1) / 2;
    row.d = std::move(d);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gzkit
