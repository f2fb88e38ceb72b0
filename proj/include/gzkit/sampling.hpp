#pragma once

#include "gzkit/cover.hpp"
#include "gzkit/decomp.hpp"
#include "gzkit/gz.hpp"
#include "gzkit/types.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace gzkit {

/// Deterministic generator for all sampled test data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  Complex disk(double radius);
  int pick(int count);  // uniform in [0, count)

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct SampleOptions {
  /// Keep consecutive-level eigenvalues apart so the fiber is generic.
  bool force_generic = false;
  /// Prescribed eigenvalue tuples per level instead of random ones.
  std::optional<std::vector<CVector>> forced_z;
  /// Spread of the decorrelating group element and flow.
  double spread = 0.4;
  int max_attempts = 32;
};

/// count pairwise-separated values in a disk.
CVector random_separated_values(Rng& rng, int count, double radius, double min_sep);

/// The value whose level polynomials are prod (t - z_j)^(part_j).
GZValue gzvalue_from_eigenvalues(const std::vector<CVector>& z,
                                 const RegularDecompositionData& d);

/// Random coefficients, every entry in the complex unit square.
GZValue random_gzvalue(Rng& rng, int n);

/// Random group element; away_from_identity bounds every parameter away
/// from the neutral one.
ZDElement random_zd_element(Rng& rng, const std::vector<Partition>& strata,
                            double spread, bool away_from_identity = false);

/// Strongly regular sample in the stratum d (regular semisimple when d is
/// absent): eigenvalue data realized through the Hessenberg section, then
/// decorrelated by a bounded group element and flow. Certified strongly
/// regular before returning; throws SamplingFailure after max_attempts.
CoverPoint sample_cover_point(int n, const std::optional<RegularDecompositionData>& d,
                              std::uint64_t seed, const SampleOptions& options = {});

CMatrix sample_strongly_regular(int n, const std::optional<RegularDecompositionData>& d,
                                std::uint64_t seed, const SampleOptions& options = {});

}  // namespace gzkit
