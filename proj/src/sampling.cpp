#include "gzkit/sampling.hpp"

#include "gzkit/hessenberg.hpp"

namespace gzkit {

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(gen_);
}

Complex Rng::disk(double radius) {
  // Rejection sampling keeps the distribution rotation invariant.
  for (;;) {
    const Complex c(uniform(-radius, radius), uniform(-radius, radius));
    if (std::abs(c) <= radius) return c;
  }
}

int Rng::pick(int count) {
  std::uniform_int_distribution<int> u(0, count - 1);
  return u(gen_);
}

CVector random_separated_values(Rng& rng, int count, double radius, double min_sep) {
  CVector values(count);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    bool ok = true;
    for (int k = 0; k < count && ok; ++k) {
      values[k] = rng.disk(radius);
      for (int j = 0; j < k; ++j)
        if (std::abs(values[k] - values[j]) < min_sep) ok = false;
    }
    if (ok) return values;
  }
  throw SamplingFailure("random_separated_values: could not place " +
                        std::to_string(count) + " separated values");
}

GZValue gzvalue_from_eigenvalues(const std::vector<CVector>& z,
                                 const RegularDecompositionData& d) {
  if (static_cast<int>(z.size()) != d.n)
    throw DimensionMismatch("gzvalue_from_eigenvalues: one tuple per level required");
  GZValue c;
  for (int i = 1; i <= d.n; ++i) {
    const Partition& lambda = d.level(i);
    const CVector& zi = z[static_cast<std::size_t>(i - 1)];
    if (zi.size() != lambda.count())
      throw DimensionMismatch("gzvalue_from_eigenvalues: tuple size mismatch at level " +
                              std::to_string(i));
    std::vector<Complex> poly{1.0};
    for (int j = 0; j < lambda.count(); ++j)
      for (int rep = 0; rep < lambda.parts[static_cast<std::size_t>(j)]; ++rep) {
        std::vector<Complex> next(poly.size() + 1, Complex(0.0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] += poly[k];
          next[k] -= zi[j] * poly[k];
        }
        poly = std::move(next);
      }
    CVector lvl(i);
    for (int k = 0; k < i; ++k) lvl[k] = poly[static_cast<std::size_t>(k)];
    c.levels.push_back(std::move(lvl));
  }
  return c;
}

GZValue random_gzvalue(Rng& rng, int n) {
  GZValue c;
  for (int i = 1; i <= n; ++i) {
    CVector lvl(i);
    for (int k = 0; k < i; ++k) lvl[k] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    c.levels.push_back(std::move(lvl));
  }
  return c;
}

ZDElement random_zd_element(Rng& rng, const std::vector<Partition>& strata, double spread,
                            bool away_from_identity) {
  ZDElement k = zd_identity(strata);
  for (ZdLevel& lvl : k.levels) {
    for (int j = 0; j < lvl.s.size(); ++j) {
      Complex e = rng.disk(spread);
      if (away_from_identity && std::abs(e) < 0.5 * spread)
        e += Complex(0.5 * spread, 0.0) * (e == Complex(0.0) ? Complex(1.0) : e / std::abs(e));
      lvl.s[j] = std::exp(e);
    }
    for (int j = 0; j < lvl.t.size(); ++j) {
      Complex e = rng.disk(spread);
      if (away_from_identity && std::abs(e) < 0.5 * spread)
        e += Complex(0.5 * spread, 0.0) * (e == Complex(0.0) ? Complex(1.0) : e / std::abs(e));
      lvl.t[j] = e;
    }
  }
  return k;
}

namespace {

constexpr double kEigenvalueRadius = 0.75;
constexpr double kLevelSeparation = 0.3;
constexpr double kCrossSeparation = 0.25;

RegularDecompositionData regular_semisimple_data(int n) {
  std::vector<Partition> strata;
  for (int i = 1; i <= n; ++i) strata.push_back(Partition{std::vector<int>(i, 1)});
  return make_decomposition_data(std::move(strata));
}

std::vector<CVector> draw_eigenvalue_tuples(Rng& rng, const RegularDecompositionData& d,
                                            bool force_generic) {
  std::vector<CVector> z;
  for (int i = 1; i <= d.n; ++i) {
    const int count = d.level(i).count();
    for (int attempt = 0;; ++attempt) {
      CVector zi = random_separated_values(rng, count, kEigenvalueRadius, kLevelSeparation);
      bool ok = true;
      if (force_generic && i > 1) {
        const CVector& prev = z.back();
        for (int a = 0; a < zi.size() && ok; ++a)
          for (int b = 0; b < prev.size(); ++b)
            if (std::abs(zi[a] - prev[b]) < kCrossSeparation) ok = false;
      }
      if (ok) {
        z.push_back(std::move(zi));
        break;
      }
      if (attempt > 512)
        throw SamplingFailure("draw_eigenvalue_tuples: generic separation failed");
    }
  }
  return z;
}

}  // namespace

CoverPoint sample_cover_point(int n, const std::optional<RegularDecompositionData>& d,
                              std::uint64_t seed, const SampleOptions& options) {
  if (n < 1) throw BadInput("sample_cover_point: n must be >= 1");
  const RegularDecompositionData data = d ? *d : regular_semisimple_data(n);
  if (data.n != n) throw DimensionMismatch("sample_cover_point: stratum has wrong n");

  Rng rng(seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    try {
      const std::vector<CVector> z =
          options.forced_z ? *options.forced_z
                           : draw_eigenvalue_tuples(rng, data, options.force_generic);
      const CMatrix section = phi_inverse(gzvalue_from_eigenvalues(z, data));
      CoverPoint p = make_cover_point(section, z);

      if (n >= 2) {
        const ZDElement k = random_zd_element(rng, p.strata, options.spread);
        p = zd_act(k, p);

        const int i = 1 + rng.pick(n - 1);
        const int j = 1 + rng.pick(i);
        const Complex t = rng.disk(options.spread) / (1.0 + gz_gradient(p.x, i, j).norm());
        CoverPoint flowed = p;
        flowed.x = gz_flow(p.x, i, j, t);
        p = std::move(flowed);
      }

      if (p.x.norm() > 8.0 * n) continue;  // keep downstream flows well conditioned
      return make_cover_point(p.x, p.z);   // certify membership on emission
    } catch (const DomainError&) {
      continue;
    }
  }
  throw SamplingFailure("sample_cover_point: no certified sample after " +
                        std::to_string(options.max_attempts) + " attempts");
}

CMatrix sample_strongly_regular(int n, const std::optional<RegularDecompositionData>& d,
                                std::uint64_t seed, const SampleOptions& options) {
  return sample_cover_point(n, d, seed, options).x;
}

}  // namespace gzkit
