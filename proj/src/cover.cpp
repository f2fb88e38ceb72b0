#include "gzkit/cover.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gzkit {

namespace {

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void require_cover_level(const CoverPoint& p, int i, const char* who) {
  if (i < 1 || i > p.n() - 1)
    throw IndexOutOfRange(std::string(who) + ": level index out of range");
}

double match_tolerance(double cluster_tol, const CVector& values) {
  return std::max(cluster_tol, 1e-10 * (1.0 + values.norm()));
}

// Cluster index (1-based) whose value matches z, or 0 when nothing is close.
int matching_cluster(const ClusteredSpectrum& spec, Complex z, double tol) {
  int best = 0;
  double best_dist = tol;
  for (int c = 0; c < spec.count(); ++c) {
    const double d = std::abs(spec.values[c] - z);
    if (d <= best_dist) {
      best = c + 1;
      best_dist = d;
    }
  }
  return best;
}

CVector flatten(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

}  // namespace

RegularDecompositionData CoverPoint::stratum() const {
  return make_decomposition_data(strata);
}

CoverPoint make_cover_point(CMatrix x, std::vector<CVector> z, double tol,
                            double cluster_tol) {
  const int n = static_cast<int>(x.rows());
  if (x.rows() != x.cols() || n < 1)
    throw DimensionMismatch("make_cover_point: square matrix required");
  if (static_cast<int>(z.size()) != n)
    throw DimensionMismatch("make_cover_point: one tuple per level required");
  if (!is_strongly_regular(x, tol).is_sreg)
    throw NotStronglyRegular("make_cover_point: matrix is not strongly regular");

  std::vector<Partition> strata;
  for (int i = 1; i <= n; ++i) {
    const CVector& zi = z[static_cast<std::size_t>(i - 1)];
    const ClusteredSpectrum spec = clustered_spectrum(cutoff(x, i), cluster_tol);
    if (zi.size() != spec.count())
      throw BadInput("make_cover_point: tuple at level " + std::to_string(i) +
                     " must list each distinct eigenvalue once");
    const double mtol = match_tolerance(cluster_tol, spec.values);
    std::vector<bool> used(static_cast<std::size_t>(spec.count()), false);
    std::vector<int> parts;
    for (int j = 0; j < zi.size(); ++j) {
      const int c = matching_cluster(spec, zi[j], mtol);
      if (c == 0 || used[static_cast<std::size_t>(c - 1)])
        throw BadInput("make_cover_point: tuple value does not match a distinct "
                       "eigenvalue cluster at level " + std::to_string(i));
      used[static_cast<std::size_t>(c - 1)] = true;
      parts.push_back(spec.multiplicities[static_cast<std::size_t>(c - 1)]);
    }
    for (std::size_t j = 1; j < parts.size(); ++j)
      if (parts[j] > parts[j - 1])
        throw BadInput("make_cover_point: tuple at level " + std::to_string(i) +
                       " is not in block order (multiplicities must not increase)");
    strata.push_back(Partition{std::move(parts)});
  }

  CoverPoint p;
  p.x = std::move(x);
  p.z = std::move(z);
  p.strata = std::move(strata);
  return p;
}

std::vector<CoverPoint> lift(const CMatrix& x, const RegularDecompositionData& d,
                             double tol, double cluster_tol) {
  if (!in_tower(x, d, tol, cluster_tol))
    throw NotInTower("lift: matrix does not lie in the requested tower");
  const int n = d.n;

  // Per level: all block-order assignments of cluster values. Only values of
  // equal multiplicity may trade places, so enumerate permutations within
  // each run of equal part sizes.
  std::vector<std::vector<CVector>> level_choices;
  for (int i = 1; i <= n; ++i) {
    const Partition& lambda = d.level(i);
    const ClusteredSpectrum spec = clustered_spectrum(cutoff(x, i), cluster_tol);

    std::vector<CVector> orderings;
    CVector base(lambda.count());
    orderings.push_back(base);
    int pos = 0;
    while (pos < lambda.count()) {
      const int size = lambda.parts[static_cast<std::size_t>(pos)];
      int run = 0;
      while (pos + run < lambda.count() &&
             lambda.parts[static_cast<std::size_t>(pos + run)] == size)
        ++run;

      std::vector<Complex> values;
      for (int c = 0; c < spec.count(); ++c)
        if (spec.multiplicities[static_cast<std::size_t>(c)] == size)
          values.push_back(spec.values[c]);
      std::sort(values.begin(), values.end(), complex_less);
      if (static_cast<int>(values.size()) != run)
        throw NotInTower("lift: cluster multiplicities do not match the stratum");

      std::vector<std::vector<Complex>> perms;
      std::vector<int> idx(values.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<Complex> arrangement;
        for (int id : idx) arrangement.push_back(values[static_cast<std::size_t>(id)]);
        perms.push_back(std::move(arrangement));
      } while (std::next_permutation(idx.begin(), idx.end()));

      std::vector<CVector> extended;
      for (const CVector& head : orderings)
        for (const auto& arrangement : perms) {
          CVector next = head;
          for (int k = 0; k < run; ++k) next[pos + k] = arrangement[static_cast<std::size_t>(k)];
          extended.push_back(std::move(next));
        }
      orderings = std::move(extended);
      pos += run;
    }
    level_choices.push_back(std::move(orderings));
  }

  std::vector<std::vector<CVector>> assignments{{}};
  for (const auto& choices : level_choices) {
    std::vector<std::vector<CVector>> extended;
    for (const auto& head : assignments)
      for (const CVector& choice : choices) {
        auto next = head;
        next.push_back(choice);
        extended.push_back(std::move(next));
      }
    assignments = std::move(extended);
  }

  std::vector<CoverPoint> points;
  points.reserve(assignments.size());
  for (auto& z : assignments)
    points.push_back(make_cover_point(x, std::move(z), tol, cluster_tol));
  return points;
}

CoverPoint deck(const std::vector<std::vector<int>>& sigma, const CoverPoint& p) {
  if (static_cast<int>(sigma.size()) != p.n())
    throw DimensionMismatch("deck: one permutation per level required");
  CoverPoint out = p;
  for (int i = 0; i < p.n(); ++i) {
    const auto& perm = sigma[static_cast<std::size_t>(i)];
    const Partition& lambda = p.strata[static_cast<std::size_t>(i)];
    if (static_cast<int>(perm.size()) != lambda.count())
      throw DimensionMismatch("deck: permutation size mismatch at level " +
                              std::to_string(i + 1));
    std::vector<bool> seen(perm.size(), false);
    CVector permuted(lambda.count());
    for (int k = 0; k < lambda.count(); ++k) {
      const int src = perm[static_cast<std::size_t>(k)];
      if (src < 0 || src >= lambda.count() || seen[static_cast<std::size_t>(src)])
        throw IllegalPermutation("deck: not a permutation at level " + std::to_string(i + 1));
      seen[static_cast<std::size_t>(src)] = true;
      if (lambda.parts[static_cast<std::size_t>(src)] != lambda.parts[static_cast<std::size_t>(k)])
        throw IllegalPermutation("deck: may only exchange blocks of equal size");
      permuted[k] = p.z[static_cast<std::size_t>(i)][src];
    }
    out.z[static_cast<std::size_t>(i)] = std::move(permuted);
  }
  return out;
}

LevelGenerators level_generators(const CoverPoint& p, int i, double cluster_tol) {
  require_cover_level(p, i, "level_generators");
  const int n = p.n();
  const CMatrix xi = cutoff(p.x, i);
  const ClusteredSpectrum spec = clustered_spectrum(xi, cluster_tol);
  const CMatrix nil = jordan_chevalley(xi, cluster_tol).n;
  const Partition& lambda = p.strata[static_cast<std::size_t>(i - 1)];
  const CVector& zi = p.z[static_cast<std::size_t>(i - 1)];
  const double mtol = match_tolerance(cluster_tol, spec.values);

  LevelGenerators gens;
  gens.level = i;
  gens.part_sizes = lambda.parts;
  std::vector<CMatrix> corner_projectors;
  for (int j = 0; j < lambda.count(); ++j) {
    const int c = matching_cluster(spec, zi[j], mtol);
    if (c == 0)
      throw ClusterAmbiguity("level_generators: tuple value lost its cluster");
    corner_projectors.push_back(spectral_projector(xi, spec, c));
    gens.projectors.push_back(embed_corner(corner_projectors.back(), n));
  }
  for (int j = 0; j < lambda.count(); ++j) {
    CMatrix power = corner_projectors[static_cast<std::size_t>(j)];
    for (int m = 1; m < lambda.parts[static_cast<std::size_t>(j)]; ++m) {
      power = nil * power;
      gens.nilpotents.push_back(embed_corner(power, n));
      gens.nil_index.emplace_back(j + 1, m);
    }
  }
  return gens;
}

namespace {

Complex higher_cutoff_pairing(const CoverPoint& p, int i, const CMatrix& generator) {
  Complex sum = 0.0;
  for (int s = i + 1; s <= p.n(); ++s)
    sum += (embed_corner(cutoff(p.x, s), p.n()) * generator).trace();
  return sum;
}

}  // namespace

Complex q_function(const CoverPoint& p, int i, int j, double cluster_tol) {
  require_cover_level(p, i, "q_function");
  const Partition& lambda = p.strata[static_cast<std::size_t>(i - 1)];
  if (j < 1 || j > lambda.count())
    throw IndexOutOfRange("q_function: block index out of range");
  const LevelGenerators gens = level_generators(p, i, cluster_tol);
  const double block = lambda.parts[static_cast<std::size_t>(j - 1)];
  return higher_cutoff_pairing(p, i, gens.projectors[static_cast<std::size_t>(j - 1)]) / block;
}

Complex p_function(const CoverPoint& p, int i, int k, double cluster_tol) {
  require_cover_level(p, i, "p_function");
  const LevelGenerators gens = level_generators(p, i, cluster_tol);
  if (k < 1 || k > static_cast<int>(gens.nilpotents.size()))
    throw IndexOutOfRange("p_function: nilpotent index out of range");
  return higher_cutoff_pairing(p, i, gens.nilpotents[static_cast<std::size_t>(k - 1)]);
}

CMatrix zd_group_element(const LevelGenerators& gens, const ZdLevel& k, int n) {
  if (k.s.size() != static_cast<Eigen::Index>(gens.projectors.size()) ||
      k.t.size() != static_cast<Eigen::Index>(gens.nilpotents.size()))
    throw DimensionMismatch("zd_group_element: parameter shape does not match stratum");

  CMatrix projector_sum = CMatrix::Zero(n, n);
  CMatrix semis = CMatrix::Zero(n, n);
  for (std::size_t j = 0; j < gens.projectors.size(); ++j) {
    semis += k.s[static_cast<Eigen::Index>(j)] * gens.projectors[j];
    projector_sum += gens.projectors[j];
  }
  semis += CMatrix::Identity(n, n) - projector_sum;

  CMatrix arg = CMatrix::Zero(n, n);
  for (std::size_t m = 0; m < gens.nilpotents.size(); ++m)
    arg += k.t[static_cast<Eigen::Index>(m)] * gens.nilpotents[m];
  CMatrix unip = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int m = 1; m <= gens.level; ++m) {
    term = (arg * term) / static_cast<double>(m);
    unip += term;
  }
  return semis * unip;
}

namespace {

ZdLevel level_identity(const Partition& lambda, int level) {
  ZdLevel k;
  k.s = CVector::Ones(lambda.count());
  k.t = CVector::Zero(level - lambda.count());
  return k;
}

CoverPoint conjugated_point(const CoverPoint& p, const CMatrix& g) {
  CoverPoint out = p;
  out.x = conjugate_by(g, p.x);
  return out;
}

}  // namespace

CoverPoint q_flow(const CoverPoint& p, int i, int j, Complex t, double cluster_tol) {
  require_cover_level(p, i, "q_flow");
  const Partition& lambda = p.strata[static_cast<std::size_t>(i - 1)];
  if (j < 1 || j > lambda.count()) throw IndexOutOfRange("q_flow: block index out of range");
  const LevelGenerators gens = level_generators(p, i, cluster_tol);
  ZdLevel k = level_identity(lambda, i);
  k.s[j - 1] = std::exp(-t / static_cast<double>(lambda.parts[static_cast<std::size_t>(j - 1)]));
  return conjugated_point(p, zd_group_element(gens, k, p.n()));
}

CoverPoint p_flow(const CoverPoint& p, int i, int k, Complex t, double cluster_tol) {
  require_cover_level(p, i, "p_flow");
  const LevelGenerators gens = level_generators(p, i, cluster_tol);
  if (k < 1 || k > static_cast<int>(gens.nilpotents.size()))
    throw IndexOutOfRange("p_flow: nilpotent index out of range");
  ZdLevel kk = level_identity(p.strata[static_cast<std::size_t>(i - 1)], i);
  kk.t[k - 1] = -t;
  return conjugated_point(p, zd_group_element(gens, kk, p.n()));
}

ZDElement zd_identity(const std::vector<Partition>& strata) {
  ZDElement k;
  for (std::size_t i = 0; i + 1 < strata.size(); ++i)
    k.levels.push_back(level_identity(strata[i], static_cast<int>(i) + 1));
  return k;
}

ZDElement zd_identity(const CoverPoint& p) { return zd_identity(p.strata); }

ZDElement zd_compose(const ZDElement& a, const ZDElement& b) {
  if (a.levels.size() != b.levels.size())
    throw DimensionMismatch("zd_compose: level counts differ");
  ZDElement out;
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    const ZdLevel& la = a.levels[i];
    const ZdLevel& lb = b.levels[i];
    if (la.s.size() != lb.s.size() || la.t.size() != lb.t.size())
      throw DimensionMismatch("zd_compose: parameter shapes differ");
    out.levels.push_back(ZdLevel{la.s.cwiseProduct(lb.s), la.t + lb.t});
  }
  return out;
}

ZDElement zd_inverse(const ZDElement& a) {
  ZDElement out;
  for (const ZdLevel& l : a.levels) {
    for (int j = 0; j < l.s.size(); ++j)
      if (l.s[j] == Complex(0.0))
        throw SingularSemisimplePart("zd_inverse: zero semisimple scalar");
    out.levels.push_back(ZdLevel{l.s.cwiseInverse(), -l.t});
  }
  return out;
}

std::vector<CMatrix> zd_group_elements(const ZDElement& k, const CoverPoint& p,
                                       double cluster_tol) {
  if (static_cast<int>(k.levels.size()) != p.n() - 1)
    throw DimensionMismatch("zd_group_elements: level count does not match point");
  std::vector<CMatrix> hs;
  for (int i = 1; i <= p.n() - 1; ++i)
    hs.push_back(zd_group_element(level_generators(p, i, cluster_tol),
                                  k.levels[static_cast<std::size_t>(i - 1)], p.n()));
  return hs;
}

CoverPoint zd_act(const ZDElement& k, const CoverPoint& p, double cluster_tol) {
  for (const ZdLevel& l : k.levels)
    for (int j = 0; j < l.s.size(); ++j)
      if (std::abs(l.s[j]) == 0.0)
        throw SingularSemisimplePart("zd_act: semisimple scalars must be nonzero");

  const std::vector<CMatrix> hs = zd_group_elements(k, p, cluster_tol);
  CMatrix product = CMatrix::Identity(p.n(), p.n());
  for (const CMatrix& h : hs) product = product * h;
  return conjugated_point(p, product);
}

std::optional<ZDElement> transporter(const CoverPoint& p_from, const CoverPoint& p_to,
                                     double tol, double cluster_tol) {
  const int n = p_from.n();
  if (p_to.n() != n) throw DimensionMismatch("transporter: sizes differ");
  for (int i = 0; i < n; ++i) {
    const CVector& a = p_from.z[static_cast<std::size_t>(i)];
    const CVector& b = p_to.z[static_cast<std::size_t>(i)];
    if (a.size() != b.size() ||
        (a - b).lpNorm<Eigen::Infinity>() > match_tolerance(cluster_tol, a))
      throw FiberMismatch("transporter: points do not share eigenvalue tuples");
  }

  ZDElement result;
  // Target pulled back through the group elements found so far; after level
  // i it agrees with p_from up to the (i+1)-cutoff.
  CMatrix target = p_to.x;
  for (int i = 1; i <= n - 1; ++i) {
    const LevelGenerators gens = level_generators(p_from, i, cluster_tol);
    const int unknowns = i;  // r_i + s_i
    const CMatrix a_cut = cutoff(p_from.x, i + 1);
    const CMatrix b_cut = cutoff(target, i + 1);
    const int dim = i + 1;

    // h A - B h = -(E A - B E) over the centralizer algebra, h affine with
    // the fixed unit at the padding diagonal entry.
    std::vector<CMatrix> generators;
    for (const CMatrix& g : gens.projectors) generators.push_back(g.topLeftCorner(dim, dim));
    for (const CMatrix& g : gens.nilpotents) generators.push_back(g.topLeftCorner(dim, dim));

    CMatrix system(dim * dim, unknowns);
    for (int c = 0; c < unknowns; ++c) {
      const CMatrix& g = generators[static_cast<std::size_t>(c)];
      system.col(c) = flatten(g * a_cut - b_cut * g);
    }
    CMatrix pad = CMatrix::Zero(dim, dim);
    pad(dim - 1, dim - 1) = 1.0;
    const CVector rhs = -flatten(pad * a_cut - b_cut * pad);

    Eigen::JacobiSVD<CMatrix> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv[0] : 0.0;
    int rank = 0;
    for (int c = 0; c < sv.size(); ++c)
      if (sv[c] > tol * top) ++rank;
    // A nontrivial homogeneous solution rules out an invertible transporter
    // at this level (strong regularity pins the group element uniquely).
    if (rank < unknowns) return std::nullopt;

    const CVector coeff = svd.solve(rhs);
    const double scale = 1.0 + a_cut.norm() + b_cut.norm();
    if ((system * coeff - rhs).norm() > tol * scale) return std::nullopt;

    ZdLevel ki;
    ki.s = coeff.head(gens.projectors.size());
    ki.t = CVector::Zero(static_cast<Eigen::Index>(gens.nilpotents.size()));

    CMatrix h_add = pad;
    for (int c = 0; c < unknowns; ++c)
      h_add += coeff[c] * generators[static_cast<std::size_t>(c)];
    Eigen::JacobiSVD<CMatrix> hsvd(h_add);
    const auto& hsv = hsvd.singularValues();
    if (hsv[hsv.size() - 1] <= 1e-8 * hsv[0]) return std::nullopt;

    if (!gens.nilpotents.empty()) {
      // Unipotent factor: u = semis^{-1} h, then the finite logarithm,
      // expanded over the nilpotent generators.
      CMatrix semis_inv = CMatrix::Identity(n, n);
      CMatrix projector_sum = CMatrix::Zero(n, n);
      for (std::size_t j = 0; j < gens.projectors.size(); ++j) {
        if (std::abs(ki.s[static_cast<Eigen::Index>(j)]) == 0.0) return std::nullopt;
        semis_inv += (1.0 / ki.s[static_cast<Eigen::Index>(j)]) * gens.projectors[j];
        projector_sum += gens.projectors[j];
      }
      semis_inv -= projector_sum;

      CMatrix h_full = embed_corner_identity(h_add.topLeftCorner(i, i), n);
      const CMatrix u = semis_inv * h_full;
      const CMatrix u_minus = u - CMatrix::Identity(n, n);
      CMatrix log_u = CMatrix::Zero(n, n);
      CMatrix power = CMatrix::Identity(n, n);
      for (int m = 1; m <= i; ++m) {
        power = power * u_minus;
        log_u += (m % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(m) * power;
      }
      CMatrix nil_system(n * n, static_cast<Eigen::Index>(gens.nilpotents.size()));
      for (std::size_t m = 0; m < gens.nilpotents.size(); ++m)
        nil_system.col(static_cast<Eigen::Index>(m)) = flatten(gens.nilpotents[m]);
      ki.t = nil_system.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                 .solve(flatten(log_u));
    }

    const CMatrix h_i_inv = zd_group_element(
        gens, ZdLevel{ki.s.cwiseInverse(), -ki.t}, n);
    target = conjugate_by(h_i_inv, target);
    result.levels.push_back(std::move(ki));
  }

  const double final_scale = 1.0 + p_from.x.norm() + p_to.x.norm();
  if ((target - p_from.x).norm() > tol * final_scale) return std::nullopt;
  return result;
}

bool lift_span_check(const CoverPoint& p, double tol, double cluster_tol) {
  const int n = p.n();
  std::vector<CMatrix> lifted;
  for (int i = 1; i <= n - 1; ++i) {
    const LevelGenerators gens = level_generators(p, i, cluster_tol);
    for (const CMatrix& g : gens.projectors) lifted.push_back(p.x * g - g * p.x);
    for (const CMatrix& g : gens.nilpotents) lifted.push_back(p.x * g - g * p.x);
  }
  std::vector<CMatrix> base;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) base.push_back(gz_field(p.x, i, j));

  if (lifted.empty() || base.empty()) return lifted.empty() == base.empty();
  const int rank_lifted = numerical_rank(lifted, tol);
  const int rank_base = numerical_rank(base, tol);
  std::vector<CMatrix> joint = lifted;
  joint.insert(joint.end(), base.begin(), base.end());
  const int rank_joint = numerical_rank(joint, tol);
  return rank_lifted == rank_base && rank_base == rank_joint;
}

}  // namespace gzkit
