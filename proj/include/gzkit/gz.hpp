#pragma once

#include "gzkit/linalg.hpp"
#include "gzkit/types.hpp"

#include <vector>

namespace gzkit {

/// Value of the moment map: level i (1-based) holds the i non-leading
/// characteristic polynomial coefficients of the i-th cutoff, ascending in
/// the power of t.
struct GZValue {
  std::vector<CVector> levels;

  int n() const { return static_cast<int>(levels.size()); }
  static GZValue zero(int n);
};

double gzvalue_distance(const GZValue& a, const GZValue& b);

struct StrongRegularityCertificate {
  bool is_sreg = false;
  std::vector<bool> per_level_regular;   // n entries
  std::vector<int> intersection_ranks;   // n-1 entries
};

struct ATangentSpan {
  std::vector<CMatrix> basis;  // one field per index pair, row-major in (i, j)
  int rank = 0;
};

struct KksIsotropy {
  double max_pairing = 0.0;
  double scale = 1.0;        // reference magnitude for the pairing values
  bool is_lagrangian = false;
};

/// Upper-left i x i corner, 1 <= i <= n.
CMatrix cutoff(const CMatrix& x, int i);

/// Trace of the j-th power of the i-th cutoff, 1 <= j <= i <= n.
Complex gz_function(const CMatrix& x, int i, int j);

GZValue kw_map(const CMatrix& x);

/// Gradient of the invariant trace function with respect to the trace form:
/// j (x_i)^{j-1} padded by zeros to full size.
CMatrix gz_gradient(const CMatrix& x, int i, int j);

/// Hamiltonian vector field [j (x_i)^{j-1}, x]; identically zero at i = n.
CMatrix gz_field(const CMatrix& x, int i, int j);

/// Time-t flow of gz_field, integrated exactly as conjugation by
/// exp(t j (x_i)^{j-1}). The i-th cutoff is constant along the flow.
CMatrix gz_flow(const CMatrix& x, int i, int j, Complex t,
                double cluster_tol = kDefaultClusterTol);

struct GZIndex {
  int i = 1;
  int j = 1;
};

/// Lie-Poisson bracket of two invariant trace functions evaluated at x,
/// with the convention {f, g}(x) = Tr(x [grad f, grad g]).
Complex lie_poisson_bracket(GZIndex fa, GZIndex fb, const CMatrix& x);

/// Per level: the cutoff must be regular and consecutive centralizers must
/// intersect trivially (compared by principal angles after padding).
StrongRegularityCertificate is_strongly_regular(const CMatrix& x, double tol = kDefaultTol);

/// All fields [j (x_i)^{j-1}, x] for i < n, with their joint rank.
ATangentSpan a_tangent_span(const CMatrix& x, double tol = kDefaultTol);

/// Maximal Kirillov-Kostant-Souriau pairing Tr(x [A, B]) over gradient pairs
/// and the half-dimension test rank(span) == dim(orbit)/2. Requires a
/// strongly regular point.
KksIsotropy kks_isotropy_check(const CMatrix& x, double tol = kDefaultTol);

/// Rank of all differentials j (x_i)^{j-1}, i <= n, under the trace form.
int phi_jacobian_rank(const CMatrix& x, double tol = kDefaultTol);

}  // namespace gzkit
