#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace gzkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Upper triangular plus unit subdiagonal; see is_hessenberg / phi_inverse.
using HessenbergMatrix = CMatrix;

/// Relative tolerance for rank, idempotency and flow-residual checks.
inline constexpr double kDefaultTol = 1e-8;
/// Absolute tolerance for merging eigenvalues into multiplicity clusters.
inline constexpr double kDefaultClusterTol = 1e-6;

/// Base for all recoverable domain failures. Carries a stable machine
/// readable code alongside the human message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct IndexOutOfRange : DomainError {
  explicit IndexOutOfRange(const std::string& w) : DomainError("index_out_of_range", w) {}
};

struct DimensionMismatch : DomainError {
  explicit DimensionMismatch(const std::string& w) : DomainError("dimension_mismatch", w) {}
};

/// Two eigenvalue clusters ended up closer than twice the cluster tolerance,
/// so multiplicity detection is ill posed for this input.
struct ClusterAmbiguity : DomainError {
  explicit ClusterAmbiguity(const std::string& w) : DomainError("cluster_ambiguity", w) {}
};

struct NotRegular : DomainError {
  explicit NotRegular(const std::string& w) : DomainError("not_regular", w) {}
};

struct NotStronglyRegular : DomainError {
  explicit NotStronglyRegular(const std::string& w) : DomainError("not_strongly_regular", w) {}
};

struct NotInTower : DomainError {
  explicit NotInTower(const std::string& w) : DomainError("not_in_tower", w) {}
};

struct NotGeneric : DomainError {
  explicit NotGeneric(const std::string& w) : DomainError("not_generic", w) {}
};

struct FiberMismatch : DomainError {
  explicit FiberMismatch(const std::string& w) : DomainError("fiber_mismatch", w) {}
};

struct IllegalPermutation : DomainError {
  explicit IllegalPermutation(const std::string& w) : DomainError("illegal_permutation", w) {}
};

struct RepeatedEigenvalue : DomainError {
  explicit RepeatedEigenvalue(const std::string& w) : DomainError("repeated_eigenvalue", w) {}
};

struct DuplicateWithinLevel : DomainError {
  explicit DuplicateWithinLevel(const std::string& w) : DomainError("duplicate_within_level", w) {}
};

struct SingularSemisimplePart : DomainError {
  explicit SingularSemisimplePart(const std::string& w) : DomainError("singular_semisimple_part", w) {}
};

struct SamplingFailure : DomainError {
  explicit SamplingFailure(const std::string& w) : DomainError("sampling_failure", w) {}
};

struct BadInput : DomainError {
  explicit BadInput(const std::string& w) : DomainError("bad_input", w) {}
};

}  // namespace gzkit
