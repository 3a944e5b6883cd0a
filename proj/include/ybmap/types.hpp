#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace ybmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ColumnVector = Eigen::VectorXcd;
using Index = Eigen::Index;

enum class ErrorKind {
  InvalidArgument,
  MalformedInput,
  DegeneratePairing,
  NotComplementary,
  ParameterCollision,
  PoleEvaluation,
  RankMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Mathematical precondition violations (as opposed to bad input) are the
// kinds the CLI reports with exit code 2.
bool is_precondition_violation(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  // Same kind, message prefixed with context such as "site 3: ".
  Error with_context(std::string_view context) const;

 private:
  ErrorKind kind_;
};

/// Numerical tolerances shared by every module. All thresholds are relative
/// unless noted.
struct Tolerances {
  /// Singular values below rank_tol * sigma_max count as zero.
  double rank_tol = 1e-10;
  /// Idempotency: ||P^2 - P||_F <= idem_tol * (1 + ||P||_F). Also the absolute
  /// Hermiticity threshold.
  double idem_tol = 1e-10;
  /// Two subspaces are equal when every principal angle is below this (rad).
  double angle_tol = 1e-8;
  /// |(xi, eta)| must exceed pairing_tol * ||xi|| * ||eta||.
  double pairing_tol = 1e-12;
  /// lambda1 and lambda2 collide when |lambda1 -+ lambda2| <= param_tol * (|lambda1| + |lambda2|).
  double param_tol = 1e-12;
};

bool is_finite(const Matrix& m) noexcept;
bool is_finite(Complex z) noexcept;

}  // namespace ybmap
