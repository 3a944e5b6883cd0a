#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ybmap/linalg.hpp"

namespace ybmap {

/// The pair (P, lambda) defining the rational Lax matrix
///
///     A(P, lambda; zeta) = I + 2 lambda / (zeta - lambda) P
///
/// with a simple pole at zeta = lambda.
struct LaxSpec {
  ProjectorState projector;
  Complex lambda;
};

/// Throws ParameterCollision when lambda1 = +-lambda2 within param_tol, the
/// case where refactorization stops being unique.
void check_distinct_parameters(Complex lambda1, Complex lambda2, double param_tol = Tolerances{}.param_tol);

/// 0.1 * min |lambda_i|.
double default_pole_margin(std::span<const Complex> lambdas);

/// Sample points of the spectral parameter, each at least `pole_margin`
/// away from every +-lambda_i.
class ZetaGrid {
 public:
  /// `samples` points on the circle |zeta| = 2 max|lambda_i|, rotated and
  /// jittered deterministically from `seed`.
  static ZetaGrid circle(std::span<const Complex> lambdas, std::size_t samples, std::uint64_t seed);

  /// Explicit points. Throws PoleEvaluation if one sits within the margin.
  static ZetaGrid from_points(std::vector<Complex> points, std::span<const Complex> lambdas,
                              std::optional<double> pole_margin = std::nullopt);

  const std::vector<Complex>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double pole_margin() const noexcept { return pole_margin_; }

 private:
  ZetaGrid(std::vector<Complex> points, double margin) : points_(std::move(points)), pole_margin_(margin) {}

  std::vector<Complex> points_;
  double pole_margin_;
};

/// I + 2 lambda / (zeta - lambda) P. The default margin is 0.1 |lambda|.
Matrix lax_eval(const LaxSpec& spec, Complex zeta, std::optional<double> pole_margin = std::nullopt);

/// A(P, -lambda; zeta), which is the matrix inverse of A(P, lambda; zeta).
Matrix lax_inverse(const LaxSpec& spec, Complex zeta, std::optional<double> pole_margin = std::nullopt);

/// Polynomial (pole-cleared) form (zeta - lambda) I + 2 lambda P.
Matrix lax_polynomial(const ProjectorState& p, Complex lambda, Complex zeta);

/// Solves A(P1,l1)A(P2,l2) = A(Q2,l2)A(Q1,l1) for (Q1, Q2) numerically,
/// without the closed-form update formulas: kernels and images of the
/// polynomial product are read off at the poles zeta = l1, l2 and, for the
/// inverted relation, at zeta = -l1, -l2.
///
/// Subspace dimensions are fixed by the input ranks; a thresholded rank that
/// disagrees raises RankMismatch.
std::pair<ProjectorState, ProjectorState> refactorize_numeric(Complex lambda1, const ProjectorState& p1,
                                                              Complex lambda2, const ProjectorState& p2,
                                                              const Tolerances& tol = {});

/// max_j ||A(P1,l1)A(P2,l2) - A(Q2,l2)A(Q1,l1)||_F / (1 + ||A(P1,l1)A(P2,l2)||_F)
/// over the grid points.
double verify_refactorization(Complex lambda1, const ProjectorState& p1, Complex lambda2, const ProjectorState& p2,
                              const ProjectorState& q1, const ProjectorState& q2, const ZetaGrid& grid);

}  // namespace ybmap
