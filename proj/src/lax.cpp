#include "ybmap/lax.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ybmap {

void check_distinct_parameters(Complex lambda1, Complex lambda2, double param_tol) {
  const double scale = param_tol * (std::abs(lambda1) + std::abs(lambda2));
  if (std::abs(lambda1 - lambda2) <= scale || std::abs(lambda1 + lambda2) <= scale) {
    std::ostringstream os;
    os << "lambda1 = " << lambda1 << " and lambda2 = " << lambda2 << " violate lambda1 != +-lambda2";
    throw Error(ErrorKind::ParameterCollision, os.str());
  }
}

double default_pole_margin(std::span<const Complex> lambdas) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const Complex& l : lambdas) smallest = std::min(smallest, std::abs(l));
  return lambdas.empty() ? 0.0 : 0.1 * smallest;
}

namespace {

void check_margin(Complex zeta, std::span<const Complex> lambdas, double margin) {
  for (const Complex& l : lambdas) {
    if (std::abs(zeta - l) < margin || std::abs(zeta + l) < margin) {
      std::ostringstream os;
      os << "zeta = " << zeta << " lies within " << margin << " of the pole +-" << l;
      throw Error(ErrorKind::PoleEvaluation, os.str());
    }
  }
}

void require_nonzero(Complex lambda) {
  if (lambda == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "Lax parameter lambda must be nonzero");
}

}  // namespace

ZetaGrid ZetaGrid::circle(std::span<const Complex> lambdas, std::size_t samples, std::uint64_t seed) {
  if (lambdas.empty()) throw Error(ErrorKind::InvalidArgument, "zeta grid needs at least one parameter");
  double largest = 0.0;
  for (const Complex& l : lambdas) largest = std::max(largest, std::abs(l));
  const double radius = 2.0 * largest;
  const double margin = default_pole_margin(lambdas);

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5a37u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(std::max<std::size_t>(samples, 1));
  const double offset = step * unit(rng);

  std::vector<Complex> points;
  points.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double jitter = 0.25 * step * (unit(rng) - 0.5);
    points.push_back(std::polar(radius, offset + step * static_cast<double>(j) + jitter));
  }
  // |zeta| = 2 max|lambda| keeps every point at least max|lambda| from any
  // pole; the check documents the invariant.
  for (const Complex& z : points) check_margin(z, lambdas, margin);
  return ZetaGrid(std::move(points), margin);
}

ZetaGrid ZetaGrid::from_points(std::vector<Complex> points, std::span<const Complex> lambdas,
                               std::optional<double> pole_margin) {
  const double margin = pole_margin.value_or(default_pole_margin(lambdas));
  for (const Complex& z : points) {
    if (!is_finite(z)) throw Error(ErrorKind::InvalidArgument, "non-finite zeta sample");
    check_margin(z, lambdas, margin);
  }
  return ZetaGrid(std::move(points), margin);
}

Matrix lax_eval(const LaxSpec& spec, Complex zeta, std::optional<double> pole_margin) {
  require_nonzero(spec.lambda);
  const double margin = pole_margin.value_or(0.1 * std::abs(spec.lambda));
  if (!(std::abs(zeta - spec.lambda) > margin)) {
    std::ostringstream os;
    os << "zeta = " << zeta << " is within " << margin << " of the pole " << spec.lambda;
    throw Error(ErrorKind::PoleEvaluation, os.str());
  }
  const Index n = spec.projector.ambient_dim();
  const Complex coefficient = 2.0 * spec.lambda / (zeta - spec.lambda);
  return Matrix::Identity(n, n) + coefficient * spec.projector.matrix();
}

Matrix lax_inverse(const LaxSpec& spec, Complex zeta, std::optional<double> pole_margin) {
  require_nonzero(spec.lambda);
  const double margin = pole_margin.value_or(0.1 * std::abs(spec.lambda));
  const Complex poles[] = {spec.lambda};
  check_margin(zeta, poles, margin);
  return lax_eval(LaxSpec{spec.projector, -spec.lambda}, zeta, margin);
}

Matrix lax_polynomial(const ProjectorState& p, Complex lambda, Complex zeta) {
  const Index n = p.ambient_dim();
  return (zeta - lambda) * Matrix::Identity(n, n) + 2.0 * lambda * p.matrix();
}

std::pair<ProjectorState, ProjectorState> refactorize_numeric(Complex lambda1, const ProjectorState& p1,
                                                              Complex lambda2, const ProjectorState& p2,
                                                              const Tolerances& tol) {
  check_distinct_parameters(lambda1, lambda2, tol.param_tol);
  if (p1.ambient_dim() != p2.ambient_dim()) throw Error(ErrorKind::InvalidArgument, "projectors differ in dimension");
  const Index n = p1.ambient_dim();
  const Index k1 = p1.rank();
  const Index k2 = p2.rank();

  // Phi(zeta) = ((zeta - l1) I + 2 l1 P1)((zeta - l2) I + 2 l2 P2)
  //           = ((zeta - l2) I + 2 l2 Q2)((zeta - l1) I + 2 l1 Q1).
  // At zeta = l1 the right side is (invertible) * 2 l1 Q1, so its kernel is
  // ker Q1; at zeta = l2 it is 2 l2 Q2 * (invertible), so its image is im Q2.
  const auto phi = [&](Complex zeta) {
    return Matrix(lax_polynomial(p1, lambda1, zeta) * lax_polynomial(p2, lambda2, zeta));
  };
  // Inverting the rational relation negates the parameters and reverses the
  // factors:
  // Psi(zeta) = ((zeta + l2) I - 2 l2 P2)((zeta + l1) I - 2 l1 P1)
  //           = ((zeta + l1) I - 2 l1 Q1)((zeta + l2) I - 2 l2 Q2).
  // At zeta = -l2 the kernel is ker Q2; at zeta = -l1 the image is im Q1.
  const auto psi = [&](Complex zeta) {
    return Matrix(lax_polynomial(p2, -lambda2, zeta) * lax_polynomial(p1, -lambda1, zeta));
  };

  try {
    const Subspace kernel1 = numeric_kernel(phi(lambda1), n - k1, tol.rank_tol);
    const Subspace image2 = numeric_image(phi(lambda2), k2, tol.rank_tol);
    const Subspace kernel2 = numeric_kernel(psi(-lambda2), n - k2, tol.rank_tol);
    const Subspace image1 = numeric_image(psi(-lambda1), k1, tol.rank_tol);
    return {projector_from_subspaces(image1, kernel1, tol), projector_from_subspaces(image2, kernel2, tol)};
  } catch (const Error& e) {
    throw e.with_context("numeric refactorization: ");
  }
}

double verify_refactorization(Complex lambda1, const ProjectorState& p1, Complex lambda2, const ProjectorState& p2,
                              const ProjectorState& q1, const ProjectorState& q2, const ZetaGrid& grid) {
  const LaxSpec a1{p1, lambda1};
  const LaxSpec a2{p2, lambda2};
  const LaxSpec b1{q1, lambda1};
  const LaxSpec b2{q2, lambda2};
  const double margin = grid.pole_margin();
  double worst = 0.0;
  for (const Complex& zeta : grid.points()) {
    const Matrix lhs = lax_eval(a1, zeta, margin) * lax_eval(a2, zeta, margin);
    const Matrix rhs = lax_eval(b2, zeta, margin) * lax_eval(b1, zeta, margin);
    worst = std::max(worst, (lhs - rhs).norm() / (1.0 + lhs.norm()));
  }
  return worst;
}

}  // namespace ybmap
