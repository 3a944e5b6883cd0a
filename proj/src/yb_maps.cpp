#include "ybmap/yb_maps.hpp"

#include <algorithm>
#include <array>

namespace ybmap {

void validate(const Polarization& p, const Tolerances& tol) {
  if (p.lambda == Complex(0.0) || !is_finite(p.lambda)) {
    throw Error(ErrorKind::InvalidArgument, "polarization lambda must be finite and nonzero");
  }
  const Complex pair = pairing(p.xi, p.eta);
  if (!(std::abs(pair) > tol.pairing_tol * p.xi.values().norm() * p.eta.values().norm())) {
    throw Error(ErrorKind::DegeneratePairing, "pairing (xi, eta) is numerically zero");
  }
}

ProjectorState amplitude(const Polarization& p, const Tolerances& tol) { return projector_from_pair(p.xi, p.eta, tol); }

std::pair<Polarization, Polarization> vector_soliton_map(const Polarization& first, const Polarization& second,
                                                         const Tolerances& tol) {
  const Complex l1 = first.lambda;
  const Complex l2 = second.lambda;
  check_distinct_parameters(l1, l2, tol.param_tol);
  validate(first, tol);
  validate(second, tol);
  if (first.xi.size() != second.xi.size()) throw Error(ErrorKind::InvalidArgument, "polarizations differ in dimension");

  const ColumnVector& xi1 = first.xi.values();
  const ColumnVector& eta1 = first.eta.values();
  const ColumnVector& xi2 = second.xi.values();
  const ColumnVector& eta2 = second.eta.values();

  const Complex pair11 = pairing(first.xi, first.eta);
  const Complex pair22 = pairing(second.xi, second.eta);
  const Complex pair12 = pairing(first.xi, second.eta);
  const Complex pair21 = pairing(second.xi, first.eta);

  const Complex c1 = 2.0 * l2 / ((l1 - l2) * pair22);
  const Complex c2 = 2.0 * l1 / ((l2 - l1) * pair11);

  Polarization out1{Vec(xi1 + c1 * pair12 * xi2), Covec(eta1 + c1 * pair21 * eta2), l1};
  Polarization out2{Vec(xi2 + c2 * pair21 * xi1), Covec(eta2 + c2 * pair12 * eta1), l2};
  return {std::move(out1), std::move(out2)};
}

namespace {

Subspace transform(const Matrix& m, const Subspace& s, double rank_tol) {
  if (s.dim() == 0) return s;
  try {
    return Subspace::from_basis(m * s.basis(), rank_tol);
  } catch (const Error&) {
    throw Error(ErrorKind::NotComplementary, "update matrix collapsed a subspace");
  }
}

bool real_parameter(Complex l) { return l.imag() == 0.0; }

ProjectorState finish(const Subspace& image, const Subspace& kernel, bool hermitian_regime, const Tolerances& tol,
                      Canonicalize canonicalize) {
  ProjectorState p = projector_from_subspaces(image, kernel, tol);
  if (canonicalize == Canonicalize::yes && hermitian_regime) {
    // Snap only when the rebuilt matrix agrees; a large asymmetry means the
    // inputs were not in the Hermitian regime after all.
    const Matrix& m = p.matrix();
    if ((m - m.adjoint()).norm() <= 1e-6 * (1.0 + m.norm())) return orthogonal_projector(image);
  }
  return p;
}

}  // namespace

std::pair<ProjectorState, ProjectorState> projector_map(Complex lambda1, const ProjectorState& p1, Complex lambda2,
                                                        const ProjectorState& p2, const Tolerances& tol,
                                                        Canonicalize canonicalize) {
  check_distinct_parameters(lambda1, lambda2, tol.param_tol);
  if (p1.ambient_dim() != p2.ambient_dim()) throw Error(ErrorKind::InvalidArgument, "projectors differ in dimension");
  const Index n = p1.ambient_dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& m1 = p1.matrix();
  const Matrix& m2 = p2.matrix();

  const Matrix kernel1_update = id - (2.0 * lambda2 / (lambda1 + lambda2)) * m2;
  const Matrix image1_update = id + (2.0 * lambda2 / (lambda1 - lambda2)) * m2;
  const Matrix kernel2_update = id - (2.0 * lambda1 / (lambda1 + lambda2)) * m1;
  const Matrix image2_update = id + (2.0 * lambda1 / (lambda2 - lambda1)) * m1;

  const bool hermitian_regime =
      p1.is_hermitian() && p2.is_hermitian() && real_parameter(lambda1) && real_parameter(lambda2);

  try {
    const Subspace kernel1 = transform(kernel1_update, p1.kernel(), tol.rank_tol);
    const Subspace image1 = transform(image1_update, p1.image(), tol.rank_tol);
    const Subspace kernel2 = transform(kernel2_update, p2.kernel(), tol.rank_tol);
    const Subspace image2 = transform(image2_update, p2.image(), tol.rank_tol);
    return {finish(image1, kernel1, hermitian_regime, tol, canonicalize),
            finish(image2, kernel2, hermitian_regime, tol, canonicalize)};
  } catch (const Error& e) {
    throw e.with_context("projector map: ");
  }
}

GrassmannianImage grassmannian_map(double lambda1, const Subspace& l1, double lambda2, const Subspace& l2,
                                   const Tolerances& tol) {
  check_distinct_parameters(lambda1, lambda2, tol.param_tol);
  if (l1.ambient_dim() != l2.ambient_dim()) throw Error(ErrorKind::InvalidArgument, "subspaces differ in dimension");
  const Index n = l1.ambient_dim();
  const Matrix id = Matrix::Identity(n, n);
  const ProjectorState p1 = orthogonal_projector(l1);
  const ProjectorState p2 = orthogonal_projector(l2);

  // Both update matrices have eigenvalues 1 and +-(l1 + l2)/(l1 - l2), never
  // zero, so they never collapse a subspace.
  const Subspace first = transform(id + (2.0 * lambda2 / (lambda1 - lambda2)) * p2.matrix(), l1, tol.rank_tol);
  const Subspace second = transform(id + (2.0 * lambda1 / (lambda2 - lambda1)) * p1.matrix(), l2, tol.rank_tol);
  return GrassmannianImage{first, second, orthogonal_projector(first), orthogonal_projector(second)};
}

MapResult<Polarization> collide(const Polarization& first, const Polarization& second,
                                const CertificateOptions& options, const Tolerances& tol) {
  auto [out1, out2] = vector_soliton_map(first, second, tol);
  const std::array<Complex, 2> lambdas{first.lambda, second.lambda};
  const ZetaGrid grid = ZetaGrid::circle(lambdas, options.zeta_samples, options.seed);
  const ProjectorState q1 = amplitude(out1, tol);
  const ProjectorState q2 = amplitude(out2, tol);
  MapResult<Polarization> result{std::move(out1), std::move(out2), first.lambda, second.lambda};
  result.residual = verify_refactorization(first.lambda, amplitude(first, tol), second.lambda, amplitude(second, tol),
                                           q1, q2, grid);
  result.max_projector_norm = std::max(q1.spectral_norm(), q2.spectral_norm());
  return result;
}

MapResult<ProjectorState> collide(Complex lambda1, const ProjectorState& p1, Complex lambda2,
                                  const ProjectorState& p2, const CertificateOptions& options,
                                  const Tolerances& tol) {
  auto [q1, q2] = projector_map(lambda1, p1, lambda2, p2, tol);
  const std::array<Complex, 2> lambdas{lambda1, lambda2};
  const ZetaGrid grid = ZetaGrid::circle(lambdas, options.zeta_samples, options.seed);
  const double residual = verify_refactorization(lambda1, p1, lambda2, p2, q1, q2, grid);
  const double norm = std::max(q1.spectral_norm(), q2.spectral_norm());
  return MapResult<ProjectorState>{std::move(q1), std::move(q2), lambda1, lambda2, residual, norm};
}

MapResult<Subspace> collide(double lambda1, const Subspace& l1, double lambda2, const Subspace& l2,
                            const CertificateOptions& options, const Tolerances& tol) {
  GrassmannianImage image = grassmannian_map(lambda1, l1, lambda2, l2, tol);
  const std::array<Complex, 2> lambdas{lambda1, lambda2};
  const ZetaGrid grid = ZetaGrid::circle(lambdas, options.zeta_samples, options.seed);
  const double residual = verify_refactorization(lambda1, orthogonal_projector(l1), lambda2, orthogonal_projector(l2),
                                                 image.first_projector, image.second_projector, grid);
  return MapResult<Subspace>{std::move(image.first), std::move(image.second), lambda1, lambda2, residual, 1.0};
}

}  // namespace ybmap
