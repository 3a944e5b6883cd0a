#include "ybmap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ybmap {

namespace {

using Svd = Eigen::JacobiSVD<Matrix>;

Index thresholded_rank(const Eigen::VectorXd& sigma, double rank_tol) {
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cut = rank_tol * sigma(0);
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cut) ++r;
  return r;
}

void require_finite(const Matrix& m, std::string_view what) {
  if (!is_finite(m)) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
  }
}

// Right null space of an r x n matrix with full V (handles r < n).
Matrix full_right_singular_vectors(const Matrix& m, Eigen::VectorXd& sigma) {
  const Index n = m.cols();
  if (m.rows() == 0) {
    sigma.resize(0);
    return Matrix::Identity(n, n);
  }
  Svd svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  sigma = svd.singularValues();
  return svd.matrixV();
}

}  // namespace

Vec::Vec(ColumnVector values) : values_(std::move(values)) {
  if (values_.size() < 1) throw Error(ErrorKind::InvalidArgument, "vector must have length >= 1");
  require_finite(values_, "vector");
}

Vec::Vec(std::initializer_list<Complex> values)
    : Vec(ColumnVector(Eigen::Map<const ColumnVector>(values.begin(), static_cast<Index>(values.size())))) {}

Covec::Covec(ColumnVector values) : values_(std::move(values)) {
  if (values_.size() < 1) throw Error(ErrorKind::InvalidArgument, "covector must have length >= 1");
  require_finite(values_, "covector");
}

Covec::Covec(std::initializer_list<Complex> values)
    : Covec(ColumnVector(Eigen::Map<const ColumnVector>(values.begin(), static_cast<Index>(values.size())))) {}

Complex pairing(const Vec& xi, const Covec& eta) {
  if (xi.size() != eta.size()) {
    std::ostringstream os;
    os << "pairing length mismatch: " << xi.size() << " vs " << eta.size();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  return xi.values().cwiseProduct(eta.values()).sum();
}

Subspace Subspace::from_basis(const Matrix& columns, double rank_tol) {
  require_finite(columns, "subspace basis");
  if (columns.rows() < 1) throw Error(ErrorKind::InvalidArgument, "subspace ambient dimension must be >= 1");
  const Index k = columns.cols();
  if (k > columns.rows()) throw Error(ErrorKind::InvalidArgument, "more basis columns than ambient dimension");
  if (k == 0) return zero(columns.rows());
  Svd svd(columns, Eigen::ComputeThinU);
  if (thresholded_rank(svd.singularValues(), rank_tol) != k) {
    throw Error(ErrorKind::InvalidArgument, "rank-deficient subspace basis");
  }
  return Subspace(svd.matrixU().leftCols(k));
}

Subspace Subspace::from_orthonormal(Matrix orthonormal) { return Subspace(std::move(orthonormal)); }

Subspace Subspace::zero(Index ambient_dim) { return Subspace(Matrix(ambient_dim, 0)); }

Subspace Subspace::whole(Index ambient_dim) { return Subspace(Matrix::Identity(ambient_dim, ambient_dim)); }

Subspace Subspace::orthogonal_complement() const {
  const Index n = ambient_dim();
  if (dim() == 0) return whole(n);
  Eigen::VectorXd sigma;
  const Matrix v = full_right_singular_vectors(basis_.adjoint(), sigma);
  return Subspace(v.rightCols(n - dim()));
}

Eigen::VectorXd principal_angles(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) {
    throw Error(ErrorKind::InvalidArgument, "principal angles need subspaces of equal dimension");
  }
  const Index k = a.dim();
  if (k == 0) return Eigen::VectorXd(0);

  const Matrix overlap = a.basis().adjoint() * b.basis();
  const Matrix residual = b.basis() - a.basis() * overlap;
  // Cosines descend, sines ascend; the i-th of each belong to the same angle.
  Eigen::VectorXd cosines = Svd(overlap).singularValues();
  Eigen::VectorXd sines = Svd(residual).singularValues();
  std::sort(sines.data(), sines.data() + sines.size());

  Eigen::VectorXd angles(k);
  for (Index i = 0; i < k; ++i) {
    const double s = std::min(1.0, sines(i));
    const double c = std::min(1.0, cosines(i));
    angles(i) = s < std::numbers::sqrt2 / 2 ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.data(), angles.data() + k);
  return angles;
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return std::numbers::pi / 2;
  if (a.dim() == 0) return 0.0;
  return principal_angles(a, b).maxCoeff();
}

bool same_subspace(const Subspace& a, const Subspace& b, double angle_tol) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && max_principal_angle(a, b) <= angle_tol;
}

double complementarity(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() + b.dim() != a.ambient_dim()) return 0.0;
  Matrix stacked(a.ambient_dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  const Eigen::VectorXd sigma = Svd(stacked).singularValues();
  return sigma(sigma.size() - 1);
}

Subspace numeric_kernel(const Matrix& m, double rank_tol) {
  require_finite(m, "matrix");
  Eigen::VectorXd sigma;
  const Matrix v = full_right_singular_vectors(m, sigma);
  const Index r = thresholded_rank(sigma, rank_tol);
  return Subspace::from_orthonormal(v.rightCols(m.cols() - r));
}

Subspace numeric_image(const Matrix& m, double rank_tol) {
  require_finite(m, "matrix");
  if (m.cols() == 0) return Subspace::zero(m.rows());
  Svd svd(m, Eigen::ComputeFullU);
  const Index r = thresholded_rank(svd.singularValues(), rank_tol);
  return Subspace::from_orthonormal(svd.matrixU().leftCols(r));
}

Subspace numeric_kernel(const Matrix& m, Index expected_dim, double rank_tol) {
  Subspace k = numeric_kernel(m, rank_tol);
  if (k.dim() != expected_dim) {
    std::ostringstream os;
    os << "numeric kernel has dimension " << k.dim() << ", expected " << expected_dim;
    throw Error(ErrorKind::RankMismatch, os.str());
  }
  return k;
}

Subspace numeric_image(const Matrix& m, Index expected_dim, double rank_tol) {
  Subspace im = numeric_image(m, rank_tol);
  if (im.dim() != expected_dim) {
    std::ostringstream os;
    os << "numeric image has dimension " << im.dim() << ", expected " << expected_dim;
    throw Error(ErrorKind::RankMismatch, os.str());
  }
  return im;
}

double idempotency_defect(const Matrix& p) { return (p * p - p).norm() / (1.0 + p.norm()); }

namespace {

bool hermitian_within(const Matrix& p, double tol) { return (p - p.adjoint()).norm() <= tol; }

}  // namespace

ProjectorState ProjectorState::from_matrix(const Matrix& p, const Tolerances& tol) {
  require_finite(p, "projector");
  if (p.rows() != p.cols() || p.rows() < 1) throw Error(ErrorKind::InvalidArgument, "projector must be square");
  const double defect = idempotency_defect(p);
  if (defect > tol.idem_tol) {
    std::ostringstream os;
    os << "matrix is not idempotent: ||P^2 - P|| / (1 + ||P||) = " << defect;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  // Nonzero singular values of an idempotent are >= 1, so the threshold has
  // a wide gap to work with.
  const Index n = p.rows();
  Svd svd(p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Index r = thresholded_rank(svd.singularValues(), tol.rank_tol);
  const bool hermitian = hermitian_within(p, tol.idem_tol);
  return ProjectorState(p, Subspace::from_orthonormal(svd.matrixU().leftCols(r)),
                        Subspace::from_orthonormal(svd.matrixV().rightCols(n - r)), hermitian);
}

double ProjectorState::spectral_norm() const {
  if (rank() == 0) return 0.0;
  return Svd(matrix_).singularValues()(0);
}

ProjectorState projector_from_pair(const Vec& xi, const Covec& eta, const Tolerances& tol) {
  const Complex pair = pairing(xi, eta);
  const double scale = xi.values().norm() * eta.values().norm();
  if (scale == 0.0 || std::abs(pair) <= tol.pairing_tol * scale) {
    throw Error(ErrorKind::DegeneratePairing, "pairing (xi, eta) is numerically zero");
  }
  const Index d = xi.size();
  Matrix p = xi.values() * eta.values().transpose() / pair;
  Subspace image = Subspace::from_orthonormal(xi.values().normalized());
  // The annihilator of eta: null space of the 1 x d row eta^T.
  Eigen::VectorXd sigma;
  const Matrix v = full_right_singular_vectors(eta.values().transpose(), sigma);
  Subspace kernel = Subspace::from_orthonormal(v.rightCols(d - 1));
  const bool hermitian = hermitian_within(p, tol.idem_tol);
  return ProjectorState(std::move(p), std::move(image), std::move(kernel), hermitian);
}

ProjectorState projector_from_subspaces(const Subspace& image, const Subspace& kernel, const Tolerances& tol) {
  const Index n = image.ambient_dim();
  if (kernel.ambient_dim() != n) throw Error(ErrorKind::InvalidArgument, "image and kernel live in different spaces");
  if (image.dim() + kernel.dim() != n) {
    std::ostringstream os;
    os << "dimensions " << image.dim() << " + " << kernel.dim() << " do not add up to " << n;
    throw Error(ErrorKind::NotComplementary, os.str());
  }
  const Index k = image.dim();
  if (k == 0) return ProjectorState(Matrix::Zero(n, n), image, kernel, true);
  if (k == n) return ProjectorState(Matrix::Identity(n, n), image, kernel, true);

  Matrix stacked(n, n);
  stacked << image.basis(), kernel.basis();
  // Orthonormal blocks bound sigma_max by sqrt(2), so sigma_min alone
  // measures how close the subspaces come to intersecting.
  const Eigen::VectorXd sigma = Svd(stacked).singularValues();
  const double condition = sigma(0) / sigma(n - 1);
  if (!(sigma(n - 1) > tol.rank_tol * sigma(0))) {
    std::ostringstream os;
    os << "image and kernel are not complementary (condition number " << condition << ")";
    throw Error(ErrorKind::NotComplementary, os.str());
  }
  const Matrix inverse = stacked.partialPivLu().inverse();
  Matrix p = image.basis() * inverse.topRows(k);
  const double defect = idempotency_defect(p);
  if (defect > tol.idem_tol) {
    std::ostringstream os;
    os << "reconstructed projector lost idempotency (defect " << defect << ", condition number " << condition << ")";
    throw Error(ErrorKind::NotComplementary, os.str());
  }
  const bool hermitian = hermitian_within(p, tol.idem_tol);
  return ProjectorState(std::move(p), image, kernel, hermitian);
}

ProjectorState orthogonal_projector(const Subspace& image) {
  Matrix p = image.basis() * image.basis().adjoint();
  // Exact Hermitian symmetry, not just to rounding.
  p = (0.5 * (p + p.adjoint())).eval();
  return ProjectorState(std::move(p), image, image.orthogonal_complement(), true);
}

ColumnVector characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial needs a square matrix");
  const Index n = m.rows();
  ColumnVector coeffs = ColumnVector::Zero(n + 1);
  coeffs(0) = 1.0;
  if (n == 0) return coeffs;
  Eigen::ComplexSchur<Matrix> schur(m, /*computeU=*/false);
  const Matrix& t = schur.matrixT();
  // Multiply out prod (s - t_ii), one linear factor at a time.
  for (Index i = 0; i < n; ++i) {
    const Complex root = t(i, i);
    for (Index j = i + 1; j >= 1; --j) coeffs(j) -= root * coeffs(j - 1);
  }
  return coeffs;
}

}  // namespace ybmap
