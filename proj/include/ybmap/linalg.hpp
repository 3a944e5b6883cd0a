#pragma once

#include <vector>

#include "ybmap/types.hpp"

namespace ybmap {

/// Element of the ambient space V.
class Vec {
 public:
  explicit Vec(ColumnVector values);
  Vec(std::initializer_list<Complex> values);

  const ColumnVector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }

 private:
  ColumnVector values_;
};

/// Element of the dual space V*. Kept distinct from Vec so a covector can
/// never be paired with another vector by accident.
class Covec {
 public:
  explicit Covec(ColumnVector values);
  Covec(std::initializer_list<Complex> values);

  const ColumnVector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }

 private:
  ColumnVector values_;
};

/// Canonical pairing V x V* -> C. Bilinear: no conjugation.
Complex pairing(const Vec& xi, const Covec& eta);

/// A linear subspace of C^n stored by an orthonormal basis.
///
/// Bases are canonicalized on construction, so two Subspace values spanning
/// the same space generally hold different basis matrices. Compare them with
/// principal angles, never entrywise.
class Subspace {
 public:
  /// Spans the columns of `columns` (n x k). Throws InvalidArgument if the
  /// columns are not numerically independent or contain non-finite entries.
  static Subspace from_basis(const Matrix& columns, double rank_tol = Tolerances{}.rank_tol);

  /// Trusts that `orthonormal` already has orthonormal columns.
  static Subspace from_orthonormal(Matrix orthonormal);

  static Subspace zero(Index ambient_dim);
  static Subspace whole(Index ambient_dim);

  Index ambient_dim() const noexcept { return basis_.rows(); }
  Index dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  Subspace orthogonal_complement() const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

/// Principal angles between two subspaces of equal dimension, ascending.
///
/// Small angles come from sines and large ones from cosines, so angles near
/// zero keep full relative accuracy.
Eigen::VectorXd principal_angles(const Subspace& a, const Subspace& b);

/// Largest principal angle. Subspaces of different dimension are pi/2 apart.
double max_principal_angle(const Subspace& a, const Subspace& b);

bool same_subspace(const Subspace& a, const Subspace& b, double angle_tol = Tolerances{}.angle_tol);

/// Smallest singular value of [Q_a Q_b] for orthonormal bases. Zero when the
/// subspaces intersect, one when they are orthogonal complements.
double complementarity(const Subspace& a, const Subspace& b);

/// Orthonormal basis of the numeric null space of M, thresholding singular
/// values at rank_tol * sigma_max.
Subspace numeric_kernel(const Matrix& m, double rank_tol = Tolerances{}.rank_tol);
Subspace numeric_image(const Matrix& m, double rank_tol = Tolerances{}.rank_tol);

/// Same, but the dimension is known a priori. Throws RankMismatch if the
/// thresholded rank disagrees with `expected_dim`.
Subspace numeric_kernel(const Matrix& m, Index expected_dim, double rank_tol);
Subspace numeric_image(const Matrix& m, Index expected_dim, double rank_tol);

/// An idempotent n x n matrix together with its image and kernel.
class ProjectorState {
 public:
  /// Validates idempotency and computes rank, image and kernel by SVD.
  static ProjectorState from_matrix(const Matrix& p, const Tolerances& tol = {});

  const Matrix& matrix() const noexcept { return matrix_; }
  Index ambient_dim() const noexcept { return matrix_.rows(); }
  Index rank() const noexcept { return image_.dim(); }
  const Subspace& kernel() const noexcept { return kernel_; }
  const Subspace& image() const noexcept { return image_; }
  bool is_hermitian() const noexcept { return hermitian_; }

  /// ||P||_2 = 1 / sin(smallest angle between image and kernel). 1 for
  /// orthogonal projectors, large when image and kernel nearly meet.
  double spectral_norm() const;

 private:
  ProjectorState(Matrix p, Subspace image, Subspace kernel, bool hermitian)
      : matrix_(std::move(p)), image_(std::move(image)), kernel_(std::move(kernel)), hermitian_(hermitian) {}

  friend ProjectorState projector_from_subspaces(const Subspace&, const Subspace&, const Tolerances&);
  friend ProjectorState projector_from_pair(const Vec&, const Covec&, const Tolerances&);
  friend ProjectorState orthogonal_projector(const Subspace&);

  Matrix matrix_;
  Subspace image_;
  Subspace kernel_;
  bool hermitian_;
};

/// Rank-1 projector xi (x) eta / (xi, eta).
ProjectorState projector_from_pair(const Vec& xi, const Covec& eta, const Tolerances& tol = {});

/// The projector with image L and kernel K. Throws NotComplementary when
/// L + K is not numerically all of C^n.
ProjectorState projector_from_subspaces(const Subspace& image, const Subspace& kernel, const Tolerances& tol = {});

/// Hermitian projector onto L.
ProjectorState orthogonal_projector(const Subspace& image);

/// Residual ||P^2 - P||_F / (1 + ||P||_F).
double idempotency_defect(const Matrix& p);

/// Coefficients of the monic characteristic polynomial det(sI - M), highest
/// degree first, so the result has n + 1 entries and starts with 1.
///
/// Computed from the diagonal of a complex Schur form, which is exactly
/// unitarily similar to a nearby matrix.
ColumnVector characteristic_polynomial(const Matrix& m);

}  // namespace ybmap
