#pragma once

#include <iosfwd>
#include <vector>

#include "ybmap/linalg.hpp"

namespace ybmap {

/// One-soliton field of the matrix KdV equation U_t = 3 U U_x + 3 U_x U - U_xxx:
///
///     U(x, t) = -2 lambda^2 sech^2(lambda x - 4 lambda^3 t) A.
///
/// It solves the equation exactly when A is idempotent. The sign of the
/// profile is forced by the equation: with +2 lambda^2 the residual is
/// -48 lambda^5 s s' A for s = sech^2 and never vanishes.
///
/// Real, nonzero lambda only; lambda = 0 gives the zero field.
double soliton_phase(double lambda, double x, double t);

Matrix soliton_field(const Matrix& amplitude, double lambda, double x, double t);
Matrix soliton_field(const ProjectorState& p, double lambda, double x, double t);

/// The four terms of the equation at one point, from closed-form
/// derivatives of the sech^2 profile. Quadratic terms use the amplitude
/// product A * A as computed, never assuming A^2 = A.
struct KdvTerms {
  Matrix u_t;
  Matrix u_u_x;  // U U_x
  Matrix u_x_u;  // U_x U
  Matrix u_xxx;
};

KdvTerms kdv_terms(const Matrix& amplitude, double lambda, double x, double t);

/// U_t - 3 U U_x - 3 U_x U + U_xxx.
Matrix kdv_residual(const Matrix& amplitude, double lambda, double x, double t);
Matrix kdv_residual(const ProjectorState& p, double lambda, double x, double t);

/// ||residual||_F / (1 + ||U_t|| + 3||U U_x|| + 3||U_x U|| + ||U_xxx||).
double kdv_relative_residual(const Matrix& amplitude, double lambda, double x, double t);

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;

  double at(std::size_t i) const;
};

struct ResidualScan {
  double max_residual = 0.0;           // absolute Frobenius norm
  double max_relative_residual = 0.0;  // see kdv_relative_residual
  double x_at_max = 0.0;
  double t_at_max = 0.0;
  std::size_t points = 0;
};

/// Max residual over the tensor grid x_axis x t_axis.
ResidualScan scan_kdv_residual(const Matrix& amplitude, double lambda, const AxisSpec& x_axis,
                               const AxisSpec& t_axis);

/// CSV with header x,t,re_00,im_00,re_01,... (row-major entries of U).
void write_field_csv(std::ostream& out, const Matrix& amplitude, double lambda, const AxisSpec& x_axis,
                     const AxisSpec& t_axis);

}  // namespace ybmap
