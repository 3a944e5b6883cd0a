#include "ybmap/kdv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ybmap {

namespace {

void require_real_lambda(double lambda) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::InvalidArgument, "soliton lambda must be finite");
}

void require_square(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) throw Error(ErrorKind::InvalidArgument, "amplitude must be square");
  if (!is_finite(a)) throw Error(ErrorKind::InvalidArgument, "amplitude has non-finite entries");
}

// s = sech^2(theta) and its theta-derivatives, with T = tanh(theta):
//   s'   = -2 s T
//   s''' = (4 - 12 s) s'
struct Profile {
  double s;
  double ds;
  double d3s;
};

Profile profile(double theta) {
  const double sech = 1.0 / std::cosh(theta);
  const double s = sech * sech;
  const double ds = -2.0 * s * std::tanh(theta);
  return Profile{s, ds, (4.0 - 12.0 * s) * ds};
}

constexpr double kAmplitudeSign = -2.0;

}  // namespace

double soliton_phase(double lambda, double x, double t) { return lambda * x - 4.0 * lambda * lambda * lambda * t; }

Matrix soliton_field(const Matrix& amplitude, double lambda, double x, double t) {
  require_square(amplitude);
  require_real_lambda(lambda);
  const Profile p = profile(soliton_phase(lambda, x, t));
  return (kAmplitudeSign * lambda * lambda * p.s) * amplitude;
}

Matrix soliton_field(const ProjectorState& p, double lambda, double x, double t) {
  return soliton_field(p.matrix(), lambda, x, t);
}

KdvTerms kdv_terms(const Matrix& amplitude, double lambda, double x, double t) {
  require_square(amplitude);
  require_real_lambda(lambda);
  const Profile p = profile(soliton_phase(lambda, x, t));
  // U = g(theta) A with g = c s, c = -2 lambda^2, theta_x = lambda,
  // theta_t = -4 lambda^3.
  const double l2 = lambda * lambda;
  const double l3 = l2 * lambda;
  const double c = kAmplitudeSign * l2;
  const double g = c * p.s;
  const double dg = c * p.ds;
  const double d3g = c * p.d3s;
  const Matrix a2 = amplitude * amplitude;
  return KdvTerms{
      (-4.0 * l3 * dg) * amplitude,
      (g * lambda * dg) * a2,
      (lambda * dg * g) * a2,
      (l3 * d3g) * amplitude,
  };
}

Matrix kdv_residual(const Matrix& amplitude, double lambda, double x, double t) {
  const KdvTerms terms = kdv_terms(amplitude, lambda, x, t);
  return terms.u_t - 3.0 * terms.u_u_x - 3.0 * terms.u_x_u + terms.u_xxx;
}

Matrix kdv_residual(const ProjectorState& p, double lambda, double x, double t) {
  return kdv_residual(p.matrix(), lambda, x, t);
}

double kdv_relative_residual(const Matrix& amplitude, double lambda, double x, double t) {
  const KdvTerms terms = kdv_terms(amplitude, lambda, x, t);
  const Matrix residual = terms.u_t - 3.0 * terms.u_u_x - 3.0 * terms.u_x_u + terms.u_xxx;
  const double scale =
      1.0 + terms.u_t.norm() + 3.0 * terms.u_u_x.norm() + 3.0 * terms.u_x_u.norm() + terms.u_xxx.norm();
  return residual.norm() / scale;
}

double AxisSpec::at(std::size_t i) const {
  if (points <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
}

ResidualScan scan_kdv_residual(const Matrix& amplitude, double lambda, const AxisSpec& x_axis,
                               const AxisSpec& t_axis) {
  ResidualScan scan;
  for (std::size_t i = 0; i < x_axis.points; ++i) {
    for (std::size_t j = 0; j < t_axis.points; ++j) {
      const double x = x_axis.at(i);
      const double t = t_axis.at(j);
      const double absolute = kdv_residual(amplitude, lambda, x, t).norm();
      const double relative = kdv_relative_residual(amplitude, lambda, x, t);
      if (relative > scan.max_relative_residual || scan.points == 0) {
        scan.max_relative_residual = relative;
        scan.x_at_max = x;
        scan.t_at_max = t;
      }
      scan.max_residual = std::max(scan.max_residual, absolute);
      ++scan.points;
    }
  }
  return scan;
}

void write_field_csv(std::ostream& out, const Matrix& amplitude, double lambda, const AxisSpec& x_axis,
                     const AxisSpec& t_axis) {
  out << "x,t";
  for (Index r = 0; r < amplitude.rows(); ++r)
    for (Index c = 0; c < amplitude.cols(); ++c) out << ",re_" << r << c << ",im_" << r << c;
  out << '\n';
  out.precision(17);
  for (std::size_t i = 0; i < x_axis.points; ++i) {
    for (std::size_t j = 0; j < t_axis.points; ++j) {
      const double x = x_axis.at(i);
      const double t = t_axis.at(j);
      const Matrix u = soliton_field(amplitude, lambda, x, t);
      out << x << ',' << t;
      for (Index r = 0; r < u.rows(); ++r)
        for (Index c = 0; c < u.cols(); ++c) out << ',' << u(r, c).real() << ',' << u(r, c).imag();
      out << '\n';
    }
  }
}

}  // namespace ybmap
