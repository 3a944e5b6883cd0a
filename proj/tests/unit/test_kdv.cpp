#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "kdv_oracle.hpp"
#include "ybmap/kdv.hpp"
#include "ybmap/sampling.hpp"

using namespace ybmap;
using ybmap::testing::fd_kdv_residual;
using ybmap::testing::real_matrix;

TEST_CASE("field values") {
  const ProjectorState p = ProjectorState::from_matrix(real_matrix({{1, 0}, {0, 0}}));
  const Matrix u = soliton_field(p, 1.0, 0.0, 0.0);
  CHECK(u(0, 0).real() == doctest::Approx(-2.0));
  CHECK(std::abs(u(1, 1)) == 0.0);
  CHECK(soliton_field(p, 0.0, 1.0, 1.0).norm() == 0.0);
  // Travels with speed 4 lambda^2.
  const double lambda = 0.7;
  const double c = 4 * lambda * lambda;
  CHECK((soliton_field(p, lambda, 0.3 + c * 1.5, 1.5) - soliton_field(p, lambda, 0.3, 0.0)).norm() < 1e-14);
  CHECK(soliton_phase(lambda, 1.0, 0.5) == doctest::Approx(lambda - 4 * lambda * lambda * lambda * 0.5));
}

TEST_CASE("analytic terms agree with finite differences") {
  Rng rng = trial_rng(51, 0, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = uniform_index(rng, 2, 4);
    // A non-idempotent amplitude so that the residual is not trivially zero.
    const Matrix a = complex_gaussian_matrix(rng, n, n);
    const double lambda = std::uniform_real_distribution<double>(0.5, 1.5)(rng);
    const double x = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const double t = std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
    const Matrix exact = kdv_residual(a, lambda, x, t);
    const double e1 = (fd_kdv_residual(a, lambda, x, t, 1e-3) - exact).norm();
    const double e2 = (fd_kdv_residual(a, lambda, x, t, 5e-4) - exact).norm();
    const double order = std::log2(e1 / e2);
    CAPTURE(x);
    CAPTURE(e1);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
  }
}

TEST_CASE("projector amplitudes solve the equation") {
  Rng rng = trial_rng(52, 0, 0);
  const AxisSpec xs{-5.0, 5.0, 21};
  const AxisSpec ts{-1.0, 1.0, 21};
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = uniform_index(rng, 1, 5);
    const Index k = uniform_index(rng, 0, n);
    const ProjectorState p = random_projector(rng, n, k);
    for (double lambda : {0.5, 1.0, 1.5}) {
      const ResidualScan scan = scan_kdv_residual(p.matrix(), lambda, xs, ts);
      CHECK(scan.points == 441);
      CHECK(scan.max_relative_residual < 1e-10);
    }
  }
}

TEST_CASE("non-idempotent amplitude does not") {
  const Matrix two_p = 2.0 * real_matrix({{1, 0}, {0, 0}});
  // The mismatch carries a factor s', which vanishes on the crest.
  CHECK(kdv_relative_residual(two_p, 1.0, 0.0, 0.0) < 1e-12);
  CHECK(kdv_relative_residual(two_p, 1.0, 0.5, 0.0) > 1e-3);
  const ResidualScan scan = scan_kdv_residual(two_p, 1.0, {-5.0, 5.0, 21}, {-1.0, 1.0, 21});
  CHECK(scan.max_relative_residual > 1e-2);
  CHECK(scan.max_residual > 1e-1);
}

TEST_CASE("field csv") {
  std::ostringstream out;
  write_field_csv(out, real_matrix({{1, 0}, {0, 0}}), 1.0, {0.0, 1.0, 2}, {0.0, 0.0, 1});
  std::istringstream in(out.str());
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "x,t,re_00,im_00,re_01,im_01,re_10,im_10,re_11,im_11");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("bad amplitudes are rejected") {
  CHECK_THROWS_AS(soliton_field(Matrix::Zero(2, 3), 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(kdv_residual(Matrix::Identity(2, 2), std::nan(""), 0.0, 0.0), Error);
}
