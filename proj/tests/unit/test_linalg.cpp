#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "ybmap/linalg.hpp"
#include "ybmap/sampling.hpp"

using namespace ybmap;
using ybmap::testing::column;
using ybmap::testing::max_abs_diff;
using ybmap::testing::real_matrix;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("pairing is bilinear") {
  CHECK(pairing(Vec{1, 0}, Covec{0, 1}) == Complex(0.0));
  CHECK(pairing(Vec{1, 1}, Covec{2, 0}) == Complex(2.0));
  // i*i + 1*1 = 0; a sesquilinear product would give 2.
  CHECK(std::abs(pairing(Vec{I, 1}, Covec{I, 1})) < 1e-15);
  CHECK_THROWS_AS(pairing(Vec{1, 2}, Covec{1}), Error);
}

TEST_CASE("vectors reject non-finite entries") {
  CHECK_THROWS_AS(Vec({Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}), Error);
  CHECK_THROWS_AS(Covec({Complex(0.0, std::numeric_limits<double>::infinity())}), Error);
}

TEST_CASE("projector_from_pair") {
  SUBCASE("dimension one gives the identity") {
    const ProjectorState p = projector_from_pair(Vec{2}, Covec{3});
    CHECK(max_abs_diff(p.matrix(), real_matrix({{1}})) < 1e-15);
    CHECK(p.rank() == 1);
    CHECK(p.kernel().dim() == 0);
  }
  SUBCASE("coordinate axis") {
    const ProjectorState p = projector_from_pair(Vec{1, 0}, Covec{1, 0});
    CHECK(max_abs_diff(p.matrix(), real_matrix({{1, 0}, {0, 0}})) < 1e-15);
    CHECK(p.is_hermitian());
  }
  SUBCASE("oblique") {
    const ProjectorState p = projector_from_pair(Vec{1, 1}, Covec{2, 0});
    CHECK(max_abs_diff(p.matrix(), real_matrix({{1, 0}, {1, 0}})) < 1e-15);
    CHECK(max_abs_diff(p.matrix() * p.matrix(), p.matrix()) < 1e-15);
    CHECK_FALSE(p.is_hermitian());
    CHECK(same_subspace(p.image(), Subspace::from_basis(column({1, 1}))));
    CHECK(same_subspace(p.kernel(), Subspace::from_basis(column({0, 1}))));
  }
  SUBCASE("degenerate pairing") {
    try {
      projector_from_pair(Vec{1, 0}, Covec{0, 1});
      FAIL("expected DegeneratePairing");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegeneratePairing);
    }
  }
}

TEST_CASE("projector_from_subspaces") {
  const Subspace e1 = Subspace::from_basis(column({1, 0}));
  const Subspace e2 = Subspace::from_basis(column({0, 1}));
  CHECK(max_abs_diff(projector_from_subspaces(e1, e2).matrix(), real_matrix({{1, 0}, {0, 0}})) < 1e-15);

  const ProjectorState oblique = projector_from_subspaces(Subspace::from_basis(column({1, 1})), e2);
  CHECK(max_abs_diff(oblique.matrix(), real_matrix({{1, 0}, {1, 0}})) < 1e-14);

  try {
    projector_from_subspaces(e1, e1);
    FAIL("expected NotComplementary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComplementary);
  }
  CHECK_THROWS_AS(projector_from_subspaces(e1, Subspace::zero(2)), Error);
}

TEST_CASE("orthogonal_projector") {
  CHECK(max_abs_diff(orthogonal_projector(Subspace::from_basis(column({1, 0}))).matrix(),
                     real_matrix({{1, 0}, {0, 0}})) < 1e-15);
  const ProjectorState diagonal = orthogonal_projector(Subspace::from_basis(column({1, 1})));
  CHECK(max_abs_diff(diagonal.matrix(), real_matrix({{0.5, 0.5}, {0.5, 0.5}})) < 1e-15);
  CHECK(diagonal.is_hermitian());
  const ProjectorState whole = orthogonal_projector(Subspace::whole(3));
  CHECK(max_abs_diff(whole.matrix(), Matrix::Identity(3, 3)) < 1e-15);
  CHECK_THROWS_AS(Subspace::from_basis(real_matrix({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("numeric kernel and image") {
  SUBCASE("zero matrix") {
    const Matrix zero = Matrix::Zero(2, 2);
    CHECK(numeric_kernel(zero).dim() == 2);
    CHECK(numeric_image(zero).dim() == 0);
  }
  SUBCASE("diag(1, 0)") {
    const Matrix m = real_matrix({{1, 0}, {0, 0}});
    CHECK(same_subspace(numeric_kernel(m), Subspace::from_basis(column({0, 1}))));
    CHECK(same_subspace(numeric_image(m), Subspace::from_basis(column({1, 0}))));
  }
  SUBCASE("all ones") {
    const Matrix m = real_matrix({{1, 1}, {1, 1}});
    CHECK(same_subspace(numeric_kernel(m), Subspace::from_basis(column({1, -1}))));
    CHECK(same_subspace(numeric_image(m), Subspace::from_basis(column({1, 1}))));
  }
  SUBCASE("expected dimension mismatch") {
    try {
      numeric_kernel(real_matrix({{1, 0}, {0, 0}}), 2, 1e-10);
      FAIL("expected RankMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankMismatch);
    }
  }
}

TEST_CASE("principal angles") {
  const Subspace x = Subspace::from_basis(column({1, 0}));
  const Subspace diag = Subspace::from_basis(column({1, 1}));
  CHECK(max_principal_angle(x, diag) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
  CHECK(max_principal_angle(x, Subspace::from_basis(column({0, 1}))) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  // Scaling and phase changes of the basis do not move the subspace.
  CHECK(max_principal_angle(diag, Subspace::from_basis(column({Complex(0, 3), Complex(0, 3)}))) < 1e-15);
  // Tiny angles keep relative accuracy (an arccos-only route would round to ~1e-8).
  const double eps = 1e-12;
  CHECK(max_principal_angle(x, Subspace::from_basis(column({1, eps}))) == doctest::Approx(eps).epsilon(1e-6));
}

TEST_CASE("projector invariants on random samples") {
  Rng rng = trial_rng(11, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = uniform_index(rng, 1, 8);
    const Index k = uniform_index(rng, 0, n);
    const ProjectorState p = random_projector(rng, n, k);
    const Matrix& m = p.matrix();
    CHECK(idempotency_defect(m) <= 1e-10);
    CHECK(p.rank() == k);
    CHECK(std::abs(m.trace() - Complex(static_cast<double>(k))) <= 1e-10 * static_cast<double>(n));
    CHECK(complementarity(p.image(), p.kernel()) > 0.0);

    // Rebuilding from (image, kernel) reproduces P; so does from_matrix.
    CHECK(max_abs_diff(projector_from_subspaces(p.image(), p.kernel()).matrix(), m) <= 1e-10);
    const ProjectorState again = ProjectorState::from_matrix(m);
    CHECK(same_subspace(again.image(), p.image()));
    CHECK(same_subspace(again.kernel(), p.kernel()));

    const ProjectorState h = random_hermitian_projector(rng, n, k);
    CHECK(h.is_hermitian());
    CHECK((h.matrix() - h.matrix().adjoint()).norm() <= 1e-10);
    CHECK((h.matrix() * (Matrix::Identity(n, n) - h.matrix())).norm() <= 1e-10);
    CHECK(same_subspace(h.kernel(), h.image().orthogonal_complement()));
  }
}

TEST_CASE("projector_from_pair agrees with the subspace construction") {
  Rng rng = trial_rng(12, 0, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = uniform_index(rng, 1, 6);
    const Polarization pol = random_polarization(rng, d, 1.0);
    const ProjectorState from_pair = projector_from_pair(pol.xi, pol.eta);
    const Subspace image = Subspace::from_basis(pol.xi.values());
    const Subspace annihilator = numeric_kernel(Matrix(pol.eta.values().transpose()), d - 1, 1e-10);
    CHECK(max_abs_diff(from_pair.matrix(), projector_from_subspaces(image, annihilator).matrix()) <= 1e-10);
  }
}

TEST_CASE("from_matrix rejects non-idempotent input") {
  CHECK_THROWS_AS(ProjectorState::from_matrix(real_matrix({{2, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(ProjectorState::from_matrix(real_matrix({{1, 0, 0}, {0, 1, 0}})), Error);
  const ProjectorState zero = ProjectorState::from_matrix(Matrix::Zero(3, 3));
  CHECK(zero.rank() == 0);
  CHECK(zero.kernel().dim() == 3);
}

TEST_CASE("characteristic polynomial") {
  // det(sI - diag(1,2,3)) = s^3 - 6 s^2 + 11 s - 6
  const ColumnVector c = characteristic_polynomial(real_matrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK(std::abs(c(0) - 1.0) < 1e-14);
  CHECK(std::abs(c(1) + 6.0) < 1e-13);
  CHECK(std::abs(c(2) - 11.0) < 1e-13);
  CHECK(std::abs(c(3) + 6.0) < 1e-13);
  // Non-normal 2x2: [[1, 5], [0, 1]] has (s - 1)^2.
  const ColumnVector j = characteristic_polynomial(real_matrix({{1, 5}, {0, 1}}));
  CHECK(std::abs(j(1) + 2.0) < 1e-14);
  CHECK(std::abs(j(2) - 1.0) < 1e-14);
}
