#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "ybmap/verify.hpp"

using namespace ybmap;

TEST_CASE("families are registered by name") {
  CHECK(parse_family("vector") == FamilyId::vector);
  CHECK(parse_family("projector") == FamilyId::projector);
  CHECK(parse_family("grassmannian") == FamilyId::grassmannian);
  CHECK_FALSE(parse_family("scalar").has_value());
  CHECK(to_string(FamilyId::grassmannian) == "grassmannian");
}

TEST_CASE("R21 is the conjugate of R by the swap") {
  const MapFamily<ProjectorState> family = projector_family();
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = trial_rng(31, t, 0);
    const std::vector<ProjectorState> states = family.sample_states(rng, 2);
    const std::vector<Complex> lambdas = family.sample_parameters(rng, 2);

    std::vector<ProjectorState> via_r21 = states;
    apply_pair(family, via_r21, lambdas, 1, 0);

    // P R P: swap, apply R with the swapped parameters, swap back.
    const auto [a, b] = family.apply(lambdas[1], states[1], lambdas[0], states[0]);
    CHECK(projector_distance(via_r21[0], b) < 1e-12);
    CHECK(projector_distance(via_r21[1], a) < 1e-12);
  }
}

TEST_CASE("identical states: both sides agree trivially") {
  MapFamily<ProjectorState> family = projector_family();
  family.sample_states = [](Rng& rng, std::size_t count) {
    const ProjectorState p = random_projector(rng, 4, 2);
    return std::vector<ProjectorState>(count, p);
  };
  const CampaignConfig config{100, 5, 1e-12};
  const VerificationReport yb = check_yang_baxter(family, config);
  CHECK(yb.passed());
  CHECK(yb.max_deviation < 1e-12);
  const VerificationReport rev = check_reversibility(family, config);
  CHECK(rev.passed());
}

TEST_CASE("campaigns pass for every family") {
  for (FamilyId id : {FamilyId::vector, FamilyId::projector, FamilyId::grassmannian}) {
    CAPTURE(to_string(id));
    const VerificationReport yb = check_yang_baxter(id, {200, 1, 1e-9});
    CHECK(yb.failures.empty());
    CHECK(yb.max_deviation < 1e-9);
    const VerificationReport rev = check_reversibility(id, {200, 1, 1e-10});
    CHECK(rev.failures.empty());
    CHECK(rev.max_deviation < 1e-10);
  }
}

TEST_CASE("forced parameter collision is reported as a tagged failure") {
  MapFamily<Polarization> family = vector_family();
  family.sample_parameters = [](Rng&, std::size_t) { return std::vector<Complex>{0.8, 1.3, 1.3}; };
  const VerificationReport report = check_yang_baxter(family, {3, 0, 1e-9});
  REQUIRE(report.failures.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(report.failures[i].trial == i);
    CHECK_FALSE(report.failures[i].deviation.has_value());
    CHECK(report.failures[i].error.find("parameter collision") != std::string::npos);
    CHECK(report.failures[i].inputs.contains("lambdas"));
  }
  CHECK_FALSE(report.passed());
}

TEST_CASE("a wrong map is caught") {
  // Updating only the first state breaks reversibility.
  MapFamily<Subspace> family = grassmannian_family();
  family.apply = [](Complex l1, const Subspace& a, Complex l2, const Subspace& b) {
    GrassmannianImage g = grassmannian_map(l1.real(), a, l2.real(), b);
    return std::pair{g.first, b};
  };
  const VerificationReport report = check_reversibility(family, {50, 0, 1e-10});
  CHECK_FALSE(report.passed());
  CHECK(report.max_deviation > 1e-3);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  const std::string first = to_json(check_yang_baxter(FamilyId::projector, {60, 9, 1e-9})).dump();
  setenv("YBMAP_THREADS", "1", 1);
  const std::string second = to_json(check_yang_baxter(FamilyId::projector, {60, 9, 1e-9})).dump();
  unsetenv("YBMAP_THREADS");
  CHECK(first == second);
  CHECK(first.find("runtime_ms") == std::string::npos);
  CHECK(to_json(check_reversibility(FamilyId::vector, {1, 7, 1e-10}), true).contains("runtime_ms"));

  // A different seed samples different inputs.
  MapFamily<Subspace> family = grassmannian_family();
  family.distance = [](const Subspace&, const Subspace&) { return 1.0; };
  const auto a = to_json(check_reversibility(family, {2, 1, 0.5})).dump();
  const auto b = to_json(check_reversibility(family, {2, 2, 0.5})).dump();
  CHECK(a != b);
}
