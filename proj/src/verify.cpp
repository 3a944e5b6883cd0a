#include "ybmap/verify.hpp"

#include <numbers>

#include "ybmap/json_codec.hpp"

namespace ybmap {

nlohmann::json to_json(const VerificationReport& report, bool include_runtime) {
  nlohmann::json failures = nlohmann::json::array();
  for (const TrialFailure& f : report.failures) {
    nlohmann::json entry{{"trial", f.trial}, {"inputs", f.inputs}};
    entry["deviation"] = f.deviation ? nlohmann::json(*f.deviation) : nlohmann::json(nullptr);
    if (!f.error.empty()) entry["error"] = f.error;
    failures.push_back(std::move(entry));
  }
  nlohmann::json out{{"family", report.family},
                     {"check", report.check},
                     {"trials", report.trials},
                     {"seed", report.seed},
                     {"tol", report.tol},
                     {"max_deviation", report.max_deviation},
                     {"passed", report.passed()},
                     {"failures", std::move(failures)}};
  if (include_runtime) out["runtime_ms"] = report.runtime_ms;
  return out;
}

std::optional<FamilyId> parse_family(std::string_view name) {
  if (name == "vector") return FamilyId::vector;
  if (name == "projector") return FamilyId::projector;
  if (name == "grassmannian") return FamilyId::grassmannian;
  return std::nullopt;
}

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::vector: return "vector";
    case FamilyId::projector: return "projector";
    case FamilyId::grassmannian: return "grassmannian";
  }
  return "unknown";
}

namespace {

double line_angle(const ColumnVector& a, const ColumnVector& b) {
  return max_principal_angle(Subspace::from_orthonormal(a.normalized()), Subspace::from_orthonormal(b.normalized()));
}

}  // namespace

double projective_distance(const Polarization& a, const Polarization& b) {
  if (a.xi.size() != b.xi.size()) return std::numbers::pi;
  return line_angle(a.xi.values(), b.xi.values()) + line_angle(a.eta.values(), b.eta.values());
}

double projector_distance(const ProjectorState& a, const ProjectorState& b) {
  return max_principal_angle(a.image(), b.image()) + max_principal_angle(a.kernel(), b.kernel());
}

MapFamily<Polarization> vector_family(const Tolerances& tol) {
  MapFamily<Polarization> family;
  family.name = "vector";
  family.sample_states = [](Rng& rng, std::size_t count) {
    const Index d = uniform_index(rng, 2, 4);
    std::vector<Polarization> states;
    for (std::size_t i = 0; i < count; ++i) states.push_back(random_polarization(rng, d, Complex(1.0)));
    return states;
  };
  family.sample_parameters = [](Rng& rng, std::size_t count) { return sample_separated_parameters(rng, count, false); };
  family.apply = [tol](Complex l1, const Polarization& x1, Complex l2, const Polarization& x2) {
    return vector_soliton_map(Polarization{x1.xi, x1.eta, l1}, Polarization{x2.xi, x2.eta, l2}, tol);
  };
  family.distance = projective_distance;
  family.encode = [](const Polarization& p) {
    return nlohmann::json{{"xi", json::encode(p.xi.values())}, {"eta", json::encode(p.eta.values())}};
  };
  return family;
}

MapFamily<ProjectorState> projector_family(const Tolerances& tol) {
  MapFamily<ProjectorState> family;
  family.name = "projector";
  family.sample_states = [](Rng& rng, std::size_t count) {
    const Index n = uniform_index(rng, 2, 6);
    std::vector<ProjectorState> states;
    for (std::size_t i = 0; i < count; ++i) states.push_back(random_projector(rng, n, uniform_index(rng, 1, n - 1)));
    return states;
  };
  family.sample_parameters = [](Rng& rng, std::size_t count) { return sample_separated_parameters(rng, count, false); };
  family.apply = [tol](Complex l1, const ProjectorState& p1, Complex l2, const ProjectorState& p2) {
    return projector_map(l1, p1, l2, p2, tol);
  };
  family.distance = projector_distance;
  family.encode = [](const ProjectorState& p) { return json::encode_matrix(p.matrix()); };
  return family;
}

MapFamily<Subspace> grassmannian_family(const Tolerances& tol) {
  MapFamily<Subspace> family;
  family.name = "grassmannian";
  family.sample_states = [](Rng& rng, std::size_t count) {
    const Index n = uniform_index(rng, 2, 6);
    std::vector<Subspace> states;
    for (std::size_t i = 0; i < count; ++i) states.push_back(random_subspace(rng, n, uniform_index(rng, 1, n - 1)));
    return states;
  };
  family.sample_parameters = [](Rng& rng, std::size_t count) { return sample_separated_parameters(rng, count, true); };
  family.apply = [tol](Complex l1, const Subspace& a, Complex l2, const Subspace& b) {
    GrassmannianImage image = grassmannian_map(l1.real(), a, l2.real(), b, tol);
    return std::pair{std::move(image.first), std::move(image.second)};
  };
  family.distance = [](const Subspace& a, const Subspace& b) { return max_principal_angle(a, b); };
  family.encode = [](const Subspace& s) { return json::encode(s); };
  return family;
}

VerificationReport check_yang_baxter(FamilyId family, const CampaignConfig& config) {
  switch (family) {
    case FamilyId::vector: return check_yang_baxter(vector_family(), config);
    case FamilyId::projector: return check_yang_baxter(projector_family(), config);
    case FamilyId::grassmannian: return check_yang_baxter(grassmannian_family(), config);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown map family");
}

VerificationReport check_reversibility(FamilyId family, const CampaignConfig& config) {
  switch (family) {
    case FamilyId::vector: return check_reversibility(vector_family(), config);
    case FamilyId::projector: return check_reversibility(projector_family(), config);
    case FamilyId::grassmannian: return check_reversibility(grassmannian_family(), config);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown map family");
}

}  // namespace ybmap
