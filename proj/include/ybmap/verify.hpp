#pragma once

// Randomized campaigns for the parameter-dependent Yang-Baxter relation
//
//     R12(l1,l2) R13(l1,l3) R23(l2,l3) = R23(l2,l3) R13(l1,l3) R12(l1,l2)
//
// and reversibility R21(l2,l1) R12(l1,l2) = Id, for any map family.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ybmap/parallel.hpp"
#include "ybmap/sampling.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap {

template <class State>
struct MapFamily {
  std::string name;
  /// Draws `count` states of one shared ambient dimension.
  std::function<std::vector<State>(Rng&, std::size_t count)> sample_states;
  std::function<std::vector<Complex>(Rng&, std::size_t count)> sample_parameters;
  /// R(l1, l2)(x1, x2).
  std::function<std::pair<State, State>(Complex, const State&, Complex, const State&)> apply;
  /// A metric on canonical forms; zero iff the states coincide.
  std::function<double(const State&, const State&)> distance;
  std::function<nlohmann::json(const State&)> encode;
};

struct CampaignConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct TrialFailure {
  std::size_t trial = 0;
  /// Empty when the trial raised an error instead of producing states.
  std::optional<double> deviation;
  std::string error;
  nlohmann::json inputs;
};

struct VerificationReport {
  std::string family;
  std::string check;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  /// Max over trials that completed.
  double max_deviation = 0.0;
  /// Sorted by trial index.
  std::vector<TrialFailure> failures;
  double runtime_ms = 0.0;

  bool passed() const noexcept { return failures.empty() && max_deviation <= tol; }
};

/// runtime_ms is left out unless asked for, so reports of identical
/// campaigns are byte-identical.
nlohmann::json to_json(const VerificationReport& report, bool include_runtime = false);

/// R_ij: acts as R(l_i, l_j) on the i-th and j-th entries, in that order.
/// With i > j this is R21 = P R P on the pair.
template <class State>
void apply_pair(const MapFamily<State>& family, std::vector<State>& states, const std::vector<Complex>& lambdas,
                std::size_t i, std::size_t j) {
  auto [first, second] = family.apply(lambdas[i], states[i], lambdas[j], states[j]);
  states[i] = std::move(first);
  states[j] = std::move(second);
}

namespace detail {

struct TrialOutcome {
  std::optional<double> deviation;
  std::string error;
  nlohmann::json inputs;
};

template <class State>
nlohmann::json encode_inputs(const MapFamily<State>& family, const std::vector<State>& states,
                             const std::vector<Complex>& lambdas) {
  nlohmann::json encoded_states = nlohmann::json::array();
  for (const State& s : states) encoded_states.push_back(family.encode(s));
  nlohmann::json encoded_lambdas = nlohmann::json::array();
  for (const Complex& l : lambdas) encoded_lambdas.push_back(nlohmann::json::array({l.real(), l.imag()}));
  return nlohmann::json{{"states", std::move(encoded_states)}, {"lambdas", std::move(encoded_lambdas)}};
}

template <class State, class Trial>
VerificationReport run_campaign(const MapFamily<State>& family, const CampaignConfig& config, std::string check,
                                std::uint32_t stream, std::size_t arity, Trial&& trial) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng = trial_rng(config.seed, t, stream);
    std::vector<State> states = family.sample_states(rng, arity);
    std::vector<Complex> lambdas = family.sample_parameters(rng, arity);
    TrialOutcome& out = outcomes[t];
    try {
      out.deviation = trial(states, lambdas);
    } catch (const Error& e) {
      out.error = e.what();
    }
    if (!out.deviation || !(*out.deviation <= config.tol)) out.inputs = encode_inputs(family, states, lambdas);
  });

  VerificationReport report;
  report.family = family.name;
  report.check = std::move(check);
  report.trials = config.trials;
  report.seed = config.seed;
  report.tol = config.tol;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    TrialOutcome& out = outcomes[t];
    if (out.deviation && *out.deviation <= config.tol) {
      report.max_deviation = std::max(report.max_deviation, *out.deviation);
      continue;
    }
    if (out.deviation && !std::isnan(*out.deviation)) report.max_deviation = std::max(report.max_deviation, *out.deviation);
    report.failures.push_back(TrialFailure{t, out.deviation, std::move(out.error), std::move(out.inputs)});
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

template <class State>
VerificationReport check_yang_baxter(const MapFamily<State>& family, const CampaignConfig& config) {
  return detail::run_campaign(family, config, "yang_baxter", 1, 3,
                              [&](const std::vector<State>& states, const std::vector<Complex>& lambdas) {
                                // Compositions act right to left: R23 is applied first on the left side.
                                std::vector<State> lhs = states;
                                apply_pair(family, lhs, lambdas, 1, 2);
                                apply_pair(family, lhs, lambdas, 0, 2);
                                apply_pair(family, lhs, lambdas, 0, 1);
                                std::vector<State> rhs = states;
                                apply_pair(family, rhs, lambdas, 0, 1);
                                apply_pair(family, rhs, lambdas, 0, 2);
                                apply_pair(family, rhs, lambdas, 1, 2);
                                double worst = 0.0;
                                for (std::size_t i = 0; i < 3; ++i) {
                                  worst = std::max(worst, family.distance(lhs[i], rhs[i]));
                                }
                                return worst;
                              });
}

template <class State>
VerificationReport check_reversibility(const MapFamily<State>& family, const CampaignConfig& config) {
  return detail::run_campaign(family, config, "reversibility", 2, 2,
                              [&](const std::vector<State>& states, const std::vector<Complex>& lambdas) {
                                std::vector<State> pair = states;
                                apply_pair(family, pair, lambdas, 0, 1);
                                apply_pair(family, pair, lambdas, 1, 0);
                                return std::max(family.distance(pair[0], states[0]),
                                                family.distance(pair[1], states[1]));
                              });
}

enum class FamilyId { vector, projector, grassmannian };

std::optional<FamilyId> parse_family(std::string_view name);
std::string_view to_string(FamilyId id);

/// Polarizations in d in {2,3,4}, complex parameters. Distance: angle between
/// the xi lines plus angle between the eta lines.
MapFamily<Polarization> vector_family(const Tolerances& tol = {});

/// Projectors in n in {2..6} with independently drawn ranks in [1, n-1] and
/// complex parameters. Distance: max principal angle between images plus
/// max principal angle between kernels.
MapFamily<ProjectorState> projector_family(const Tolerances& tol = {});

/// Subspaces in n in {2..6}, dims in [1, n-1], real parameters. Distance: max
/// principal angle.
MapFamily<Subspace> grassmannian_family(const Tolerances& tol = {});

VerificationReport check_yang_baxter(FamilyId family, const CampaignConfig& config);
VerificationReport check_reversibility(FamilyId family, const CampaignConfig& config);

double projective_distance(const Polarization& a, const Polarization& b);
double projector_distance(const ProjectorState& a, const ProjectorState& b);

}  // namespace ybmap
