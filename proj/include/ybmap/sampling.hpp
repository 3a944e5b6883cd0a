#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ybmap/linalg.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap {

using Rng = std::mt19937_64;

/// Independent generator for one trial of one campaign stream, so results do
/// not depend on the order trials run in.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream);

Complex complex_gaussian(Rng& rng);
Matrix complex_gaussian_matrix(Rng& rng, Index rows, Index cols);

/// Parameters with |lambda_i| in [0.5, 2] and |lambda_i -+ lambda_j| >= 0.1
/// pairwise. Real samples get a random sign; complex ones a random phase.
std::vector<Complex> sample_separated_parameters(Rng& rng, std::size_t count, bool real);

/// Random rank-k projector whose image and kernel have complementarity of at
/// least `min_complementarity` (see ybmap::complementarity).
ProjectorState random_projector(Rng& rng, Index n, Index k, double min_complementarity = 0.3);

ProjectorState random_hermitian_projector(Rng& rng, Index n, Index k);

Subspace random_subspace(Rng& rng, Index n, Index k);

/// Random (xi, eta) with |(xi, eta)| >= min_pairing * ||xi|| ||eta||.
Polarization random_polarization(Rng& rng, Index d, Complex lambda, double min_pairing = 0.3);

Index uniform_index(Rng& rng, Index lo, Index hi);

}  // namespace ybmap
