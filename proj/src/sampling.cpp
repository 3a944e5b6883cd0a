#include "ybmap/sampling.hpp"

#include <numbers>

namespace ybmap {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), stream};
  return Rng(seq);
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Matrix complex_gaussian_matrix(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = complex_gaussian(rng);
  return m;
}

Index uniform_index(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

std::vector<Complex> sample_separated_parameters(Rng& rng, std::size_t count, bool real) {
  std::uniform_real_distribution<double> magnitude(0.5, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution sign;
  std::vector<Complex> out;
  while (out.size() < count) {
    const double r = magnitude(rng);
    const Complex candidate = real ? Complex(sign(rng) ? r : -r, 0.0) : std::polar(r, phase(rng));
    bool separated = true;
    for (const Complex& l : out) {
      if (std::abs(candidate - l) < 0.1 || std::abs(candidate + l) < 0.1) separated = false;
    }
    if (separated) out.push_back(candidate);
  }
  return out;
}

Subspace random_subspace(Rng& rng, Index n, Index k) {
  while (true) {
    try {
      return Subspace::from_basis(complex_gaussian_matrix(rng, n, k));
    } catch (const Error&) {
      // Rank-deficient draw; measure zero, but redraw.
    }
  }
}

ProjectorState random_projector(Rng& rng, Index n, Index k, double min_complementarity) {
  while (true) {
    const Subspace image = random_subspace(rng, n, k);
    const Subspace kernel = random_subspace(rng, n, n - k);
    if (complementarity(image, kernel) >= min_complementarity) return projector_from_subspaces(image, kernel);
  }
}

ProjectorState random_hermitian_projector(Rng& rng, Index n, Index k) {
  return orthogonal_projector(random_subspace(rng, n, k));
}

Polarization random_polarization(Rng& rng, Index d, Complex lambda, double min_pairing) {
  while (true) {
    Vec xi(ColumnVector(complex_gaussian_matrix(rng, d, 1)));
    Covec eta(ColumnVector(complex_gaussian_matrix(rng, d, 1)));
    if (std::abs(pairing(xi, eta)) >= min_pairing * xi.values().norm() * eta.values().norm()) {
      return Polarization{std::move(xi), std::move(eta), lambda};
    }
  }
}

}  // namespace ybmap
