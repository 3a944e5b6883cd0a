#pragma once

#include <cstdint>
#include <utility>

#include "ybmap/lax.hpp"
#include "ybmap/linalg.hpp"

namespace ybmap {

/// Rank-1 soliton amplitude xi (x) eta / (xi, eta) moving with parameter
/// lambda. Scaling xi or eta does not change the amplitude.
struct Polarization {
  Vec xi;
  Covec eta;
  Complex lambda;
};

/// Throws DegeneratePairing / InvalidArgument if the polarization is unusable.
void validate(const Polarization& p, const Tolerances& tol = {});

ProjectorState amplitude(const Polarization& p, const Tolerances& tol = {});

/// The two-soliton polarization map R(l1, l2)(x1, x2) = (x1~, x2~):
///
///     xi1~  = xi1  + 2 l2 (xi1, eta2) / ((l1 - l2)(xi2, eta2)) xi2
///     eta1~ = eta1 + 2 l2 (xi2, eta1) / ((l1 - l2)(xi2, eta2)) eta2
///     xi2~  = xi2  + 2 l1 (xi2, eta1) / ((l2 - l1)(xi1, eta1)) xi1
///     eta2~ = eta2 + 2 l1 (xi1, eta2) / ((l2 - l1)(xi1, eta1)) eta1
///
/// Each output keeps its own lambda.
std::pair<Polarization, Polarization> vector_soliton_map(const Polarization& first, const Polarization& second,
                                                         const Tolerances& tol = {});

enum class Canonicalize { yes, no };

/// The projector map: kernels and images are updated by
///
///     K1~ = (I - 2 l2/(l1 + l2) P2) K1      L1~ = (I + 2 l2/(l1 - l2) P2) L1
///     K2~ = (I - 2 l1/(l1 + l2) P1) K2      L2~ = (I + 2 l1/(l2 - l1) P1) L2
///
/// and the projectors are rebuilt from the new (image, kernel) pairs. Ranks
/// may differ between the two inputs and are preserved.
///
/// With Canonicalize::yes, outputs that came from Hermitian inputs under real
/// parameters are snapped to the orthogonal projector on their image.
std::pair<ProjectorState, ProjectorState> projector_map(Complex lambda1, const ProjectorState& p1, Complex lambda2,
                                                        const ProjectorState& p2, const Tolerances& tol = {},
                                                        Canonicalize canonicalize = Canonicalize::yes);

struct GrassmannianImage {
  Subspace first;
  Subspace second;
  ProjectorState first_projector;
  ProjectorState second_projector;
};

/// The map on Grassmannians for real parameters, P_i the orthogonal
/// projector onto L_i:
///
///     L1~ = (I + 2 l2/(l1 - l2) P2) L1,   L2~ = (I + 2 l1/(l2 - l1) P1) L2.
GrassmannianImage grassmannian_map(double lambda1, const Subspace& l1, double lambda2, const Subspace& l2,
                                   const Tolerances& tol = {});

/// A map application together with its refactorization certificate.
template <class State>
struct MapResult {
  State first;
  State second;
  Complex lambda1;
  Complex lambda2;
  /// Max over the zeta grid of the relative refactorization residual.
  double residual = 0.0;
  /// Largest ||P||_2 among the outputs; large values flag near-loss of
  /// complementarity.
  double max_projector_norm = 0.0;
};

struct CertificateOptions {
  std::size_t zeta_samples = 16;
  std::uint64_t seed = 0;
};

MapResult<Polarization> collide(const Polarization& first, const Polarization& second,
                                const CertificateOptions& options = {}, const Tolerances& tol = {});

MapResult<ProjectorState> collide(Complex lambda1, const ProjectorState& p1, Complex lambda2,
                                  const ProjectorState& p2, const CertificateOptions& options = {},
                                  const Tolerances& tol = {});

MapResult<Subspace> collide(double lambda1, const Subspace& l1, double lambda2, const Subspace& l2,
                            const CertificateOptions& options = {}, const Tolerances& tol = {});

}  // namespace ybmap
