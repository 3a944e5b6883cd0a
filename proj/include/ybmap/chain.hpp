#pragma once

#include <vector>

#include "ybmap/lax.hpp"
#include "ybmap/linalg.hpp"

namespace ybmap {

struct ChainSite {
  ProjectorState projector;
  Complex lambda;
};

/// Ordered sites sharing one ambient dimension. The monodromy is
///
///     M(zeta) = A(P1, l1; zeta) A(P2, l2; zeta) ... A(PN, lN; zeta).
struct Chain {
  Index ambient_dim = 0;
  std::vector<ChainSite> sites;
};

/// Throws InvalidArgument on dimension mismatch or a zero lambda.
void validate(const Chain& chain);

Matrix monodromy(const Chain& chain, Complex zeta);

/// One transfer step: the first site is swept through the chain. With
/// y = P1, for k = 2..N the product A(y, l1) A(Pk, lk) is refactorized as
/// A(Pk~, lk) A(y', l1) and y advances to y'. The result is
/// (y_final, P2~, ..., PN~) with the lambdas unchanged, and
///
///     M~(zeta) = A(y_final, l1) M(zeta) A(y_final, l1)^-1,
///
/// so the spectrum of the monodromy is conserved. Errors name the site.
Chain transfer_map(const Chain& chain, const Tolerances& tol = {});

/// Monic characteristic-polynomial coefficients of M(zeta_j), one row per
/// grid point, highest degree first.
struct InvariantVector {
  std::vector<Complex> zetas;
  std::vector<ColumnVector> coefficients;
};

InvariantVector spectral_invariants(const Chain& chain, const ZetaGrid& grid);

/// max over samples j and coefficients i of |b_ji - a_ji| / (1 + max_i |a_ji|).
double invariant_drift(const InvariantVector& reference, const InvariantVector& current);

/// prod_i ((zeta + l_i) / (zeta - l_i))^{rank P_i}.
Complex determinant_formula(const Chain& chain, Complex zeta);

struct StepRecord {
  std::size_t step = 0;
  /// Invariant drift relative to step 0.
  double max_drift = 0.0;
  /// max_j |det M(zeta_j) - formula| / (1 + |formula|).
  double det_residual = 0.0;
  double max_projector_norm = 0.0;
};

struct Trajectory {
  InvariantVector initial;
  std::vector<StepRecord> records;  // records[0] is the input chain
  Chain final_chain;

  double max_drift() const;
};

/// Applies transfer_map `steps` times. Errors name the step.
Trajectory iterate(const Chain& chain, std::size_t steps, const ZetaGrid& grid, const Tolerances& tol = {});

/// Parameters of every site, e.g. for building a ZetaGrid.
std::vector<Complex> parameters(const Chain& chain);

}  // namespace ybmap
