#include "ybmap/chain.hpp"

#include <algorithm>
#include <string>

#include "ybmap/yb_maps.hpp"

namespace ybmap {

void validate(const Chain& chain) {
  if (chain.ambient_dim < 1) throw Error(ErrorKind::InvalidArgument, "chain ambient_dim must be >= 1");
  for (std::size_t i = 0; i < chain.sites.size(); ++i) {
    const ChainSite& site = chain.sites[i];
    if (site.projector.ambient_dim() != chain.ambient_dim) {
      throw Error(ErrorKind::InvalidArgument, "site " + std::to_string(i + 1) + ": projector dimension mismatch");
    }
    if (site.lambda == Complex(0.0) || !is_finite(site.lambda)) {
      throw Error(ErrorKind::InvalidArgument, "site " + std::to_string(i + 1) + ": lambda must be finite and nonzero");
    }
  }
}

std::vector<Complex> parameters(const Chain& chain) {
  std::vector<Complex> out;
  out.reserve(chain.sites.size());
  for (const ChainSite& s : chain.sites) out.push_back(s.lambda);
  return out;
}

Matrix monodromy(const Chain& chain, Complex zeta) {
  Matrix m = Matrix::Identity(chain.ambient_dim, chain.ambient_dim);
  for (const ChainSite& site : chain.sites) m = m * lax_eval(LaxSpec{site.projector, site.lambda}, zeta);
  return m;
}

Chain transfer_map(const Chain& chain, const Tolerances& tol) {
  validate(chain);
  if (chain.sites.size() <= 1) return chain;
  const Complex carrier_lambda = chain.sites.front().lambda;
  ProjectorState carrier = chain.sites.front().projector;

  Chain next{chain.ambient_dim, {}};
  next.sites.reserve(chain.sites.size());
  next.sites.push_back(chain.sites.front());  // placeholder for y_final
  for (std::size_t k = 1; k < chain.sites.size(); ++k) {
    const ChainSite& site = chain.sites[k];
    try {
      auto [moved_carrier, updated] = projector_map(carrier_lambda, carrier, site.lambda, site.projector, tol);
      carrier = std::move(moved_carrier);
      next.sites.push_back(ChainSite{std::move(updated), site.lambda});
    } catch (const Error& e) {
      throw e.with_context("site " + std::to_string(k + 1) + ": ");
    }
  }
  next.sites.front() = ChainSite{std::move(carrier), carrier_lambda};
  return next;
}

InvariantVector spectral_invariants(const Chain& chain, const ZetaGrid& grid) {
  InvariantVector out;
  out.zetas = grid.points();
  out.coefficients.reserve(grid.size());
  for (const Complex& zeta : grid.points()) out.coefficients.push_back(characteristic_polynomial(monodromy(chain, zeta)));
  return out;
}

double invariant_drift(const InvariantVector& reference, const InvariantVector& current) {
  if (reference.coefficients.size() != current.coefficients.size()) {
    throw Error(ErrorKind::InvalidArgument, "invariant vectors sampled on different grids");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < reference.coefficients.size(); ++j) {
    const ColumnVector& a = reference.coefficients[j];
    const ColumnVector& b = current.coefficients[j];
    const double scale = 1.0 + a.cwiseAbs().maxCoeff();
    worst = std::max(worst, (b - a).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

Complex determinant_formula(const Chain& chain, Complex zeta) {
  Complex det = 1.0;
  for (const ChainSite& site : chain.sites) {
    det *= std::pow((zeta + site.lambda) / (zeta - site.lambda), static_cast<int>(site.projector.rank()));
  }
  return det;
}

namespace {

StepRecord measure(const Chain& chain, std::size_t step, const InvariantVector& reference, const ZetaGrid& grid) {
  StepRecord record;
  record.step = step;
  const InvariantVector current = spectral_invariants(chain, grid);
  record.max_drift = invariant_drift(reference, current);
  const Index n = chain.ambient_dim;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    // The constant coefficient of det(sI - M) is (-1)^n det M.
    const Complex det = (n % 2 == 0 ? 1.0 : -1.0) * current.coefficients[j](n);
    const Complex expected = determinant_formula(chain, grid.points()[j]);
    record.det_residual = std::max(record.det_residual, std::abs(det - expected) / (1.0 + std::abs(expected)));
  }
  for (const ChainSite& site : chain.sites) {
    record.max_projector_norm = std::max(record.max_projector_norm, site.projector.spectral_norm());
  }
  return record;
}

}  // namespace

double Trajectory::max_drift() const {
  double worst = 0.0;
  for (const StepRecord& r : records) worst = std::max(worst, r.max_drift);
  return worst;
}

Trajectory iterate(const Chain& chain, std::size_t steps, const ZetaGrid& grid, const Tolerances& tol) {
  validate(chain);
  Trajectory trajectory;
  trajectory.initial = spectral_invariants(chain, grid);
  trajectory.records.push_back(measure(chain, 0, trajectory.initial, grid));
  Chain current = chain;
  for (std::size_t step = 1; step <= steps; ++step) {
    try {
      current = transfer_map(current, tol);
    } catch (const Error& e) {
      throw e.with_context("step " + std::to_string(step) + ", ");
    }
    trajectory.records.push_back(measure(current, step, trajectory.initial, grid));
  }
  trajectory.final_chain = std::move(current);
  return trajectory;
}

}  // namespace ybmap
