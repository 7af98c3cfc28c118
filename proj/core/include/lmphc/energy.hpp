// Energy evaluations: the functional form int e_lambda(rho_gamma) dr, the
// exact multibody expansion, relative and interaction energies, and the
// domain-aware energy used by the sampler.
#pragma once

#include <vector>

#include "lmphc/common.hpp"
#include "lmphc/configuration.hpp"
#include "lmphc/density_field.hpp"
#include "lmphc/params.hpp"

namespace lmphc {

// e_lambda(rho) = -lambda rho - rho^2/2 + rho^4/24.
inline double e_lambda(double rho, double lambda) {
    return -lambda * rho - 0.5 * rho * rho + rho * rho * rho * rho / 24.0;
}

// The non-linear part of e_lambda; the -lambda*rho term integrates exactly to
// -lambda |q| and is handled separately everywhere.
inline double e24(double rho) {
    const double r2 = rho * rho;
    return -0.5 * r2 + r2 * r2 / 24.0;
}

// Free-space energies of finite configurations (no domain). The multibody
// form expands the functional identically, so it sums over all index tuples,
// coincidences included.
double energy_functional(const std::vector<Point>& q, const ModelParams& params);
double energy_multibody(const std::vector<Point>& q, const ModelParams& params);

// H(q | q_bar) = H(q + q_bar) - H(q_bar). Returns +infinity when the union
// violates the hard core across q and q_bar; throws NumericalError when q or
// q_bar is inadmissible on its own.
double relative_energy(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                       const ModelParams& params);

// U(q, q_bar) = H(q + q_bar) - H(q) - H(q_bar); same error contract.
double interaction_energy(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                          const ModelParams& params);

// Distinct-tuple multibody relative energy (no coincident-index terms); this
// is the convention of the coarse-grained pipeline (h0 / Delta-H / diagrams).
double relative_energy_distinct(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                                const ModelParams& params);

// Domain-aware energy: torus H(q), or box H(q | boundary). Builds a fresh
// density field per call; the sampler keeps its own incremental field.
double domain_energy(const ParticleConfiguration& q, const ModelParams& params);

// Pieces shared with the sampler: integral of e24 over a prepared field,
// relative to a baseline field (nullptr = zero baseline).
double field_e24_integral(const DensityField& field, const DensityField* baseline = nullptr);

bool points_admissible(const std::vector<Point>& q, const ModelParams& params);

} // namespace lmphc
