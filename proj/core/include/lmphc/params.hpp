// Model parameters: physical constants, Kac kernel spec and the derived
// multi-scale quantities (ell_-, ell_+, zeta, epsilon).
#pragma once

#include <string>

#include "lmphc/common.hpp"

namespace lmphc {

enum class KernelKind {
    polynomial,    // J(u) = C_d (1-|u|^2)^3 on the unit ball, normalized to 1
    cell_constant, // polynomial kernel averaged over ell_- cells (test kernel)
};

struct KernelSpec {
    KernelKind kind = KernelKind::polynomial;
    double normalization = 1.0; // target integral of J over R^d
};

struct ModelParams {
    // Physical and scale inputs.
    int d = 1;                   // spatial dimension, 1..3
    double gamma = 0.2;          // Kac inverse range, 0 < gamma < 1
    double hc_radius = 0.0;      // hard-core exclusion distance R, R < 1/gamma
    double beta = 1.0;           // inverse temperature
    double lambda = 0.0;         // chemical potential
    double alpha = 0.5;          // scale exponent, 0 < a < alpha < 1
    double a = 0.25;             // accuracy exponent
    int quad_factor = 8;         // quadrature nodes per Kac range
    KernelSpec kernel{};
    bool kac_enabled = true;     // false: drop the Kac functional, keep -lambda|q| and hard core

    // Derived scales, filled by finalize().
    double kac_range = 0.0;      // gamma^{-1}
    double ell_minus = 0.0;      // gamma^{-(1-alpha)}
    double ell_plus = 0.0;       // snapped to ell_ratio * ell_minus
    int ell_ratio = 1;           // round(gamma^{-2 alpha}), >= 1
    double zeta = 0.0;           // gamma^a
    double epsilon = 0.0;        // V_d(R), exclusion volume

    // Validates inputs and computes derived scales. Throws ConfigError.
    void finalize();

    bool finalized() const { return kac_range > 0.0; }

    static ModelParams make(int d, double gamma, double hc_radius, double beta,
                            double lambda, double alpha = 0.5, double a = 0.25,
                            int quad_factor = 8);
};

} // namespace lmphc
