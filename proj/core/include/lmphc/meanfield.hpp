// Mean-field thermodynamics of the model: free energy phi_{beta,R}, the
// fixed-point map K, coexistence, spinodals, critical temperatures and the
// epsilon-expansion of beta_c.
#pragma once

#include <optional>
#include <utility>

#include "lmphc/common.hpp"

namespace lmphc {

struct FreeEnergySpec {
    double beta = 1.0;
    double hc_radius = 0.0;
    int d = 1;
    int virial_order = 2; // 2 or 3
    std::optional<double> lambda;

    double epsilon() const { return hc_radius > 0.0 ? ball_volume(d, hc_radius) : 0.0; }
    double b2() const { return 0.5 * epsilon(); }
    // Third pressure-virial coefficient of the hard-core reference fluid;
    // the free-energy series carries b3()/2 * rho^3.
    double b3() const;
    // Close-packing style guard on the density range.
    double rho_guard() const;

    void validate() const;
};

struct MeanFieldSolution {
    double beta = 0.0;
    double hc_radius = 0.0;
    double lambda_coex = 0.0;
    double rho_minus = 0.0;
    double rho_plus = 0.0;
    double rho_zero = 0.0;
    double s_minus = 0.0;
    double s_plus = 0.0;
    double kprime_minus = 0.0;
    double kprime_plus = 0.0;
};

// Free energy phi_{beta,R}(rho) (minus lambda*rho when spec.lambda is set) and
// its derivatives in rho.
double phi(double rho, const FreeEnergySpec& spec);
double phi_prime(double rho, const FreeEnergySpec& spec);
double phi_second(double rho, const FreeEnergySpec& spec);
double phi_third(double rho, const FreeEnergySpec& spec);

// Fixed-point map K_{beta,lambda,R}(rho) and its analytic derivative.
double k_map(double rho, const FreeEnergySpec& spec, double lambda);
double k_map_prime(double rho, const FreeEnergySpec& spec, double lambda);

// Coexistence at beta > beta_c(R): equal-minima chemical potential, the two
// minimizers, local maximum, spinodals, and K' at the minimizers.
MeanFieldSolution find_coexistence(const FreeEnergySpec& spec);

// Smallest beta at which phi'' develops a double root; R=0 gives (3/2)^{3/2}.
double find_beta_c(const FreeEnergySpec& spec);

struct BetaZeroResult {
    double beta0 = 0.0;
    bool capped = false; // scan cap reached without finding K' = -1
};

// Supremum of beta with K'(rho_{beta,+-}) > -1 along the coexistence line.
BetaZeroResult find_beta_0(const FreeEnergySpec& spec, double beta_cap = 16.0);

// The two roots of phi'' = 0 for beta > beta_c.
std::pair<double, double> inflection_points(const FreeEnergySpec& spec);

// Bracketing bisection; f(lo) and f(hi) must differ in sign. Deterministic,
// ~1e-14 relative. Used across the module and by test oracles.
template <typename F>
double bisect(double lo, double hi, F&& f) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericalError("bisect: endpoints do not bracket a root");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace lmphc
