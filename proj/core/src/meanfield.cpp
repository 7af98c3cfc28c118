#include "lmphc/meanfield.hpp"

#include <algorithm>
#include <cmath>

#include "lmphc/energy.hpp"

namespace lmphc {

namespace {

// e_lambda derivatives at lambda = 0.
double e0_prime(double rho) { return -rho + rho * rho * rho / 6.0; }
double e0_second(double rho) { return -1.0 + 0.5 * rho * rho; }

// Free-energy cubic coefficient c3 = B3/2 (the series is
// beta f_hc = rho(log rho - 1) + B2 rho^2 + c3 rho^3).
double c3_of(const FreeEnergySpec& s) {
    if (s.virial_order < 3) return 0.0;
    return 0.5 * s.b3();
}

void check_rho(double rho, const FreeEnergySpec& s, const char* what) {
    if (!(rho > 0.0)) throw NumericalError(std::string(what) + ": rho must be positive");
    if (rho > s.rho_guard())
        throw NumericalError(std::string(what) + ": rho beyond the packing guard");
}

} // namespace

double FreeEnergySpec::b3() const {
    // Pressure-virial B3 of the hard-core reference: B3 = c_d * B2^2.
    static constexpr double c_d[4] = {0.0, 1.0, 0.7820044216, 0.625};
    const double B2 = b2();
    return c_d[d] * B2 * B2;
}

double FreeEnergySpec::rho_guard() const {
    const double eps = epsilon();
    if (eps <= 0.0) return 1.0e3;
    return std::min(1.0e3, std::max(3.0, 0.8 / std::pow(eps, 1.0 / d)));
}

void FreeEnergySpec::validate() const {
    if (d < 1 || d > 3) throw ConfigError("FreeEnergySpec: dimension must be 1..3");
    if (!(beta > 0.0)) throw ConfigError("FreeEnergySpec: beta must be positive");
    if (hc_radius < 0.0) throw ConfigError("FreeEnergySpec: hc_radius must be >= 0");
    if (virial_order != 2 && virial_order != 3)
        throw ConfigError("FreeEnergySpec: virial_order must be 2 or 3");
}

double phi(double rho, const FreeEnergySpec& s) {
    check_rho(rho, s, "phi");
    const double c3 = c3_of(s);
    const double fhc = (rho * (std::log(rho) - 1.0) + s.b2() * rho * rho + c3 * rho * rho * rho) / s.beta;
    double v = e_lambda(rho, 0.0) + fhc;
    if (s.lambda) v -= *s.lambda * rho;
    return v;
}

double phi_prime(double rho, const FreeEnergySpec& s) {
    check_rho(rho, s, "phi_prime");
    const double c3 = c3_of(s);
    double v = e0_prime(rho) + (std::log(rho) + 2.0 * s.b2() * rho + 3.0 * c3 * rho * rho) / s.beta;
    if (s.lambda) v -= *s.lambda;
    return v;
}

double phi_second(double rho, const FreeEnergySpec& s) {
    check_rho(rho, s, "phi_second");
    const double c3 = c3_of(s);
    return e0_second(rho) + (1.0 / rho + 2.0 * s.b2() + 6.0 * c3 * rho) / s.beta;
}

double phi_third(double rho, const FreeEnergySpec& s) {
    check_rho(rho, s, "phi_third");
    const double c3 = c3_of(s);
    return rho + (-1.0 / (rho * rho) + 6.0 * c3) / s.beta;
}

double k_map(double rho, const FreeEnergySpec& s, double lambda) {
    if (!(rho > 0.0)) throw NumericalError("k_map: rho must be positive");
    const double c3 = c3_of(s);
    const double beta_psi_prime = 2.0 * s.b2() * rho + 3.0 * c3 * rho * rho;
    return std::exp(-s.beta * (e0_prime(rho) - lambda) - beta_psi_prime);
}

double k_map_prime(double rho, const FreeEnergySpec& s, double lambda) {
    const double c3 = c3_of(s);
    const double beta_psi_second = 2.0 * s.b2() + 6.0 * c3 * rho;
    return k_map(rho, s, lambda) * (-s.beta * e0_second(rho) - beta_psi_second);
}

std::pair<double, double> inflection_points(const FreeEnergySpec& s) {
    s.validate();
    const double guard = s.rho_guard();
    // Minimum of phi'' sits at the root of phi''' (phi'''' > 0 on the range).
    const double rho_star = bisect(1e-8, guard, [&](double r) { return phi_third(r, s); });
    if (phi_second(rho_star, s) >= 0.0)
        throw NumericalError("inflection_points: beta <= beta_c, phi is convex");
    const double sm = bisect(1e-9, rho_star, [&](double r) { return phi_second(r, s); });
    const double sp = bisect(rho_star, guard, [&](double r) { return phi_second(r, s); });
    return {sm, sp};
}

double find_beta_c(const FreeEnergySpec& spec) {
    FreeEnergySpec s = spec;
    s.lambda.reset();
    s.validate();
    if (s.epsilon() > 0.1) throw ConfigError("find_beta_c: epsilon guard (<= 0.1) exceeded");

    auto min_phi_second = [&](double beta) {
        FreeEnergySpec t = s;
        t.beta = beta;
        const double rho_star = bisect(1e-8, t.rho_guard(), [&](double r) { return phi_third(r, t); });
        return phi_second(rho_star, t);
    };
    double lo = 0.5, hi = 4.0;
    while (min_phi_second(hi) > 0.0 && hi < 64.0) hi *= 1.5;
    while (min_phi_second(lo) < 0.0 && lo > 1e-3) lo *= 0.5;
    return bisect(lo, hi, min_phi_second);
}

MeanFieldSolution find_coexistence(const FreeEnergySpec& spec) {
    FreeEnergySpec s = spec;
    s.lambda.reset();
    s.validate();

    const double beta_c = find_beta_c(s);
    if (s.beta <= beta_c)
        throw NumericalError("find_coexistence: beta <= beta_c, no phase transition");

    const auto [sm, sp] = inflection_points(s);
    const double guard = s.rho_guard();

    auto rho_low = [&](double lam) {
        return bisect(1e-12, sm, [&](double r) { return phi_prime(r, s) - lam; });
    };
    auto rho_high = [&](double lam) {
        return bisect(sp, guard, [&](double r) { return phi_prime(r, s) - lam; });
    };
    auto gap = [&](double lam) {
        const double rm = rho_low(lam), rp = rho_high(lam);
        return (phi(rp, s) - lam * rp) - (phi(rm, s) - lam * rm);
    };

    // Both minima exist exactly for lambda in [phi'(s_+), phi'(s_-)]; the gap
    // is strictly decreasing there (d gap / d lambda = rho_- - rho_+ < 0).
    const double lam_lo = phi_prime(sp, s), lam_hi = phi_prime(sm, s);
    const double nudge_lo = 1e-11 * (1.0 + std::abs(lam_lo));
    const double nudge_hi = 1e-11 * (1.0 + std::abs(lam_hi));
    if (!(lam_lo < lam_hi))
        throw NumericalError("find_coexistence: degenerate spinodal bracket");
    double lam = bisect(lam_lo + nudge_lo, lam_hi - nudge_hi, gap);

    // Newton polish on the equal-minima condition.
    for (int it = 0; it < 4; ++it) {
        const double rm = rho_low(lam), rp = rho_high(lam);
        const double g = (phi(rp, s) - lam * rp) - (phi(rm, s) - lam * rm);
        const double dg = rm - rp;
        if (dg == 0.0) break;
        const double next = lam - g / dg;
        if (next <= lam_lo || next >= lam_hi) break;
        lam = next;
    }

    MeanFieldSolution out;
    out.beta = s.beta;
    out.hc_radius = s.hc_radius;
    out.lambda_coex = lam;
    out.rho_minus = rho_low(lam);
    out.rho_plus = rho_high(lam);
    out.rho_zero = bisect(sm, sp, [&](double r) { return phi_prime(r, s) - lam; });
    out.s_minus = sm;
    out.s_plus = sp;
    out.kprime_minus = k_map_prime(out.rho_minus, s, lam);
    out.kprime_plus = k_map_prime(out.rho_plus, s, lam);
    return out;
}

BetaZeroResult find_beta_0(const FreeEnergySpec& spec, double beta_cap) {
    FreeEnergySpec s = spec;
    s.lambda.reset();
    s.validate();
    const double beta_c = find_beta_c(s);

    auto margin = [&](double beta) {
        FreeEnergySpec t = s;
        t.beta = beta;
        const MeanFieldSolution sol = find_coexistence(t);
        return std::min(sol.kprime_minus, sol.kprime_plus) + 1.0;
    };

    // Increasing scan from just above beta_c until K' = -1 is crossed.
    double lo = beta_c * (1.0 + 1e-6);
    double hi = lo;
    const double step = 0.25;
    bool crossed = false;
    while (hi < beta_cap) {
        hi = std::min(beta_cap, hi + step);
        if (margin(hi) <= 0.0) {
            crossed = true;
            break;
        }
        lo = hi;
    }
    if (!crossed) return {beta_cap, true};
    return {bisect(lo, hi, margin), false};
}

} // namespace lmphc
