#include "lmphc/params.hpp"

#include <cmath>

namespace lmphc {

void ModelParams::finalize() {
    if (d < 1 || d > 3) throw ConfigError("dimension must be 1, 2 or 3");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0,1)");
    if (hc_radius < 0.0) throw ConfigError("hc_radius must be >= 0");
    if (hc_radius * gamma >= 1.0) throw ConfigError("hc_radius must be below the Kac range 1/gamma");
    if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
    if (!(a > 0.0 && alpha > a && alpha < 1.0)) throw ConfigError("need 0 < a < alpha < 1");
    if (quad_factor < 2) throw ConfigError("quad_factor must be >= 2");
    if (kernel.normalization <= 0.0) throw ConfigError("kernel normalization must be positive");

    kac_range = 1.0 / gamma;
    ell_minus = std::pow(gamma, -(1.0 - alpha));
    ell_ratio = std::max(1, static_cast<int>(std::lround(std::pow(gamma, -2.0 * alpha))));
    ell_plus = ell_ratio * ell_minus;
    zeta = std::pow(gamma, a);
    epsilon = hc_radius > 0.0 ? ball_volume(d, hc_radius) : 0.0;
}

ModelParams ModelParams::make(int d, double gamma, double hc_radius, double beta,
                              double lambda, double alpha, double a, int quad_factor) {
    ModelParams p;
    p.d = d;
    p.gamma = gamma;
    p.hc_radius = hc_radius;
    p.beta = beta;
    p.lambda = lambda;
    p.alpha = alpha;
    p.a = a;
    p.quad_factor = quad_factor;
    p.finalize();
    return p;
}

} // namespace lmphc
