#include "lmphc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace lmphc {

double kernel_amplitude(int d) {
    // 1 / int_{|u|<1} (1-|u|^2)^3 du
    switch (d) {
        case 1: return 35.0 / 32.0;
        case 2: return 4.0 / M_PI;
        case 3: return 315.0 / (64.0 * M_PI);
        default: throw ConfigError("kernel_amplitude: dimension must be 1, 2 or 3");
    }
}

double unit_kernel(double u2) {
    const double w = 1.0 - u2;
    return w > 0.0 ? w * w * w : 0.0;
}

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

// Integrates f over [a,b] with an n-point Gauss-Legendre rule.
template <typename F>
double gl_integrate(double a, double b, int n, F&& f) {
    if (b <= a) return 0.0;
    const GaussRule& g = gauss_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += g.w[i] * f(mid + half * g.x[i]);
    return s * half;
}

// Antiderivative of t*(1-t^2)^3.
double t_antideriv(double t) {
    const double t2 = t * t;
    return t2 * (0.5 + t2 * (-0.75 + t2 * (0.5 - 0.125 * t2)));
}

double autocorr_1d(double s) {
    return gl_integrate(s - 1.0, 1.0, 16, [s](double x) {
        return unit_kernel(x * x) * unit_kernel((x - s) * (x - s));
    });
}

double autocorr_2d(double s) {
    auto inner = [s](double r) {
        // angular integral of (1 - r^2 - s^2 + 2 r s cos(phi))^3 over the
        // support sector, times the radial weight r.
        const double q = r * r + s * s - 1.0;
        double phimax;
        if (q <= -2.0 * r * s)
            phimax = M_PI; // full circle inside the support
        else if (q >= 2.0 * r * s)
            return 0.0;
        else
            phimax = std::acos(q / (2.0 * r * s));
        const double val = gl_integrate(0.0, phimax, 24, [&](double phi) {
            return unit_kernel(r * r + s * s - 2.0 * r * s * std::cos(phi));
        });
        return 2.0 * r * unit_kernel(r * r) * val;
    };
    const double bp = std::abs(1.0 - s);
    double total = 0.0;
    total += gl_integrate(0.0, std::min(bp, 1.0), 32, inner);
    if (bp < 1.0) total += gl_integrate(bp, 1.0, 32, inner);
    return total;
}

double autocorr_3d(double s) {
    if (s < 1e-9) {
        // 4 pi int r^2 k(r)^2 dr
        return 4.0 * M_PI * gl_integrate(0.0, 1.0, 16, [](double r) {
            const double k = unit_kernel(r * r);
            return r * r * k * k;
        });
    }
    auto inner = [s](double r) {
        const double lo = std::min(1.0, std::abs(r - s));
        const double hi = std::min(1.0, r + s);
        if (hi <= lo) return 0.0;
        return r * unit_kernel(r * r) * (t_antideriv(hi) - t_antideriv(lo));
    };
    // Breakpoints where |r-s| or r+s cross the support edge.
    double bps[4] = {0.0, 1.0, -1.0, -1.0};
    int nb = 2;
    if (s < 1.0 && 1.0 - s > 0.0) bps[nb++] = 1.0 - s;
    if (s > 1.0 && s - 1.0 < 1.0) bps[nb++] = s - 1.0;
    std::sort(bps, bps + nb);
    double total = 0.0;
    for (int i = 0; i + 1 < nb; ++i)
        if (bps[i] >= 0.0) total += gl_integrate(bps[i], bps[i + 1], 20, inner);
    return total * 2.0 * M_PI / s;
}

Point cell_center(const Point& p, double side, int d) {
    Point c{0.0, 0.0, 0.0};
    for (int k = 0; k < d; ++k) c[k] = (std::floor(p[k] / side) + 0.5) * side;
    return c;
}

double poly_kernel_value(double dist2_val, const ModelParams& p) {
    const double u2 = dist2_val * p.gamma * p.gamma;
    if (u2 >= 1.0) return 0.0;
    return std::pow(p.gamma, p.d) * kernel_amplitude(p.d) * p.kernel.normalization *
           unit_kernel(u2);
}

// Lattice sum of products of the cell-sampled kernel; exact for that kernel.
double cell_kernel_product_integral(const std::vector<Point>& pts, const ModelParams& p) {
    const double side = p.ell_minus;
    const double reach = p.kac_range + side;
    Point lo{0, 0, 0}, hi{0, 0, 0};
    long i0[3] = {0, 0, 0}, i1[3] = {0, 0, 0};
    for (int k = 0; k < p.d; ++k) {
        lo[k] = pts[0][k];
        hi[k] = pts[0][k];
        for (const auto& q : pts) {
            lo[k] = std::min(lo[k], q[k]);
            hi[k] = std::max(hi[k], q[k]);
        }
        if (hi[k] - lo[k] > 2.0 * (p.kac_range + side)) return 0.0;
        i0[k] = static_cast<long>(std::floor((hi[k] - reach) / side));
        i1[k] = static_cast<long>(std::floor((lo[k] + reach) / side)) + 1;
    }
    double cellvol = 1.0;
    for (int k = 0; k < p.d; ++k) cellvol *= side;

    double total = 0.0;
    Point r{0, 0, 0};
    for (long ix = i0[0]; ix <= i1[0]; ++ix) {
        r[0] = (ix + 0.5) * side;
        for (long iy = (p.d > 1 ? i0[1] : 0); iy <= (p.d > 1 ? i1[1] : 0); ++iy) {
            if (p.d > 1) r[1] = (iy + 0.5) * side;
            for (long iz = (p.d > 2 ? i0[2] : 0); iz <= (p.d > 2 ? i1[2] : 0); ++iz) {
                if (p.d > 2) r[2] = (iz + 0.5) * side;
                double prod = 1.0;
                for (const auto& q : pts) {
                    prod *= kac_kernel(r, q, p);
                    if (prod == 0.0) break;
                }
                total += prod;
            }
        }
    }
    return total * cellvol;
}

} // namespace

double kac_kernel(const Point& r, const Point& r_prime, const ModelParams& params) {
    if (params.kernel.kind == KernelKind::cell_constant) {
        const Point cr = cell_center(r, params.ell_minus, params.d);
        const Point cq = cell_center(r_prime, params.ell_minus, params.d);
        return poly_kernel_value(dist2(cr, cq, params.d), params);
    }
    return poly_kernel_value(dist2(r, r_prime, params.d), params);
}

double unit_kernel_autocorrelation(int d, double s) {
    if (s >= 2.0) return 0.0;
    s = std::max(s, 0.0);
    switch (d) {
        case 1: return autocorr_1d(s);
        case 2: return autocorr_2d(s);
        case 3: return autocorr_3d(s);
        default: throw ConfigError("unit_kernel_autocorrelation: bad dimension");
    }
}

double pair_kernel_j2(const Point& a, const Point& b, const ModelParams& p) {
    if (p.kernel.kind == KernelKind::cell_constant)
        return cell_kernel_product_integral({a, b}, p);
    const double s = dist(a, b, p.d) * p.gamma;
    if (s >= 2.0) return 0.0;
    const double c = kernel_amplitude(p.d) * p.kernel.normalization;
    return std::pow(p.gamma, p.d) * c * c * unit_kernel_autocorrelation(p.d, s);
}

double pair_kernel_j2_self(const ModelParams& p) {
    Point z{0, 0, 0};
    return pair_kernel_j2(z, z, p);
}

double quad_kernel_j4(const Point& a, const Point& b, const Point& c, const Point& e,
                      const ModelParams& p) {
    if (p.kernel.kind == KernelKind::cell_constant)
        return cell_kernel_product_integral({a, b, c, e}, p);

    const Point pts[4] = {a, b, c, e};
    double lo[3], hi[3];
    for (int k = 0; k < p.d; ++k) {
        lo[k] = -kInfinity;
        hi[k] = kInfinity;
        for (const auto& q : pts) {
            lo[k] = std::max(lo[k], q[k] - p.kac_range);
            hi[k] = std::min(hi[k], q[k] + p.kac_range);
        }
        if (hi[k] <= lo[k]) return 0.0;
    }

    auto product = [&](const Point& r) {
        double v = 1.0;
        for (const auto& q : pts) {
            v *= poly_kernel_value(dist2(r, q, p.d), p);
            if (v == 0.0) return 0.0;
        }
        return v;
    };

    if (p.d == 1) {
        // Exact: the integrand is piecewise polynomial of degree 24 between
        // the support endpoints.
        std::vector<double> bps{lo[0], hi[0]};
        for (const auto& q : pts) {
            for (double edge : {q[0] - p.kac_range, q[0] + p.kac_range})
                if (edge > lo[0] && edge < hi[0]) bps.push_back(edge);
        }
        std::sort(bps.begin(), bps.end());
        double total = 0.0;
        for (size_t i = 0; i + 1 < bps.size(); ++i)
            total += gl_integrate(bps[i], bps[i + 1], 16, [&](double x) {
                return product(Point{x, 0.0, 0.0});
            });
        return total;
    }

    const int per_range = (p.d == 2) ? 32 : 24;
    const double h = p.kac_range / per_range;
    long n[3] = {1, 1, 1};
    for (int k = 0; k < p.d; ++k) n[k] = std::max<long>(1, std::lround((hi[k] - lo[k]) / h));
    double cellvol = 1.0;
    double step[3] = {0, 0, 0};
    for (int k = 0; k < p.d; ++k) {
        step[k] = (hi[k] - lo[k]) / n[k];
        cellvol *= step[k];
    }
    double total = 0.0;
    Point r{0, 0, 0};
    for (long ix = 0; ix < n[0]; ++ix) {
        r[0] = lo[0] + (ix + 0.5) * step[0];
        for (long iy = 0; iy < (p.d > 1 ? n[1] : 1); ++iy) {
            if (p.d > 1) r[1] = lo[1] + (iy + 0.5) * step[1];
            for (long iz = 0; iz < (p.d > 2 ? n[2] : 1); ++iz) {
                if (p.d > 2) r[2] = lo[2] + (iz + 0.5) * step[2];
                total += product(r);
            }
        }
    }
    return total * cellvol;
}

double smoothed_kernel(const Point& r, const Point& center, double cube_side,
                       const ModelParams& p) {
    const GaussRule& g = gauss_rule(8);
    const double half = 0.5 * cube_side;
    double total = 0.0;
    Point u{0, 0, 0};
    if (p.d == 1) {
        for (int i = 0; i < 8; ++i) {
            u[0] = center[0] + half * g.x[i];
            total += g.w[i] * kac_kernel(r, u, p);
        }
        return total / 2.0;
    }
    if (p.d == 2) {
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                u[0] = center[0] + half * g.x[i];
                u[1] = center[1] + half * g.x[j];
                total += g.w[i] * g.w[j] * kac_kernel(r, u, p);
            }
        return total / 4.0;
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                u[0] = center[0] + half * g.x[i];
                u[1] = center[1] + half * g.x[j];
                u[2] = center[2] + half * g.x[k];
                total += g.w[i] * g.w[j] * g.w[k] * kac_kernel(r, u, p);
            }
    return total / 8.0;
}

double kernel_integral_radial(const ModelParams& p, int order) {
    const double c = kernel_amplitude(p.d) * p.kernel.normalization;
    const double surface = (p.d == 1) ? 2.0 : (p.d == 2 ? 2.0 * M_PI : 4.0 * M_PI);
    const double radial = gl_integrate(0.0, 1.0, std::min(order, 32), [&](double r) {
        return std::pow(r, p.d - 1) * unit_kernel(r * r);
    });
    return c * surface * radial;
}

} // namespace lmphc
