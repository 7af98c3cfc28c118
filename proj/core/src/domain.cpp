#include "lmphc/domain.hpp"

#include <cmath>

namespace lmphc {

Domain Domain::make(DomainKind kind, const ModelParams& params, double requested_side,
                    std::vector<Point> boundary) {
    if (!params.finalized()) throw ConfigError("Domain::make: params not finalized");
    if (requested_side <= 0.0) throw ConfigError("domain side must be positive");

    Domain dom;
    dom.kind = kind;
    dom.d = params.d;
    dom.ell_plus = params.ell_plus;
    dom.cubes_per_axis = std::max(1, static_cast<int>(std::lround(requested_side / params.ell_plus)));
    dom.side = dom.cubes_per_axis * params.ell_plus;

    if (kind == DomainKind::torus) {
        if (!boundary.empty()) throw ConfigError("a torus has no boundary configuration");
        if (dom.side < 2.0 * params.kac_range)
            throw ConfigError("torus side must be at least twice the Kac range");
        return dom;
    }

    const double keep = 2.0 * params.kac_range + params.ell_plus;
    for (const auto& p : boundary) {
        bool inside = true;
        double margin = 0.0;
        for (int k = 0; k < dom.d; ++k) {
            if (p[k] < 0.0) {
                inside = false;
                margin = std::max(margin, -p[k]);
            } else if (p[k] > dom.side) {
                inside = false;
                margin = std::max(margin, p[k] - dom.side);
            }
        }
        if (inside) throw ConfigError("boundary particle lies inside the box");
        if (margin <= keep) dom.boundary.push_back(p);
    }
    return dom;
}

double Domain::volume() const {
    double v = 1.0;
    for (int k = 0; k < d; ++k) v *= side;
    return v;
}

Point Domain::delta(const Point& a, const Point& b) const {
    Point r{0.0, 0.0, 0.0};
    for (int k = 0; k < d; ++k) {
        double t = b[k] - a[k];
        if (kind == DomainKind::torus) t -= side * std::round(t / side);
        r[k] = t;
    }
    return r;
}

double Domain::distance2(const Point& a, const Point& b) const {
    const Point r = delta(a, b);
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += r[k] * r[k];
    return s;
}

Point Domain::wrap(Point p) const {
    if (kind == DomainKind::torus) {
        for (int k = 0; k < d; ++k) {
            p[k] -= side * std::floor(p[k] / side);
            if (p[k] >= side) p[k] = 0.0; // guard against floor rounding at the edge
        }
    }
    return p;
}

bool Domain::contains(const Point& p) const {
    for (int k = 0; k < d; ++k)
        if (p[k] < 0.0 || p[k] >= side) return false;
    return true;
}

} // namespace lmphc
