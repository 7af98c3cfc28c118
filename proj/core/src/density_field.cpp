#include "lmphc/density_field.hpp"

#include <cmath>

namespace lmphc {

DensityField DensityField::make(const Domain& domain, const ModelParams& params) {
    DensityField f;
    f.d_ = domain.d;
    f.periodic_ = domain.periodic();
    f.range_ = params.kac_range;
    const double h_target = params.kac_range / params.quad_factor;

    long total = 1;
    if (f.periodic_) {
        const long n = std::max<long>(1, std::lround(domain.side / h_target));
        f.h_ = domain.side / static_cast<double>(n);
        f.origin_ = 0.0;
        for (int k = 0; k < f.d_; ++k) {
            f.n_[k] = n;
            total *= n;
        }
    } else {
        const long margin_nodes = static_cast<long>(std::ceil(params.kac_range / h_target)) + 1;
        f.h_ = h_target;
        f.origin_ = -static_cast<double>(margin_nodes) * f.h_;
        const long n = static_cast<long>(std::ceil(domain.side / f.h_)) + 2 * margin_nodes;
        for (int k = 0; k < f.d_; ++k) {
            f.n_[k] = n;
            total *= n;
        }
    }
    f.weight_ = std::pow(f.h_, f.d_);
    f.values_.assign(static_cast<size_t>(total), 0.0);
    return f;
}

long DensityField::flat_wrapped(long ix, long iy, long iz) const {
    long idx[3] = {ix, iy, iz};
    long fidx = 0;
    for (int k = 0; k < d_; ++k) {
        long c = idx[k];
        if (periodic_) {
            c %= n_[k];
            if (c < 0) c += n_[k];
        }
        fidx = fidx * n_[k] + c;
    }
    return fidx;
}

Point DensityField::node_position(long flat) const {
    long idx[3] = {0, 0, 0};
    for (int k = d_ - 1; k >= 0; --k) {
        idx[k] = flat % n_[k];
        flat /= n_[k];
    }
    Point p{0, 0, 0};
    for (int k = 0; k < d_; ++k) p[k] = origin_ + (idx[k] + 0.5) * h_;
    return p;
}

void DensityField::clear() {
    std::fill(values_.begin(), values_.end(), 0.0);
}

double DensityField::kernel_at(const Point& node, const Point& p, const ModelParams& params) const {
    if (!periodic_) return kac_kernel(node, p, params);
    // Wrap the displacement onto the torus before evaluating the kernel.
    Point delta{0, 0, 0};
    const double L = n_[0] * h_;
    for (int k = 0; k < d_; ++k) {
        double t = node[k] - p[k];
        t -= L * std::round(t / L);
        delta[k] = t;
    }
    Point z{0, 0, 0};
    return kac_kernel(z, delta, params);
}

void DensityField::add_particle(const Point& p, const ModelParams& params, double sign) {
    for_nodes_near(p, [&](long flat, const Point& node) {
        const double v = kernel_at(node, p, params);
        if (v != 0.0) values_[static_cast<size_t>(flat)] += sign * v;
    });
}

double DensityField::rebuild_max_diff(const std::vector<Point>& particles,
                                      const ModelParams& params) const {
    DensityField fresh = *this;
    fresh.clear();
    for (const auto& p : particles) fresh.add_particle(p, params);
    double worst = 0.0;
    for (size_t i = 0; i < values_.size(); ++i)
        worst = std::max(worst, std::abs(values_[i] - fresh.values_[i]));
    return worst;
}

} // namespace lmphc
