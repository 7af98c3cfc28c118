// Local-density field rho_gamma(.;q) sampled on the midpoint quadrature grid.
// The grid doubles as the energy quadrature: integral f(rho) dr ~ sum over
// nodes of f(rho_node) * h^d.
#pragma once

#include <vector>

#include "lmphc/common.hpp"
#include "lmphc/domain.hpp"
#include "lmphc/kernel.hpp"
#include "lmphc/params.hpp"

namespace lmphc {

class DensityField {
public:
    DensityField() = default;

    // Torus: grid spacing snapped so nodes tile the torus exactly.
    // Box: grid covers the box plus a Kac-range margin (the integrand of
    // relative energies is supported there).
    static DensityField make(const Domain& domain, const ModelParams& params);

    int dimension() const { return d_; }
    double spacing() const { return h_; }
    double node_weight() const { return weight_; }
    long node_count() const { return static_cast<long>(values_.size()); }
    const std::vector<double>& values() const { return values_; }

    Point node_position(long flat) const;

    void clear();
    void add_particle(const Point& p, const ModelParams& params, double sign = 1.0);

    // Visits (flat_index, node_position) for grid nodes within the Kac range
    // of p; the set of visited nodes is exactly where rho can change.
    template <typename F>
    void for_nodes_near(const Point& p, F&& f) const {
        long lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
        for (int k = 0; k < d_; ++k) {
            lo[k] = static_cast<long>(std::floor((p[k] - range_ - origin_) / h_ - 0.5));
            hi[k] = static_cast<long>(std::ceil((p[k] + range_ - origin_) / h_ - 0.5));
            if (!periodic_) {
                lo[k] = std::max<long>(lo[k], 0);
                hi[k] = std::min<long>(hi[k], n_[k] - 1);
            } else {
                if (hi[k] - lo[k] + 1 >= n_[k]) { lo[k] = 0; hi[k] = n_[k] - 1; }
            }
        }
        Point node{0, 0, 0};
        for (long ix = lo[0]; ix <= hi[0]; ++ix) {
            node[0] = origin_ + (ix + 0.5) * h_;
            for (long iy = (d_ > 1 ? lo[1] : 0); iy <= (d_ > 1 ? hi[1] : 0); ++iy) {
                if (d_ > 1) node[1] = origin_ + (iy + 0.5) * h_;
                for (long iz = (d_ > 2 ? lo[2] : 0); iz <= (d_ > 2 ? hi[2] : 0); ++iz) {
                    if (d_ > 2) node[2] = origin_ + (iz + 0.5) * h_;
                    f(flat_wrapped(ix, iy, iz), node);
                }
            }
        }
    }

    double value(long flat) const { return values_[static_cast<size_t>(flat)]; }
    void set_value(long flat, double v) { values_[static_cast<size_t>(flat)] = v; }

    // Kernel value between a grid node and a particle, torus-wrapped when needed.
    double kernel_at(const Point& node, const Point& p, const ModelParams& params) const;

    // Consistency audit: rebuilds the field from scratch and reports the max
    // absolute node difference.
    double rebuild_max_diff(const std::vector<Point>& particles, const ModelParams& params) const;

private:
    long flat_wrapped(long ix, long iy, long iz) const;

    int d_ = 1;
    bool periodic_ = false;
    double h_ = 1.0;
    double weight_ = 1.0;
    double origin_ = 0.0;
    double range_ = 1.0; // Kac range
    long n_[3] = {1, 1, 1};
    std::vector<double> values_;
};

} // namespace lmphc
