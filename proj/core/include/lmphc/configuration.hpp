// Hard-core admissible particle configuration with a cell list covering both
// hard-core (radius R) and Kac-range (radius 1/gamma) neighbor queries.
#pragma once

#include <utility>
#include <vector>

#include "lmphc/common.hpp"
#include "lmphc/domain.hpp"
#include "lmphc/params.hpp"

namespace lmphc {

// Uniform bucket grid over an axis-aligned region. Cell side >= query radius,
// so any fixed-radius query touches at most the 3^d surrounding cells.
class CellGrid {
public:
    CellGrid() = default;
    CellGrid(int d, double origin, double extent, double min_cell_side, bool periodic);

    void insert(int id, const Point& p);
    void remove(int id, const Point& p);
    void clear();

    template <typename F>
    void visit_near(const Point& p, F&& f) const {
        if (cells_.empty()) return;
        int base[3] = {0, 0, 0};
        for (int k = 0; k < d_; ++k) base[k] = axis_cell(p[k]);
        int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
        for (int k = 0; k < d_; ++k) {
            lo[k] = base[k] - 1;
            hi[k] = base[k] + 1;
            if (periodic_ && n_[k] <= 3) { lo[k] = 0; hi[k] = n_[k] - 1; }
        }
        for (int ix = lo[0]; ix <= hi[0]; ++ix)
            for (int iy = (d_ > 1 ? lo[1] : 0); iy <= (d_ > 1 ? hi[1] : 0); ++iy)
                for (int iz = (d_ > 2 ? lo[2] : 0); iz <= (d_ > 2 ? hi[2] : 0); ++iz) {
                    const long c = flat(ix, iy, iz);
                    if (c < 0) continue;
                    for (int id : cells_[static_cast<size_t>(c)]) f(id);
                }
    }

    bool consistent(const std::vector<Point>& pts) const;

private:
    int axis_cell(double x) const;
    long flat(int ix, int iy, int iz) const; // -1 when outside a non-periodic grid

    int d_ = 1;
    bool periodic_ = false;
    double origin_ = 0.0;
    double cell_side_ = 1.0;
    int n_[3] = {1, 1, 1};
    std::vector<std::vector<int>> cells_;
};

class ParticleConfiguration {
public:
    ParticleConfiguration(Domain domain, const ModelParams& params);

    // Builds from explicit points; throws NumericalError when the points (or
    // their union with the domain boundary configuration) violate the hard core.
    static ParticleConfiguration from_points(Domain domain, const ModelParams& params,
                                             const std::vector<Point>& pts);

    const Domain& domain() const { return domain_; }
    int size() const { return static_cast<int>(pos_.size()); }
    const Point& position(int i) const { return pos_[static_cast<size_t>(i)]; }
    const std::vector<Point>& positions() const { return pos_; }
    double hc_radius() const { return hc_radius_; }
    int dimension() const { return domain_.d; }

    // Hard-core feasibility of placing a particle at p (ignoring particle
    // `ignore` when >= 0). Distance exactly R counts as a violation.
    bool would_violate(const Point& p, int ignore = -1) const;

    // Mutations preserve admissibility; a rejected mutation leaves the
    // configuration untouched.
    bool try_insert(const Point& p);
    void remove(int i);
    bool try_move(int i, const Point& to);

    bool admissible() const;
    std::vector<std::pair<int, int>> pair_violations() const;
    bool audit_cells() const;

    // Visits ids of particles within `radius` (<= Kac range) of p.
    template <typename F>
    void for_neighbors(const Point& p, double radius, F&& f) const {
        const double r2 = radius * radius;
        grid_.visit_near(p, [&](int id) {
            if (domain_.distance2(p, pos_[static_cast<size_t>(id)]) <= r2) f(id);
        });
    }

    // Visits indices into domain().boundary within `radius` of p.
    template <typename F>
    void for_boundary_neighbors(const Point& p, double radius, F&& f) const {
        const double r2 = radius * radius;
        boundary_grid_.visit_near(p, [&](int id) {
            if (dist2(p, domain_.boundary[static_cast<size_t>(id)], domain_.d) <= r2) f(id);
        });
    }

private:
    Domain domain_;
    double hc_radius_ = 0.0;
    double kac_range_ = 1.0;
    std::vector<Point> pos_;
    CellGrid grid_;
    CellGrid boundary_grid_;
};

// Free-function views matching the operation names used elsewhere.
bool hardcore_admissible(const ParticleConfiguration& q);
std::vector<std::pair<int, int>> pair_violations(const ParticleConfiguration& q);

} // namespace lmphc
