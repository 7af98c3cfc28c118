#include "lmphc/configuration.hpp"

#include <algorithm>
#include <cmath>

namespace lmphc {

CellGrid::CellGrid(int d, double origin, double extent, double min_cell_side, bool periodic)
    : d_(d), periodic_(periodic), origin_(origin) {
    if (extent <= 0.0) throw ConfigError("CellGrid: extent must be positive");
    int n = std::max(1, static_cast<int>(std::floor(extent / min_cell_side)));
    cell_side_ = extent / n;
    long total = 1;
    for (int k = 0; k < d_; ++k) {
        n_[k] = n;
        total *= n;
    }
    cells_.assign(static_cast<size_t>(total), {});
}

int CellGrid::axis_cell(double x) const {
    int c = static_cast<int>(std::floor((x - origin_) / cell_side_));
    if (periodic_) {
        c %= n_[0];
        if (c < 0) c += n_[0];
    }
    return c;
}

long CellGrid::flat(int ix, int iy, int iz) const {
    int idx[3] = {ix, iy, iz};
    long f = 0;
    for (int k = 0; k < d_; ++k) {
        int c = idx[k];
        if (periodic_) {
            c %= n_[k];
            if (c < 0) c += n_[k];
        } else if (c < 0 || c >= n_[k]) {
            return -1;
        }
        f = f * n_[k] + c;
    }
    return f;
}

void CellGrid::insert(int id, const Point& p) {
    const long c = flat(axis_cell(p[0]), d_ > 1 ? axis_cell(p[1]) : 0,
                        d_ > 2 ? axis_cell(p[2]) : 0);
    if (c < 0) throw NumericalError("CellGrid::insert: point outside grid");
    cells_[static_cast<size_t>(c)].push_back(id);
}

void CellGrid::remove(int id, const Point& p) {
    const long c = flat(axis_cell(p[0]), d_ > 1 ? axis_cell(p[1]) : 0,
                        d_ > 2 ? axis_cell(p[2]) : 0);
    if (c < 0) throw NumericalError("CellGrid::remove: point outside grid");
    auto& bucket = cells_[static_cast<size_t>(c)];
    auto it = std::find(bucket.begin(), bucket.end(), id);
    if (it == bucket.end()) throw NumericalError("CellGrid::remove: id not in bucket");
    *it = bucket.back();
    bucket.pop_back();
}

void CellGrid::clear() {
    for (auto& b : cells_) b.clear();
}

bool CellGrid::consistent(const std::vector<Point>& pts) const {
    size_t count = 0;
    for (const auto& b : cells_) count += b.size();
    if (count != pts.size()) return false;
    for (size_t i = 0; i < pts.size(); ++i) {
        const long c = flat(axis_cell(pts[i][0]), d_ > 1 ? axis_cell(pts[i][1]) : 0,
                            d_ > 2 ? axis_cell(pts[i][2]) : 0);
        if (c < 0) return false;
        const auto& bucket = cells_[static_cast<size_t>(c)];
        if (std::find(bucket.begin(), bucket.end(), static_cast<int>(i)) == bucket.end())
            return false;
    }
    return true;
}

ParticleConfiguration::ParticleConfiguration(Domain domain, const ModelParams& params)
    : domain_(std::move(domain)), hc_radius_(params.hc_radius), kac_range_(params.kac_range) {
    if (domain_.d != params.d) throw ConfigError("domain dimension does not match params");
    grid_ = CellGrid(domain_.d, 0.0, domain_.side, kac_range_, domain_.periodic());
    if (!domain_.boundary.empty()) {
        const double keep = 2.0 * kac_range_ + domain_.ell_plus;
        boundary_grid_ = CellGrid(domain_.d, -keep, domain_.side + 2.0 * keep, kac_range_, false);
        for (size_t i = 0; i < domain_.boundary.size(); ++i)
            boundary_grid_.insert(static_cast<int>(i), domain_.boundary[i]);
        // The boundary configuration itself must be admissible.
        for (size_t i = 0; i < domain_.boundary.size(); ++i)
            for (size_t j = i + 1; j < domain_.boundary.size(); ++j)
                if (dist(domain_.boundary[i], domain_.boundary[j], domain_.d) <= hc_radius_)
                    throw NumericalError("boundary configuration violates the hard core");
    }
}

ParticleConfiguration ParticleConfiguration::from_points(Domain domain, const ModelParams& params,
                                                         const std::vector<Point>& pts) {
    ParticleConfiguration cfg(std::move(domain), params);
    for (const auto& p : pts) {
        if (!cfg.domain_.contains(cfg.domain_.wrap(p)))
            throw NumericalError("particle outside the domain");
        if (!cfg.try_insert(cfg.domain_.wrap(p)))
            throw NumericalError("initial configuration violates the hard core");
    }
    return cfg;
}

bool ParticleConfiguration::would_violate(const Point& p, int ignore) const {
    if (hc_radius_ <= 0.0) return false;
    const double r2 = hc_radius_ * hc_radius_;
    bool bad = false;
    grid_.visit_near(p, [&](int id) {
        if (id == ignore || bad) return;
        if (domain_.distance2(p, pos_[static_cast<size_t>(id)]) <= r2) bad = true;
    });
    if (!bad && !domain_.boundary.empty()) {
        boundary_grid_.visit_near(p, [&](int id) {
            if (bad) return;
            if (dist2(p, domain_.boundary[static_cast<size_t>(id)], domain_.d) <= r2) bad = true;
        });
    }
    return bad;
}

bool ParticleConfiguration::try_insert(const Point& p) {
    const Point q = domain_.wrap(p);
    if (!domain_.contains(q)) throw NumericalError("insert outside the domain");
    if (would_violate(q)) return false;
    const int id = static_cast<int>(pos_.size());
    pos_.push_back(q);
    grid_.insert(id, q);
    return true;
}

void ParticleConfiguration::remove(int i) {
    const int last = static_cast<int>(pos_.size()) - 1;
    if (i < 0 || i > last) throw NumericalError("remove: index out of range");
    grid_.remove(i, pos_[static_cast<size_t>(i)]);
    if (i != last) {
        grid_.remove(last, pos_[static_cast<size_t>(last)]);
        pos_[static_cast<size_t>(i)] = pos_[static_cast<size_t>(last)];
        grid_.insert(i, pos_[static_cast<size_t>(i)]);
    }
    pos_.pop_back();
}

bool ParticleConfiguration::try_move(int i, const Point& to) {
    const Point q = domain_.wrap(to);
    if (!domain_.contains(q)) return false; // box moves may step outside: reject
    if (would_violate(q, i)) return false;
    grid_.remove(i, pos_[static_cast<size_t>(i)]);
    pos_[static_cast<size_t>(i)] = q;
    grid_.insert(i, q);
    return true;
}

bool ParticleConfiguration::admissible() const {
    return pair_violations().empty();
}

std::vector<std::pair<int, int>> ParticleConfiguration::pair_violations() const {
    std::vector<std::pair<int, int>> out;
    if (hc_radius_ <= 0.0) return out;
    const double r2 = hc_radius_ * hc_radius_;
    for (int i = 0; i < size(); ++i) {
        const Point& p = pos_[static_cast<size_t>(i)];
        grid_.visit_near(p, [&](int j) {
            if (j <= i) return;
            if (domain_.distance2(p, pos_[static_cast<size_t>(j)]) <= r2)
                out.emplace_back(i, j);
        });
        if (!domain_.boundary.empty()) {
            boundary_grid_.visit_near(p, [&](int j) {
                if (dist2(p, domain_.boundary[static_cast<size_t>(j)], domain_.d) <= r2)
                    out.emplace_back(i, -1 - j); // negative id marks a boundary particle
            });
        }
    }
    return out;
}

bool ParticleConfiguration::audit_cells() const {
    return grid_.consistent(pos_);
}

bool hardcore_admissible(const ParticleConfiguration& q) { return q.admissible(); }

std::vector<std::pair<int, int>> pair_violations(const ParticleConfiguration& q) {
    return q.pair_violations();
}

} // namespace lmphc
