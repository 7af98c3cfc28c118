#include "lmphc/energy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lmphc/kernel.hpp"

namespace lmphc {

namespace {

// Free-space midpoint lattice anchored at the origin: node k -> (k+1/2) h.
struct NodeSet {
    double h;
    int d;
    std::unordered_map<long long, double> rho; // packed index -> density

    static long long pack(const long idx[3]) {
        // 21 bits per axis, offset binary
        const long long off = 1LL << 20;
        return ((idx[0] + off) << 42) | ((idx[1] + off) << 21) | (idx[2] + off);
    }
};

void deposit(NodeSet& nodes, const Point& p, const ModelParams& params) {
    long lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (int k = 0; k < params.d; ++k) {
        lo[k] = static_cast<long>(std::floor((p[k] - params.kac_range) / nodes.h - 0.5));
        hi[k] = static_cast<long>(std::ceil((p[k] + params.kac_range) / nodes.h - 0.5));
    }
    long idx[3] = {0, 0, 0};
    Point node{0, 0, 0};
    for (idx[0] = lo[0]; idx[0] <= hi[0]; ++idx[0]) {
        node[0] = (idx[0] + 0.5) * nodes.h;
        for (idx[1] = lo[1]; idx[1] <= (params.d > 1 ? hi[1] : lo[1]); ++idx[1]) {
            if (params.d > 1) node[1] = (idx[1] + 0.5) * nodes.h;
            for (idx[2] = lo[2]; idx[2] <= (params.d > 2 ? hi[2] : lo[2]); ++idx[2]) {
                if (params.d > 2) node[2] = (idx[2] + 0.5) * nodes.h;
                const double v = kac_kernel(node, p, params);
                if (v != 0.0) nodes.rho[NodeSet::pack(idx)] += v;
            }
        }
    }
}

double weight(const NodeSet& nodes) { return std::pow(nodes.h, nodes.d); }

bool cross_admissible(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                      const ModelParams& params) {
    if (params.hc_radius <= 0.0) return true;
    const double r2 = params.hc_radius * params.hc_radius;
    for (const auto& a : q)
        for (const auto& b : q_bar)
            if (dist2(a, b, params.d) <= r2) return false;
    return true;
}

void require_admissible(const std::vector<Point>& q, const ModelParams& params,
                        const char* what) {
    if (!points_admissible(q, params))
        throw NumericalError(std::string(what) + ": configuration violates the hard core");
}

} // namespace

bool points_admissible(const std::vector<Point>& q, const ModelParams& params) {
    if (params.hc_radius <= 0.0) return true;
    const double r2 = params.hc_radius * params.hc_radius;
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 1; j < q.size(); ++j)
            if (dist2(q[i], q[j], params.d) <= r2) return false;
    return true;
}

double energy_functional(const std::vector<Point>& q, const ModelParams& params) {
    require_admissible(q, params, "energy_functional");
    if (q.empty()) return 0.0;
    double e = -params.lambda * static_cast<double>(q.size());
    if (!params.kac_enabled) return e;

    NodeSet nodes{params.kac_range / params.quad_factor, params.d, {}};
    for (const auto& p : q) deposit(nodes, p, params);
    double s = 0.0;
    for (const auto& [key, rho] : nodes.rho) s += e24(rho);
    return e + s * weight(nodes);
}

double energy_multibody(const std::vector<Point>& q, const ModelParams& params) {
    require_admissible(q, params, "energy_multibody");
    const int n = static_cast<int>(q.size());
    if (n == 0) return 0.0;

    double e = -params.lambda * n;
    if (!params.kac_enabled) return e;

    // 4-body cost guard: refuse crowded Kac neighborhoods.
    const double reach2 = 4.0 * params.kac_range * params.kac_range;
    for (int i = 0; i < n; ++i) {
        int nearby = 0;
        for (int j = 0; j < n; ++j)
            if (dist2(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)], params.d) <= reach2)
                ++nearby;
        if (nearby > 64)
            throw NumericalError("energy_multibody: more than 64 particles share a Kac neighborhood");
    }

    // Pair part over all ordered tuples: sum_i J2(i,i) + 2 sum_{i<j} J2(i,j).
    double pair_sum = n * pair_kernel_j2_self(params);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dist2(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)], params.d) > reach2)
                continue;
            pair_sum += 2.0 * pair_kernel_j2(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)], params);
        }

    // Quadruple part over all ordered tuples, grouped by multisets i<=j<=k<=l
    // with multinomial weight 24 / prod(mult!).
    double quad_sum = 0.0;
    auto in_range = [&](int i, int j) {
        return dist2(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)], params.d) <= reach2;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!in_range(i, j)) continue;
            for (int k = j; k < n; ++k) {
                if (!in_range(i, k) || !in_range(j, k)) continue;
                for (int l = k; l < n; ++l) {
                    if (!in_range(i, l) || !in_range(j, l) || !in_range(k, l)) continue;
                    const double v = quad_kernel_j4(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)],
                                                    q[static_cast<size_t>(k)], q[static_cast<size_t>(l)],
                                                    params);
                    if (v == 0.0) continue;
                    // multiplicity of the multiset {i,j,k,l}
                    int mult = 24;
                    int groups[4] = {i, j, k, l};
                    int run = 1;
                    for (int t = 1; t < 4; ++t) {
                        if (groups[t] == groups[t - 1]) {
                            ++run;
                            mult /= run;
                        } else {
                            run = 1;
                        }
                    }
                    quad_sum += mult * v;
                }
            }
        }

    return e - 0.5 * pair_sum + quad_sum / 24.0;
}

double relative_energy(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                       const ModelParams& params) {
    require_admissible(q, params, "relative_energy(q)");
    require_admissible(q_bar, params, "relative_energy(q_bar)");
    if (!cross_admissible(q, q_bar, params)) return kInfinity;
    double e = -params.lambda * static_cast<double>(q.size());
    if (!params.kac_enabled || q.empty()) return e;

    NodeSet nodes{params.kac_range / params.quad_factor, params.d, {}};
    for (const auto& p : q) deposit(nodes, p, params);
    // rho restricted to nodes near q; add the background from q_bar there.
    double s = 0.0;
    const double w = weight(nodes);
    for (auto& [key, rho_q] : nodes.rho) {
        // unpack node position
        const long long off = 1LL << 20;
        long idx[3] = {static_cast<long>((key >> 42) - off), static_cast<long>(((key >> 21) & 0x1fffff) - off),
                       static_cast<long>((key & 0x1fffff) - off)};
        Point node{0, 0, 0};
        for (int k = 0; k < params.d; ++k) node[k] = (idx[k] + 0.5) * nodes.h;
        double rho_bar = 0.0;
        for (const auto& b : q_bar) {
            const double v = kac_kernel(node, b, params);
            rho_bar += v;
        }
        s += e24(rho_bar + rho_q) - e24(rho_bar);
    }
    return e + s * w;
}

double interaction_energy(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                          const ModelParams& params) {
    const double rel = relative_energy(q, q_bar, params);
    if (rel == kInfinity) return kInfinity;
    return rel - energy_functional(q, params);
}

double relative_energy_distinct(const std::vector<Point>& q, const std::vector<Point>& q_bar,
                                const ModelParams& params) {
    require_admissible(q, params, "relative_energy_distinct(q)");
    if (!cross_admissible(q, q_bar, params)) return kInfinity;
    double e = -params.lambda * static_cast<double>(q.size());
    if (!params.kac_enabled || q.empty()) return e;

    const double reach2 = 4.0 * params.kac_range * params.kac_range;
    const int n = static_cast<int>(q.size());
    const int m = static_cast<int>(q_bar.size());

    // All points, q first; distinct pairs/quadruples that involve at least one
    // particle of q.
    std::vector<Point> all = q;
    all.insert(all.end(), q_bar.begin(), q_bar.end());
    auto in_range = [&](int i, int j) {
        return dist2(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)], params.d) <= reach2;
    };

    double pair_sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n + m; ++j)
            if (in_range(i, j))
                pair_sum += pair_kernel_j2(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)], params);

    double quad_sum = 0.0;
    const int total = n + m;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < total; ++j) {
            if (!in_range(i, j)) continue;
            for (int k = j + 1; k < total; ++k) {
                if (!in_range(i, k) || !in_range(j, k)) continue;
                for (int l = k + 1; l < total; ++l) {
                    if (!in_range(i, l) || !in_range(j, l) || !in_range(k, l)) continue;
                    quad_sum += quad_kernel_j4(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)],
                                               all[static_cast<size_t>(k)], all[static_cast<size_t>(l)],
                                               params);
                }
            }
        }

    return e - pair_sum + quad_sum;
}

double domain_energy(const ParticleConfiguration& q, const ModelParams& params) {
    double e = -params.lambda * q.size();
    if (!params.kac_enabled) return e;

    DensityField field = DensityField::make(q.domain(), params);
    for (const auto& p : q.positions()) field.add_particle(p, params);

    if (q.domain().boundary.empty()) {
        return e + field_e24_integral(field);
    }
    DensityField baseline = DensityField::make(q.domain(), params);
    for (const auto& p : q.domain().boundary) baseline.add_particle(p, params);
    for (long i = 0; i < field.node_count(); ++i)
        field.set_value(i, field.value(i) + baseline.value(i));
    return e + field_e24_integral(field, &baseline);
}

double field_e24_integral(const DensityField& field, const DensityField* baseline) {
    double s = 0.0;
    const auto& v = field.values();
    if (baseline) {
        const auto& b = baseline->values();
        for (size_t i = 0; i < v.size(); ++i) s += e24(v[i]) - e24(b[i]);
    } else {
        for (double x : v) s += e24(x);
    }
    return s * field.node_weight();
}

} // namespace lmphc
