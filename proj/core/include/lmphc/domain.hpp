// Simulation domain: a box with optional fixed outside configuration, or a torus.
#pragma once

#include <optional>
#include <vector>

#include "lmphc/common.hpp"
#include "lmphc/params.hpp"

namespace lmphc {

enum class DomainKind { box, torus };

struct Domain {
    DomainKind kind = DomainKind::torus;
    int d = 1;
    double side = 0.0;            // per-axis length, snapped to a multiple of ell_plus
    int cubes_per_axis = 0;       // side / ell_plus after snapping
    double ell_plus = 0.0;        // copied from params at construction

    // Boundary configuration q-bar for boxes: particles outside the box.
    // Particles farther than 2/gamma + ell_plus from the box are dropped at
    // construction (finite range; the extra ell_plus ring feeds the Theta
    // indicators next to the border).
    std::vector<Point> boundary;

    static Domain make(DomainKind kind, const ModelParams& params, double requested_side,
                       std::vector<Point> boundary = {});

    double volume() const;
    bool periodic() const { return kind == DomainKind::torus; }

    // Displacement b - a with minimum-image wrapping on the torus.
    Point delta(const Point& a, const Point& b) const;
    double distance2(const Point& a, const Point& b) const;
    double distance(const Point& a, const Point& b) const { return std::sqrt(distance2(a, b)); }

    // Wraps a point into [0, side) per axis on the torus; identity on a box.
    Point wrap(Point p) const;

    bool contains(const Point& p) const;
};

} // namespace lmphc
