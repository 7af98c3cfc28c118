// Basic geometric types and error taxonomy shared by every module.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lmphc {

// Point in up to 3 dimensions; the active dimension d lives in ModelParams.
// Unused components are kept at zero so distance code can loop over all three.
using Point = std::array<double, 3>;

inline Point make_point(double x, double y = 0.0, double z = 0.0) { return {x, y, z}; }

inline double dist2(const Point& a, const Point& b, int d) {
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return s;
}

inline double dist(const Point& a, const Point& b, int d) { return std::sqrt(dist2(a, b, d)); }

// Error types map onto CLI exit codes: ConfigError -> 2, NumericalError -> 3,
// InsufficientStatistics -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientStatistics : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Volume of the d-ball of radius r, d in {1,2,3}.
inline double ball_volume(int d, double r) {
    switch (d) {
        case 1: return 2.0 * r;
        case 2: return M_PI * r * r;
        case 3: return 4.0 * M_PI * r * r * r / 3.0;
        default: throw ConfigError("ball_volume: dimension must be 1, 2 or 3");
    }
}

} // namespace lmphc
