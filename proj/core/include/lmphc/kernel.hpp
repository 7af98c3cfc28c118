// Kac kernel J_gamma and the derived n-body kernels
//   J^(2)(a,b)       = int J(r,a) J(r,b) dr
//   J^(4)(a,b,c,e)   = int J(r,a) J(r,b) J(r,c) J(r,e) dr
// plus the cube-smoothed kernel used by the coarse-grained potentials.
#pragma once

#include <vector>

#include "lmphc/common.hpp"
#include "lmphc/params.hpp"

namespace lmphc {

// Normalization constant C_d with int_{R^d} C_d (1-|u|^2)^3 du = 1.
double kernel_amplitude(int d);

// J_gamma(r, r') for the configured kernel. Total function; zero at and beyond
// the Kac range. Euclidean displacement (callers wrap torus coordinates first).
double kac_kernel(const Point& r, const Point& r_prime, const ModelParams& params);

// Unit-kernel value (1-|u|^2)^3 at squared scaled radius u2, without C_d.
double unit_kernel(double u2);

// Autocorrelation of the unit polynomial kernel in dimension d at separation s
// (both in scaled units, s in [0,2]); exact piecewise Gauss-Legendre panels.
double unit_kernel_autocorrelation(int d, double s);

// Pair kernel J^(2)_gamma(a,b). Exact (to quadrature panel precision) for the
// polynomial kernel; lattice sum for the cell-sampled test kernel.
double pair_kernel_j2(const Point& a, const Point& b, const ModelParams& params);

// Self value J^(2)(q,q).
double pair_kernel_j2_self(const ModelParams& params);

// Four-body kernel J^(4)_gamma. d=1 uses exact panels; d>=2 a fine midpoint grid.
double quad_kernel_j4(const Point& a, const Point& b, const Point& c, const Point& e,
                      const ModelParams& params);

// Cube-smoothed kernel: average of J(r, u) over u in the cube of side
// `cube_side` centered at `center`.
double smoothed_kernel(const Point& r, const Point& center, double cube_side,
                       const ModelParams& params);

// High-order radial quadrature of int J_gamma (polynomial kernel), used by the
// normalization test; independent of the grid machinery.
double kernel_integral_radial(const ModelParams& params, int order = 64);

// Gauss-Legendre nodes/weights on [-1,1] for small fixed orders (<= 32).
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_rule(int n);

} // namespace lmphc
