// Small statistics toolbox: moments, Wilson intervals, chi-square p-values,
// autocorrelation time, least squares.
#pragma once

#include <cstddef>
#include <vector>

namespace lmphc {

struct MeanErr {
    double mean = 0.0;
    double err = 0.0; // one standard error
    std::size_t n = 0;
};

MeanErr sample_mean(const std::vector<double>& xs);

// Standard error of the mean from batch means (for correlated series).
MeanErr batch_mean(const std::vector<double>& xs, std::size_t n_batches = 32);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Wilson score interval for a binomial proportion at confidence z (1.96 ~ 95%).
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959964);

// Regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic with k degrees of freedom.
double chi_square_pvalue(double stat, int dof);

// Integrated autocorrelation time with Sokal's adaptive window (c = 6).
double integrated_autocorrelation(const std::vector<double>& xs);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace lmphc
