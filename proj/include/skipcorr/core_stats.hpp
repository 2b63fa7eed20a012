#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace skipcorr {

double median(std::span<const double> values);
double median_inplace(std::vector<double>& values);

struct ideal_fourths_t {
    double q1;
    double q2;
};

// Lower and upper fourths via the l = [n/4 + 5/12] interpolation rule.
// The index pair is clamped into range for n = 2 and 3, where the printed
// rule would reach past the sample; those sizes degrade to (min, max)-ish
// mixtures and q1 <= q2 still holds.
ideal_fourths_t ideal_fourths(std::span<const double> values);
// Same rule assuming the input is already in ascending order; no copy.
ideal_fourths_t ideal_fourths_sorted(std::span<const double> sorted_values);

// Raw median absolute deviation, no consistency scaling.
double mad(std::span<const double> values);

double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);
std::vector<double> midranks(std::span<const double> x);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation,
// absolute error target 1e-12.
double beta_cdf(double x, double a, double b);

double chi_square_cdf(double x, int df);
double chi_square_quantile(double prob, int df);
// Same quantile behind a process-wide memo; detection thresholds hit this
// once per (prob, df) instead of once per bootstrap replicate.
double chi_square_quantile_cached(double prob, int df);

double normal_cdf(double x);
double normal_quantile(double p);

double student_t_cdf(double t, int df);
double student_t_quantile(double p, int df);

// Harrell-Davis quantile estimate: beta-weighted average of order statistics.
double harrell_davis(std::vector<double> values, double q);
double harrell_davis_sorted(std::span<const double> sorted_values, double q);
void harrell_davis_weights(std::size_t B, double q, std::vector<double>& w);

} // namespace skipcorr
