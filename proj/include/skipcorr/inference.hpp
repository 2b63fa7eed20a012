#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skipcorr/matrix.hpp"
#include "skipcorr/outlier.hpp"
#include "skipcorr/skipped.hpp"
#include "skipcorr/table_io.hpp"

namespace skipcorr {

struct bootstrap_config {
    std::size_t B = 500;
    std::uint64_t seed = 0;
    int max_retries = 50;
};

struct hypothesis_result {
    std::size_t j = 0;
    std::size_t k = 0;
    double estimate = 0.0;
    double statistic = 0.0;  // T_jk where the method uses one, else NaN
    double raw_p = 0.0;      // NaN where the method has no per-pair p
    double adjusted_p = 0.0; // NaN unless h1/l3
    double ci_lo = 0.0;      // NaN unless a percentile CI applies
    double ci_hi = 0.0;
    bool reject = false;
};

struct test_report {
    std::string method;
    double alpha = 0.0;
    std::size_t n = 0;
    std::size_t p = 0;
    estimator_kind estimator = estimator_kind::pearson;
    std::vector<hypothesis_result> hypotheses;
    double critical_value = 0.0; // T-scale for ss/sp, p-scale for ecp/h1
    double generalized_p = 0.0;  // ss/sp only, NaN otherwise
    std::uint64_t seed = 0;
    std::size_t B = 0;
    std::size_t D = 0;
    std::uint64_t table_checksum = 0; // 0 when no table involved
    std::size_t retries_used = 0;
    std::vector<std::string> warnings;

    bool any_reject() const;
};

// B values of T_max from the independence null: every column resampled
// with replacement on its own, killing all cross-column association, then
// the full skipped-correlation pipeline on each bootstrap matrix. Sorted.
std::vector<double> null_tmax_distribution(const data_matrix& data,
                                           estimator_kind kind,
                                           const bootstrap_config& cfg,
                                           const detection_rule& rule);

// Reject pairs with |T_jk| >= HD_{1-alpha}(null T_max sample).
test_report test_ss_sp(const data_matrix& data, estimator_kind kind,
                       double alpha, const bootstrap_config& cfg,
                       const detection_rule& rule);

// 1 - q*, where q* solves HD_q(null) = observed T_max; bisection in q to
// 1e-4. Observed infinity maps to 0.
double generalized_pvalue_ss(double t_max_observed,
                             const std::vector<double>& null_sorted);

struct pair_bootstrap_result {
    double estimate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double pvalue = 0.0;
    std::size_t retries = 0;
};

// Row-resampling percentile bootstrap on an n x 2 matrix: CI from the
// (l+1)th and uth order statistics with l = round_half_even(alpha*B/2),
// p-value 2*min(Q, 1-Q) with Q the fraction of negative bootstrap
// estimates.
pair_bootstrap_result percentile_bootstrap_pair(const data_matrix& pair_data,
                                                estimator_kind kind,
                                                double alpha,
                                                const bootstrap_config& cfg,
                                                const detection_rule& rule);

// Step-up: descending p-values against alpha/k; first k that fires rejects
// everything at or below that threshold.
std::vector<char> hochberg(const std::vector<double>& pvalues, double alpha);

// D replications of "draw an independent standard normal dataset, collect
// the minimum per-hypothesis percentile-bootstrap p-value". Pairwise mode
// tests the (p^2-p)/2 column pairs of an n x p draw; regression mode draws
// n x (p+1) and tests the p column-0-vs-predictor hypotheses. Each pair
// gets a fresh substream inside a replication; replications that exhaust
// their retries are redrawn and counted.
calibration_table generate_calibration_table(std::size_t n, std::size_t p,
                                             std::size_t D,
                                             const bootstrap_config& cfg,
                                             table_mode mode,
                                             estimator_kind kind,
                                             const detection_rule& rule);

// HD alpha quantile of the stored minimum p-values.
double critical_pvalue_ecp(const calibration_table& table, double alpha);

// Reject pairs whose percentile-bootstrap p-value is at or below the
// critical p from a matching (n, p, mode, estimator) table.
test_report test_ecp(const data_matrix& data, double alpha,
                     const bootstrap_config& cfg,
                     const calibration_table& table,
                     const detection_rule& rule);

// Per-pair percentile-bootstrap p-values straight into hochberg.
test_report test_h(const data_matrix& data, estimator_kind kind, double alpha,
                   const bootstrap_config& cfg, const detection_rule& rule);

// Design-size bins for the small-sample p-value adjustment.
//   20 <= n <= 40  -> V_30      71 <= n <= 100 -> V_80
//   41 <= n <= 70  -> V_60     101 <= n <= 120 -> V_100
// n > 120: identity. n < 20: below the calibrated range, error.
std::size_t adjustment_bin(std::size_t n);

// Solves HD_q(V_bin) = p_raw for q (the adjusted p-value), after clamping
// p_raw away from 0 and 1 by 1/(B+1). Monotone in p_raw.
double adjusted_pvalue(double p_raw, std::size_t n, const table_store& store,
                       estimator_kind kind, std::size_t D,
                       std::size_t B_for_clamp);

// Raw per-pair p-values -> adjusted_pvalue -> hochberg. table_D sizes the
// bin-table lookup (the regression tables default to D = 2000).
test_report test_h1(const data_matrix& data, estimator_kind kind, double alpha,
                    const bootstrap_config& cfg, const table_store& store,
                    const detection_rule& rule, std::size_t table_D = 2000);

// Regression screen without the small-sample adjustment: raw per-predictor
// p-values straight into hochberg. Runs well below the nominal level for
// small n; test_l3 is the calibrated variant.
test_report test_l(const std::vector<double>& y, const data_matrix& x,
                   estimator_kind kind, double alpha,
                   const bootstrap_config& cfg, const detection_rule& rule);

// Regression screen: outliers detected once on the joint cloud (y adjoined
// as column 0), then one skipped correlation per predictor against y. The
// bootstrap resamples rows of the joint data, one shared set of B resamples
// feeding every predictor. Adjusted p-values use the regression-mode bin
// tables; decisions via hochberg.
test_report test_l3(const std::vector<double>& y, const data_matrix& x,
                    estimator_kind kind, double alpha,
                    const bootstrap_config& cfg, const table_store& store,
                    const detection_rule& rule, std::size_t table_D = 2000);

} // namespace skipcorr
