#include "skipcorr/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "skipcorr/core_stats.hpp"
#include "skipcorr/parallel.hpp"
#include "skipcorr/rng.hpp"

namespace skipcorr {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw stat_error("alpha must lie strictly between 0 and 1");
}

std::vector<std::pair<std::size_t, std::size_t>> column_pairs(std::size_t p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(p * (p - 1) / 2);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = j + 1; k < p; ++k)
            pairs.emplace_back(j, k);
    return pairs;
}

double tau_of_pair(const data_matrix& pair_data, estimator_kind kind,
                   const detection_rule& rule) {
    return skipped_correlation_matrix(pair_data, kind, rule).estimates.front().value;
}

// Each column resampled with replacement on its own; this is the
// independence null for the T_max reference distribution.
data_matrix resample_columns(const data_matrix& data, rng_stream& stream) {
    const std::size_t n = data.rows();
    const std::size_t p = data.cols();
    std::vector<double> entries(n * p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i)
            entries[i * p + j] = data(stream.below(n), j);
    return data_matrix(n, p, std::move(entries));
}

// B skipped correlations of row-resampled copies of an n x 2 matrix.
// Replicate b lives on stream.substream(b); a degenerate resample keeps
// drawing from the same substream, so retries stay deterministic.
std::vector<double> pair_bootstrap_taus(const data_matrix& pair_data,
                                        estimator_kind kind, std::size_t B,
                                        int max_retries,
                                        const detection_rule& rule,
                                        const rng_stream& stream,
                                        std::size_t& retries) {
    const std::size_t n = pair_data.rows();
    std::vector<double> taus(B);
    std::vector<std::size_t> retry_slots(B, 0);
    parallel_for(0, B, [&](std::size_t b) {
        rng_stream bs = stream.substream(b);
        std::vector<std::size_t> idx(n);
        int attempt = 0;
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = bs.below(n);
            try {
                taus[b] = tau_of_pair(pair_data.take_rows(idx), kind, rule);
                break;
            } catch (const degenerate_error&) {
                if (++attempt > max_retries)
                    throw stat_error(
                        "bootstrap degeneracy: a resample stayed degenerate "
                        "after max_retries redraws");
                ++retry_slots[b];
            }
        }
    });
    for (std::size_t r : retry_slots)
        retries += r;
    return taus;
}

// Shared core of the percentile bootstrap: the caller controls the stream
// so table generation and test paths can hand out substreams; cfg.seed is
// ignored here.
pair_bootstrap_result pair_bootstrap(const data_matrix& pair_data,
                                     estimator_kind kind, double alpha,
                                     const bootstrap_config& cfg,
                                     const detection_rule& rule,
                                     const rng_stream& stream) {
    pair_bootstrap_result out;
    out.estimate = tau_of_pair(pair_data, kind, rule);
    std::vector<double> taus = pair_bootstrap_taus(
        pair_data, kind, cfg.B, cfg.max_retries, rule, stream, out.retries);
    std::sort(taus.begin(), taus.end());

    const std::size_t B = taus.size();
    const auto ell =
        static_cast<std::size_t>(std::nearbyint(alpha * static_cast<double>(B) / 2.0));
    const std::size_t u = B - ell;
    out.ci_lo = taus[ell];
    out.ci_hi = taus[u - 1];

    std::size_t negatives = 0;
    for (double t : taus)
        if (t < 0.0)
            ++negatives;
    const double q_frac = static_cast<double>(negatives) / static_cast<double>(B);
    out.pvalue = 2.0 * std::min(q_frac, 1.0 - q_frac);
    return out;
}

std::vector<double> null_tmax_impl(const data_matrix& data, estimator_kind kind,
                                   const bootstrap_config& cfg,
                                   const detection_rule& rule,
                                   std::size_t& retries) {
    if (cfg.B < 2)
        throw stat_error("bootstrap needs B >= 2");
    const std::size_t n = data.rows();
    rng_stream master(cfg.seed);
    std::vector<double> tmax(cfg.B);
    std::vector<std::size_t> retry_slots(cfg.B, 0);
    parallel_for(0, cfg.B, [&](std::size_t b) {
        rng_stream bs = master.substream(b);
        int attempt = 0;
        for (;;) {
            data_matrix draw = resample_columns(data, bs);
            try {
                tmax[b] = t_max(skipped_correlation_matrix(draw, kind, rule), n);
                break;
            } catch (const degenerate_error&) {
                if (++attempt > cfg.max_retries)
                    throw stat_error(
                        "bootstrap degeneracy: a null resample stayed "
                        "degenerate after max_retries redraws");
                ++retry_slots[b];
            }
        }
    });
    for (std::size_t r : retry_slots)
        retries += r;
    std::sort(tmax.begin(), tmax.end());
    return tmax;
}

} // namespace

bool test_report::any_reject() const {
    for (const auto& h : hypotheses)
        if (h.reject)
            return true;
    return false;
}

std::vector<double> null_tmax_distribution(const data_matrix& data,
                                           estimator_kind kind,
                                           const bootstrap_config& cfg,
                                           const detection_rule& rule) {
    std::size_t retries = 0;
    return null_tmax_impl(data, kind, cfg, rule, retries);
}

test_report test_ss_sp(const data_matrix& data, estimator_kind kind,
                       double alpha, const bootstrap_config& cfg,
                       const detection_rule& rule) {
    check_alpha(alpha);
    test_report report;
    report.method = kind == estimator_kind::spearman ? "ss" : "sp";
    report.alpha = alpha;
    report.n = data.rows();
    report.p = data.cols();
    report.estimator = kind;
    report.seed = cfg.seed;
    report.B = cfg.B;

    skipped_matrix observed = skipped_correlation_matrix(data, kind, rule);
    std::vector<double> null_sample =
        null_tmax_impl(data, kind, cfg, rule, report.retries_used);
    const double critical = harrell_davis_sorted(null_sample, 1.0 - alpha);
    report.critical_value = critical;
    report.generalized_p =
        generalized_pvalue_ss(t_max(observed, data.rows()), null_sample);

    report.hypotheses.reserve(observed.estimates.size());
    for (const auto& est : observed.estimates) {
        hypothesis_result h;
        h.j = est.j;
        h.k = est.k;
        h.estimate = est.value;
        h.statistic = t_from_tau(est.value, data.rows());
        h.raw_p = nan_v;
        h.adjusted_p = nan_v;
        h.ci_lo = nan_v;
        h.ci_hi = nan_v;
        h.reject = std::abs(h.statistic) >= critical;
        report.hypotheses.push_back(h);
    }
    return report;
}

double generalized_pvalue_ss(double t_max_observed,
                             const std::vector<double>& null_sorted) {
    if (null_sorted.empty())
        throw stat_error("generalized p-value needs a non-empty null sample");
    if (std::isinf(t_max_observed))
        return 0.0;
    double q_lo = 0.001;
    double q_hi = 0.999;
    if (harrell_davis_sorted(null_sorted, q_hi) < t_max_observed)
        return 1.0 - q_hi;
    if (harrell_davis_sorted(null_sorted, q_lo) >= t_max_observed)
        return 1.0 - q_lo;
    while (q_hi - q_lo > 1e-4) {
        const double mid = 0.5 * (q_lo + q_hi);
        if (harrell_davis_sorted(null_sorted, mid) < t_max_observed)
            q_lo = mid;
        else
            q_hi = mid;
    }
    return 1.0 - 0.5 * (q_lo + q_hi);
}

pair_bootstrap_result percentile_bootstrap_pair(const data_matrix& pair_data,
                                                estimator_kind kind,
                                                double alpha,
                                                const bootstrap_config& cfg,
                                                const detection_rule& rule) {
    if (pair_data.cols() != 2)
        throw stat_error("pairwise bootstrap needs an n x 2 matrix");
    check_alpha(alpha);
    if (cfg.B < 2)
        throw stat_error("bootstrap needs B >= 2");
    return pair_bootstrap(pair_data, kind, alpha, cfg, rule,
                          rng_stream(cfg.seed));
}

std::vector<char> hochberg(const std::vector<double>& pvalues, double alpha) {
    check_alpha(alpha);
    for (double p : pvalues)
        if (!(p >= 0.0 && p <= 1.0))
            throw stat_error("p-values must lie in [0, 1]");
    const std::size_t count = pvalues.size();
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pvalues[a] > pvalues[b];
    });

    std::vector<char> reject(count, 0);
    for (std::size_t k = 1; k <= count; ++k) {
        const double threshold = alpha / static_cast<double>(k);
        if (pvalues[order[k - 1]] <= threshold) {
            for (std::size_t i = 0; i < count; ++i)
                reject[i] = pvalues[i] <= threshold ? 1 : 0;
            break;
        }
    }
    return reject;
}

calibration_table generate_calibration_table(std::size_t n, std::size_t p,
                                             std::size_t D,
                                             const bootstrap_config& cfg,
                                             table_mode mode,
                                             estimator_kind kind,
                                             const detection_rule& rule) {
    if (n < 20)
        throw stat_error("calibration tables need n >= 20");
    if (mode == table_mode::pairwise && p < 2)
        throw stat_error("pairwise calibration needs p >= 2");
    if (mode == table_mode::regression && p < 1)
        throw stat_error("regression calibration needs p >= 1 predictors");
    if (D < 2)
        throw stat_error("calibration needs D >= 2 replications");

    std::vector<std::pair<std::size_t, std::size_t>> hyps;
    if (mode == table_mode::pairwise) {
        hyps = column_pairs(p);
    } else {
        for (std::size_t c = 0; c < p; ++c)
            hyps.emplace_back(0, c + 1);
    }
    const std::size_t draw_cols = mode == table_mode::pairwise ? p : p + 1;

    rng_stream master(cfg.seed);
    std::vector<double> values(D);
    std::vector<std::size_t> skip_slots(D, 0);
    parallel_for(0, D, [&](std::size_t d) {
        rng_stream rep = master.substream(d);
        for (std::uint64_t attempt = 0;; ++attempt) {
            if (attempt > static_cast<std::uint64_t>(cfg.max_retries))
                throw stat_error(
                    "calibration replication stayed degenerate after "
                    "max_retries redraws");
            rng_stream at = rep.substream(attempt);
            rng_stream gen = at.substream(0);
            std::vector<double> entries(n * draw_cols);
            for (double& e : entries)
                e = gen.normal();
            data_matrix draw(n, draw_cols, std::move(entries));
            try {
                double min_p = 2.0;
                for (std::size_t c = 0; c < hyps.size(); ++c) {
                    pair_bootstrap_result res = pair_bootstrap(
                        draw.pair_submatrix(hyps[c].first, hyps[c].second),
                        kind, 0.05, cfg, rule, at.substream(1 + c));
                    min_p = std::min(min_p, res.pvalue);
                }
                values[d] = min_p;
                break;
            } catch (const stat_error&) {
                ++skip_slots[d];
            }
        }
    });
    std::sort(values.begin(), values.end());

    calibration_table table;
    table.key.method = mode == table_mode::pairwise ? "ecp" : "h1";
    table.key.mode = mode;
    table.key.n_design = n;
    table.key.p = p;
    table.key.D = D;
    table.key.estimator = kind;
    table.seed = cfg.seed;
    for (std::size_t s : skip_slots)
        table.skipped_replications += s;
    table.values = std::move(values);
    return table;
}

double critical_pvalue_ecp(const calibration_table& table, double alpha) {
    check_alpha(alpha);
    if (table.values.empty())
        throw stat_error("calibration table has no values");
    return harrell_davis_sorted(table.values, alpha);
}

test_report test_ecp(const data_matrix& data, double alpha,
                     const bootstrap_config& cfg,
                     const calibration_table& table,
                     const detection_rule& rule) {
    check_alpha(alpha);
    if (table.key.method != "ecp" || table.key.mode != table_mode::pairwise ||
        table.key.n_design != data.rows() || table.key.p != data.cols())
        throw stat_error("calibration table does not match the data: need an "
                         "ecp pairwise table with n = " +
                         std::to_string(data.rows()) +
                         ", p = " + std::to_string(data.cols()));

    const estimator_kind kind = table.key.estimator;
    const double critical = critical_pvalue_ecp(table, alpha);

    test_report report;
    report.method = "ecp";
    report.alpha = alpha;
    report.n = data.rows();
    report.p = data.cols();
    report.estimator = kind;
    report.critical_value = critical;
    report.generalized_p = nan_v;
    report.seed = cfg.seed;
    report.B = cfg.B;
    report.D = table.key.D;
    report.table_checksum = table.checksum();

    rng_stream master(cfg.seed);
    const auto pairs = column_pairs(data.cols());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        pair_bootstrap_result res =
            pair_bootstrap(data.pair_submatrix(pairs[c].first, pairs[c].second),
                           kind, alpha, cfg, rule, master.substream(c));
        report.retries_used += res.retries;
        hypothesis_result h;
        h.j = pairs[c].first;
        h.k = pairs[c].second;
        h.estimate = res.estimate;
        h.statistic = nan_v;
        h.raw_p = res.pvalue;
        h.adjusted_p = nan_v;
        h.ci_lo = res.ci_lo;
        h.ci_hi = res.ci_hi;
        h.reject = res.pvalue <= critical;
        report.hypotheses.push_back(h);
    }
    return report;
}

test_report test_h(const data_matrix& data, estimator_kind kind, double alpha,
                   const bootstrap_config& cfg, const detection_rule& rule) {
    check_alpha(alpha);
    test_report report;
    report.method = "h";
    report.alpha = alpha;
    report.n = data.rows();
    report.p = data.cols();
    report.estimator = kind;
    report.critical_value = nan_v;
    report.generalized_p = nan_v;
    report.seed = cfg.seed;
    report.B = cfg.B;

    rng_stream master(cfg.seed);
    const auto pairs = column_pairs(data.cols());
    std::vector<double> raw(pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        pair_bootstrap_result res =
            pair_bootstrap(data.pair_submatrix(pairs[c].first, pairs[c].second),
                           kind, alpha, cfg, rule, master.substream(c));
        report.retries_used += res.retries;
        raw[c] = res.pvalue;
        hypothesis_result h;
        h.j = pairs[c].first;
        h.k = pairs[c].second;
        h.estimate = res.estimate;
        h.statistic = nan_v;
        h.raw_p = res.pvalue;
        h.adjusted_p = nan_v;
        h.ci_lo = res.ci_lo;
        h.ci_hi = res.ci_hi;
        report.hypotheses.push_back(h);
    }
    std::vector<char> reject = hochberg(raw, alpha);
    for (std::size_t c = 0; c < pairs.size(); ++c)
        report.hypotheses[c].reject = reject[c] != 0;
    return report;
}

std::size_t adjustment_bin(std::size_t n) {
    if (n < 20)
        throw stat_error("n below the calibrated range for the p-value "
                         "adjustment (need n >= 20)");
    if (n <= 40)
        return 30;
    if (n <= 70)
        return 60;
    if (n <= 100)
        return 80;
    if (n <= 120)
        return 100;
    return 0;
}

namespace {

// The bisection below costs a few thousand beta CDF evaluations, and the
// simulation layer asks for the same handful of clamped p-values millions
// of times, so solved points are memoized. The key carries the table's
// first and last value alongside its buffer address: a recycled address
// with different content cannot produce a stale hit.
double solve_adjustment(const calibration_table& table, double p_clamped) {
    using memo_key = std::tuple<const double*, double, double, double>;
    static std::mutex memo_mutex;
    static std::map<memo_key, double> memo;

    const memo_key key{table.values.data(), table.values.front(),
                       table.values.back(), p_clamped};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }

    double q_lo = 1e-6;
    double q_hi = 1.0 - 1e-6;
    double solved;
    if (harrell_davis_sorted(table.values, q_lo) >= p_clamped) {
        solved = 0.0;
    } else if (harrell_davis_sorted(table.values, q_hi) <= p_clamped) {
        solved = 1.0;
    } else {
        while (q_hi - q_lo > 1e-4) {
            const double mid = 0.5 * (q_lo + q_hi);
            if (harrell_davis_sorted(table.values, mid) < p_clamped)
                q_lo = mid;
            else
                q_hi = mid;
        }
        solved = 0.5 * (q_lo + q_hi);
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, solved);
    return solved;
}

const calibration_table& bin_table(const table_store& store, std::size_t bin,
                                   estimator_kind kind, std::size_t D) {
    table_key key;
    key.method = "h1";
    key.mode = table_mode::regression;
    key.n_design = bin;
    key.p = 1;
    key.D = D;
    key.estimator = kind;
    return store.get(key);
}

} // namespace

double adjusted_pvalue(double p_raw, std::size_t n, const table_store& store,
                       estimator_kind kind, std::size_t D,
                       std::size_t B_for_clamp) {
    if (!(p_raw >= 0.0 && p_raw <= 1.0))
        throw stat_error("p-values must lie in [0, 1]");
    const std::size_t bin = adjustment_bin(n);
    if (bin == 0)
        return p_raw;
    const calibration_table& table = bin_table(store, bin, kind, D);
    const double edge = 1.0 / (static_cast<double>(B_for_clamp) + 1.0);
    const double p_clamped = std::clamp(p_raw, edge, 1.0 - edge);
    return solve_adjustment(table, p_clamped);
}

test_report test_h1(const data_matrix& data, estimator_kind kind, double alpha,
                    const bootstrap_config& cfg, const table_store& store,
                    const detection_rule& rule, std::size_t table_D) {
    check_alpha(alpha);
    const std::size_t n = data.rows();
    const std::size_t bin = adjustment_bin(n); // n < 20 rejected up front

    test_report report;
    report.method = "h1";
    report.alpha = alpha;
    report.n = n;
    report.p = data.cols();
    report.estimator = kind;
    report.generalized_p = nan_v;
    report.seed = cfg.seed;
    report.B = cfg.B;
    if (data.cols() > 4)
        report.warnings.push_back(
            "p > 4 is outside the validated operating range for h1");
    if (bin != 0) {
        const calibration_table& table = bin_table(store, bin, kind, table_D);
        report.critical_value = harrell_davis_sorted(table.values, alpha);
        report.D = table_D;
        report.table_checksum = table.checksum();
    } else {
        report.critical_value = alpha;
    }

    rng_stream master(cfg.seed);
    const auto pairs = column_pairs(data.cols());
    std::vector<double> adjusted(pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        pair_bootstrap_result res =
            pair_bootstrap(data.pair_submatrix(pairs[c].first, pairs[c].second),
                           kind, alpha, cfg, rule, master.substream(c));
        report.retries_used += res.retries;
        adjusted[c] =
            adjusted_pvalue(res.pvalue, n, store, kind, table_D, cfg.B);
        hypothesis_result h;
        h.j = pairs[c].first;
        h.k = pairs[c].second;
        h.estimate = res.estimate;
        h.statistic = nan_v;
        h.raw_p = res.pvalue;
        h.adjusted_p = adjusted[c];
        h.ci_lo = res.ci_lo;
        h.ci_hi = res.ci_hi;
        report.hypotheses.push_back(h);
    }
    std::vector<char> reject = hochberg(adjusted, alpha);
    for (std::size_t c = 0; c < pairs.size(); ++c)
        report.hypotheses[c].reject = reject[c] != 0;
    return report;
}

namespace {

// Shared body of methods l and l3; store == nullptr skips the adjustment.
test_report regression_screen(const std::vector<double>& y,
                              const data_matrix& x, estimator_kind kind,
                              double alpha, const bootstrap_config& cfg,
                              const table_store* store,
                              const detection_rule& rule,
                              std::size_t table_D) {
    check_alpha(alpha);
    const std::size_t n = x.rows();
    const std::size_t p = x.cols();
    if (y.size() != n)
        throw stat_error("dependent variable length must match the row count");
    for (double v : y)
        if (!std::isfinite(v))
            throw stat_error("dependent variable entries must be finite");
    const std::size_t bin = store ? adjustment_bin(n) : 0;

    std::vector<double> entries(n * (p + 1));
    for (std::size_t i = 0; i < n; ++i) {
        entries[i * (p + 1)] = y[i];
        for (std::size_t j = 0; j < p; ++j)
            entries[i * (p + 1) + j + 1] = x(i, j);
    }
    const data_matrix joint(n, p + 1, std::move(entries));

    test_report report;
    report.method = store ? "l3" : "l";
    report.alpha = alpha;
    report.n = n;
    report.p = p;
    report.estimator = kind;
    report.generalized_p = nan_v;
    report.seed = cfg.seed;
    report.B = cfg.B;
    if (p > 8)
        report.warnings.push_back(
            "p > 8 is outside the validated operating range for the "
            "regression screen");
    report.critical_value = nan_v;
    if (store) {
        if (bin != 0) {
            const calibration_table& table =
                bin_table(*store, bin, kind, table_D);
            report.critical_value = harrell_davis_sorted(table.values, alpha);
            report.D = table_D;
            report.table_checksum = table.checksum();
        } else {
            report.critical_value = alpha;
        }
    }

    // Predictor c sits at joint column c+1; the first p estimates of the
    // joint skipped matrix are exactly the (0, c+1) pairs.
    skipped_matrix observed = skipped_correlation_matrix(joint, kind, rule);

    rng_stream master(cfg.seed);
    std::vector<double> taus(cfg.B * p);
    std::vector<std::size_t> retry_slots(cfg.B, 0);
    parallel_for(0, cfg.B, [&](std::size_t b) {
        rng_stream bs = master.substream(b);
        std::vector<std::size_t> idx(n);
        int attempt = 0;
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = bs.below(n);
            try {
                skipped_matrix sm =
                    skipped_correlation_matrix(joint.take_rows(idx), kind, rule);
                for (std::size_t c = 0; c < p; ++c)
                    taus[b * p + c] = sm.estimates[c].value;
                break;
            } catch (const degenerate_error&) {
                if (++attempt > cfg.max_retries)
                    throw stat_error(
                        "bootstrap degeneracy: a resample stayed degenerate "
                        "after max_retries redraws");
                ++retry_slots[b];
            }
        }
    });
    for (std::size_t r : retry_slots)
        report.retries_used += r;

    const auto ell = static_cast<std::size_t>(
        std::nearbyint(alpha * static_cast<double>(cfg.B) / 2.0));
    const std::size_t u = cfg.B - ell;
    std::vector<double> adjusted(p);
    std::vector<double> column(cfg.B);
    for (std::size_t c = 0; c < p; ++c) {
        for (std::size_t b = 0; b < cfg.B; ++b)
            column[b] = taus[b * p + c];
        std::sort(column.begin(), column.end());
        std::size_t negatives = 0;
        for (double t : column)
            if (t < 0.0)
                ++negatives;
        const double q_frac =
            static_cast<double>(negatives) / static_cast<double>(cfg.B);
        const double raw = 2.0 * std::min(q_frac, 1.0 - q_frac);
        adjusted[c] =
            store ? adjusted_pvalue(raw, n, *store, kind, table_D, cfg.B)
                  : raw;

        hypothesis_result h;
        h.j = 0;
        h.k = c + 1;
        h.estimate = observed.estimates[c].value;
        h.statistic = nan_v;
        h.raw_p = raw;
        h.adjusted_p = store ? adjusted[c] : nan_v;
        h.ci_lo = column[ell];
        h.ci_hi = column[u - 1];
        report.hypotheses.push_back(h);
    }
    std::vector<char> reject = hochberg(adjusted, alpha);
    for (std::size_t c = 0; c < p; ++c)
        report.hypotheses[c].reject = reject[c] != 0;
    return report;
}

} // namespace

test_report test_l(const std::vector<double>& y, const data_matrix& x,
                   estimator_kind kind, double alpha,
                   const bootstrap_config& cfg, const detection_rule& rule) {
    return regression_screen(y, x, kind, alpha, cfg, nullptr, rule, 0);
}

test_report test_l3(const std::vector<double>& y, const data_matrix& x,
                    estimator_kind kind, double alpha,
                    const bootstrap_config& cfg, const table_store& store,
                    const detection_rule& rule, std::size_t table_D) {
    return regression_screen(y, x, kind, alpha, cfg, &store, rule, table_D);
}

} // namespace skipcorr
