#include "skipcorr/skipped.hpp"

#include <cmath>
#include <limits>

#include "skipcorr/core_stats.hpp"

namespace skipcorr {

const char* estimator_name(estimator_kind kind) {
    return kind == estimator_kind::pearson ? "pearson" : "spearman";
}

skipped_matrix skipped_correlation_matrix(const data_matrix& data,
                                          estimator_kind kind,
                                          const detection_rule& rule) {
    std::size_t n = data.rows();
    std::size_t p = data.cols();

    skipped_matrix result;
    result.p = p;
    result.mask = detect_outliers(data, rule);

    std::size_t m = n - result.mask.count_flagged;
    if (m < 3)
        throw degenerate_error("too few retained rows");

    std::vector<std::vector<double>> cols(p, std::vector<double>(m));
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (result.mask.flags[i])
            continue;
        for (std::size_t j = 0; j < p; ++j)
            cols[j][r] = data(i, j);
        ++r;
    }

    if (kind == estimator_kind::spearman)
        for (auto& c : cols)
            c = midranks(c);

    result.estimates.reserve(p * (p - 1) / 2);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = j + 1; k < p; ++k) {
            double value;
            try {
                value = pearson(cols[j], cols[k]);
            } catch (const degenerate_error&) {
                throw degenerate_error("degenerate column after skipping");
            }
            result.estimates.push_back({j, k, kind, value, m});
        }
    }
    return result;
}

double t_statistic(double tau, std::size_t n) {
    if (n < 3)
        throw stat_error("too few rows");
    if (!(tau >= -1.0 && tau <= 1.0))
        throw stat_error("correlation outside [-1,1]");
    if (tau == 1.0 || tau == -1.0)
        throw stat_error("boundary correlation");
    return tau * std::sqrt((n - 2) / (1.0 - tau * tau));
}

double t_from_tau(double tau, std::size_t n) {
    if (tau == 1.0)
        return std::numeric_limits<double>::infinity();
    if (tau == -1.0)
        return -std::numeric_limits<double>::infinity();
    return t_statistic(tau, n);
}

double t_max(const skipped_matrix& matrix, std::size_t n) {
    double best = 0.0;
    for (const auto& est : matrix.estimates) {
        double t = std::abs(t_from_tau(est.value, n));
        if (t > best)
            best = t;
    }
    return best;
}

} // namespace skipcorr
