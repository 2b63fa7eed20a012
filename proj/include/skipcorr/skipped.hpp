#pragma once

#include <cstddef>
#include <vector>

#include "skipcorr/matrix.hpp"
#include "skipcorr/outlier.hpp"

namespace skipcorr {

enum class estimator_kind { pearson, spearman };

const char* estimator_name(estimator_kind kind);

struct association_estimate {
    std::size_t j;
    std::size_t k;
    estimator_kind kind;
    double value;
    std::size_t m; // rows retained when the estimate was formed
};

struct skipped_matrix {
    std::size_t p = 0;
    std::vector<association_estimate> estimates; // all pairs j < k, row-major order
    outlier_mask mask;
};

// One detection pass on the full p-variate cloud; every pairwise estimate
// uses the same retained rows.
skipped_matrix skipped_correlation_matrix(const data_matrix& data,
                                          estimator_kind kind,
                                          const detection_rule& rule);

// tau * sqrt((n-2)/(1-tau^2)). Throws at |tau| = 1; t_from_tau below maps
// the boundary to +/-infinity instead, which is what max-statistic callers
// want (a perfect correlation outruns any critical value).
double t_statistic(double tau, std::size_t n);
double t_from_tau(double tau, std::size_t n);

double t_max(const skipped_matrix& matrix, std::size_t n);

} // namespace skipcorr
