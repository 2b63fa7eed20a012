#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skipcorr/matrix.hpp"

namespace skipcorr {

enum class detection_variant { iqr_rule, mad_rule };

struct detection_rule {
    detection_variant variant = detection_variant::iqr_rule;
    double chi_prob = 0.95;
};

struct outlier_mask {
    std::vector<char> flags;
    std::size_t count_flagged = 0;
};

std::vector<double> marginal_medians(const data_matrix& data);

// Distances of the projections C_j = (A_i'B_j / B_j'B_j) B_j from the
// origin, with A_i = X_i - center and B_j = X_j - center. Points sitting
// exactly at the center get D_j = 0. The anchor row must differ from the
// center or there is no axis to speak of.
std::vector<double> projection_distances(const data_matrix& data,
                                         const std::vector<double>& center,
                                         std::size_t anchor_index);

// Flags row j when, along some anchor direction i, its projected distance
// exceeds median + sqrt(chi2_{chi_prob,p}) * spread. The distances read
// along direction i are projection_distances(..., anchor = j)[i]: projecting
// A_i onto every B_j and projecting every B_j onto B_i produce transposed
// copies of the same array of numbers, so the detector consumes the printed
// formula's output transposed.
outlier_mask detect_outliers(const data_matrix& data, const detection_rule& rule);

// Scratch buffers for the hot loop; detect() never allocates after warmup.
class projection_detector {
public:
    projection_detector() = default;

    void detect(const data_matrix& data, const detection_rule& rule,
                outlier_mask& out);

private:
    std::vector<double> centered_;
    std::vector<double> center_;
    std::vector<double> dist_;
    std::vector<double> scratch_;
    std::vector<double> col_;
};

struct rate_estimate {
    double value = 0.0;
    std::size_t skipped = 0;
};

// Monte Carlo outside rate per observation under p-variate standard normal
// samples. Replications where the detector degenerates are skipped and
// counted, not hidden.
rate_estimate outside_rate(std::size_t n, std::size_t p, std::size_t reps,
                           const detection_rule& rule, std::uint64_t seed);

} // namespace skipcorr
