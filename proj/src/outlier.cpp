#include "skipcorr/outlier.hpp"

#include <algorithm>
#include <cmath>

#include "skipcorr/core_stats.hpp"
#include "skipcorr/rng.hpp"

namespace skipcorr {

std::vector<double> marginal_medians(const data_matrix& data) {
    std::size_t p = data.cols();
    std::vector<double> center(p);
    std::vector<double> col(data.rows());
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < data.rows(); ++i)
            col[i] = data(i, j);
        center[j] = median_inplace(col);
    }
    return center;
}

std::vector<double> projection_distances(const data_matrix& data,
                                         const std::vector<double>& center,
                                         std::size_t anchor_index) {
    std::size_t n = data.rows();
    std::size_t p = data.cols();
    if (center.size() != p)
        throw stat_error("center length mismatch");

    std::vector<double> a(p);
    double a_norm2 = 0.0;
    for (std::size_t c = 0; c < p; ++c) {
        a[c] = data(anchor_index, c) - center[c];
        a_norm2 += a[c] * a[c];
    }
    if (a_norm2 == 0.0)
        throw stat_error("degenerate projection axis");

    std::vector<double> dist(n);
    for (std::size_t j = 0; j < n; ++j) {
        double dot = 0.0;
        double b_norm2 = 0.0;
        for (std::size_t c = 0; c < p; ++c) {
            double b = data(j, c) - center[c];
            dot += a[c] * b;
            b_norm2 += b * b;
        }
        // ||(A'B / B'B) B|| = |A'B| / ||B||; a point at the center projects
        // to the origin.
        dist[j] = (b_norm2 == 0.0) ? 0.0 : std::abs(dot) / std::sqrt(b_norm2);
    }
    return dist;
}

void projection_detector::detect(const data_matrix& data,
                                 const detection_rule& rule,
                                 outlier_mask& out) {
    std::size_t n = data.rows();
    std::size_t p = data.cols();
    double gval = std::sqrt(chi_square_quantile_cached(rule.chi_prob,
                                                       static_cast<int>(p)));

    center_.resize(p);
    col_.resize(n);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            col_[i] = data(i, j);
        center_[j] = median_inplace(col_);
    }

    centered_.resize(n * p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < p; ++c)
            centered_[i * p + c] = data(i, c) - center_[c];

    out.flags.assign(n, 0);
    dist_.resize(n);
    scratch_.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double* anchor = centered_.data() + i * p;
        double norm2 = 0.0;
        for (std::size_t c = 0; c < p; ++c)
            norm2 += anchor[c] * anchor[c];
        if (norm2 == 0.0)
            continue; // the anchor sits on the center: no direction, skip
        double inv_norm = 1.0 / std::sqrt(norm2);

        if (p == 2) {
            double a0 = anchor[0], a1 = anchor[1];
            for (std::size_t j = 0; j < n; ++j) {
                const double* b = centered_.data() + j * 2;
                dist_[j] = std::abs(a0 * b[0] + a1 * b[1]) * inv_norm;
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                const double* b = centered_.data() + j * p;
                double dot = 0.0;
                for (std::size_t c = 0; c < p; ++c)
                    dot += anchor[c] * b[c];
                dist_[j] = std::abs(dot) * inv_norm;
            }
        }

        scratch_.assign(dist_.begin(), dist_.end());
        std::sort(scratch_.begin(), scratch_.end());
        double md = (n % 2 == 1)
                        ? scratch_[n / 2]
                        : 0.5 * (scratch_[n / 2 - 1] + scratch_[n / 2]);

        double spread;
        if (rule.variant == detection_variant::iqr_rule) {
            ideal_fourths_t f = ideal_fourths_sorted(scratch_);
            spread = f.q2 - f.q1;
        } else {
            for (std::size_t j = 0; j < n; ++j)
                scratch_[j] = std::abs(dist_[j] - md);
            spread = median_inplace(scratch_) / 0.6745;
        }
        if (spread == 0.0)
            throw degenerate_error("zero spread in projection",
                                   static_cast<long>(i));

        double cutoff = md + gval * spread;
        for (std::size_t j = 0; j < n; ++j)
            if (dist_[j] > cutoff)
                out.flags[j] = 1;
    }

    out.count_flagged = 0;
    for (char f : out.flags)
        out.count_flagged += (f != 0);
}

outlier_mask detect_outliers(const data_matrix& data, const detection_rule& rule) {
    projection_detector det;
    outlier_mask mask;
    det.detect(data, rule, mask);
    return mask;
}

rate_estimate outside_rate(std::size_t n, std::size_t p, std::size_t reps,
                           const detection_rule& rule, std::uint64_t seed) {
    if (reps < 100)
        throw stat_error("outside_rate needs at least 100 replications");
    rng_stream master(seed);
    projection_detector det;
    outlier_mask mask;
    neumaier_sum total;
    std::size_t skipped = 0;
    std::vector<double> flat(n * p);
    for (std::size_t r = 0; r < reps; ++r) {
        rng_stream rep = master.substream(r);
        for (double& v : flat)
            v = rep.normal();
        data_matrix data(n, p, flat);
        try {
            det.detect(data, rule, mask);
            total.add(static_cast<double>(mask.count_flagged) /
                      static_cast<double>(n));
        } catch (const degenerate_error&) {
            ++skipped;
        }
    }
    std::size_t used = reps - skipped;
    if (used == 0)
        throw stat_error("all outside_rate replications degenerate");
    return {total.value() / static_cast<double>(used), skipped};
}

} // namespace skipcorr
