#include "skipcorr/matrix.hpp"

#include <cmath>

namespace skipcorr {

data_matrix::data_matrix(std::size_t n, std::size_t p, std::vector<double> entries)
    : n_(n), p_(p), entries_(std::move(entries)) {
    if (n_ < 2 || p_ < 2)
        throw stat_error("data matrix needs at least 2 rows and 2 columns");
    if (entries_.size() != n_ * p_)
        throw stat_error("data matrix shape mismatch");
    for (double v : entries_)
        if (!std::isfinite(v))
            throw stat_error("data matrix entries must be finite");
}

data_matrix data_matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        throw stat_error("data matrix needs at least 2 rows and 2 columns");
    std::size_t p = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * p);
    for (const auto& r : rows) {
        if (r.size() != p)
            throw stat_error("data matrix rows have unequal lengths");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return data_matrix(rows.size(), p, std::move(flat));
}

std::vector<double> data_matrix::column(std::size_t j) const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = entries_[i * p_ + j];
    return out;
}

data_matrix data_matrix::pair_submatrix(std::size_t j, std::size_t k) const {
    std::vector<double> flat(n_ * 2);
    for (std::size_t i = 0; i < n_; ++i) {
        flat[i * 2] = entries_[i * p_ + j];
        flat[i * 2 + 1] = entries_[i * p_ + k];
    }
    return data_matrix(n_, 2, std::move(flat));
}

data_matrix data_matrix::take_rows(const std::vector<std::size_t>& idx) const {
    std::vector<double> flat(idx.size() * p_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double* src = entries_.data() + idx[i] * p_;
        std::copy(src, src + p_, flat.begin() + i * p_);
    }
    return data_matrix(idx.size(), p_, std::move(flat));
}

} // namespace skipcorr
