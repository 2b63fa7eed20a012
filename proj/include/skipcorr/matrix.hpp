#pragma once

#include <cstddef>
#include <vector>

#include "skipcorr/common.hpp"

namespace skipcorr {

// Dense row-major n x p matrix of finite reals. n >= 2 and p >= 2 are
// enforced; every analysis in the library starts from one of these.
class data_matrix {
public:
    data_matrix(std::size_t n, std::size_t p, std::vector<double> entries);

    static data_matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return p_; }

    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * p_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return entries_[i * p_ + j];
    }

    const double* row_ptr(std::size_t i) const { return entries_.data() + i * p_; }
    const std::vector<double>& raw() const { return entries_; }

    std::vector<double> column(std::size_t j) const;

    // n x 2 matrix of columns (j, k); the unit of pairwise analysis.
    data_matrix pair_submatrix(std::size_t j, std::size_t k) const;

    // Rows picked by index, repeats allowed (bootstrap resampling).
    data_matrix take_rows(const std::vector<std::size_t>& idx) const;

private:
    std::size_t n_;
    std::size_t p_;
    std::vector<double> entries_;
};

} // namespace skipcorr
