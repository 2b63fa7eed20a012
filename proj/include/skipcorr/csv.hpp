#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skipcorr/matrix.hpp"

namespace skipcorr {

enum class missing_policy { listwise, fail };

struct csv_options {
    char delimiter = ',';
    bool header = true;
    missing_policy missing = missing_policy::listwise;
};

struct dataset {
    std::vector<std::string> column_names;
    data_matrix matrix;
    std::optional<std::size_t> dependent; // column index for regression runs
    std::string source_path;
    std::size_t dropped_rows = 0;
};

// Numeric CSV reader. Empty cells and the usual NA spellings count as
// missing; listwise drops the whole row and reports how many went.
dataset ingest_csv(const std::string& path, const csv_options& options);

} // namespace skipcorr
