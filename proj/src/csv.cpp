#include "skipcorr/csv.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace skipcorr {

namespace {

bool is_missing_token(const std::string& cell) {
    return cell.empty() || cell == "NA" || cell == "na" || cell == "NaN" ||
           cell == "nan" || cell == "N/A";
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

// One line into cells; double quotes protect delimiters, doubled quotes
// inside a quoted cell are literals.
std::vector<std::string> split_line(const std::string& line, char delimiter,
                                    std::size_t lineno) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"' && cell.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell += c;
        }
    }
    if (quoted)
        throw stat_error("unterminated quote on line " +
                         std::to_string(lineno));
    cells.push_back(cell);
    return cells;
}

} // namespace

dataset ingest_csv(const std::string& path, const csv_options& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw stat_error("cannot open " + path);

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trimmed(lines.back()).empty())
        lines.pop_back();
    if (lines.empty())
        throw stat_error(path + " is empty");

    std::size_t first_data = 0;
    std::vector<std::string> names;
    std::size_t p = 0;
    if (options.header) {
        auto cells = split_line(lines[0], options.delimiter, 1);
        for (auto& c : cells)
            names.push_back(trimmed(c));
        p = names.size();
        first_data = 1;
        std::set<std::string> unique(names.begin(), names.end());
        if (unique.size() != names.size())
            throw stat_error(path + " has duplicate column names");
    } else {
        p = split_line(lines[0], options.delimiter, 1).size();
        for (std::size_t j = 0; j < p; ++j)
            names.push_back("x" + std::to_string(j + 1));
    }
    if (p < 2)
        throw stat_error(path + " needs at least 2 columns");

    std::vector<double> entries;
    std::size_t kept = 0;
    std::size_t dropped = 0;
    std::vector<double> row(p);
    for (std::size_t i = first_data; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        if (trimmed(lines[i]).empty())
            throw stat_error(path + ": blank line " + std::to_string(lineno));
        auto cells = split_line(lines[i], options.delimiter, lineno);
        if (cells.size() != p)
            throw stat_error(path + ": line " + std::to_string(lineno) +
                             " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(p));
        bool missing = false;
        for (std::size_t j = 0; j < p; ++j) {
            const std::string cell = trimmed(cells[j]);
            if (is_missing_token(cell)) {
                if (options.missing == missing_policy::fail)
                    throw stat_error(path + ": missing value at line " +
                                     std::to_string(lineno) + ", column " +
                                     std::to_string(j + 1));
                missing = true;
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() + cell.size())
                throw stat_error(path + ": non-numeric cell '" + cell +
                                 "' at line " + std::to_string(lineno) +
                                 ", column " + std::to_string(j + 1));
            if (!std::isfinite(v))
                throw stat_error(path + ": non-finite value at line " +
                                 std::to_string(lineno) + ", column " +
                                 std::to_string(j + 1));
            row[j] = v;
        }
        if (missing) {
            ++dropped;
            continue;
        }
        entries.insert(entries.end(), row.begin(), row.end());
        ++kept;
    }

    if (kept < 3)
        throw stat_error(path + " has fewer than 3 usable rows");

    return dataset{std::move(names), data_matrix(kept, p, std::move(entries)),
                   std::nullopt, path, dropped};
}

} // namespace skipcorr
