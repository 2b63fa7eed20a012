#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "skipcorr/skipped.hpp"

namespace skipcorr {

enum class table_mode { pairwise, regression };

const char* mode_name(table_mode mode);

// Cache address of a calibration table. The estimator tag is part of the
// key: per-pair p-values differ between the pearson and spearman flavors,
// so their null tables are never interchangeable. Methods h1 and l3 share
// one regression-mode family (generated by `calibrate --preset h1`), keyed
// method = "h1".
struct table_key {
    std::string method; // "ecp" or "h1"
    table_mode mode = table_mode::pairwise;
    std::size_t n_design = 0;
    std::size_t p = 0;
    std::size_t D = 0;
    estimator_kind estimator = estimator_kind::pearson;

    std::string filename() const;
};

// Sorted sample of D minimum null p-values, plus everything needed to
// reproduce it.
struct calibration_table {
    table_key key;
    std::uint64_t seed = 0;
    std::size_t skipped_replications = 0;
    std::vector<double> values; // ascending, length D

    std::uint64_t checksum() const;
};

// Disk-backed table cache with an in-memory layer. Files are plain text:
// a `key: value` header block followed by one full-precision value per
// line; loads verify the recorded checksum and refuse corrupted files
// rather than recomputing behind the caller's back.
class table_store {
public:
    table_store() = default; // memory-only
    explicit table_store(std::filesystem::path dir);

    // SKIPCORR_CACHE_DIR if set, otherwise ./tables.
    static table_store from_env();

    bool contains(const table_key& key) const;
    const calibration_table& get(const table_key& key) const;
    void put(calibration_table table);

    void save(const calibration_table& table) const;
    std::filesystem::path path_for(const table_key& key) const;
    bool disk_backed() const { return disk_; }

    static calibration_table read_file(const std::filesystem::path& path);
    static void write_file(const calibration_table& table,
                           const std::filesystem::path& path);

private:
    std::filesystem::path dir_;
    bool disk_ = false;
    mutable std::map<std::string, calibration_table> memory_;
};

} // namespace skipcorr
