#include "skipcorr/table_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "skipcorr/common.hpp"

namespace skipcorr {

const char* mode_name(table_mode mode) {
    return mode == table_mode::pairwise ? "pairwise" : "regression";
}

std::string table_key::filename() const {
    std::ostringstream name;
    name << method << '_' << mode_name(mode) << '_' << estimator_name(estimator)
         << "_n" << n_design << "_p" << p << "_D" << D << ".table";
    return name.str();
}

namespace {

std::uint64_t fnv1a(std::uint64_t hash, const std::string& s) {
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 0x100000001B3ull;
    }
    return hash;
}

std::string canonical_text(const calibration_table& t) {
    std::ostringstream out;
    out << "method: " << t.key.method << '\n'
        << "mode: " << mode_name(t.key.mode) << '\n'
        << "estimator: " << estimator_name(t.key.estimator) << '\n'
        << "n_design: " << t.key.n_design << '\n'
        << "p: " << t.key.p << '\n'
        << "D: " << t.key.D << '\n'
        << "seed: " << t.seed << '\n'
        << "skipped: " << t.skipped_replications << '\n';
    for (double v : t.values)
        out << fmt_double(v) << '\n';
    return out.str();
}

} // namespace

std::uint64_t calibration_table::checksum() const {
    return fnv1a(0xCBF29CE484222325ull, canonical_text(*this));
}

table_store::table_store(std::filesystem::path dir)
    : dir_(std::move(dir)), disk_(true) {}

table_store table_store::from_env() {
    if (const char* env = std::getenv("SKIPCORR_CACHE_DIR"))
        return table_store(std::filesystem::path(env));
    return table_store(std::filesystem::path("tables"));
}

std::filesystem::path table_store::path_for(const table_key& key) const {
    return dir_ / key.filename();
}

bool table_store::contains(const table_key& key) const {
    if (memory_.count(key.filename()))
        return true;
    return disk_ && std::filesystem::exists(path_for(key));
}

const calibration_table& table_store::get(const table_key& key) const {
    std::string name = key.filename();
    auto it = memory_.find(name);
    if (it != memory_.end())
        return it->second;
    if (disk_ && std::filesystem::exists(path_for(key))) {
        calibration_table t = read_file(path_for(key));
        if (t.key.filename() != name)
            throw stat_error("calibration table file " + path_for(key).string() +
                             " does not match its name");
        return memory_.emplace(name, std::move(t)).first->second;
    }
    throw stat_error("missing calibration table " + name +
                     "; generate it with: skipcorr calibrate --mode " +
                     mode_name(key.mode) + " --estimator " +
                     estimator_name(key.estimator) + " --n " +
                     std::to_string(key.n_design) + " --p " +
                     std::to_string(key.p) + " --D " +
                     std::to_string(key.D));
}

void table_store::put(calibration_table table) {
    std::string name = table.key.filename();
    memory_.insert_or_assign(name, std::move(table));
}

void table_store::save(const calibration_table& table) const {
    if (!disk_)
        throw stat_error("table store has no cache directory");
    std::filesystem::create_directories(dir_);
    write_file(table, path_for(table.key));
}

void table_store::write_file(const calibration_table& table,
                             const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw stat_error("cannot write " + tmp.string());
        out << "skipcorr-table 1\n"
            << "method: " << table.key.method << '\n'
            << "mode: " << mode_name(table.key.mode) << '\n'
            << "estimator: " << estimator_name(table.key.estimator) << '\n'
            << "n_design: " << table.key.n_design << '\n'
            << "p: " << table.key.p << '\n'
            << "D: " << table.key.D << '\n'
            << "seed: " << table.seed << '\n'
            << "skipped: " << table.skipped_replications << '\n'
            << "checksum: " << table.checksum() << '\n'
            << "values:\n";
        for (double v : table.values)
            out << fmt_double(v) << '\n';
        if (!out)
            throw stat_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path); // readers never see a partial file
}

calibration_table table_store::read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw stat_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "skipcorr-table 1")
        throw stat_error("not a calibration table: " + path.string());

    calibration_table t;
    std::uint64_t recorded_checksum = 0;
    bool have_checksum = false;
    while (std::getline(in, line)) {
        if (line == "values:")
            break;
        auto colon = line.find(": ");
        if (colon == std::string::npos)
            throw stat_error("malformed table header in " + path.string());
        std::string k = line.substr(0, colon);
        std::string v = line.substr(colon + 2);
        if (k == "method") {
            t.key.method = v;
        } else if (k == "mode") {
            if (v == "pairwise")
                t.key.mode = table_mode::pairwise;
            else if (v == "regression")
                t.key.mode = table_mode::regression;
            else
                throw stat_error("unknown table mode in " + path.string());
        } else if (k == "estimator") {
            if (v == "pearson")
                t.key.estimator = estimator_kind::pearson;
            else if (v == "spearman")
                t.key.estimator = estimator_kind::spearman;
            else
                throw stat_error("unknown estimator in " + path.string());
        } else if (k == "n_design") {
            t.key.n_design = std::stoull(v);
        } else if (k == "p") {
            t.key.p = std::stoull(v);
        } else if (k == "D") {
            t.key.D = std::stoull(v);
        } else if (k == "seed") {
            t.seed = std::stoull(v);
        } else if (k == "skipped") {
            t.skipped_replications = std::stoull(v);
        } else if (k == "checksum") {
            recorded_checksum = std::stoull(v);
            have_checksum = true;
        } else {
            throw stat_error("unknown table header key '" + k + "' in " +
                             path.string());
        }
    }

    t.values.reserve(t.key.D);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        char* end = nullptr;
        double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str() || *end != '\0')
            throw stat_error("bad value line in " + path.string());
        t.values.push_back(v);
    }

    if (t.values.size() != t.key.D)
        throw stat_error("calibration table " + path.string() + " holds " +
                         std::to_string(t.values.size()) + " values, header says " +
                         std::to_string(t.key.D));
    if (!std::is_sorted(t.values.begin(), t.values.end()))
        throw stat_error("calibration table " + path.string() + " is not sorted");
    if (!have_checksum || t.checksum() != recorded_checksum)
        throw stat_error("calibration table " + path.string() +
                         " failed its checksum; delete and regenerate it");
    return t;
}

} // namespace skipcorr
