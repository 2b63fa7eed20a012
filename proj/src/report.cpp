#include "skipcorr/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace skipcorr {

namespace {

using json = nlohmann::ordered_json;

// NaN means "not applicable" and serializes as null; infinities (boundary
// correlations) ride along as strings so the round trip stays lossless.
json to_json_value(double v) {
    if (std::isnan(v))
        return nullptr;
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double from_json_value(const json& v, const std::string& field) {
    if (v.is_null())
        return std::numeric_limits<double>::quiet_NaN();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        throw stat_error("malformed report: bad numeric string in " + field);
    }
    if (v.is_number())
        return v.get<double>();
    throw stat_error("malformed report: field " + field + " is not numeric");
}

estimator_kind estimator_from_name(const std::string& name) {
    if (name == "pearson")
        return estimator_kind::pearson;
    if (name == "spearman")
        return estimator_kind::spearman;
    throw stat_error("malformed report: unknown estimator " + name);
}

std::string format_cell(double v, int precision) {
    if (std::isnan(v))
        return "-";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << v;
    return out.str();
}

} // namespace

std::string report_to_jsonl(const test_report& report) {
    json head;
    head["record"] = "report";
    head["tool"] = tool_version;
    head["method"] = report.method;
    head["estimator"] = estimator_name(report.estimator);
    head["alpha"] = report.alpha;
    head["n"] = report.n;
    head["p"] = report.p;
    head["B"] = report.B;
    head["D"] = report.D;
    head["seed"] = report.seed;
    head["critical_value"] = to_json_value(report.critical_value);
    head["generalized_p"] = to_json_value(report.generalized_p);
    head["table_checksum"] = std::to_string(report.table_checksum);
    head["retries_used"] = report.retries_used;
    head["warnings"] = report.warnings;

    std::ostringstream out;
    out << head.dump() << '\n';
    for (const auto& h : report.hypotheses) {
        json rec;
        rec["record"] = "hypothesis";
        rec["j"] = h.j;
        rec["k"] = h.k;
        rec["estimate"] = to_json_value(h.estimate);
        rec["statistic"] = to_json_value(h.statistic);
        rec["raw_p"] = to_json_value(h.raw_p);
        rec["adjusted_p"] = to_json_value(h.adjusted_p);
        rec["ci_lo"] = to_json_value(h.ci_lo);
        rec["ci_hi"] = to_json_value(h.ci_hi);
        rec["reject"] = h.reject;
        out << rec.dump() << '\n';
    }
    return out.str();
}

test_report report_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    test_report report;
    bool seen_head = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw stat_error(std::string("malformed report: ") + e.what());
        }
        try {
            const std::string kind = rec.at("record").get<std::string>();
            if (kind == "report") {
                if (seen_head)
                    throw stat_error("malformed report: two header records");
                seen_head = true;
                report.method = rec.at("method").get<std::string>();
                report.estimator =
                    estimator_from_name(rec.at("estimator").get<std::string>());
                report.alpha = rec.at("alpha").get<double>();
                report.n = rec.at("n").get<std::size_t>();
                report.p = rec.at("p").get<std::size_t>();
                report.B = rec.at("B").get<std::size_t>();
                report.D = rec.at("D").get<std::size_t>();
                report.seed = rec.at("seed").get<std::uint64_t>();
                report.critical_value =
                    from_json_value(rec.at("critical_value"), "critical_value");
                report.generalized_p =
                    from_json_value(rec.at("generalized_p"), "generalized_p");
                report.table_checksum = std::stoull(
                    rec.at("table_checksum").get<std::string>());
                report.retries_used = rec.at("retries_used").get<std::size_t>();
                report.warnings =
                    rec.at("warnings").get<std::vector<std::string>>();
            } else if (kind == "hypothesis") {
                if (!seen_head)
                    throw stat_error(
                        "malformed report: hypothesis before header");
                hypothesis_result h;
                h.j = rec.at("j").get<std::size_t>();
                h.k = rec.at("k").get<std::size_t>();
                h.estimate = from_json_value(rec.at("estimate"), "estimate");
                h.statistic = from_json_value(rec.at("statistic"), "statistic");
                h.raw_p = from_json_value(rec.at("raw_p"), "raw_p");
                h.adjusted_p =
                    from_json_value(rec.at("adjusted_p"), "adjusted_p");
                h.ci_lo = from_json_value(rec.at("ci_lo"), "ci_lo");
                h.ci_hi = from_json_value(rec.at("ci_hi"), "ci_hi");
                h.reject = rec.at("reject").get<bool>();
                report.hypotheses.push_back(h);
            } else {
                throw stat_error("malformed report: unknown record " + kind);
            }
        } catch (const nlohmann::json::exception& e) {
            throw stat_error(std::string("malformed report: ") + e.what());
        }
    }
    if (!seen_head)
        throw stat_error("malformed report: no header record");
    return report;
}

void write_report_file(const test_report& report, const std::string& path) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw stat_error("cannot write " + tmp.string());
        out << report_to_jsonl(report);
        out.flush();
        if (!out)
            throw stat_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void print_report(const test_report& report, std::ostream& os) {
    os << "method " << report.method << "   estimator "
       << estimator_name(report.estimator) << "   n " << report.n << "   p "
       << report.p << "   alpha " << format_cell(report.alpha, 4) << '\n';
    os << "seed " << report.seed << "   B " << report.B;
    if (report.D != 0)
        os << "   D " << report.D;
    if (report.retries_used != 0)
        os << "   retries " << report.retries_used;
    os << '\n';
    if (!std::isnan(report.critical_value)) {
        os << "critical value " << format_cell(report.critical_value, 4);
        if (!std::isnan(report.generalized_p))
            os << "   generalized p " << format_cell(report.generalized_p, 4);
        os << '\n';
    }
    if (report.table_checksum != 0)
        os << "table checksum " << report.table_checksum << '\n';
    for (const auto& w : report.warnings)
        os << "warning: " << w << '\n';

    const bool regression = report.method == "l3" || report.method == "l";
    os << std::left << std::setw(10) << (regression ? "predictor" : "pair")
       << std::right << std::setw(10) << "estimate" << std::setw(11)
       << "statistic" << std::setw(9) << "raw p" << std::setw(9) << "adj p"
       << std::setw(20) << "CI" << std::setw(10) << "decision" << '\n';
    for (const auto& h : report.hypotheses) {
        std::ostringstream label;
        if (regression)
            label << "y~x" << h.k;
        else
            label << h.j + 1 << "-" << h.k + 1;
        std::string ci = "-";
        if (!std::isnan(h.ci_lo))
            ci = "[" + format_cell(h.ci_lo, 3) + ", " +
                 format_cell(h.ci_hi, 3) + "]";
        os << std::left << std::setw(10) << label.str() << std::right
           << std::setw(10) << format_cell(h.estimate, 4) << std::setw(11)
           << format_cell(h.statistic, 4) << std::setw(9)
           << format_cell(h.raw_p, 4) << std::setw(9)
           << format_cell(h.adjusted_p, 4) << std::setw(20) << ci
           << std::setw(10) << (h.reject ? "reject" : "retain") << '\n';
    }
}

} // namespace skipcorr
