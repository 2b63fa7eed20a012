#pragma once

#include <iosfwd>
#include <string>

#include "skipcorr/inference.hpp"

namespace skipcorr {

inline constexpr const char* tool_version = "skipcorr 1.0.0";

// Line-delimited JSON: one header record, then one record per hypothesis.
// Deterministic byte-for-byte for a fixed report (no timestamps, stable
// key order, shortest round-trip numbers).
std::string report_to_jsonl(const test_report& report);
test_report report_from_jsonl(const std::string& text);

void write_report_file(const test_report& report, const std::string& path);

// Human-readable table for standard output.
void print_report(const test_report& report, std::ostream& os);

} // namespace skipcorr
