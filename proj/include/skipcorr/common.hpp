#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace skipcorr {

class stat_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degenerate-sample failures (zero spread, tied columns, too few rows).
// Bootstrap loops catch these and resample; everything else propagates.
class degenerate_error : public stat_error {
public:
    explicit degenerate_error(const std::string& what, long index = -1)
        : stat_error(what), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

// Shortest round-trip decimal form of a double (no std::format on gcc 11).
inline std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Neumaier-compensated accumulator; bootstrap loops add millions of terms.
struct neumaier_sum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

} // namespace skipcorr
