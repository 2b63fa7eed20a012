#include "skipcorr/core_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "skipcorr/common.hpp"

namespace skipcorr {

namespace {

double median_sorted(const double* v, std::size_t n) {
    if (n % 2 == 1)
        return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

double median(std::span<const double> values) {
    if (values.empty())
        throw stat_error("empty sample");
    std::vector<double> copy(values.begin(), values.end());
    return median_inplace(copy);
}

double median_inplace(std::vector<double>& values) {
    if (values.empty())
        throw stat_error("empty sample");
    std::size_t n = values.size();
    auto mid = values.begin() + n / 2;
    std::nth_element(values.begin(), mid, values.end());
    double hi = *mid;
    if (n % 2 == 1)
        return hi;
    double lo = *std::max_element(values.begin(), mid);
    return 0.5 * (lo + hi);
}

ideal_fourths_t ideal_fourths(std::span<const double> values) {
    if (values.size() < 2)
        throw stat_error("sample too small");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    return ideal_fourths_sorted(v);
}

ideal_fourths_t ideal_fourths_sorted(std::span<const double> v) {
    std::size_t n = v.size();
    if (n < 2)
        throw stat_error("sample too small");
    double pos = n / 4.0 + 5.0 / 12.0;
    auto ell = static_cast<long>(std::floor(pos));
    double h = pos - static_cast<double>(ell);
    if (ell < 1) { // n = 2 would index past the low end otherwise
        ell = 1;
        h = 0.0;
    }
    std::size_t l = static_cast<std::size_t>(ell);
    std::size_t k = n - l + 1;
    double q1 = (1.0 - h) * v[l - 1] + h * v[l];
    double q2 = (1.0 - h) * v[k - 1] + h * v[k - 2];
    return {q1, q2};
}

double mad(std::span<const double> values) {
    if (values.empty())
        throw stat_error("empty sample");
    std::vector<double> dev(values.begin(), values.end());
    double med = median_inplace(dev);
    for (double& d : dev)
        d = std::abs(d - med);
    return median_inplace(dev);
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw stat_error("length mismatch");
    std::size_t m = x.size();
    if (m < 3)
        throw stat_error("too few rows");
    neumaier_sum mx, my;
    for (std::size_t i = 0; i < m; ++i) {
        mx.add(x[i]);
        my.add(y[i]);
    }
    double xbar = mx.value() / static_cast<double>(m);
    double ybar = my.value() / static_cast<double>(m);
    neumaier_sum sxy, sxx, syy;
    for (std::size_t i = 0; i < m; ++i) {
        double dx = x[i] - xbar;
        double dy = y[i] - ybar;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    double vx = sxx.value();
    double vy = syy.value();
    if (vx <= 0.0 || vy <= 0.0)
        throw degenerate_error("degenerate variance");
    double r = sxy.value() / std::sqrt(vx * vy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<double> midranks(std::span<const double> x) {
    std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]])
            ++j;
        double r = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t t = i; t <= j; ++t)
            ranks[order[t]] = r;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw stat_error("length mismatch");
    if (x.size() < 3)
        throw stat_error("too few rows");
    std::vector<double> rx = midranks(x);
    std::vector<double> ry = midranks(y);
    return pearson(rx, ry);
}

namespace {

// Continued fraction for the incomplete beta, modified Lentz.
double betacf(double x, double a, double b) {
    constexpr int max_iter = 400;
    constexpr double eps = 1e-15;
    constexpr double fpmin = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin)
        d = fpmin;
    d = 1.0 / d;
    double f = d;
    for (int m = 1; m <= max_iter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        f *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        f *= del;
        if (std::abs(del - 1.0) < eps)
            break;
    }
    return f;
}

} // namespace

double beta_cdf(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw stat_error("beta_cdf parameters must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        throw stat_error("beta_cdf argument outside [0,1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * betacf(x, a, b) / a;
    return 1.0 - front * betacf(1.0 - x, b, a) / b;
}

namespace {

// Regularized lower incomplete gamma P(a, x): series on one side of the
// a+1 pivot, Lentz continued fraction on the other.
double gamma_p(double a, double x) {
    if (x <= 0.0)
        return 0.0;
    double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16)
                break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    constexpr double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double f = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        f *= del;
        if (std::abs(del - 1.0) < 1e-16)
            break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - lg) * f;
}

} // namespace

double chi_square_cdf(double x, int df) {
    if (df < 1)
        throw stat_error("chi-square df must be positive");
    if (x <= 0.0)
        return 0.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double prob, int df) {
    if (!(prob > 0.0 && prob < 1.0))
        throw stat_error("chi-square probability outside (0,1)");
    if (df < 1)
        throw stat_error("chi-square df must be positive");
    double lo = 0.0;
    double hi = df + 10.0;
    while (chi_square_cdf(hi, df) < prob)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (chi_square_cdf(mid, df) < prob)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * std::max(1.0, hi))
            break;
    }
    return 0.5 * (lo + hi);
}

double chi_square_quantile_cached(double prob, int df) {
    static std::map<std::pair<double, int>, double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(prob, df);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    double v = chi_square_quantile(prob, df);
    cache.emplace(key, v);
    return v;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// AS 241 rational approximations (PPND16), |error| < 1e-15.
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw stat_error("normal quantile argument outside (0,1)");
    double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        double r = 0.180625 - q * q;
        double num = (((((((2.5090809287301226727e3 * r +
                            3.3430575583588128105e4) * r +
                           6.7265770927008700853e4) * r +
                          4.5921953931549871457e4) * r +
                         1.3731693765509461125e4) * r +
                        1.9715909503065514427e3) * r +
                       1.3314166789178437745e2) * r +
                      3.3871328727963666080e0);
        double den = (((((((5.2264952788528545610e3 * r +
                            2.8729085735721942674e4) * r +
                           3.9307895800092710610e4) * r +
                          2.1213794301586595867e4) * r +
                         5.3941960214247511077e3) * r +
                        6.8718700749205790830e2) * r +
                       4.2313330701600911252e1) * r +
                      1.0);
        return q * num / den;
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        double num = (((((((7.74545014278341407640e-4 * r +
                            2.27238449892691845833e-2) * r +
                           2.41780725177450611770e-1) * r +
                          1.27045825245236838258e0) * r +
                         3.64784832476320460504e0) * r +
                        5.76949722146069140550e0) * r +
                       4.63033784615654529590e0) * r +
                      1.42343711074968357734e0);
        double den = (((((((1.05075007164441684324e-9 * r +
                            5.47593808499534494600e-4) * r +
                           1.51986665636164571966e-2) * r +
                          1.48103976427480074590e-1) * r +
                         6.89767334985100004550e-1) * r +
                        1.67638483018380384940e0) * r +
                       2.05319162663775882187e0) * r +
                      1.0);
        val = num / den;
    } else {
        r -= 5.0;
        double num = (((((((2.01033439929228813265e-7 * r +
                            2.71155556874348757815e-5) * r +
                           1.24266094738807843860e-3) * r +
                          2.65321895265761230930e-2) * r +
                         2.96560571828504891230e-1) * r +
                        1.78482653991729133580e0) * r +
                       5.46378491116411436990e0) * r +
                      6.65790464350110377720e0);
        double den = (((((((2.04426310338993978564e-15 * r +
                            1.42151175831644588870e-7) * r +
                           1.84631831751005468180e-5) * r +
                          7.86869131145613259100e-4) * r +
                         1.48753612908506148525e-2) * r +
                        1.36929880922735805310e-1) * r +
                       5.99832206555887937690e-1) * r +
                      1.0);
        val = num / den;
    }
    return (q < 0.0) ? -val : val;
}

double student_t_cdf(double t, int df) {
    if (df < 1)
        throw stat_error("t distribution df must be positive");
    double x = df / (df + t * t);
    double tail = 0.5 * beta_cdf(x, 0.5 * df, 0.5);
    return (t >= 0.0) ? 1.0 - tail : tail;
}

double student_t_quantile(double p, int df) {
    if (!(p > 0.0 && p < 1.0))
        throw stat_error("t quantile argument outside (0,1)");
    double lo = -1.0, hi = 1.0;
    while (student_t_cdf(lo, df) > p)
        lo *= 2.0;
    while (student_t_cdf(hi, df) < p)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

void harrell_davis_weights(std::size_t B, double q, std::vector<double>& w) {
    if (B < 2)
        throw stat_error("sample too small");
    if (!(q > 0.0 && q < 1.0))
        throw stat_error("degenerate quantile");
    double a = (B + 1) * q;
    double b = (B + 1) * (1.0 - q);
    w.resize(B);
    double prev = 0.0;
    for (std::size_t i = 1; i <= B; ++i) {
        double cur = (i == B) ? 1.0
                              : beta_cdf(static_cast<double>(i) / B, a, b);
        w[i - 1] = cur - prev;
        prev = cur;
    }
}

double harrell_davis_sorted(std::span<const double> sorted_values, double q) {
    std::size_t B = sorted_values.size();
    static thread_local std::vector<double> w;
    harrell_davis_weights(B, q, w);
    neumaier_sum acc;
    for (std::size_t i = 0; i < B; ++i) {
        if (w[i] == 0.0)
            continue;
        double v = sorted_values[i];
        if (std::isinf(v))
            return v; // an infinite order statistic with positive weight wins
        acc.add(w[i] * v);
    }
    return acc.value();
}

double harrell_davis(std::vector<double> values, double q) {
    if (values.size() < 2)
        throw stat_error("sample too small");
    std::sort(values.begin(), values.end());
    return harrell_davis_sorted(values, q);
}

} // namespace skipcorr
