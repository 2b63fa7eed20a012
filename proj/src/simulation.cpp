#include "skipcorr/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "skipcorr/core_stats.hpp"
#include "skipcorr/parallel.hpp"

namespace skipcorr {

double gh_deviate(double z, const gh_params& params) {
    const double tail = std::exp(params.h * z * z / 2.0);
    if (params.g == 0.0)
        return z * tail;
    return std::expm1(params.g * z) / params.g * tail;
}

data_matrix sample_gh_matrix(std::size_t n, std::size_t p,
                             const gh_params& params, rng_stream& rng) {
    std::vector<double> entries(n * p);
    for (double& e : entries)
        e = gh_deviate(rng.normal(), params);
    return data_matrix(n, p, std::move(entries));
}

const char* variance_pattern_name(variance_pattern vp) {
    switch (vp) {
    case variance_pattern::vp1: return "vp1";
    case variance_pattern::vp2: return "vp2";
    default: return "vp3";
    }
}

void apply_variance_pattern(const std::vector<double>& x1,
                            std::vector<double>& eps, variance_pattern vp) {
    if (x1.size() != eps.size())
        throw stat_error("variance pattern needs x1 and eps of equal length");
    if (vp == variance_pattern::vp1)
        return;
    for (std::size_t i = 0; i < x1.size(); ++i) {
        const double lambda = vp == variance_pattern::vp2
                                  ? std::abs(x1[i]) + 1.0
                                  : 1.0 / (std::abs(x1[i]) + 1.0);
        eps[i] *= lambda;
    }
}

data_matrix sample_correlated_normal(std::size_t n, std::size_t p,
                                     double common_rho, rng_stream& rng) {
    if (p < 2)
        throw stat_error("equicorrelated sampling needs p >= 2");
    const double lower = -1.0 / (static_cast<double>(p) - 1.0);
    if (!(common_rho > lower && common_rho < 1.0))
        throw stat_error("common_rho must lie in (-1/(p-1), 1)");

    const double a = std::sqrt(1.0 - common_rho);
    const double b =
        (-a + std::sqrt(a * a + static_cast<double>(p) * common_rho)) /
        static_cast<double>(p);

    std::vector<double> entries(n * p);
    std::vector<double> z(p);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            z[j] = rng.normal();
            sum += z[j];
        }
        for (std::size_t j = 0; j < p; ++j)
            entries[i * p + j] = a * z[j] + b * sum;
    }
    return data_matrix(n, p, std::move(entries));
}

const char* sim_method_name(sim_method m) {
    switch (m) {
    case sim_method::ss: return "ss";
    case sim_method::sp: return "sp";
    case sim_method::ecp: return "ecp";
    case sim_method::h: return "h";
    case sim_method::h1: return "h1";
    case sim_method::l3: return "l3";
    case sim_method::raw: return "raw";
    default: return "plain_t";
    }
}

std::optional<sim_method> sim_method_from_name(const std::string& name) {
    if (name == "ss") return sim_method::ss;
    if (name == "sp") return sim_method::sp;
    if (name == "ecp") return sim_method::ecp;
    if (name == "h") return sim_method::h;
    if (name == "h1") return sim_method::h1;
    if (name == "l3") return sim_method::l3;
    if (name == "raw") return sim_method::raw;
    if (name == "plain_t") return sim_method::plain_t;
    return std::nullopt;
}

namespace {

void check_scenario(const scenario& sc) {
    if (sc.alphas.empty())
        throw stat_error("scenario needs at least one alpha");
    for (double a : sc.alphas)
        if (!(a > 0.0 && a < 1.0))
            throw stat_error("alpha must lie strictly between 0 and 1");
    if (sc.R < 1)
        throw stat_error("scenario needs R >= 1");
    if (sc.method == sim_method::l3) {
        if (sc.p < 1)
            throw stat_error("l3 scenarios need p >= 1 predictors");
    } else if (sc.p < 2) {
        throw stat_error("pairwise scenarios need p >= 2");
    }
    if (sc.vp != variance_pattern::vp1 &&
        (sc.p != 2 || sc.method == sim_method::l3))
        throw stat_error(
            "variance patterns beyond vp1 are defined for the bivariate "
            "pairwise case only");
}

// The null scenario draw: iid g-and-h columns, heteroscedastic second
// column when a variance pattern is on. l3 draws the joint (p+1)-column
// cloud with the dependent variable in column 0.
data_matrix draw_scenario_data(const scenario& sc, rng_stream& gen) {
    const std::size_t cols =
        sc.method == sim_method::l3 ? sc.p + 1 : sc.p;
    data_matrix x = sample_gh_matrix(sc.n, cols, sc.gh, gen);
    if (sc.vp != variance_pattern::vp1) {
        std::vector<double> x1 = x.column(0);
        std::vector<double> eps = x.column(1);
        apply_variance_pattern(x1, eps, sc.vp);
        for (std::size_t i = 0; i < sc.n; ++i)
            x(i, 1) = eps[i];
    }
    return x;
}

estimator_kind scenario_estimator(const scenario& sc) {
    if (sc.method == sim_method::ss)
        return estimator_kind::spearman;
    if (sc.method == sim_method::sp)
        return estimator_kind::pearson;
    return sc.estimator;
}

bool needs_pair_pvalues(sim_method m) {
    return m == sim_method::ecp || m == sim_method::h ||
           m == sim_method::h1 || m == sim_method::raw;
}

// Generate-and-cache for the table-backed methods. Tables land in the
// store (and on disk when the store is disk-backed) before the replication
// loop starts, so the loop itself only ever reads.
const calibration_table* ensure_table(table_store& store, const table_key& key,
                                      std::size_t B,
                                      const detection_rule& rule) {
    if (!store.contains(key)) {
        bootstrap_config cfg;
        cfg.B = B;
        cfg.seed = table_generation_seed;
        calibration_table table = generate_calibration_table(
            key.n_design, key.p, key.D, cfg, key.mode, key.estimator, rule);
        if (store.disk_backed())
            store.save(table);
        store.put(std::move(table));
    }
    return &store.get(key);
}

std::vector<double> replication_pair_pvalues(const data_matrix& x,
                                             estimator_kind kind,
                                             const scenario& sc,
                                             const detection_rule& rule,
                                             rng_stream& rep) {
    const std::size_t p = x.cols();
    std::vector<double> raw;
    raw.reserve(p * (p - 1) / 2);
    rng_stream pair_root = rep.substream(1);
    std::size_t c = 0;
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = j + 1; k < p; ++k, ++c) {
            bootstrap_config cfg;
            cfg.B = sc.B;
            cfg.seed = pair_root.substream(c).next_u64();
            raw.push_back(percentile_bootstrap_pair(x.pair_submatrix(j, k),
                                                    kind, sc.alphas.front(),
                                                    cfg, rule)
                              .pvalue);
        }
    }
    return raw;
}

} // namespace

fwe_estimate estimate_fwe(const scenario& sc, table_store& store) {
    check_scenario(sc);
    if (sc.common_rho != 0.0)
        throw stat_error("estimate_fwe runs under the global null; use "
                         "estimate_power for common_rho != 0");

    const detection_rule rule;
    const estimator_kind kind = scenario_estimator(sc);
    const std::size_t levels = sc.alphas.size();

    const calibration_table* ecp_table = nullptr;
    if (sc.method == sim_method::ecp) {
        table_key key;
        key.method = "ecp";
        key.mode = table_mode::pairwise;
        key.n_design = sc.n;
        key.p = sc.p;
        key.D = sc.D;
        key.estimator = kind;
        ecp_table = ensure_table(store, key, sc.B, rule);
    }
    if (sc.method == sim_method::h1 || sc.method == sim_method::l3) {
        const std::size_t bin = adjustment_bin(sc.n);
        if (bin != 0) {
            table_key key;
            key.method = "h1";
            key.mode = table_mode::regression;
            key.n_design = bin;
            key.p = 1;
            key.D = sc.D;
            key.estimator = kind;
            ensure_table(store, key, sc.B, rule);
        }
    }

    std::vector<double> ecp_criticals(levels, 0.0);
    if (ecp_table)
        for (std::size_t a = 0; a < levels; ++a)
            ecp_criticals[a] = critical_pvalue_ecp(*ecp_table, sc.alphas[a]);

    rng_stream master(sc.seed);
    std::vector<char> reject(sc.R * levels, 0);
    std::vector<char> failed(sc.R, 0);

    parallel_for(0, sc.R, [&](std::size_t r) {
        rng_stream rep = master.substream(r);
        rng_stream gen = rep.substream(0);
        try {
            data_matrix x = draw_scenario_data(sc, gen);
            char* out = reject.data() + r * levels;

            if (sc.method == sim_method::ss || sc.method == sim_method::sp) {
                bootstrap_config cfg;
                cfg.B = sc.B;
                cfg.seed = rep.substream(1).next_u64();
                skipped_matrix observed =
                    skipped_correlation_matrix(x, kind, rule);
                const double t_obs = t_max(observed, sc.n);
                std::vector<double> null_sample =
                    null_tmax_distribution(x, kind, cfg, rule);
                for (std::size_t a = 0; a < levels; ++a) {
                    const double crit = harrell_davis_sorted(
                        null_sample, 1.0 - sc.alphas[a]);
                    out[a] = t_obs >= crit ? 1 : 0;
                }
            } else if (needs_pair_pvalues(sc.method)) {
                std::vector<double> raw =
                    replication_pair_pvalues(x, kind, sc, rule, rep);
                if (sc.method == sim_method::ecp) {
                    for (std::size_t a = 0; a < levels; ++a)
                        for (double pv : raw)
                            if (pv <= ecp_criticals[a])
                                out[a] = 1;
                } else if (sc.method == sim_method::raw) {
                    for (std::size_t a = 0; a < levels; ++a)
                        for (double pv : raw)
                            if (pv <= sc.alphas[a])
                                out[a] = 1;
                } else {
                    std::vector<double> pv = raw;
                    if (sc.method == sim_method::h1)
                        for (double& v : pv)
                            v = adjusted_pvalue(v, sc.n, store, kind, sc.D,
                                                sc.B);
                    for (std::size_t a = 0; a < levels; ++a) {
                        std::vector<char> flags = hochberg(pv, sc.alphas[a]);
                        out[a] = std::find(flags.begin(), flags.end(), 1) !=
                                         flags.end()
                                     ? 1
                                     : 0;
                    }
                }
            } else if (sc.method == sim_method::l3) {
                std::vector<double> y = x.column(0);
                std::vector<double> pred(sc.n * sc.p);
                for (std::size_t i = 0; i < sc.n; ++i)
                    for (std::size_t j = 0; j < sc.p; ++j)
                        pred[i * sc.p + j] = x(i, j + 1);
                data_matrix xp(sc.n, sc.p, std::move(pred));
                bootstrap_config cfg;
                cfg.B = sc.B;
                cfg.seed = rep.substream(1).next_u64();
                for (std::size_t a = 0; a < levels; ++a) {
                    test_report rp = test_l3(y, xp, kind, sc.alphas[a], cfg,
                                             store, rule, sc.D);
                    out[a] = rp.any_reject() ? 1 : 0;
                }
            } else {
                const std::size_t df = sc.n - 2;
                for (std::size_t j = 0; j < sc.p; ++j) {
                    std::vector<double> cj = x.column(j);
                    for (std::size_t k = j + 1; k < sc.p; ++k) {
                        std::vector<double> ck = x.column(k);
                        const double tau = kind == estimator_kind::spearman
                                               ? spearman(cj, ck)
                                               : pearson(cj, ck);
                        const double t = std::abs(t_from_tau(tau, sc.n));
                        const double pv =
                            2.0 * (1.0 - student_t_cdf(t, static_cast<int>(df)));
                        for (std::size_t a = 0; a < levels; ++a)
                            if (pv <= sc.alphas[a])
                                out[a] = 1;
                    }
                }
            }
        } catch (const stat_error&) {
            failed[r] = 1;
        }
    });

    fwe_estimate out;
    for (char f : failed)
        if (f)
            ++out.failed;
    out.replications = sc.R - out.failed;
    if (out.replications == 0)
        throw stat_error("every simulation replication failed");
    out.unreliable =
        static_cast<double>(out.failed) > 0.01 * static_cast<double>(sc.R);

    for (std::size_t a = 0; a < levels; ++a) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < sc.R; ++r)
            if (!failed[r] && reject[r * levels + a])
                ++hits;
        const double est = static_cast<double>(hits) /
                           static_cast<double>(out.replications);
        out.estimates.push_back(est);
        out.ses.push_back(std::sqrt(est * (1.0 - est) /
                                    static_cast<double>(out.replications)));
        out.bradley_ok.push_back(bradley_check(est, sc.alphas[a]));
    }
    return out;
}

double estimate_power(const scenario& sc, bool adjust, table_store& store) {
    check_scenario(sc);
    const double alpha = sc.alphas.front();
    const detection_rule rule;
    const estimator_kind kind = scenario_estimator(sc);

    const calibration_table* ecp_table = nullptr;
    if (adjust && sc.method == sim_method::ecp) {
        table_key key;
        key.method = "ecp";
        key.mode = table_mode::pairwise;
        key.n_design = sc.n;
        key.p = sc.p;
        key.D = sc.D;
        key.estimator = kind;
        ecp_table = ensure_table(store, key, sc.B, rule);
    }
    if (adjust && (sc.method == sim_method::h1 || sc.method == sim_method::l3)) {
        const std::size_t bin = adjustment_bin(sc.n);
        if (bin != 0) {
            table_key key;
            key.method = "h1";
            key.mode = table_mode::regression;
            key.n_design = bin;
            key.p = 1;
            key.D = sc.D;
            key.estimator = kind;
            ensure_table(store, key, sc.B, rule);
        }
    }
    const double ecp_critical =
        ecp_table ? critical_pvalue_ecp(*ecp_table, alpha) : 0.0;

    rng_stream master(sc.seed);
    std::vector<char> reject(sc.R, 0);
    std::vector<char> failed(sc.R, 0);

    parallel_for(0, sc.R, [&](std::size_t r) {
        rng_stream rep = master.substream(r);
        rng_stream gen = rep.substream(0);
        try {
            const std::size_t cols =
                sc.method == sim_method::l3 ? sc.p + 1 : sc.p;
            data_matrix x =
                sample_correlated_normal(sc.n, cols, sc.common_rho, gen);

            if (!adjust) {
                bootstrap_config cfg;
                cfg.B = sc.B;
                cfg.seed = rep.substream(1).next_u64();
                const double pv = percentile_bootstrap_pair(
                                      x.pair_submatrix(0, 1), kind, alpha,
                                      cfg, rule)
                                      .pvalue;
                reject[r] = pv <= alpha ? 1 : 0;
                return;
            }

            if (sc.method == sim_method::ss || sc.method == sim_method::sp) {
                bootstrap_config cfg;
                cfg.B = sc.B;
                cfg.seed = rep.substream(1).next_u64();
                skipped_matrix observed =
                    skipped_correlation_matrix(x, kind, rule);
                std::vector<double> null_sample =
                    null_tmax_distribution(x, kind, cfg, rule);
                const double crit =
                    harrell_davis_sorted(null_sample, 1.0 - alpha);
                reject[r] = std::abs(t_from_tau(observed.estimates.front().value,
                                                sc.n)) >= crit
                                ? 1
                                : 0;
            } else if (needs_pair_pvalues(sc.method)) {
                std::vector<double> raw =
                    replication_pair_pvalues(x, kind, sc, rule, rep);
                if (sc.method == sim_method::ecp) {
                    reject[r] = raw.front() <= ecp_critical ? 1 : 0;
                } else if (sc.method == sim_method::raw) {
                    reject[r] = raw.front() <= alpha ? 1 : 0;
                } else {
                    std::vector<double> pv = raw;
                    if (sc.method == sim_method::h1)
                        for (double& v : pv)
                            v = adjusted_pvalue(v, sc.n, store, kind, sc.D,
                                                sc.B);
                    reject[r] = hochberg(pv, alpha).front() != 0 ? 1 : 0;
                }
            } else if (sc.method == sim_method::l3) {
                std::vector<double> y = x.column(0);
                std::vector<double> pred(sc.n * sc.p);
                for (std::size_t i = 0; i < sc.n; ++i)
                    for (std::size_t j = 0; j < sc.p; ++j)
                        pred[i * sc.p + j] = x(i, j + 1);
                data_matrix xp(sc.n, sc.p, std::move(pred));
                bootstrap_config cfg;
                cfg.B = sc.B;
                cfg.seed = rep.substream(1).next_u64();
                test_report rp =
                    test_l3(y, xp, kind, alpha, cfg, store, rule, sc.D);
                reject[r] = rp.hypotheses.front().reject ? 1 : 0;
            } else {
                std::vector<double> c0 = x.column(0);
                std::vector<double> c1 = x.column(1);
                const double tau = kind == estimator_kind::spearman
                                       ? spearman(c0, c1)
                                       : pearson(c0, c1);
                const double t = std::abs(t_from_tau(tau, sc.n));
                const double pv =
                    2.0 * (1.0 - student_t_cdf(t, static_cast<int>(sc.n) - 2));
                reject[r] = pv <= alpha ? 1 : 0;
            }
        } catch (const stat_error&) {
            failed[r] = 1;
        }
    });

    std::size_t failures = 0;
    for (char f : failed)
        if (f)
            ++failures;
    if (failures == sc.R)
        throw stat_error("every simulation replication failed");
    std::size_t hits = 0;
    for (std::size_t r = 0; r < sc.R; ++r)
        if (!failed[r] && reject[r])
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(sc.R - failures);
}

bool bradley_check(double estimate, double alpha) {
    return estimate >= 0.5 * alpha && estimate <= 1.5 * alpha;
}

} // namespace skipcorr
