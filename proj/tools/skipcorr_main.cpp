#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skipcorr/csv.hpp"
#include "skipcorr/inference.hpp"
#include "skipcorr/report.hpp"
#include "skipcorr/simulation.hpp"

namespace {

using namespace skipcorr;

struct input_flags {
    std::string path;
    std::string delimiter = ",";
    bool no_header = false;
    std::string missing = "listwise";
};

void add_input_flags(CLI::App* cmd, input_flags& in) {
    cmd->add_option("--input", in.path, "CSV file to analyze")->required();
    cmd->add_option("--delimiter", in.delimiter, "field delimiter (default ,)");
    cmd->add_flag("--no-header", in.no_header, "first line is data, not names");
    cmd->add_option("--missing", in.missing,
                    "missing-value policy: listwise or fail")
        ->check(CLI::IsMember({"listwise", "fail"}));
}

dataset load_dataset(const input_flags& in) {
    if (in.delimiter.size() != 1)
        throw stat_error("delimiter must be a single character");
    csv_options opts;
    opts.delimiter = in.delimiter[0];
    opts.header = !in.no_header;
    opts.missing = in.missing == "fail" ? missing_policy::fail
                                        : missing_policy::listwise;
    dataset ds = ingest_csv(in.path, opts);
    if (ds.dropped_rows > 0)
        std::cerr << "note: " << ds.dropped_rows
                  << " row(s) dropped for missing values\n";
    return ds;
}

struct rule_flags {
    std::string variant = "iqr";
    double chi_prob = 0.95;
};

void add_rule_flags(CLI::App* cmd, rule_flags& rf) {
    cmd->add_option("--rule", rf.variant, "spread rule: iqr or mad")
        ->check(CLI::IsMember({"iqr", "mad"}));
    cmd->add_option("--chi-prob", rf.chi_prob,
                    "chi-square probability for the cutoff (default 0.95)");
}

detection_rule make_rule(const rule_flags& rf) {
    detection_rule rule;
    rule.variant = rf.variant == "mad" ? detection_variant::mad_rule
                                       : detection_variant::iqr_rule;
    rule.chi_prob = rf.chi_prob;
    return rule;
}

estimator_kind parse_estimator(const std::string& name) {
    if (name == "pearson")
        return estimator_kind::pearson;
    if (name == "spearman")
        return estimator_kind::spearman;
    throw stat_error("unknown estimator " + name);
}

// All file output goes through a temp-then-rename so an interrupted run
// never leaves a partial file behind.
void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw stat_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw stat_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

table_store open_store(const std::string& cache_dir) {
    if (!cache_dir.empty())
        return table_store(std::filesystem::path(cache_dir));
    return table_store::from_env();
}

std::size_t resolve_column(const dataset& ds, const std::string& spec) {
    for (std::size_t j = 0; j < ds.column_names.size(); ++j)
        if (ds.column_names[j] == spec)
            return j;
    try {
        std::size_t pos = 0;
        const unsigned long idx = std::stoul(spec, &pos);
        if (pos == spec.size() && idx >= 1 &&
            idx <= ds.column_names.size())
            return idx - 1;
    } catch (const std::exception&) {
    }
    throw stat_error("no column named " + spec +
                     " (use a header name or a 1-based index)");
}

// ---------------------------------------------------------------- detect

int run_detect(const input_flags& in, const rule_flags& rf,
               const std::string& format, const std::string& out_path) {
    dataset ds = load_dataset(in);
    outlier_mask mask = detect_outliers(ds.matrix, make_rule(rf));
    std::ostringstream out;
    if (format == "json") {
        out << "{\"n\":" << ds.matrix.rows()
            << ",\"p\":" << ds.matrix.cols()
            << ",\"flagged\":" << mask.count_flagged << ",\"rows\":[";
        bool first = true;
        for (std::size_t i = 0; i < mask.flags.size(); ++i)
            if (mask.flags[i]) {
                out << (first ? "" : ",") << i + 1;
                first = false;
            }
        out << "]}\n";
    } else {
        out << "row,outlier\n";
        for (std::size_t i = 0; i < mask.flags.size(); ++i)
            out << i + 1 << ',' << (mask.flags[i] ? 1 : 0) << '\n';
    }
    emit(out_path, out.str());
    std::cerr << mask.count_flagged << " of " << ds.matrix.rows()
              << " rows flagged\n";
    return 0;
}

// ------------------------------------------------------------------ corr

int run_corr(const input_flags& in, const rule_flags& rf,
             const std::string& estimator, const std::string& format,
             const std::string& out_path) {
    dataset ds = load_dataset(in);
    const estimator_kind kind = parse_estimator(estimator);
    skipped_matrix sm = skipped_correlation_matrix(ds.matrix, kind, make_rule(rf));
    std::ostringstream out;
    if (format == "json") {
        out << "{\"estimator\":\"" << estimator_name(kind)
            << "\",\"n\":" << ds.matrix.rows()
            << ",\"retained\":" << sm.estimates.front().m << ",\"pairs\":[";
        for (std::size_t c = 0; c < sm.estimates.size(); ++c) {
            const auto& e = sm.estimates[c];
            out << (c ? "," : "") << "{\"j\":" << e.j << ",\"k\":" << e.k
                << ",\"estimate\":" << fmt_double(e.value) << "}";
        }
        out << "]}\n";
    } else {
        const std::size_t p = sm.p;
        std::vector<double> full(p * p, 1.0);
        for (const auto& e : sm.estimates) {
            full[e.j * p + e.k] = e.value;
            full[e.k * p + e.j] = e.value;
        }
        for (std::size_t j = 0; j < p; ++j) {
            out << (j ? "," : "") << ds.column_names[j];
        }
        out << '\n';
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j)
                out << (j ? "," : "") << fmt_double(full[i * p + j]);
            out << '\n';
        }
    }
    emit(out_path, out.str());
    return 0;
}

// ------------------------------------------------------------------ test

struct test_flags {
    std::string method;
    std::string estimator = "pearson";
    double alpha = 0.05;
    std::size_t B = 500;
    std::uint64_t seed = 1;
    int max_retries = 50;
    std::size_t D = 0; // 0: per-method default
    std::string table_path;
    std::string cache_dir;
    std::string out_path;
    bool quiet = false;
};

void emit_report(const test_report& report, const test_flags& tf) {
    if (!tf.quiet)
        print_report(report, std::cout);
    if (!tf.out_path.empty())
        write_report_file(report, tf.out_path);
}

int run_test(const input_flags& in, const rule_flags& rf, test_flags& tf) {
    dataset ds = load_dataset(in);
    const detection_rule rule = make_rule(rf);
    bootstrap_config cfg;
    cfg.B = tf.B;
    cfg.seed = tf.seed;
    cfg.max_retries = tf.max_retries;

    test_report report;
    if (tf.method == "ss" || tf.method == "sp") {
        const estimator_kind kind = tf.method == "ss"
                                        ? estimator_kind::spearman
                                        : estimator_kind::pearson;
        report = test_ss_sp(ds.matrix, kind, tf.alpha, cfg, rule);
    } else if (tf.method == "ecp") {
        calibration_table table;
        if (!tf.table_path.empty()) {
            table = table_store::read_file(tf.table_path);
        } else {
            table_key key;
            key.method = "ecp";
            key.mode = table_mode::pairwise;
            key.n_design = ds.matrix.rows();
            key.p = ds.matrix.cols();
            key.D = tf.D == 0 ? 1000 : tf.D;
            key.estimator = parse_estimator(tf.estimator);
            table = open_store(tf.cache_dir).get(key);
        }
        report = test_ecp(ds.matrix, tf.alpha, cfg, table, rule);
    } else if (tf.method == "h") {
        report = test_h(ds.matrix, parse_estimator(tf.estimator), tf.alpha,
                        cfg, rule);
    } else if (tf.method == "h1") {
        table_store store = open_store(tf.cache_dir);
        report = test_h1(ds.matrix, parse_estimator(tf.estimator), tf.alpha,
                         cfg, store, rule, tf.D == 0 ? 2000 : tf.D);
    } else {
        throw stat_error("unknown test method " + tf.method);
    }
    emit_report(report, tf);
    return 0;
}

// ---------------------------------------------------------------- regtest

int run_regtest(const input_flags& in, const rule_flags& rf, test_flags& tf,
                const std::string& dependent) {
    dataset ds = load_dataset(in);
    const std::size_t y_col = resolve_column(ds, dependent);
    const std::size_t n = ds.matrix.rows();
    const std::size_t p = ds.matrix.cols() - 1;
    if (p < 1)
        throw stat_error("regression needs at least one predictor");
    std::vector<double> y = ds.matrix.column(y_col);
    std::vector<double> pred(n * p);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < ds.matrix.cols(); ++j) {
            if (j == y_col)
                continue;
            pred[i * p + c++] = ds.matrix(i, j);
        }
    }
    data_matrix x(n, p, std::move(pred));

    const detection_rule rule = make_rule(rf);
    const estimator_kind kind = parse_estimator(tf.estimator);
    bootstrap_config cfg;
    cfg.B = tf.B;
    cfg.seed = tf.seed;
    cfg.max_retries = tf.max_retries;

    test_report report;
    if (tf.method == "l") {
        report = test_l(y, x, kind, tf.alpha, cfg, rule);
    } else if (tf.method == "l3") {
        table_store store = open_store(tf.cache_dir);
        report = test_l3(y, x, kind, tf.alpha, cfg, store, rule,
                         tf.D == 0 ? 2000 : tf.D);
    } else {
        throw stat_error("unknown regression method " + tf.method);
    }
    emit_report(report, tf);
    return 0;
}

// -------------------------------------------------------------- calibrate

int run_calibrate(const rule_flags& rf, const std::string& mode_name_arg,
                  std::size_t n, std::size_t p, std::size_t D, std::size_t B,
                  std::uint64_t seed, const std::string& estimator,
                  const std::string& cache_dir, const std::string& preset) {
    const detection_rule rule = make_rule(rf);
    table_store store = open_store(cache_dir);
    if (!store.disk_backed())
        throw stat_error("calibrate needs a cache directory");
    const estimator_kind kind = parse_estimator(estimator);
    bootstrap_config cfg;
    cfg.B = B;
    cfg.seed = seed;

    std::vector<std::tuple<table_mode, std::size_t, std::size_t, std::size_t>>
        jobs;
    if (preset == "h1") {
        for (std::size_t design : {30, 60, 80, 100})
            jobs.emplace_back(table_mode::regression, design, 1,
                              D == 0 ? 2000 : D);
    } else if (!preset.empty()) {
        throw stat_error("unknown preset " + preset);
    } else {
        if (n == 0 || p == 0)
            throw stat_error("calibrate needs --n and --p (or --preset h1)");
        const table_mode mode = mode_name_arg == "regression"
                                    ? table_mode::regression
                                    : table_mode::pairwise;
        const std::size_t def = mode == table_mode::regression ? 2000 : 1000;
        jobs.emplace_back(mode, n, p, D == 0 ? def : D);
    }

    for (const auto& [mode, n_design, p_design, D_design] : jobs) {
        calibration_table table = generate_calibration_table(
            n_design, p_design, D_design, cfg, mode, kind, rule);
        store.save(table);
        std::cout << store.path_for(table.key).string() << '\n';
    }
    return 0;
}

// --------------------------------------------------------------- simulate

struct scenario_file {
    std::vector<scenario> scenarios;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> parts;
    std::string tok;
    while (in >> tok)
        parts.push_back(tok);
    return parts;
}

std::vector<double> parse_alpha_list(const std::string& s) {
    std::vector<double> alphas;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        alphas.push_back(std::stod(tok));
    if (alphas.empty())
        throw stat_error("empty alpha list");
    return alphas;
}

void apply_scenario_token(scenario& sc, const std::string& key,
                          const std::string& value) {
    if (key == "method") {
        auto m = sim_method_from_name(value);
        if (!m)
            throw stat_error("unknown method " + value);
        sc.method = *m;
    } else if (key == "estimator") {
        sc.estimator = parse_estimator(value);
    } else if (key == "n") {
        sc.n = std::stoul(value);
    } else if (key == "p") {
        sc.p = std::stoul(value);
    } else if (key == "g") {
        sc.gh.g = std::stod(value);
    } else if (key == "h") {
        sc.gh.h = std::stod(value);
    } else if (key == "vp") {
        if (value == "vp1")
            sc.vp = variance_pattern::vp1;
        else if (value == "vp2")
            sc.vp = variance_pattern::vp2;
        else if (value == "vp3")
            sc.vp = variance_pattern::vp3;
        else
            throw stat_error("unknown variance pattern " + value);
    } else if (key == "rho") {
        sc.common_rho = std::stod(value);
    } else if (key == "alpha") {
        sc.alphas = parse_alpha_list(value);
    } else if (key == "R") {
        sc.R = std::stoul(value);
    } else if (key == "B") {
        sc.B = std::stoul(value);
    } else if (key == "D") {
        sc.D = std::stoul(value);
    } else if (key == "seed") {
        sc.seed = std::stoull(value);
    } else {
        throw stat_error("unknown scenario key " + key);
    }
}

// Scenario files: `key: value` lines set campaign-wide defaults, each
// `scenario:` line adds one run as space-separated key=value tokens, and
// `#` starts a comment. Rows without their own seed get the campaign seed
// plus their position.
scenario_file parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw stat_error("cannot open " + path);
    scenario defaults;
    scenario_file out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::string body = line;
        const std::size_t colon = body.find(':');
        if (body.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (colon == std::string::npos)
            throw stat_error(path + ": line " + std::to_string(lineno) +
                             " is not a key: value line");
        const std::string key = body.substr(0, colon);
        std::string value = body.substr(colon + 1);
        const std::size_t b = value.find_first_not_of(" \t");
        value = b == std::string::npos ? "" : value.substr(b);
        if (key == "scenario") {
            scenario sc = defaults;
            bool has_seed = false;
            for (const std::string& tok : split_ws(value)) {
                const std::size_t eq = tok.find('=');
                if (eq == std::string::npos)
                    throw stat_error(path + ": line " +
                                     std::to_string(lineno) +
                                     ": expected key=value, got " + tok);
                const std::string k = tok.substr(0, eq);
                apply_scenario_token(sc, k, tok.substr(eq + 1));
                if (k == "seed")
                    has_seed = true;
            }
            if (!has_seed)
                sc.seed = defaults.seed + out.scenarios.size();
            out.scenarios.push_back(sc);
        } else {
            apply_scenario_token(defaults, key, value);
        }
    }
    if (out.scenarios.empty())
        throw stat_error(path + " declares no scenarios");
    return out;
}

std::string fwe_csv_header() {
    return "method,estimator,n,p,g,h,vp,rho,alpha,R,B,D,seed,fwe,se,"
           "bradley_ok,replications,failed,unreliable\n";
}

void append_fwe_rows(std::ostringstream& out, const scenario& sc,
                     const fwe_estimate& est) {
    for (std::size_t a = 0; a < sc.alphas.size(); ++a) {
        out << sim_method_name(sc.method) << ','
            << estimator_name(sc.estimator) << ',' << sc.n << ',' << sc.p
            << ',' << fmt_double(sc.gh.g) << ',' << fmt_double(sc.gh.h) << ','
            << variance_pattern_name(sc.vp) << ',' << fmt_double(sc.common_rho)
            << ',' << fmt_double(sc.alphas[a]) << ',' << sc.R << ',' << sc.B
            << ',' << sc.D << ',' << sc.seed << ','
            << fmt_double(est.estimates[a]) << ',' << fmt_double(est.ses[a])
            << ',' << (est.bradley_ok[a] ? 1 : 0) << ',' << est.replications
            << ',' << est.failed << ',' << (est.unreliable ? 1 : 0) << '\n';
    }
}

int run_simulate(const std::string& scenario_path,
                 const std::string& cache_dir, const std::string& out_path) {
    scenario_file sf = parse_scenario_file(scenario_path);
    table_store store = open_store(cache_dir);
    std::ostringstream out;
    out << fwe_csv_header();
    for (const scenario& sc : sf.scenarios) {
        fwe_estimate est = estimate_fwe(sc, store);
        append_fwe_rows(out, sc, est);
        std::cerr << "done: " << sim_method_name(sc.method) << " n=" << sc.n
                  << " p=" << sc.p << " g=" << sc.gh.g << " h=" << sc.gh.h
                  << '\n';
    }
    emit(out_path, out.str());
    return 0;
}

int run_tables(const std::string& scenario_dir, const std::string& cache_dir,
               const std::string& out_dir) {
    table_store store = open_store(cache_dir);
    std::filesystem::create_directories(out_dir);
    bool any = false;
    for (const char* name : {"table2", "table3", "table4", "table5"}) {
        const std::filesystem::path scn =
            std::filesystem::path(scenario_dir) / (std::string(name) + ".scn");
        if (!std::filesystem::exists(scn)) {
            std::cerr << "skipping " << scn.string() << " (not found)\n";
            continue;
        }
        any = true;
        scenario_file sf = parse_scenario_file(scn.string());
        std::ostringstream out;
        out << fwe_csv_header();
        for (const scenario& sc : sf.scenarios) {
            fwe_estimate est = estimate_fwe(sc, store);
            append_fwe_rows(out, sc, est);
            std::cerr << name << ": " << sim_method_name(sc.method)
                      << " n=" << sc.n << " p=" << sc.p << " done\n";
        }
        const std::filesystem::path target =
            std::filesystem::path(out_dir) / (std::string(name) + ".csv");
        write_text_file(target.string(), out.str());
        std::cout << target.string() << '\n';
    }
    if (!any)
        throw stat_error("no scenario files found under " + scenario_dir);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skipped correlations with calibrated multiple-testing"};
    app.require_subcommand(1);

    input_flags in;
    rule_flags rf;
    test_flags tf;
    std::string format = "csv";
    std::string out_path;
    std::string estimator = "pearson";
    std::string dependent;
    std::string cache_dir;
    std::string mode = "pairwise";
    std::size_t cal_n = 0;
    std::size_t cal_p = 0;
    std::size_t cal_D = 0;
    std::size_t cal_B = 500;
    std::uint64_t cal_seed = table_generation_seed;
    std::string preset;
    std::string scenario_path;
    std::string scenario_dir = "scenarios";
    std::string out_dir = ".";

    CLI::App* detect = app.add_subcommand("detect", "flag multivariate outliers");
    add_input_flags(detect, in);
    add_rule_flags(detect, rf);
    detect->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    detect->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* corr = app.add_subcommand("corr", "skipped correlation matrix");
    add_input_flags(corr, in);
    add_rule_flags(corr, rf);
    corr->add_option("--estimator", estimator, "pearson or spearman")
        ->check(CLI::IsMember({"pearson", "spearman"}));
    corr->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    corr->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* test = app.add_subcommand("test", "pairwise hypothesis tests");
    add_input_flags(test, in);
    add_rule_flags(test, rf);
    test->add_option("--method", tf.method, "ss, sp, ecp, h, or h1")
        ->required()
        ->check(CLI::IsMember({"ss", "sp", "ecp", "h", "h1"}));
    test->add_option("--estimator", tf.estimator,
                     "pearson or spearman (ecp takes it from the table)")
        ->check(CLI::IsMember({"pearson", "spearman"}));
    test->add_option("--alpha", tf.alpha, "familywise level (default 0.05)");
    test->add_option("--B", tf.B, "bootstrap replicates (default 500)");
    test->add_option("--seed", tf.seed, "RNG seed (default 1)");
    test->add_option("--max-retries", tf.max_retries,
                     "degenerate-resample retries (default 50)");
    test->add_option("--D", tf.D, "table replication count for ecp/h1");
    test->add_option("--table", tf.table_path, "calibration table file (ecp)");
    test->add_option("--cache", tf.cache_dir,
                     "table cache directory (default SKIPCORR_CACHE_DIR or ./tables)");
    test->add_option("--out", tf.out_path, "write the report here as JSONL");
    test->add_flag("--quiet", tf.quiet, "suppress the stdout table");

    CLI::App* regtest = app.add_subcommand("regtest", "regression screen");
    add_input_flags(regtest, in);
    add_rule_flags(regtest, rf);
    regtest->add_option("--method", tf.method, "l or l3")
        ->required()
        ->check(CLI::IsMember({"l", "l3"}));
    regtest->add_option("--dependent", dependent,
                        "dependent column (name or 1-based index)")
        ->required();
    regtest->add_option("--estimator", tf.estimator, "pearson or spearman")
        ->check(CLI::IsMember({"pearson", "spearman"}));
    regtest->add_option("--alpha", tf.alpha, "familywise level (default 0.05)");
    regtest->add_option("--B", tf.B, "bootstrap replicates (default 500)");
    regtest->add_option("--seed", tf.seed, "RNG seed (default 1)");
    regtest->add_option("--max-retries", tf.max_retries,
                        "degenerate-resample retries (default 50)");
    regtest->add_option("--D", tf.D, "bin-table replication count (default 2000)");
    regtest->add_option("--cache", tf.cache_dir, "table cache directory");
    regtest->add_option("--out", tf.out_path, "write the report here as JSONL");
    regtest->add_flag("--quiet", tf.quiet, "suppress the stdout table");

    CLI::App* calibrate =
        app.add_subcommand("calibrate", "generate calibration tables");
    add_rule_flags(calibrate, rf);
    calibrate->add_option("--mode", mode, "pairwise or regression")
        ->check(CLI::IsMember({"pairwise", "regression"}));
    calibrate->add_option("--n", cal_n, "design sample size");
    calibrate->add_option("--p", cal_p, "columns (pairwise) or predictors");
    calibrate->add_option("--D", cal_D,
                          "replications (default 1000 pairwise, 2000 regression)");
    calibrate->add_option("--B", cal_B, "bootstrap replicates (default 500)");
    calibrate->add_option("--seed", cal_seed, "RNG seed (default 1729)");
    calibrate->add_option("--estimator", estimator, "pearson or spearman")
        ->check(CLI::IsMember({"pearson", "spearman"}));
    calibrate->add_option("--cache", cache_dir,
                          "cache directory (default SKIPCORR_CACHE_DIR or ./tables)");
    calibrate->add_option("--preset", preset,
                          "h1: the four regression bin tables (V30..V100)");

    CLI::App* simulate =
        app.add_subcommand("simulate", "run an FWE scenario campaign");
    simulate->add_option("--scenario", scenario_path, "scenario file")
        ->required();
    simulate->add_option("--cache", cache_dir, "table cache directory");
    simulate->add_option("--out", out_path, "output CSV (default stdout)");

    CLI::App* tables = app.add_subcommand(
        "tables", "desk-scale reproductions from bundled scenario files");
    tables->add_option("--scenarios", scenario_dir,
                       "directory with table2.scn .. table5.scn");
    tables->add_option("--cache", cache_dir, "table cache directory");
    tables->add_option("--out-dir", out_dir, "where the CSVs go");

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed())
            return run_detect(in, rf, format, out_path);
        if (corr->parsed())
            return run_corr(in, rf, estimator, format, out_path);
        if (test->parsed())
            return run_test(in, rf, tf);
        if (regtest->parsed())
            return run_regtest(in, rf, tf, dependent);
        if (calibrate->parsed())
            return run_calibrate(rf, mode, cal_n, cal_p, cal_D, cal_B,
                                 cal_seed, estimator, cache_dir, preset);
        if (simulate->parsed())
            return run_simulate(scenario_path, cache_dir, out_path);
        if (tables->parsed())
            return run_tables(scenario_dir, cache_dir, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
