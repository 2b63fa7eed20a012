#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skipcorr/inference.hpp"
#include "skipcorr/rng.hpp"

namespace skipcorr {

struct gh_params {
    double g = 0.0;
    double h = 0.0;
};

// W = ((exp(gZ) - 1)/g) exp(hZ^2/2) for g > 0, Z exp(hZ^2/2) at g = 0.
double gh_deviate(double z, const gh_params& params);

data_matrix sample_gh_matrix(std::size_t n, std::size_t p,
                             const gh_params& params, rng_stream& rng);

enum class variance_pattern { vp1, vp2, vp3 };

const char* variance_pattern_name(variance_pattern vp);

// lambda(x) = 1, |x|+1, or 1/(|x|+1); X2 = lambda(X1) * eps, applied to
// the second column only (the bivariate heteroscedastic construction).
void apply_variance_pattern(const std::vector<double>& x1,
                            std::vector<double>& eps, variance_pattern vp);

// Equicorrelated normal rows via the closed-form square root of
// (1-rho) I + rho J. Requires -1/(p-1) < rho < 1.
data_matrix sample_correlated_normal(std::size_t n, std::size_t p,
                                     double common_rho, rng_stream& rng);

// Tables generated on demand by the simulation layer always use this seed,
// so a cold cache fills with the same tables no matter which scenario runs
// first. The calibrate subcommand defaults to it as well.
inline constexpr std::uint64_t table_generation_seed = 1729;

enum class sim_method { ss, sp, ecp, h, h1, l3, raw, plain_t };

const char* sim_method_name(sim_method m);
std::optional<sim_method> sim_method_from_name(const std::string& name);

struct scenario {
    sim_method method = sim_method::ss;
    estimator_kind estimator = estimator_kind::pearson;
    std::size_t n = 20;
    std::size_t p = 2; // predictors for l3 (joint cloud is p+1 columns)
    gh_params gh;
    variance_pattern vp = variance_pattern::vp1;
    double common_rho = 0.0;
    std::vector<double> alphas = {0.05};
    std::size_t R = 2000;
    std::size_t B = 500;
    std::size_t D = 1000;
    std::uint64_t seed = 1;
};

struct fwe_estimate {
    std::vector<double> estimates; // one per alpha
    std::vector<double> ses;       // sqrt(est (1-est) / R_effective)
    std::vector<bool> bradley_ok;
    std::size_t replications = 0;  // successful ones
    std::size_t failed = 0;
    bool unreliable = false; // more than 1% of replications failed
};

// Proportion of replications with at least one rejection under the null
// scenario. Methods needing tables (ecp, h1, l3) pull them from the store,
// generating and caching scenario-matched tables when absent.
fwe_estimate estimate_fwe(const scenario& sc, table_store& store);

// Probability of rejecting the (0,1) pair under common_rho > 0, with or
// without the FWE adjustment (adjust = false tests each pair at alpha
// directly).
double estimate_power(const scenario& sc, bool adjust, table_store& store);

// Bradley's liberal criterion: 0.5 alpha <= estimate <= 1.5 alpha.
bool bradley_check(double estimate, double alpha);

} // namespace skipcorr
