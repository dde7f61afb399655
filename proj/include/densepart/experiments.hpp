#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densepart/oracle.hpp"
#include "densepart/weights.hpp"

namespace densepart {

/// One random +-1 weight matrix and the smallest root modulus of h_W.
struct ZeroExperimentRecord {
    std::uint64_t trial_seed = 0;
    int trial = 0;
    int n = 0;
    int m = 0;
    double r_param = 0;
    double tau = 0;
    /// +inf when h_W is constant (no roots).
    double min_root_modulus = 0;
    bool in_disc = false;
    bool converged = true;
    std::vector<Complex> roots;
    double wall_time = 0;
};

struct ZeroExperimentSummary {
    int n = 0, m = 0, trials = 0;
    double r_param = 0, tau = 0;
    double disc_radius = 0;           // r / sqrt(2 tau)
    double threshold_n = 0;           // 2 m^2 (1 + r^2)^m + 2m
    bool above_threshold = false;
    int in_disc_count = 0;
    int failures = 0;                 // root-finder non-convergence, excluded below
    double frequency = 0;             // in_disc_count / (trials - failures)
    double bound = 0;                 // 1/tau
};

struct ZeroExperimentResult {
    std::vector<ZeroExperimentRecord> records;
    ZeroExperimentSummary summary;
};

double zero_threshold_n(int m, double r_param);

/// Symmetric matrix of independent +-1 entries keyed by (seed, trial, i, j).
RealWeights random_sign_matrix(int n, std::uint64_t seed, int trial);

/// Samples `trials` sign matrices, finds the smallest root of h_W and records
/// whether it falls in |z| <= r/sqrt(2 tau). Boundary ties count as inside.
ZeroExperimentResult run_zero_experiment(int n, int m, double r_param, double tau, int trials, std::uint64_t seed,
                                         int threads = 1, std::uint64_t budget = kDefaultCoeffBudget);

struct IdentityCheck {
    double lhs = 0;  // exact average of |h_W(radius e^{i theta})|^2 over all sign matrices
    double rhs = 0;  // C(n,m)^{-2} sum_l C(n,l) C(n-l,m-l) C(n-m,m-l) (1+radius^2)^{C(l,2)}
};

double expectation_identity_rhs(int n, int m, double radius);
IdentityCheck expectation_identity_check(int n, int m, double radius, double theta);

struct SweepRecord {
    std::uint64_t graph_seed = 0;
    int n = 0;
    int m = 0;
    double p = 0;
    double alpha = 0;
    double gamma = 0;
    int order = 0;
    double estimate = 0;  // ln den from the direct method
    double oracle = 0;    // ln den from enumeration
    double abs_error = 0;
    std::optional<std::string> failure;
};

struct SweepConfig {
    std::vector<int> n_values{10};
    double p = 0.5;
    std::vector<std::uint64_t> seeds{1};
    std::vector<int> m_values{4};
    std::vector<double> alphas{0.2};
    std::vector<int> orders{1, 2, 3};
    std::uint64_t budget = kDefaultOracleBudget;
};

/// Direct-method estimates against the oracle over a G(n, p) grid.
std::vector<SweepRecord> convergence_sweep(const SweepConfig& config);

}  // namespace densepart
