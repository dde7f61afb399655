#include "densepart/experiments.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "densepart/combinatorics.hpp"
#include "densepart/errors.hpp"
#include "densepart/graph.hpp"
#include "densepart/pipeline.hpp"
#include "densepart/random.hpp"

namespace densepart {

double zero_threshold_n(int m, double r_param) {
    return 2.0 * m * m * std::pow(1.0 + r_param * r_param, m) + 2.0 * m;
}

RealWeights random_sign_matrix(int n, std::uint64_t seed, int trial) {
    RealWeights w(n, Provenance::Raw);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            w.set(i, j, (counter_hash(seed, static_cast<std::uint64_t>(trial), i, j) >> 63) ? 1.0 : -1.0);
    return w;
}

namespace {

ZeroExperimentRecord run_trial(int n, int m, double r_param, double tau, std::uint64_t seed, int trial,
                               double radius, std::uint64_t budget) {
    const auto start = std::chrono::steady_clock::now();
    ZeroExperimentRecord rec;
    rec.trial = trial;
    rec.trial_seed = counter_hash(seed, static_cast<std::uint64_t>(trial), 0, 0);
    rec.n = n;
    rec.m = m;
    rec.r_param = r_param;
    rec.tau = tau;

    const auto h = h_coeffs_exact(random_sign_matrix(n, seed, trial), m, budget);
    int degree = h.degree();
    while (degree > 0 && std::abs(h.c[degree]) < 1e-14) --degree;
    rec.min_root_modulus = std::numeric_limits<double>::infinity();
    if (degree >= 1) {
        try {
            rec.roots = poly_roots(h);
            rec.min_root_modulus = std::abs(rec.roots.front());
        } catch (const ConvergenceError&) {
            rec.converged = false;
        }
    }
    rec.in_disc = rec.converged && rec.min_root_modulus <= radius;
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

}  // namespace

ZeroExperimentResult run_zero_experiment(int n, int m, double r_param, double tau, int trials, std::uint64_t seed,
                                         int threads, std::uint64_t budget) {
    if (m < 2 || m > n) throw DomainError("zeros: need 2 <= m <= n");
    if (!(r_param > 0.0)) throw DomainError("zeros: r must be positive");
    if (!(tau > 1.0)) throw DomainError("zeros: tau must exceed 1");
    if (trials < 1) throw DomainError("zeros: trials must be positive");
    if (binomial_u64(n, m) > budget)
        throw BudgetExceeded("zeros: C(n,m) exceeds the coefficient budget of " + std::to_string(budget));

    ZeroExperimentResult out;
    auto& s = out.summary;
    s.n = n;
    s.m = m;
    s.trials = trials;
    s.r_param = r_param;
    s.tau = tau;
    s.disc_radius = r_param / std::sqrt(2.0 * tau);
    s.threshold_n = zero_threshold_n(m, r_param);
    s.above_threshold = n >= s.threshold_n;
    s.bound = 1.0 / tau;

    out.records.resize(static_cast<std::size_t>(trials));
    const int workers = std::max(1, std::min(threads, trials));
    auto work = [&](int first) {
        for (int t = first; t < trials; t += workers)
            out.records[t] = run_trial(n, m, r_param, tau, seed, t, s.disc_radius, budget);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; ++k) pool.emplace_back(work, k);
        for (auto& th : pool) th.join();
    }

    for (const auto& rec : out.records) {
        if (!rec.converged) ++s.failures;
        else if (rec.in_disc) ++s.in_disc_count;
    }
    const int counted = trials - s.failures;
    s.frequency = counted > 0 ? static_cast<double>(s.in_disc_count) / counted : 0.0;
    return out;
}

double expectation_identity_rhs(int n, int m, double radius) {
    double acc = 0.0;
    for (int l = 0; l <= m; ++l)
        acc += binomial(n, l) * binomial(n - l, m - l) * binomial(n - m, m - l) *
               std::pow(1.0 + radius * radius, static_cast<double>(pairs_of(l)));
    const double total = binomial(n, m);
    return acc / (total * total);
}

IdentityCheck expectation_identity_check(int n, int m, double radius, double theta) {
    if (m < 2 || m > n) throw DomainError("check-identity: need 2 <= m <= n");
    const auto pair_count = static_cast<int>(pairs_of(n));
    if (pair_count > 20) throw BudgetExceeded("check-identity: n(n-1)/2 must not exceed 20");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    // each m-subset as a list of pair indices
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        std::vector<int> ids;
        for (int k = 0; k < pair_count; ++k)
            if ((mask >> pairs[k].first & 1u) && (mask >> pairs[k].second & 1u)) ids.push_back(k);
        subsets.push_back(std::move(ids));
    }

    const Complex z = std::polar(radius, theta);
    const double count = static_cast<double>(subsets.size());
    double sum_sq = 0.0;
    const std::uint64_t matrices = 1ULL << pair_count;
    for (std::uint64_t signs = 0; signs < matrices; ++signs) {
        Complex h(0.0, 0.0);
        for (const auto& ids : subsets) {
            Complex prod(1.0, 0.0);
            for (int k : ids) prod *= (signs >> k & 1ULL) ? 1.0 + z : 1.0 - z;
            h += prod;
        }
        h /= count;
        sum_sq += std::norm(h);
    }
    return {sum_sq / static_cast<double>(matrices), expectation_identity_rhs(n, m, radius)};
}

std::vector<SweepRecord> convergence_sweep(const SweepConfig& config) {
    std::vector<SweepRecord> out;
    for (int n : config.n_values)
        for (std::uint64_t seed : config.seeds) {
            const Graph g = random_gnp(n, config.p, seed);
            for (int m : config.m_values)
                for (double alpha : config.alphas) {
                    SweepRecord base;
                    base.graph_seed = seed;
                    base.n = n;
                    base.m = m;
                    base.p = config.p;
                    base.alpha = alpha;
                    std::optional<double> oracle;
                    std::optional<std::string> oracle_failure;
                    try {
                        base.gamma = alpha_to_gamma(alpha, m);
                        oracle = den_exact(g, m, base.gamma, config.budget);
                    } catch (const Error& e) {
                        oracle_failure = e.what();
                    }
                    for (int order : config.orders) {
                        SweepRecord rec = base;
                        rec.order = order;
                        if (oracle_failure) {
                            rec.failure = oracle_failure;
                            out.push_back(rec);
                            continue;
                        }
                        try {
                            ApproxConfig cfg;
                            cfg.m = m;
                            cfg.alpha = alpha;
                            cfg.order = order;
                            cfg.enumeration.budget = config.budget;
                            rec.estimate = approx_direct(g, cfg).ln_den;
                            rec.oracle = *oracle;
                            rec.abs_error = std::abs(rec.estimate - rec.oracle);
                        } catch (const Error& e) {
                            rec.failure = e.what();
                        }
                        out.push_back(rec);
                    }
                }
        }
    return out;
}

}  // namespace densepart
