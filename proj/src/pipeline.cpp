#include "densepart/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "densepart/combinatorics.hpp"
#include "densepart/errors.hpp"
#include "densepart/oracle.hpp"
#include "densepart/poly_series.hpp"

namespace densepart {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Direct: return "direct";
        case Mode::Rigorous: return "rigorous";
        case Mode::Exact: return "exact";
    }
    return "unknown";
}

namespace {

void check_common(const Graph& g, const ApproxConfig& cfg) {
    if (cfg.m < 2 || cfg.m > g.n())
        throw DomainError("m=" + std::to_string(cfg.m) + " must satisfy 2 <= m <= n=" + std::to_string(g.n()));
    if (cfg.gamma.has_value() == cfg.alpha.has_value())
        throw DomainError("exactly one of gamma and alpha must be given");
}

MomentVector<double> moments_to_order(const RealWeights& w, int m, int order, const EnumerationOptions& opt) {
    return order <= 3 ? h_derivatives_closed(w, m, order) : h_derivatives_enumerated(w, m, order, opt);
}

}  // namespace

ApproxResult approx_direct(const Graph& g, const ApproxConfig& cfg) {
    check_common(g, cfg);
    if (cfg.order < 1 || cfg.order > 6) throw DomainError("direct mode order must lie in 1..6");
    const int m = cfg.m;
    const double alpha = cfg.alpha ? *cfg.alpha : gamma_to_alpha(*cfg.gamma, m);
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    const double gamma = cfg.gamma ? *cfg.gamma : alpha_to_gamma(alpha, m);

    const auto w = weights_from_alpha(g, alpha);
    const auto derivs = moments_to_order(w, m, cfg.order, cfg.enumeration);
    const auto f = log_from_derivatives(derivs);

    ApproxResult res;
    res.mode = Mode::Direct;
    res.n = g.n();
    res.m = m;
    res.gamma = gamma;
    res.alpha = alpha;
    res.order_used = cfg.order;
    res.ln_h1 = taylor_eval(f, 1.0);
    // h(1) = (1 - alpha)^{C(m,2)} den
    res.shift = -static_cast<double>(pairs_of(m)) * std::log1p(-alpha);
    res.ln_den = res.ln_h1 + res.shift;
    res.certified_density = res.ln_den / (gamma * m);
    return res;
}

ApproxResult approx_rigorous(const Graph& g, const ApproxConfig& cfg) {
    check_common(g, cfg);
    if (!cfg.gamma) throw DomainError("rigorous mode requires gamma");
    const double gamma = *cfg.gamma;
    const int m = cfg.m;
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("rigorous mode requires 0 < gamma < 1");
    if (m < 4) throw DomainError("rigorous mode requires m >= 4");
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
    if (cfg.max_order < 1) throw DomainError("order budget leaves r = 0");

    const double delta = (1.0 + gamma) / 2.0;
    auto params = solve_params(delta, m);
    const double recipe_rho = rho_for(params, gamma, m);
    const bool size_ok = static_cast<double>(g.n()) >= params.omega * m;
    if (cfg.require_guarantee) {
        if (!size_ok)
            throw DomainError("n=" + std::to_string(g.n()) + " is below omega*m=" + std::to_string(params.omega * m) +
                              "; zero-free guarantee unavailable (pass an exploratory override to run anyway)");
        if (cfg.rho_override)
            throw DomainError("a rho override voids the zero-free guarantee; disable the guarantee requirement");
    }
    const double rho = cfg.rho_override.value_or(recipe_rho);
    params.rho = rho;

    const auto w = weights_from_gamma(g, m, gamma);
    const auto phi = build_phi(rho);
    const auto h_degree = static_cast<int>(pairs_of(m));
    const double g_degree = static_cast<double>(phi.degree()) * h_degree;

    int r = choose_r(g_degree, phi.beta(), cfg.eps);
    bool limited = false;
    if (r > cfg.max_order) {
        r = cfg.max_order;
        limited = true;
    }
    if (r < 1) r = 1;

    // h has degree C(m,2): higher derivatives vanish and need no enumeration.
    const int k_needed = std::min(r, h_degree);
    const auto derivs = h_derivatives_enumerated(w, m, k_needed, cfg.enumeration);
    const auto h_r = series_from_derivatives(derivs).truncated(r);
    const auto g_r = truncated_compose(h_r, phi.truncated(r), r);
    const auto f = log_series(g_r);

    ApproxResult res;
    res.mode = Mode::Rigorous;
    res.n = g.n();
    res.m = m;
    res.gamma = gamma;
    res.order_used = r;
    res.ln_h1 = taylor_eval(f, 1.0);
    res.shift = gamma * m / 2.0;
    res.ln_den = res.ln_h1 + res.shift;
    res.certified_density = res.ln_den / (gamma * m);
    res.error_bound = taylor_error_bound(g_degree, phi.beta(), r);
    res.budget_limited = limited;
    res.zero_free_certified = size_ok && !cfg.rho_override;
    res.params = params;
    res.phi_beta = phi.beta();
    res.phi_degree = phi.degree();
    return res;
}

ApproxResult approximate(const Graph& g, const ApproxConfig& cfg) {
    switch (cfg.mode) {
        case Mode::Direct: return approx_direct(g, cfg);
        case Mode::Rigorous: return approx_rigorous(g, cfg);
        case Mode::Exact: {
            check_common(g, cfg);
            ApproxResult res;
            res.mode = Mode::Exact;
            res.n = g.n();
            res.m = cfg.m;
            res.gamma = cfg.gamma ? *cfg.gamma : alpha_to_gamma(*cfg.alpha, cfg.m);
            if (cfg.alpha) res.alpha = cfg.alpha;
            res.ln_den = den_exact(g, cfg.m, res.gamma, cfg.enumeration.budget);
            res.certified_density = res.gamma > 0 ? res.ln_den / (res.gamma * cfg.m) : 0.0;
            res.ln_h1 = res.ln_den;
            res.error_bound = 0.0;
            return res;
        }
    }
    throw DomainError("unknown mode");
}

double certified_density(const ApproxResult& res, double eps) {
    if (res.gamma == 0.0) throw DomainError("certified_density: gamma = 0");
    return (res.ln_den - eps) / (res.gamma * res.m);
}

namespace {

// Estimate of ln P_Omega(Z_0) through the conditioned polynomial h_Omega, order 3.
double approx_ln_restricted(const RealWeights& w, int m, const std::vector<int>& omega,
                            const EnumerationOptions& options) {
    const int n = w.n();
    const int fixed = static_cast<int>(omega.size());
    double fixed_part = 0.0;
    for (int a = 0; a < fixed; ++a)
        for (int b = a + 1; b < fixed; ++b) fixed_part += std::log1p(w(omega[a], omega[b]));
    const int free_pick = m - fixed;
    double estimate = 0.0;
    if (free_pick > 0) {
        const auto derivs = h_derivatives_restricted(w, m, omega, 3, options);
        estimate = taylor_eval(log_from_derivatives(derivs), 1.0);
    }
    return fixed_part + log_binomial(n - fixed, free_pick) + estimate;
}

}  // namespace

SubsetDensity extract_subset(const Graph& g, int m, double gamma, Engine engine, const EnumerationOptions& options) {
    if (m > g.n()) throw DomainError("extract_subset: m exceeds n");
    if (m < 2) throw DomainError("extract_subset: m must be at least 2");
    if (!(gamma > 0.0)) throw DomainError("extract_subset: gamma must be positive");

    RealWeights w;
    if (engine == Engine::Approximate) w = weights_from_gamma(g, m, gamma);

    std::vector<int> omega;
    std::vector<char> taken(static_cast<std::size_t>(g.n()), 0);
    while (static_cast<int>(omega.size()) < m) {
        int best = -1;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < g.n(); ++j) {
            if (taken[j]) continue;
            std::vector<int> trial = omega;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), j), j);
            const double score = engine == Engine::Exact
                                     ? ln_restricted_partition(g, m, gamma, trial, options.budget)
                                     : approx_ln_restricted(w, m, trial, options);
            if (best < 0 || score > best_score) {
                best = j;
                best_score = score;
            }
        }
        taken[best] = 1;
        omega.insert(std::upper_bound(omega.begin(), omega.end(), best), best);
    }
    return density(g, omega);
}

}  // namespace densepart
