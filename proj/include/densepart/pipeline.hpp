#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densepart/graph.hpp"
#include "densepart/moments.hpp"
#include "densepart/zero_free.hpp"

namespace densepart {

enum class Mode { Direct, Rigorous, Exact };

std::string to_string(Mode mode);

struct ApproxConfig {
    int m = 0;
    std::optional<double> gamma;
    std::optional<double> alpha;
    Mode mode = Mode::Direct;
    /// Taylor order in direct mode (1..6; <= 3 uses closed forms).
    int order = 3;
    /// Target additive error on ln den in rigorous mode.
    double eps = 0.1;
    /// Largest Taylor order rigorous mode will use; beyond it the result is budget-limited.
    int max_order = 64;
    EnumerationOptions enumeration;
    /// Rigorous mode: replaces the strip half-width derived from the zero-free recipe.
    std::optional<double> rho_override;
    /// Rigorous mode: refuse inputs where the zero-free guarantee is unavailable.
    bool require_guarantee = true;
};

struct ApproxResult {
    Mode mode = Mode::Direct;
    int n = 0;
    int m = 0;
    double gamma = 0;
    std::optional<double> alpha;
    int order_used = 0;
    /// Natural log of den_m(G; gamma).
    double ln_den = 0;
    /// ln_den / (gamma m).
    double certified_density = 0;
    /// T_r(1), the Taylor estimate of ln h(1) (ln g(1) in rigorous mode).
    double ln_h1 = 0;
    /// ln_den - ln_h1: gamma m/2 (rigorous) or -C(m,2) ln(1 - alpha) (direct).
    double shift = 0;
    /// Additive error bound on ln_den when one is available.
    std::optional<double> error_bound;
    bool budget_limited = false;
    /// Rigorous mode: true when n >= omega m and the recipe's rho was used.
    bool zero_free_certified = false;
    std::optional<ZeroFreeParams> params;
    std::optional<double> phi_beta;
    std::optional<std::int64_t> phi_degree;
};

/// Simplified method: W = +-alpha, Taylor expansion of ln h at 0 to the requested order.
ApproxResult approx_direct(const Graph& g, const ApproxConfig& cfg);

/// Interpolation through phi: ln den = gamma m/2 + T_r(1) for g = h o phi.
ApproxResult approx_rigorous(const Graph& g, const ApproxConfig& cfg);

/// Dispatches on cfg.mode (Exact runs the brute-force oracle).
ApproxResult approximate(const Graph& g, const ApproxConfig& cfg);

/// (ln_den - eps)/(gamma m): a lower bound on the densest m-subset density.
double certified_density(const ApproxResult& res, double eps);

enum class Engine { Exact, Approximate };

/// Greedy successive conditioning: grow Omega one vertex at a time, picking the
/// vertex with the largest conditioned partition function (lowest index on ties).
SubsetDensity extract_subset(const Graph& g, int m, double gamma, Engine engine,
                             const EnumerationOptions& options = {});

}  // namespace densepart
