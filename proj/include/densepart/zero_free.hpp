#pragma once

#include <optional>

#include "densepart/weights.hpp"

namespace densepart {

/// Constants of the zero-free domain
///   U(delta, eta) = { Z : |Re z_ij| <= delta/(m-1), |Im z_ij| <= eta/(m-1) }
/// together with the angle/ratio slack (theta, lambda) and the size factor omega:
/// P_m(Z) != 0 on U whenever n >= omega * m.
struct ZeroFreeParams {
    double delta = 0;
    double theta = 0;
    double eta = 0;
    double lambda = 0;
    double omega = 0;
    int m = 0;                   // subset size omega was computed for
    std::optional<double> rho;   // strip half-width, set by the pipeline via rho_for
};

/// Result of checking the four defining inequalities at a given n.
struct ParamCheck {
    bool angle_base = false;    // 2 delta tan(theta/2) + 5 eta < theta
    bool lambda_base = false;   // lambda > e^{6 delta}
    bool angle_at_n = false;    // ... + 10 delta lambda m/(n-1) <= theta
    bool lambda_at_n = false;   // exp(6 delta + 10 delta lambda m/(n-1)) <= lambda

    bool all() const noexcept { return angle_base && lambda_base && angle_at_n && lambda_at_n; }
};

/// Deterministic parameter recipe for 0 < delta < 1 and m >= 4.
///   theta  = midpoint of the feasible interval of 2 delta tan(theta/2) < theta in (0, pi/2)
///   eta    = (theta - 2 delta tan(theta/2)) / 10
///   lambda = 2 e^{6 delta}
///   omega  = 1.1 x the smallest ratio n/m (at least 1) at which both n-dependent inequalities hold
ZeroFreeParams solve_params(double delta, int m);

ParamCheck check_params(const ZeroFreeParams& params, int m, long long n);

/// Strip half-width min((delta - gamma)/10, eta/10, 0.9) for the substitution
/// z -> ln(1 + z w_ij) with w_ij = exp(+-gamma/(m-1)) - 1. Requires 0 < gamma < delta, m >= 4.
double rho_for(const ZeroFreeParams& params, double gamma, int m);

/// True iff every off-diagonal z_ij has |Re| <= delta/(m-1) and |Im| <= eta/(m-1).
bool in_domain(const ComplexWeights& z, double delta, double eta, int m);

}  // namespace densepart
