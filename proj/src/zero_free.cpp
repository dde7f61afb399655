#include "densepart/zero_free.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "densepart/errors.hpp"

namespace densepart {

namespace {

double angle_slack(double delta, double theta) { return theta - 2.0 * delta * std::tan(theta / 2.0); }

}  // namespace

ZeroFreeParams solve_params(double delta, int m) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("solve_params: delta must lie in (0, 1)");
    if (m < 4) throw DomainError("solve_params: m must be at least 4");

    // theta - 2 delta tan(theta/2) is concave with positive slope 1 - delta at 0,
    // so the feasible set is an interval (0, theta_max).
    const double half_pi = std::numbers::pi / 2.0;
    double theta_max = half_pi;
    if (angle_slack(delta, half_pi) <= 0.0) {
        double lo = 1e-9, hi = half_pi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (angle_slack(delta, mid) > 0.0 ? lo : hi) = mid;
        }
        theta_max = lo;
    }

    ZeroFreeParams p;
    p.delta = delta;
    p.m = m;
    p.theta = theta_max / 2.0;
    p.eta = angle_slack(delta, p.theta) / 10.0;
    p.lambda = 2.0 * std::exp(6.0 * delta);

    // With c = 10 delta lambda m/(n-1):
    //   angle:  c <= theta - 2 delta tan(theta/2) - 5 eta = 5 eta
    //   ratio:  c <= ln lambda - 6 delta = ln 2
    const double angle_room = p.theta - 2.0 * delta * std::tan(p.theta / 2.0) - 5.0 * p.eta;
    const double ratio_room = std::log(p.lambda) - 6.0 * delta;
    const double coeff = 10.0 * delta * p.lambda * m;
    // Both conditions only get easier as n grows, so flooring n_min at m keeps omega > 1.
    const double n_min = std::max(1.0 + std::max(coeff / angle_room, coeff / ratio_room), static_cast<double>(m));
    p.omega = 1.1 * n_min / m;
    return p;
}

ParamCheck check_params(const ZeroFreeParams& p, int m, long long n) {
    ParamCheck c;
    const double base = 2.0 * p.delta * std::tan(p.theta / 2.0) + 5.0 * p.eta;
    c.angle_base = base < p.theta;
    c.lambda_base = p.lambda > std::exp(6.0 * p.delta);
    if (n > 1) {
        const double extra = 10.0 * p.delta * p.lambda * m / static_cast<double>(n - 1);
        c.angle_at_n = base + extra <= p.theta;
        c.lambda_at_n = std::exp(6.0 * p.delta + extra) <= p.lambda;
    }
    return c;
}

double rho_for(const ZeroFreeParams& params, double gamma, int m) {
    if (m < 4) throw DomainError("rho_for: m must be at least 4");
    if (!(gamma > 0.0)) throw DomainError("rho_for: gamma must be positive");
    if (!(gamma < params.delta)) throw DomainError("rho_for: gamma must be smaller than delta");
    // |d/dz ln(1 + z w)| <= 10/(m-1) on |z| <= 2 because |w| <= 0.4 for m >= 4.
    return std::min({(params.delta - gamma) / 10.0, params.eta / 10.0, 0.9});
}

bool in_domain(const ComplexWeights& z, double delta, double eta, int m) {
    const double re_max = delta / (m - 1), im_max = eta / (m - 1);
    for (int i = 0; i < z.n(); ++i)
        for (int j = i + 1; j < z.n(); ++j) {
            const Complex v = z(i, j);
            if (std::abs(v.real()) > re_max || std::abs(v.imag()) > im_max) return false;
        }
    return true;
}

}  // namespace densepart
