#include "densepart/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "densepart/combinatorics.hpp"
#include "densepart/errors.hpp"

namespace densepart {

namespace {

struct SubsetPlan {
    std::vector<int> pool;  // vertices outside omega
    std::vector<int> seed;  // omega
    int to_pick = 0;
};

SubsetPlan plan_subsets(int n, int m, const std::vector<int>& omega, std::uint64_t budget, const char* who) {
    if (m < 1 || m > n) throw DomainError(std::string(who) + ": need 1 <= m <= n");
    std::vector<char> in_omega(static_cast<std::size_t>(n), 0);
    for (std::size_t a = 0; a < omega.size(); ++a) {
        if (omega[a] < 0 || omega[a] >= n || (a > 0 && omega[a - 1] >= omega[a]))
            throw DomainError(std::string(who) + ": conditioning set must be sorted, distinct and in range");
        in_omega[omega[a]] = 1;
    }
    SubsetPlan plan;
    plan.seed = omega;
    for (int v = 0; v < n; ++v)
        if (!in_omega[v]) plan.pool.push_back(v);
    plan.to_pick = m - static_cast<int>(omega.size());
    if (plan.to_pick >= 0) {
        const auto count = binomial_u64(plan.pool.size(), static_cast<std::uint64_t>(plan.to_pick));
        if (count > budget)
            throw BudgetExceeded(std::string(who) + ": " + std::to_string(count) +
                                 " subsets exceed the enumeration budget of " + std::to_string(budget));
    }
    return plan;
}

// Visits every way of extending `chosen` by `remaining` vertices from pool[start..].
// extend(state, chosen, v) returns the state after adding v.
template <class State, class Extend, class Leaf>
void for_each_extension(const std::vector<int>& pool, std::size_t start, int remaining, std::vector<int>& chosen,
                        const State& state, Extend& extend, Leaf& leaf) {
    if (remaining == 0) {
        leaf(state);
        return;
    }
    const std::size_t stop = pool.size() - static_cast<std::size_t>(remaining);
    for (std::size_t p = start; p <= stop; ++p) {
        const int v = pool[p];
        State next = extend(state, chosen, v);
        chosen.push_back(v);
        for_each_extension(pool, p + 1, remaining - 1, chosen, next, extend, leaf);
        chosen.pop_back();
    }
}

double log_sum_exp(const std::vector<double>& xs) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double x : xs) peak = std::max(peak, x);
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - peak);
    return peak + std::log(acc);
}

}  // namespace

std::vector<std::uint64_t> edge_count_histogram(const Graph& g, int m, const std::vector<int>& omega,
                                                std::uint64_t budget) {
    const auto plan = plan_subsets(g.n(), m, omega, budget, "edge_count_histogram");
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(pairs_of(m)) + 1, 0);
    if (plan.to_pick < 0) return hist;
    int base = 0;
    for (std::size_t a = 0; a < omega.size(); ++a)
        for (std::size_t b = a + 1; b < omega.size(); ++b) base += g.has_edge(omega[a], omega[b]) ? 1 : 0;
    auto extend = [&g](int edges, const std::vector<int>& chosen, int v) {
        for (int u : chosen) edges += g.has_edge(u, v) ? 1 : 0;
        return edges;
    };
    auto leaf = [&hist](int edges) { ++hist[edges]; };
    std::vector<int> chosen = plan.seed;
    for_each_extension(plan.pool, 0, plan.to_pick, chosen, base, extend, leaf);
    return hist;
}

double den_exact(const Graph& g, int m, double gamma, std::uint64_t budget) {
    if (m < 2 || m > g.n()) throw DomainError("den_exact: need 2 <= m <= n");
    const auto hist = edge_count_histogram(g, m, {}, budget);
    const double pairs = static_cast<double>(pairs_of(m));
    // Anchor at the largest exponent present and average the histogram weights directly,
    // so gamma = 0 and complete graphs come out exact.
    double top = -std::numeric_limits<double>::infinity();
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < hist.size(); ++e)
        if (hist[e] > 0) {
            top = std::max(top, gamma * m * static_cast<double>(e) / pairs);
            total += hist[e];
        }
    double acc = 0.0;
    for (std::size_t e = 0; e < hist.size(); ++e)
        if (hist[e] > 0)
            acc += static_cast<double>(hist[e]) * std::exp(gamma * m * static_cast<double>(e) / pairs - top);
    return top + std::log(acc / static_cast<double>(total));
}

double ln_restricted_partition(const Graph& g, int m, double gamma, const std::vector<int>& omega,
                               std::uint64_t budget) {
    if (m < 2 || m > g.n()) throw DomainError("ln_restricted_partition: need 2 <= m <= n");
    if (static_cast<int>(omega.size()) > m) return -std::numeric_limits<double>::infinity();
    const auto hist = edge_count_histogram(g, m, omega, budget);
    const double pairs = static_cast<double>(pairs_of(m));
    const double t = gamma / (m - 1);
    std::vector<double> terms;
    for (std::size_t e = 0; e < hist.size(); ++e)
        if (hist[e] > 0)
            terms.push_back(std::log(static_cast<double>(hist[e])) + t * (2.0 * static_cast<double>(e) - pairs));
    return log_sum_exp(terms);
}

Complex pm_exact(const ComplexWeights& z, int m, const std::vector<int>& omega, std::uint64_t budget) {
    validate_weights(z);
    if (static_cast<int>(omega.size()) > m) return Complex(0.0, 0.0);
    const auto plan = plan_subsets(z.n(), m, omega, budget, "pm_exact");
    Complex base(0.0, 0.0);
    for (std::size_t a = 0; a < omega.size(); ++a)
        for (std::size_t b = a + 1; b < omega.size(); ++b) base += z(omega[a], omega[b]);
    Complex total(0.0, 0.0);
    auto extend = [&z](Complex s, const std::vector<int>& chosen, int v) {
        for (int u : chosen) s += z(u, v);
        return s;
    };
    auto leaf = [&total](Complex s) { total += std::exp(s); };
    std::vector<int> chosen = plan.seed;
    for_each_extension(plan.pool, 0, plan.to_pick, chosen, base, extend, leaf);
    return total;
}

Complex PolyCoeffs::operator()(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

template <class Scalar>
PolyCoeffs h_coeffs_exact(const WeightMatrix<Scalar>& w, int m, std::uint64_t budget) {
    validate_weights(w);
    const int n = w.n();
    if (m < 2 || m > n) throw DomainError("h_coeffs_exact: need 2 <= m <= n");
    const auto pairs = static_cast<int>(pairs_of(m));
    if (pairs > 64) throw DomainError("h_coeffs_exact: C(m,2) must not exceed 64");
    plan_subsets(n, m, {}, budget, "h_coeffs_exact");

    // Depth-indexed product buffers: level[d] holds prod over pairs of the first
    // d chosen vertices, a polynomial of degree C(d,2).
    std::vector<std::vector<Scalar>> level(static_cast<std::size_t>(m) + 1,
                                           std::vector<Scalar>(static_cast<std::size_t>(pairs) + 1));
    std::vector<Scalar> total(static_cast<std::size_t>(pairs) + 1, Scalar{});
    std::vector<int> chosen(static_cast<std::size_t>(m));
    level[0].assign(level[0].size(), Scalar{});
    level[0][0] = Scalar(1);

    auto recurse = [&](auto& self, int depth, int start) -> void {
        if (depth == m) {
            for (int k = 0; k <= pairs; ++k) total[k] += level[m][k];
            return;
        }
        for (int v = start; v <= n - (m - depth); ++v) {
            auto& out = level[depth + 1];
            const auto& in = level[depth];
            int deg = depth * (depth - 1) / 2;
            std::copy(in.begin(), in.begin() + deg + 1, out.begin());
            for (int a = 0; a < depth; ++a) {
                const Scalar x = w(chosen[a], v);
                out[deg + 1] = Scalar{};
                for (int k = deg + 1; k >= 1; --k) out[k] += x * out[k - 1];
                ++deg;
            }
            chosen[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    recurse(recurse, 0, 0);

    const double count = binomial(n, m);
    PolyCoeffs p;
    p.c.resize(total.size());
    for (std::size_t k = 0; k < total.size(); ++k) p.c[k] = Complex(total[k]) / count;
    return p;
}

template PolyCoeffs h_coeffs_exact(const WeightMatrix<double>&, int, std::uint64_t);
template PolyCoeffs h_coeffs_exact(const WeightMatrix<Complex>&, int, std::uint64_t);

std::vector<Complex> poly_roots(const PolyCoeffs& p) {
    std::vector<Complex> c = p.c;
    while (!c.empty() && std::abs(c.back()) < 1e-14) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    if (d < 1) throw DomainError("poly_roots: polynomial has degree < 1 after trimming");
    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    const PolyCoeffs trimmed{c};

    // Companion matrix of the monic polynomial.
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("poly_roots: eigenvalue iteration did not converge");

    std::vector<Complex> deriv(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) deriv[k - 1] = static_cast<double>(k) * c[k];
    const PolyCoeffs dp{deriv};

    // Outside the unit disc p(z) is measured as z^{-d} p(z), the reversed polynomial at 1/z;
    // evaluating p itself there loses |z|^d in rounding.
    auto residual = [&](Complex z) {
        const double r = std::abs(trimmed(z));
        const double mod = std::abs(z);
        return mod > 1.0 ? r / std::pow(mod, d) : r;
    };

    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Complex z = solver.eigenvalues()[i];
        double res = residual(z);
        // Newton polish; keep a step only if it lowers the residual.
        for (int it = 0; it < 8 && res > 0.0; ++it) {
            const Complex slope = dp(z);
            if (slope == Complex(0.0, 0.0)) break;
            const Complex cand = z - trimmed(z) / slope;
            const double cand_res = residual(cand);
            if (!(cand_res < res)) break;
            z = cand;
            res = cand_res;
        }
        if (!(res <= 1e-8 * scale))
            throw ConvergenceError("poly_roots: root residual " + std::to_string(res / scale) +
                                   " x max|c| exceeds 1e-8");
        roots[i] = z;
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
    });
    return roots;
}

}  // namespace densepart
