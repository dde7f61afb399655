#include "densepart/poly_series.hpp"

#include <cmath>
#include <string>

#include "densepart/errors.hpp"

namespace densepart {

template <class Scalar>
TruncatedSeries<Scalar> TruncatedSeries<Scalar>::truncated(int r) const {
    std::vector<Scalar> c(static_cast<std::size_t>(r) + 1, Scalar{});
    for (int k = 0; k <= r && k <= order(); ++k) c[k] = coeffs_[k];
    return TruncatedSeries(std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> series_from_derivatives(const MomentVector<Scalar>& derivs) {
    std::vector<Scalar> c(derivs.values.size());
    double factorial = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) factorial *= static_cast<double>(k);
        c[k] = derivs.values[k] / Scalar(factorial);
    }
    return TruncatedSeries<Scalar>(std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> log_series(const TruncatedSeries<Scalar>& g) {
    const int r = g.order();
    const Scalar g0 = g[0];
    if (g0 == Scalar{}) throw DomainError("log transform: g(0) = 0");
    // g^(k) = sum_{j<k} C(k-1, j) f^(k-j) g^(j), rewritten on Taylor coefficients:
    // k a_k = sum_{i=1}^{k} i b_i a_{k-i}, solved for b_k.
    std::vector<Scalar> b(static_cast<std::size_t>(r) + 1, Scalar{});
    b[0] = std::log(g0);
    for (int k = 1; k <= r; ++k) {
        Scalar acc = Scalar(static_cast<double>(k)) * g[k];
        for (int i = 1; i < k; ++i) acc -= Scalar(static_cast<double>(i)) * b[i] * g[k - i];
        b[k] = acc / (Scalar(static_cast<double>(k)) * g0);
    }
    return TruncatedSeries<Scalar>(std::move(b));
}

template <class Scalar>
TruncatedSeries<Scalar> log_from_derivatives(const MomentVector<Scalar>& g_derivs) {
    if (g_derivs.values.empty()) throw DomainError("log transform: empty derivative vector");
    return log_series(series_from_derivatives(g_derivs));
}

template <class Scalar>
Scalar taylor_eval(const TruncatedSeries<Scalar>& f, Scalar at) {
    const auto& c = f.coeffs();
    Scalar acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
    return acc;
}

template <class Scalar>
TruncatedSeries<Scalar> truncated_multiply(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b,
                                           int r) {
    std::vector<Scalar> c(static_cast<std::size_t>(r) + 1, Scalar{});
    const int ra = std::min(a.order(), r);
    for (int i = 0; i <= ra; ++i) {
        if (a[i] == Scalar{}) continue;
        const int rb = std::min(b.order(), r - i);
        for (int j = 0; j <= rb; ++j) c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries<Scalar>(std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> truncated_compose(const TruncatedSeries<Scalar>& outer,
                                          const TruncatedSeries<Scalar>& inner, int r) {
    if (r < 0) throw DomainError("truncated_compose: negative order");
    if (inner[0] != Scalar{}) throw DomainError("truncated_compose: inner series has a nonzero constant term");
    const auto phi = inner.truncated(r);
    // acc <- acc * phi + b_k for k = r-1, ..., 0
    std::vector<Scalar> start(static_cast<std::size_t>(r) + 1, Scalar{});
    start[0] = outer[r];
    TruncatedSeries<Scalar> acc(std::move(start));
    for (int k = r - 1; k >= 0; --k) {
        auto next = truncated_multiply(acc, phi, r);
        std::vector<Scalar> c = next.coeffs();
        c[0] += outer[k];
        acc = TruncatedSeries<Scalar>(std::move(c));
    }
    return acc;
}

double taylor_error_bound(double poly_degree, double beta, int r) {
    return poly_degree / (std::pow(beta, r) * (beta - 1.0) * (r + 1.0));
}

int choose_r(double poly_degree, double beta, double eps) {
    if (!(beta > 1.0)) throw DomainError("choose_r: beta must exceed 1");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("choose_r: eps must lie in (0, 1)");
    if (!(poly_degree >= 0.0)) throw DomainError("choose_r: negative degree");
    int r = 0;
    while (taylor_error_bound(poly_degree, beta, r) > eps) {
        ++r;
        if (r > 100'000'000) throw DomainError("choose_r: required order is out of range");
    }
    return r;
}

double PhiPolynomial::coefficient(std::int64_t k) const {
    if (k < 1 || k > degree_) return 0.0;
    return std::exp(static_cast<double>(k) * log_alpha_ - std::log(static_cast<double>(k)) - log_sigma_);
}

TruncatedSeries<double> PhiPolynomial::truncated(int r) const {
    std::vector<double> c(static_cast<std::size_t>(r) + 1, 0.0);
    for (int k = 1; k <= r; ++k) c[k] = coefficient(k);
    return TruncatedSeries<double>(std::move(c));
}

Complex PhiPolynomial::operator()(Complex z) const {
    // Horner on sum_k (alpha z)^k / k, then normalise.
    const Complex u = alpha_ * z;
    Complex acc = 0.0;
    for (std::int64_t k = degree_; k >= 1; --k) acc = acc * u + 1.0 / static_cast<double>(k);
    return acc * u / sigma_;
}

PhiPolynomial build_phi(double rho) {
    if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("build_phi: rho must lie in (0, 1]");
    if (rho < kMinPhiRho)
        throw DomainError("build_phi: rho = " + std::to_string(rho) + " is below " + std::to_string(kMinPhiRho) +
                          "; the phi degree (1 + 1/rho) e^{1 + 1/rho} would be astronomically large");
    PhiPolynomial phi;
    phi.rho_ = rho;
    const double inv = 1.0 / rho;
    phi.alpha_ = -std::expm1(-inv);
    phi.beta_ = -std::expm1(-1.0 - inv) / phi.alpha_;
    const double n_real = std::floor((1.0 + inv) * std::exp(1.0 + inv));
    if (n_real > static_cast<double>(kMaxPhiDegree))
        throw DomainError("build_phi: degree N = " + std::to_string(n_real) + " exceeds the limit of " +
                          std::to_string(kMaxPhiDegree));
    phi.degree_ = static_cast<std::int64_t>(n_real);
    phi.log_alpha_ = std::log(phi.alpha_);
    // Kahan summation of alpha^k / k.
    double sum = 0.0, carry = 0.0, power = 1.0;
    for (std::int64_t k = 1; k <= phi.degree_; ++k) {
        power *= phi.alpha_;
        const double term = power / static_cast<double>(k) - carry;
        const double t = sum + term;
        carry = (t - sum) - term;
        sum = t;
    }
    phi.sigma_ = sum;
    phi.log_sigma_ = std::log(sum);
    return phi;
}

#define DENSEPART_INSTANTIATE(S)                                                                          \
    template class TruncatedSeries<S>;                                                                   \
    template TruncatedSeries<S> series_from_derivatives(const MomentVector<S>&);                         \
    template TruncatedSeries<S> log_series(const TruncatedSeries<S>&);                                   \
    template TruncatedSeries<S> log_from_derivatives(const MomentVector<S>&);                            \
    template S taylor_eval(const TruncatedSeries<S>&, S);                                                \
    template TruncatedSeries<S> truncated_multiply(const TruncatedSeries<S>&, const TruncatedSeries<S>&, \
                                                   int);                                                 \
    template TruncatedSeries<S> truncated_compose(const TruncatedSeries<S>&, const TruncatedSeries<S>&, int);

DENSEPART_INSTANTIATE(double)
DENSEPART_INSTANTIATE(Complex)
#undef DENSEPART_INSTANTIATE

}  // namespace densepart
