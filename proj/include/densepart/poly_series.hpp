#pragma once

#include <cstdint>
#include <vector>

#include "densepart/moments.hpp"
#include "densepart/weights.hpp"

namespace densepart {

/// Coefficients c_0..c_r of a power series truncated after degree r.
template <class Scalar>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, Scalar{}) {}
    explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Scalar{});
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    Scalar operator[](int k) const noexcept { return k <= order() ? coeffs_[k] : Scalar{}; }

    /// Drops or zero-pads to exactly r+1 coefficients.
    TruncatedSeries truncated(int r) const;

private:
    std::vector<Scalar> coeffs_;
};

/// Taylor coefficients g^(k)(0)/k! from a derivative vector.
template <class Scalar>
TruncatedSeries<Scalar> series_from_derivatives(const MomentVector<Scalar>& derivs);

/// Taylor coefficients of f = ln g from g's Taylor coefficients (principal branch at 0).
/// This is the triangular system g' = f' g solved by forward substitution.
template <class Scalar>
TruncatedSeries<Scalar> log_series(const TruncatedSeries<Scalar>& g);

/// f^(k)(0)/k! for f = ln g, given g^(k)(0) for k = 0..r. Throws DomainError if g(0) = 0.
template <class Scalar>
TruncatedSeries<Scalar> log_from_derivatives(const MomentVector<Scalar>& g_derivs);

/// Horner evaluation of sum_k c_k at^k.
template <class Scalar>
Scalar taylor_eval(const TruncatedSeries<Scalar>& f, Scalar at);

/// Product of two series, truncated at order r.
template <class Scalar>
TruncatedSeries<Scalar> truncated_multiply(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b,
                                           int r);

/// Coefficients 0..r of outer(inner(z)) by Horner's scheme, dropping every
/// monomial above degree r as it appears. inner must have zero constant term.
template <class Scalar>
TruncatedSeries<Scalar> truncated_compose(const TruncatedSeries<Scalar>& outer,
                                          const TruncatedSeries<Scalar>& inner, int r);

/// Error bound degree / (beta^r (beta - 1) (r + 1)) for the degree-r Taylor
/// approximation of ln g(1) when g has no zeros in |z| < beta.
double taylor_error_bound(double poly_degree, double beta, int r);

/// Smallest r with taylor_error_bound(poly_degree, beta, r) <= eps.
int choose_r(double poly_degree, double beta, double eps);

/// Polynomial phi(z) = sigma^{-1} sum_{k=1}^N (alpha z)^k / k mapping the disc
/// |z| <= beta into a thin neighbourhood of [0, 1], with phi(0) = 0, phi(1) = 1.
class PhiPolynomial {
public:
    double rho() const noexcept { return rho_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    std::int64_t degree() const noexcept { return degree_; }
    double sigma() const noexcept { return sigma_; }

    /// Coefficient of z^k (0 for k = 0 and k > N).
    double coefficient(std::int64_t k) const;

    /// phi_r: the first r+1 coefficients.
    TruncatedSeries<double> truncated(int r) const;

    Complex operator()(Complex z) const;

    friend PhiPolynomial build_phi(double rho);

private:
    double rho_ = 0, alpha_ = 0, beta_ = 0, sigma_ = 0, log_alpha_ = 0, log_sigma_ = 0;
    std::int64_t degree_ = 0;
};

/// Smallest rho accepted by build_phi; below it the degree N explodes.
inline constexpr double kMinPhiRho = 0.05;
/// Largest phi degree build_phi will materialise.
inline constexpr std::int64_t kMaxPhiDegree = 1'000'000'000;

/// 0 < rho <= 1 (rho = 1 is allowed for testing). Throws DomainError for rho < 0.05.
PhiPolynomial build_phi(double rho);

}  // namespace densepart
