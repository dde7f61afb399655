#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "densepart/errors.hpp"
#include "densepart/poly_series.hpp"
#include "test_support.hpp"

using namespace densepart;
using densepart::testing::close_rel;

namespace {

using Series = TruncatedSeries<double>;

// Formal log by series division: f' = g'/g, then integrate.
std::vector<double> log_by_division(const std::vector<double>& g, int r) {
    std::vector<double> gp(r, 0.0), q(r, 0.0);
    for (int k = 0; k < r; ++k) gp[k] = (k + 1 < static_cast<int>(g.size())) ? (k + 1) * g[k + 1] : 0.0;
    for (int k = 0; k < r; ++k) {
        double acc = gp[k];
        for (int j = 1; j <= k && j < static_cast<int>(g.size()); ++j) acc -= g[j] * q[k - j];
        q[k] = acc / g[0];
    }
    std::vector<double> f(r + 1, 0.0);
    f[0] = std::log(g[0]);
    for (int k = 1; k <= r; ++k) f[k] = q[k - 1] / k;
    return f;
}

// exp of a series with f_0 = 0, by the recurrence k e_k = sum j f_j e_{k-j}.
std::vector<double> exp_series(const std::vector<double>& f, int r) {
    std::vector<double> e(r + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= r; ++k) {
        double acc = 0;
        for (int j = 1; j <= k && j < static_cast<int>(f.size()); ++j) acc += j * f[j] * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Full composition by repeated multiplication, no truncation until the end.
std::vector<double> full_compose(const std::vector<double>& outer, const std::vector<double>& inner) {
    std::vector<double> result{0.0};
    std::vector<double> power{1.0};
    for (std::size_t k = 0; k < outer.size(); ++k) {
        if (result.size() < power.size()) result.resize(power.size(), 0.0);
        for (std::size_t i = 0; i < power.size(); ++i) result[i] += outer[k] * power[i];
        power = poly_mul(power, inner);
    }
    return result;
}

}  // namespace

TEST_CASE("log_from_derivatives examples") {
    const auto f = log_from_derivatives(MomentVector<double>{{1, 1, 0, 0}});
    CHECK(f[0] == 0.0);
    CHECK(f[1] == doctest::Approx(1.0));
    CHECK(f[2] == doctest::Approx(-0.5));
    CHECK(f[3] == doctest::Approx(1.0 / 3.0));

    const auto e = log_from_derivatives(MomentVector<double>{{1, 2, 4, 8}});
    CHECK(e[0] == 0.0);
    CHECK(e[1] == doctest::Approx(2.0));
    CHECK(std::abs(e[2]) < 1e-14);
    CHECK(std::abs(e[3]) < 1e-14);

    const auto s = log_from_derivatives(MomentVector<double>{{std::exp(1.5), 0, 0}});
    CHECK(s[0] == doctest::Approx(1.5));

    CHECK_THROWS_AS(log_from_derivatives(MomentVector<double>{{0.0, 1.0}}), DomainError);
}

TEST_CASE("log_series matches formal division on random degree-10 polynomials") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> g(11);
        g[0] = 1.0;
        for (int k = 1; k <= 10; ++k) g[k] = u(rng);
        const int r = 14;
        const auto ours = log_series(Series(g).truncated(r));
        const auto oracle = log_by_division(g, r);
        for (int k = 0; k <= r; ++k) CHECK(std::abs(ours[k] - oracle[k]) <= 1e-10 * (1 + std::abs(oracle[k])));

        // round trip through exp
        const auto back = exp_series(ours.coeffs(), r);
        for (int k = 0; k <= 10; ++k) CHECK(std::abs(back[k] - g[k]) <= 1e-10 * (1 + std::abs(g[k])));
    }
}

TEST_CASE("log_series on complex coefficients") {
    const TruncatedSeries<Complex> g(std::vector<Complex>{{1, 0}, {0, 1}});
    const auto f = log_series(g.truncated(4));
    // ln(1 + i z) = i z + z^2/2 - i z^3/3 - z^4/4
    CHECK(std::abs(f[1] - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(f[2] - Complex(0.5, 0)) < 1e-14);
    CHECK(std::abs(f[3] - Complex(0, -1.0 / 3)) < 1e-14);
    CHECK(std::abs(f[4] - Complex(-0.25, 0)) < 1e-14);
}

TEST_CASE("series_from_derivatives divides by factorials") {
    const auto s = series_from_derivatives(MomentVector<double>{{1, 2, 6, 24}});
    CHECK(s[0] == 1.0);
    CHECK(s[1] == 2.0);
    CHECK(s[2] == doctest::Approx(3.0));
    CHECK(s[3] == doctest::Approx(4.0));
}

TEST_CASE("taylor_eval examples") {
    const Series f({0.0, 1.0, -0.5, 1.0 / 3.0});
    CHECK(taylor_eval(f, 1.0) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(taylor_eval(Series({2.5}), 123.0) == 2.5);
    CHECK(taylor_eval(Series({2.5}), -7.0) == 2.5);

    std::vector<double> c(31, 0.0);
    for (int k = 1; k <= 30; ++k) c[k] = (k % 2 ? 1.0 : -1.0) / k;
    CHECK(std::abs(taylor_eval(Series(c), 0.5) - std::log(1.5)) <= 1e-9);

    const TruncatedSeries<Complex> z({{0, 0}, {1, 0}, {0, 1}});
    CHECK(std::abs(taylor_eval(z, Complex(0, 1)) - Complex(0, 0)) < 1e-15);
}

TEST_CASE("truncated series resize") {
    const Series s({1, 2, 3});
    CHECK(s.truncated(1).order() == 1);
    CHECK(s.truncated(5).order() == 5);
    CHECK(s.truncated(5)[4] == 0.0);
    CHECK(s[10] == 0.0);
    CHECK(Series(std::vector<double>{}).order() == 0);
}

TEST_CASE("truncated_multiply") {
    const auto p = truncated_multiply(Series({1, 1}), Series({1, 1}), 3);
    CHECK(p.order() == 3);
    CHECK(p[0] == 1.0);
    CHECK(p[1] == 2.0);
    CHECK(p[2] == 1.0);
    CHECK(p[3] == 0.0);
    CHECK(truncated_multiply(Series({1, 1}), Series({1, 1}), 1)[1] == 2.0);
}

TEST_CASE("choose_r examples, minimality and monotonicity") {
    CHECK(choose_r(100, 2.0, 0.01) == 10);
    CHECK(choose_r(1, 2.0, 0.9) == 1);
    CHECK(taylor_error_bound(100, 2.0, 10) == doctest::Approx(100.0 / (1024.0 * 11.0)));

    for (double degree : {1.0, 10.0, 1e3, 1e6})
        for (double beta : {1.01, 1.1, 1.5, 3.0})
            for (double eps : {0.5, 0.1, 1e-3, 1e-6}) {
                const int r = choose_r(degree, beta, eps);
                CHECK(taylor_error_bound(degree, beta, r) <= eps);
                if (r > 0) CHECK(taylor_error_bound(degree, beta, r - 1) > eps);
                CHECK(choose_r(degree, beta, eps / 10) >= r);
            }
    CHECK_THROWS_AS(choose_r(10, 1.0, 0.1), DomainError);
}

TEST_CASE("build_phi constants") {
    const auto p = build_phi(1.0);
    CHECK(p.alpha() == doctest::Approx(0.632121).epsilon(1e-6));
    CHECK(p.beta() == doctest::Approx(1.367880).epsilon(1e-6));
    CHECK(p.degree() == 14);
    CHECK(p.beta() > 1.0);

    for (double rho : {1.0, 0.5, 0.3, 0.2, 0.1}) {
        const auto q = build_phi(rho);
        CHECK(q(Complex(0, 0)) == Complex(0, 0));
        CHECK(q.coefficient(0) == 0.0);
        CHECK(std::abs(q(Complex(1, 0)) - 1.0) <= 1e-12);
        CHECK(q.coefficient(q.degree() + 1) == 0.0);
        CHECK(q.degree() == static_cast<std::int64_t>(std::floor((1 + 1 / rho) * std::exp(1 + 1 / rho))));
    }
    CHECK_THROWS_AS(build_phi(0.04), DomainError);
    CHECK_THROWS_AS(build_phi(0.0), DomainError);
    CHECK_THROWS_AS(build_phi(1.5), DomainError);
}

TEST_CASE("phi maps the disc of radius beta into the strip") {
    for (double rho : {1.0, 0.5, 0.3, 0.2}) {
        const auto p = build_phi(rho);
        int violations = 0;
        auto inspect = [&](Complex z) {
            const Complex v = p(z);
            if (v.real() < -rho || v.real() > 1 + 2 * rho || std::abs(v.imag()) > 2 * rho) ++violations;
        };
        for (int k = 0; k < 10000; ++k) inspect(std::polar(p.beta(), 2 * std::numbers::pi * k / 10000));
        std::mt19937_64 rng(static_cast<std::uint64_t>(rho * 1000));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 0; k < 1000; ++k)
            inspect(std::polar(p.beta() * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)));
        CHECK_MESSAGE(violations == 0, "rho = " << rho);
    }
}

TEST_CASE("truncated_compose examples") {
    const Series inner({0, 1, 1});
    const auto id = truncated_compose(Series({0, 1, 0, 0}), inner, 3);
    CHECK(id[1] == 1.0);
    CHECK(id[2] == 1.0);
    CHECK(id[3] == 0.0);

    const auto sq = truncated_compose(Series({1, 2, 1}), inner, 2);
    CHECK(sq.order() == 2);
    CHECK(sq[0] == 1.0);
    CHECK(sq[1] == 2.0);
    CHECK(sq[2] == 3.0);

    // h_r of K_4 with alpha = 0.1 and m = 4 is (1 + 0.1 z)^6
    std::vector<double> h(7);
    for (int k = 0; k <= 6; ++k) h[k] = std::tgamma(7) / (std::tgamma(k + 1) * std::tgamma(7 - k)) * std::pow(0.1, k);
    const auto phi = build_phi(1.0);
    const auto g = truncated_compose(Series(h), phi.truncated(6), 6);
    CHECK(g[0] == 1.0);

    CHECK_THROWS_AS(truncated_compose(Series({1, 1}), Series({0.5, 1}), 2), DomainError);
}

TEST_CASE("truncated_compose equals full composition then truncation") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 1 + trial % 8;
        std::vector<double> outer(r + 1), inner(r + 1);
        for (auto& c : outer) c = u(rng);
        for (auto& c : inner) c = u(rng);
        inner[0] = 0.0;
        const auto ours = truncated_compose(Series(outer), Series(inner), r);
        const auto full = full_compose(outer, inner);
        REQUIRE(ours.order() == r);
        for (int k = 0; k <= r; ++k) CHECK(std::abs(ours[k] - full[k]) <= 1e-12);
    }
}
