#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "densepart/combinatorics.hpp"
#include "densepart/experiments.hpp"

using namespace densepart;

namespace {

double median_error(const std::vector<SweepRecord>& rows, int order) {
    std::vector<double> e;
    for (const auto& r : rows)
        if (r.order == order && !r.failure) e.push_back(r.abs_error);
    std::sort(e.begin(), e.end());
    return e.size() % 2 ? e[e.size() / 2] : 0.5 * (e[e.size() / 2 - 1] + e[e.size() / 2]);
}

}  // namespace

TEST_CASE("zero threshold") {
    CHECK(zero_threshold_n(3, 1.0) == 150.0);
    CHECK(zero_threshold_n(2, 0.0) == 12.0);
    CHECK(zero_threshold_n(4, 1.0) == 2 * 16 * 16 + 8);
}

TEST_CASE("sign matrices are balanced, symmetric and reproducible") {
    const auto w = random_sign_matrix(60, 42, 3);
    int plus = 0, total = 0;
    for (int i = 0; i < 60; ++i) {
        CHECK(w(i, i) == 0.0);
        for (int j = i + 1; j < 60; ++j) {
            CHECK(std::abs(w(i, j)) == 1.0);
            CHECK(w(i, j) == w(j, i));
            plus += w(i, j) > 0 ? 1 : 0;
            ++total;
        }
    }
    // 1770 fair coins: 4 sigma is about 84
    CHECK(std::abs(plus - total / 2) < 84);
    const auto again = random_sign_matrix(60, 42, 3);
    const auto other = random_sign_matrix(60, 42, 4);
    bool same = true, differs = false;
    for (int i = 0; i < 60; ++i)
        for (int j = 0; j < 60; ++j) {
            same = same && again(i, j) == w(i, j);
            differs = differs || other(i, j) != w(i, j);
        }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("m = 2: the single root is -C(n,2)/sum W") {
    const int n = 9;
    const auto res = run_zero_experiment(n, 2, 1.0, 2.0, 40, 5);
    REQUIRE(res.records.size() == 40);
    int constant = 0;
    for (const auto& rec : res.records) {
        const auto w = random_sign_matrix(n, 5, rec.trial);
        double sum = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sum += w(i, j);
        if (sum == 0.0) {
            CHECK(std::isinf(rec.min_root_modulus));
            CHECK_FALSE(rec.in_disc);
            ++constant;
            continue;
        }
        REQUIRE(rec.roots.size() == 1);
        CHECK(std::abs(rec.roots[0] - Complex(-36.0 / sum, 0)) < 1e-10);
        CHECK(rec.min_root_modulus == doctest::Approx(36.0 / std::abs(sum)).epsilon(1e-10));
        CHECK(rec.in_disc == (rec.min_root_modulus <= 1.0 / std::sqrt(4.0)));
    }
    MESSAGE(constant << " trials had sum W = 0");
}

TEST_CASE("summary bookkeeping") {
    const auto res = run_zero_experiment(12, 3, 1.0, 2.0, 30, 9);
    const auto& s = res.summary;
    CHECK(s.trials == 30);
    CHECK(s.disc_radius == doctest::Approx(0.5));
    CHECK(s.threshold_n == 150.0);
    CHECK_FALSE(s.above_threshold);
    CHECK(s.bound == 0.5);
    int inside = 0;
    for (const auto& r : res.records) {
        inside += r.in_disc ? 1 : 0;
        CHECK(r.in_disc == (r.min_root_modulus <= s.disc_radius));
        CHECK(r.converged);
        if (!r.roots.empty()) CHECK(r.min_root_modulus == std::abs(r.roots.front()));
    }
    CHECK(s.in_disc_count == inside);
    CHECK(s.frequency == doctest::Approx(inside / 30.0));
}

TEST_CASE("zero experiment output does not depend on thread count") {
    const auto a = run_zero_experiment(14, 3, 1.0, 2.0, 24, 77, 1);
    const auto b = run_zero_experiment(14, 3, 1.0, 2.0, 24, 77, 4);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].trial == b.records[i].trial);
        CHECK(a.records[i].trial_seed == b.records[i].trial_seed);
        CHECK(a.records[i].min_root_modulus == b.records[i].min_root_modulus);
        CHECK(a.records[i].roots == b.records[i].roots);
    }
    CHECK(a.summary.in_disc_count == b.summary.in_disc_count);
}

TEST_CASE("expectation identity: worked value and theta independence") {
    CHECK(expectation_identity_rhs(4, 2, 1.0) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
    const auto c = expectation_identity_check(4, 2, 1.0, 0.0);
    CHECK(std::abs(c.lhs - 7.0 / 6.0) <= 1e-10);
    for (double theta : {0.0, std::numbers::pi / 3, 1.0}) {
        const auto t = expectation_identity_check(5, 3, 0.7, theta);
        CHECK(std::abs(t.lhs - t.rhs) <= 1e-10);
    }
    const auto zero = expectation_identity_check(5, 3, 0.0, 0.4);
    CHECK(zero.lhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(zero.rhs == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expectation identity holds for every feasible n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 2; m <= n; ++m)
            for (double radius : {0.5, 1.0}) {
                const auto c = expectation_identity_check(n, m, radius, 0.3);
                CHECK_MESSAGE(std::abs(c.lhs - c.rhs) <= 1e-10, n << " " << m << " " << radius);
            }
    CHECK_THROWS(expectation_identity_check(7, 3, 1.0, 0.0));
}

TEST_CASE("sweep: complete graph rows follow the alternating series") {
    SweepConfig cfg;
    cfg.n_values = {8};
    cfg.p = 1.0;
    cfg.seeds = {1};
    cfg.m_values = {4};
    cfg.alphas = {0.3, 1e-6};
    cfg.orders = {1, 2, 3};
    const auto rows = convergence_sweep(cfg);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK_FALSE(r.failure.has_value());
        CHECK(r.abs_error == std::abs(r.estimate - r.oracle));
        if (r.alpha == 0.3 && r.order == 3) {
            const double a = 0.3;
            CHECK(r.abs_error == doctest::Approx(6 * std::abs(std::log1p(a) - (a - a * a / 2 + a * a * a / 3))).epsilon(1e-7));
        }
        if (r.alpha == 1e-6) CHECK(r.abs_error < 1e-10);
    }
}

TEST_CASE("sweep: median error falls with order and failures are recorded") {
    SweepConfig cfg;
    cfg.seeds.clear();
    for (std::uint64_t s = 1; s <= 100; ++s) cfg.seeds.push_back(s);
    const auto rows = convergence_sweep(cfg);
    CHECK(rows.size() == 300);
    const double e1 = median_error(rows, 1), e2 = median_error(rows, 2), e3 = median_error(rows, 3);
    CHECK(e2 < e1);
    CHECK(e3 < e2);

    SweepConfig big;
    big.n_values = {40};
    big.m_values = {8};
    big.orders = {1};
    big.budget = 1000;
    const auto failed = convergence_sweep(big);
    REQUIRE(failed.size() == 1);
    CHECK(failed[0].failure.has_value());
}
