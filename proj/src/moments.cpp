#include "densepart/moments.hpp"

#include <string>

#include "densepart/combinatorics.hpp"
#include "densepart/errors.hpp"

namespace densepart {

template <class Scalar>
ConnectedSums<Scalar> connected_sums(const WeightMatrix<Scalar>& w) {
    validate_weights(w);
    const int n = w.n();
    ConnectedSums<Scalar> s;

    // Row power sums p1, p2, p3 per vertex.
    std::vector<Scalar> p1(n), p2(n), p3(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar x = w(i, j);
            p1[i] += x;
            p2[i] += x * x;
            p3[i] += x * x * x;
        }

    // (W^2)_jk = sum_i w_ji w_ik; the zero diagonal keeps i != j, k.
    std::vector<Scalar> sq(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const Scalar wji = w(j, i);
            if (wji == Scalar{}) continue;
            for (int k = 0; k < n; ++k) sq[static_cast<std::size_t>(j) * n + k] += wji * w(i, k);
        }

    Scalar trace_cube{};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Scalar x = w(i, j);
            s.a1 += x;
            s.b1 += x * x;
            s.c1 += x * x * x;
        }
        // centre i, unordered pair of neighbours
        s.b2 += (p1[i] * p1[i] - p2[i]) / Scalar(2);
        // apex i, unordered triple: third elementary symmetric polynomial of row i
        s.c5 += (p1[i] * p1[i] * p1[i] - Scalar(3) * p1[i] * p2[i] + Scalar(2) * p3[i]) / Scalar(6);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Scalar x = w(i, j);
            // ordered (i, j, k): w_ij^2 * sum_{k != i, j} w_jk
            s.c2 += x * x * (p1[j] - x);
            // ordered (i, j, k, l) as middle edge (j, k) = (i, j) here:
            // (sum_{a != j} w_ia)(sum_{b != i} w_jb) minus the a == b closures
            const Scalar sq_ij = sq[static_cast<std::size_t>(i) * n + j];
            s.c4 += x * ((p1[i] - x) * (p1[j] - x) - sq_ij);
            trace_cube += x * sq[static_cast<std::size_t>(j) * n + i];
        }
    }
    // each unordered triangle appears 6 times in trace(W^3)
    s.c3 = trace_cube / Scalar(6);
    return s;
}

template <class Scalar>
MomentVector<Scalar> h_derivatives_closed(const WeightMatrix<Scalar>& w, int m, int order) {
    const int n = w.n();
    if (m < 2 || m > n) throw DomainError("h_derivatives_closed: need 2 <= m <= n");
    if (order < 0 || order > 3)
        throw DomainError("h_derivatives_closed: order " + std::to_string(order) +
                          " exceeds 3; use h_derivatives_enumerated");
    const auto s = connected_sums(w);
    auto ratio = [&](int k) { return Scalar(falling_ratio(m, n, k)); };

    MomentVector<Scalar> out;
    out.values.assign(static_cast<std::size_t>(order) + 1, Scalar{});
    out.values[0] = Scalar(1);
    if (order >= 1) out.values[1] = ratio(2) * s.a1;
    if (order >= 2)
        out.values[2] = Scalar(2) * ratio(3) * s.b2 + ratio(4) * (s.a1 * s.a1 - Scalar(2) * s.b2 - s.b1);
    if (order >= 3) {
        // nu = 3: triangles; nu = 4: 3-paths and 3-stars; nu = 5: 2-path plus a
        // disjoint edge; nu = 6: three disjoint edges. Ordered collections.
        out.values[3] =
            Scalar(6) * ratio(3) * s.c3 + ratio(4) * (Scalar(6) * s.c5 + Scalar(3) * s.c4) +
            Scalar(6) * ratio(5) * (s.a1 * s.b2 - Scalar(3) * s.c5 - Scalar(3) * s.c3 - s.c4 - s.c2) +
            ratio(6) * (s.a1 * s.a1 * s.a1 + Scalar(12) * s.c3 - Scalar(6) * s.a1 * s.b2 +
                        Scalar(12) * s.c5 + Scalar(3) * s.c4 + Scalar(6) * s.c2 -
                        Scalar(3) * s.a1 * s.b1 + Scalar(2) * s.c1);
    }
    return out;
}

namespace {

template <class Scalar>
struct PairTerm {
    int u, v;
    Scalar weight;
};

// Depth-first enumeration of unordered collections of distinct pairs in
// increasing pair-index order. buckets[k][nu] accumulates the product of the
// weights over collections of size k covering nu free vertices.
template <class Scalar>
class CollectionEnumerator {
public:
    CollectionEnumerator(std::vector<PairTerm<Scalar>> pairs, std::vector<char> free, int nu_max, int k_max,
                         std::uint64_t budget)
        : pairs_(std::move(pairs)),
          free_(std::move(free)),
          cover_(free_.size(), 0),
          nu_max_(nu_max),
          k_max_(k_max),
          budget_(budget),
          buckets_(static_cast<std::size_t>(k_max) + 1,
                   std::vector<Scalar>(static_cast<std::size_t>(2 * k_max) + 1, Scalar{})) {}

    const std::vector<std::vector<Scalar>>& run() {
        descend(0, 0, 0, Scalar(1));
        return buckets_;
    }

private:
    int touch(int v) { return free_[v] && cover_[v]++ == 0 ? 1 : 0; }
    void release(int v) {
        if (free_[v]) --cover_[v];
    }

    void descend(std::size_t first, int depth, int nu, Scalar product) {
        for (std::size_t p = first; p < pairs_.size(); ++p) {
            if (++work_ > budget_)
                throw BudgetExceeded("edge-collection enumeration exceeded budget of " +
                                     std::to_string(budget_) + " evaluations");
            const auto& term = pairs_[p];
            const int added = touch(term.u) + touch(term.v);
            if (nu + added <= nu_max_) {
                const Scalar next = product * term.weight;
                buckets_[depth + 1][nu + added] += next;
                if (depth + 1 < k_max_) descend(p + 1, depth + 1, nu + added, next);
            }
            release(term.u);
            release(term.v);
        }
    }

    std::vector<PairTerm<Scalar>> pairs_;
    std::vector<char> free_;
    std::vector<int> cover_;
    int nu_max_;
    int k_max_;
    std::uint64_t budget_;
    std::uint64_t work_ = 0;
    std::vector<std::vector<Scalar>> buckets_;
};

template <class Scalar>
MomentVector<Scalar> enumerate_moments(const WeightMatrix<Scalar>& w, int m, const std::vector<int>& omega,
                                       int k_max, const EnumerationOptions& options) {
    validate_weights(w);
    const int n = w.n();
    if (m < 2 || m > n) throw DomainError("h_derivatives_enumerated: need 2 <= m <= n");
    if (k_max < 1) throw DomainError("h_derivatives_enumerated: k_max must be at least 1");
    std::vector<char> free(static_cast<std::size_t>(n), 1);
    for (std::size_t a = 0; a < omega.size(); ++a) {
        const int v = omega[a];
        if (v < 0 || v >= n || (a > 0 && omega[a - 1] >= v))
            throw DomainError("conditioning set must be sorted, distinct and within range");
        free[v] = 0;
    }
    const int fixed = static_cast<int>(omega.size());
    if (fixed > m) throw DomainError("conditioning set larger than m");
    const int n_free = n - fixed, m_free = m - fixed;

    std::vector<PairTerm<Scalar>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((free[i] || free[j]) && w(i, j) != Scalar{}) pairs.push_back({i, j, w(i, j)});

    MomentVector<Scalar> out;
    out.values.assign(static_cast<std::size_t>(k_max) + 1, Scalar{});
    out.values[0] = Scalar(1);
    if (m_free == 0) return out;  // nothing left to choose: h_Omega == 1

    CollectionEnumerator<Scalar> enumerator(std::move(pairs), std::move(free), m_free, k_max, options.budget);
    const auto& buckets = enumerator.run();

    // Binomial weight depends only on nu: apply it once per class.
    std::vector<double> weight(static_cast<std::size_t>(2 * k_max) + 1);
    for (int nu = 0; nu <= 2 * k_max; ++nu) weight[nu] = falling_ratio(m_free, n_free, nu);

    double k_factorial = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        k_factorial *= k;
        Scalar total{};
        for (int nu = 0; nu <= 2 * k_max; ++nu)
            if (weight[nu] != 0.0) total += Scalar(weight[nu]) * buckets[k][nu];
        // ordered collections = k! x unordered ones
        out.values[k] = Scalar(k_factorial) * total;
    }
    return out;
}

}  // namespace

template <class Scalar>
MomentVector<Scalar> h_derivatives_enumerated(const WeightMatrix<Scalar>& w, int m, int k_max,
                                              const EnumerationOptions& options) {
    return enumerate_moments(w, m, {}, k_max, options);
}

template <class Scalar>
MomentVector<Scalar> h_derivatives_restricted(const WeightMatrix<Scalar>& w, int m,
                                              const std::vector<int>& omega, int k_max,
                                              const EnumerationOptions& options) {
    return enumerate_moments(w, m, omega, k_max, options);
}

#define DENSEPART_INSTANTIATE(S)                                                                          \
    template ConnectedSums<S> connected_sums(const WeightMatrix<S>&);                                    \
    template MomentVector<S> h_derivatives_closed(const WeightMatrix<S>&, int, int);                     \
    template MomentVector<S> h_derivatives_enumerated(const WeightMatrix<S>&, int, int,                  \
                                                      const EnumerationOptions&);                        \
    template MomentVector<S> h_derivatives_restricted(const WeightMatrix<S>&, int, const std::vector<int>&, \
                                                      int, const EnumerationOptions&);

DENSEPART_INSTANTIATE(double)
DENSEPART_INSTANTIATE(Complex)
#undef DENSEPART_INSTANTIATE

}  // namespace densepart
