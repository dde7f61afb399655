#pragma once

#include <cstdint>
#include <vector>

#include "densepart/graph.hpp"
#include "densepart/weights.hpp"

namespace densepart {

// Brute-force reference implementations. Every routine enumerates m-subsets
// explicitly and refuses (BudgetExceeded) when the subset count exceeds its budget.

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultCoeffBudget = 1'000'000;

/// Number of m-subsets S containing omega that span exactly e edges, for e = 0..C(m,2).
std::vector<std::uint64_t> edge_count_histogram(const Graph& g, int m, const std::vector<int>& omega = {},
                                                std::uint64_t budget = kDefaultOracleBudget);

/// ln den_m(G; gamma) = ln( C(n,m)^{-1} sum_{|S|=m} exp(gamma m sigma(S)) ).
double den_exact(const Graph& g, int m, double gamma, std::uint64_t budget = kDefaultOracleBudget);

/// ln P_Omega(Z_0) for the real exponent matrix z_ij = +-gamma/(m-1); -inf if |omega| > m.
double ln_restricted_partition(const Graph& g, int m, double gamma, const std::vector<int>& omega,
                               std::uint64_t budget = kDefaultOracleBudget);

/// P_Omega(Z) = sum over m-subsets S containing omega of exp(sum_{{i,j} in S} z_ij).
/// Returns 0 when |omega| > m. omega must be sorted and distinct.
Complex pm_exact(const ComplexWeights& z, int m, const std::vector<int>& omega = {},
                 std::uint64_t budget = kDefaultOracleBudget);

/// Complex polynomial coefficients c_0..c_d.
struct PolyCoeffs {
    std::vector<Complex> c;

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    Complex operator()(Complex z) const;
};

/// Coefficients of h(z) = C(n,m)^{-1} sum_{|S|=m} prod_{{i,j} in S} (1 + z w_ij).
template <class Scalar>
PolyCoeffs h_coeffs_exact(const WeightMatrix<Scalar>& w, int m, std::uint64_t budget = kDefaultCoeffBudget);

/// All complex roots sorted by modulus. Trailing coefficients below 1e-14 are trimmed
/// first; each returned root satisfies |p(root)| <= 1e-8 max|c_k| (divided by |root|^d
/// when |root| > 1) or ConvergenceError is thrown.
std::vector<Complex> poly_roots(const PolyCoeffs& p);

}  // namespace densepart
