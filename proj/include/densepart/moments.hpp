#pragma once

#include <cstdint>
#include <vector>

#include "densepart/weights.hpp"

namespace densepart {

/// Weighted sums over small connected subgraphs of the complete graph K_n
/// with edge weights w_ij. Multiplicity conventions:
///   a1  unordered pairs {i,j}:              w_ij
///   b1  unordered pairs:                    w_ij^2
///   b2  centre j, unordered {i,k}:          w_ij w_jk
///   c1  unordered pairs:                    w_ij^3
///   c2  ordered distinct (i,j,k):           w_ij^2 w_jk
///   c3  unordered triangles {i,j,k}:        w_ij w_jk w_ki
///   c4  ordered distinct (i,j,k,l):         w_ij w_jk w_kl
///   c5  apex i, unordered {j,k,l}:          w_il w_ij w_ik
template <class Scalar>
struct ConnectedSums {
    Scalar a1{}, b1{}, b2{}, c1{}, c2{}, c3{}, c4{}, c5{};
};

/// h^(0)(0), ..., h^(r)(0) of h(z) = C(n,m)^{-1} sum_{|S|=m} prod_{{i,j} in S} (1 + z w_ij).
template <class Scalar>
struct MomentVector {
    std::vector<Scalar> values;

    int order() const noexcept { return static_cast<int>(values.size()) - 1; }
};

template <class Scalar>
ConnectedSums<Scalar> connected_sums(const WeightMatrix<Scalar>& w);

/// Derivatives up to order <= 3 from the connected sums in O(n^3).
template <class Scalar>
MomentVector<Scalar> h_derivatives_closed(const WeightMatrix<Scalar>& w, int m, int order);

struct EnumerationOptions {
    /// Cap on weighted-product evaluations before BudgetExceeded is thrown.
    std::uint64_t budget = 100'000'000;
};

/// Derivatives up to k_max by enumerating collections of distinct pairs,
/// each weighted by C(n - nu, m - nu)/C(n, m) with nu the number of covered vertices.
template <class Scalar>
MomentVector<Scalar> h_derivatives_enumerated(const WeightMatrix<Scalar>& w, int m, int k_max,
                                              const EnumerationOptions& options = {});

/// Same enumeration for the conditioned polynomial
///   h_Omega(z) = C(n', m')^{-1} sum_{S > Omega, |S| = m} prod_{{i,j} in S, {i,j} not in Omega} (1 + z w_ij)
/// with n' = n - |Omega| and m' = m - |Omega|. Omega must be sorted and distinct.
template <class Scalar>
MomentVector<Scalar> h_derivatives_restricted(const WeightMatrix<Scalar>& w, int m,
                                              const std::vector<int>& omega, int k_max,
                                              const EnumerationOptions& options = {});

}  // namespace densepart
