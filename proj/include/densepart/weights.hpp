#pragma once

#include <complex>
#include <vector>

#include "densepart/graph.hpp"

namespace densepart {

using Complex = std::complex<double>;

enum class Provenance { FromGamma, FromAlpha, Raw };

/// Symmetric zero-diagonal n x n matrix of pair weights.
///
/// Scalar is double (real mode) or std::complex<double> (complex mode).
template <class Scalar>
class WeightMatrix {
public:
    using scalar_type = Scalar;

    WeightMatrix() = default;

    /// Zero matrix of dimension n.
    explicit WeightMatrix(int n, Provenance provenance = Provenance::Raw)
        : n_(n), entries_(static_cast<std::size_t>(n) * n, Scalar{}), provenance_(provenance) {}

    /// Row-major entries; throws DomainError unless symmetric with zero diagonal.
    static WeightMatrix raw(int n, std::vector<Scalar> entries);

    int n() const noexcept { return n_; }
    Provenance provenance() const noexcept { return provenance_; }

    const Scalar& operator()(int i, int j) const noexcept { return entries_[index(i, j)]; }

    /// Sets w_ij = w_ji = value. Diagonal writes are rejected.
    void set(int i, int j, Scalar value);

    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    WeightMatrix operator-() const;

    /// Row/column relabelling: result(perm[i], perm[j]) = (*this)(i, j).
    WeightMatrix permuted(const std::vector<int>& perm) const;

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Scalar> entries_;
    Provenance provenance_ = Provenance::Raw;
};

using RealWeights = WeightMatrix<double>;
using ComplexWeights = WeightMatrix<Complex>;

/// Throws DomainError if w is not symmetric with zero diagonal.
template <class Scalar>
void validate_weights(const WeightMatrix<Scalar>& w);

/// w_ij = exp(+-gamma/(m-1)) - 1 for edges / non-edges. gamma = 0 is accepted.
RealWeights weights_from_gamma(const Graph& g, int m, double gamma);

/// w_ij = +alpha on edges and -alpha on non-edges, 0 < alpha < 1.
RealWeights weights_from_alpha(const Graph& g, double alpha);

/// z_ij = ln(1 + w_ij), principal branch.
ComplexWeights log_one_plus(const ComplexWeights& w);
ComplexWeights to_complex(const RealWeights& w);

/// Exponent matrix Z_0: z_ij = +-gamma/(m-1).
RealWeights exponents_from_gamma(const Graph& g, int m, double gamma);

enum class ConvertDirection { AlphaToGamma, GammaToAlpha };

double alpha_to_gamma(double alpha, int m);
double gamma_to_alpha(double gamma, int m);
double gamma_alpha_convert(double value, int m, ConvertDirection direction);

}  // namespace densepart
