#include "densepart/weights.hpp"

#include <cmath>
#include <string>

#include "densepart/errors.hpp"

namespace densepart {

template <class Scalar>
WeightMatrix<Scalar> WeightMatrix<Scalar>::raw(int n, std::vector<Scalar> entries) {
    if (n < 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("weight matrix: entry count does not match n*n");
    WeightMatrix w(n, Provenance::Raw);
    w.entries_ = std::move(entries);
    validate_weights(w);
    return w;
}

template <class Scalar>
void WeightMatrix<Scalar>::set(int i, int j, Scalar value) {
    if (i == j) throw DomainError("weight matrix: diagonal entries are fixed at zero");
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
}

template <class Scalar>
WeightMatrix<Scalar> WeightMatrix<Scalar>::operator-() const {
    WeightMatrix out = *this;
    for (auto& x : out.entries_) x = -x;
    for (int i = 0; i < n_; ++i) out.entries_[index(i, i)] = Scalar{};
    return out;
}

template <class Scalar>
WeightMatrix<Scalar> WeightMatrix<Scalar>::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("weight matrix: permutation has wrong size");
    WeightMatrix out(n_, provenance_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.entries_[out.index(perm[i], perm[j])] = (*this)(i, j);
    return out;
}

template <class Scalar>
void validate_weights(const WeightMatrix<Scalar>& w) {
    for (int i = 0; i < w.n(); ++i) {
        if (w(i, i) != Scalar{}) throw DomainError("weight matrix: nonzero diagonal at " + std::to_string(i));
        for (int j = i + 1; j < w.n(); ++j)
            if (w(i, j) != w(j, i))
                throw DomainError("weight matrix: asymmetric at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
    }
}

template class WeightMatrix<double>;
template class WeightMatrix<Complex>;
template void validate_weights(const WeightMatrix<double>&);
template void validate_weights(const WeightMatrix<Complex>&);

namespace {

RealWeights signed_weights(const Graph& g, double on_edge, double off_edge, Provenance provenance) {
    RealWeights w(g.n(), provenance);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) w.set(i, j, g.has_edge(i, j) ? on_edge : off_edge);
    return w;
}

void check_m(const Graph& g, int m) {
    if (m < 2 || m > g.n())
        throw DomainError("subset size m=" + std::to_string(m) + " must satisfy 2 <= m <= n=" +
                          std::to_string(g.n()));
}

}  // namespace

RealWeights weights_from_gamma(const Graph& g, int m, double gamma) {
    check_m(g, m);
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be a nonnegative finite number");
    const double t = gamma / (m - 1);
    return signed_weights(g, std::expm1(t), std::expm1(-t), Provenance::FromGamma);
}

RealWeights weights_from_alpha(const Graph& g, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    return signed_weights(g, alpha, -alpha, Provenance::FromAlpha);
}

RealWeights exponents_from_gamma(const Graph& g, int m, double gamma) {
    check_m(g, m);
    const double t = gamma / (m - 1);
    return signed_weights(g, t, -t, Provenance::Raw);
}

ComplexWeights to_complex(const RealWeights& w) {
    ComplexWeights out(w.n(), w.provenance());
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) out.set(i, j, Complex(w(i, j), 0.0));
    return out;
}

ComplexWeights log_one_plus(const ComplexWeights& w) {
    ComplexWeights out(w.n(), Provenance::Raw);
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) out.set(i, j, std::log(Complex(1.0, 0.0) + w(i, j)));
    return out;
}

double alpha_to_gamma(double alpha, int m) {
    if (m < 2) throw DomainError("m must be at least 2");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    // ln((1+a)/(1-a)) = 2 atanh(a)
    return (m - 1) * std::atanh(alpha);
}

double gamma_to_alpha(double gamma, int m) {
    if (m < 2) throw DomainError("m must be at least 2");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
    // (e^{2t} - 1)/(e^{2t} + 1) = tanh(t) with t = gamma/(m-1)
    return std::tanh(gamma / (m - 1));
}

double gamma_alpha_convert(double value, int m, ConvertDirection direction) {
    return direction == ConvertDirection::AlphaToGamma ? alpha_to_gamma(value, m) : gamma_to_alpha(value, m);
}

}  // namespace densepart
