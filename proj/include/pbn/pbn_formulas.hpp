#pragma once

// Closed-form classes of the twisted and unramified Prym-Brill-Noether loci,
// point counts, and the Chern data of W^v that feeds the degeneracy engine.

#include <string>
#include <vector>

#include "bn_numerics.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "theta_ring.hpp"

namespace pbn {

/// Truncated total Chern class sum_i q_i theta^i with q_0 = 1.
class ChernSeries {
public:
    explicit ChernSeries(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty() || coeffs_.front() != 1)
            throw ParameterError("ChernSeries: q_0 must be 1");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// q_i; zero for negative i, error past the truncation order.
    const Rational& at(int i) const
    {
        static const Rational zero{0};
        if (i < 0)
            return zero;
        if (i > order())
            throw RangeError("ChernSeries: c_" + std::to_string(i) + " requested, series truncated at order "
                             + std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// c(W^v) = sum (theta')^i / i!, truncated at order n.
inline ChernSeries chern_series_W(int n)
{
    if (n < 0)
        throw ParameterError("chern_series_W: negative truncation order");
    std::vector<Rational> q;
    q.reserve(static_cast<std::size_t>(n + 1));
    Integer fact = 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0)
            fact *= i;
        q.emplace_back(Integer(1), fact);
    }
    return ChernSeries(std::move(q));
}

/// prod_{i=1}^{m} i!/(2i)!
inline Rational factorial_ratio_product(int m)
{
    Rational p = 1;
    for (int i = 1; i <= m; ++i) {
        auto ui = static_cast<unsigned>(i);
        p *= Rational(factorial(ui), factorial(2 * ui));
    }
    return p;
}

/// [V^r_eta(f)] = prod_{i=1}^{r+1} i!/(2i)! (theta')^{(r+1)(r+2)/2}
inline ThetaClass twisted_class(int r)
{
    if (r < 0)
        throw ParameterError("twisted_class: negative rank");
    return {factorial_ratio_product(r + 1), (r + 1) * (r + 2) / 2, Generator::theta_prime};
}

/// [V^a_eta(f,p)] = prod 1/(a_i+1)! prod_{j<i} (a_i-a_j)/(a_i+a_j+2) (theta')^{|a|+r+1}
inline ThetaClass twisted_pointed_class(const VanishingSequence& a)
{
    Rational coeff = 1;
    for (int i = 0; i <= a.rank(); ++i) {
        coeff /= Rational(factorial(static_cast<unsigned>(a[i] + 1)));
        for (int j = 0; j < i; ++j)
            coeff *= Rational(a[i] - a[j], a[i] + a[j] + 2);
    }
    return {coeff, static_cast<int>(a.weight()) + a.rank() + 1, Generator::theta_prime};
}

/// [V^r(f)] = 2^{r(r+1)/2} prod_{i=1}^{r} i!/(2i)! xi^{r(r+1)/2} on P+/P-.
inline ThetaClass unramified_class(int r)
{
    if (r < 0)
        throw ParameterError("unramified_class: negative rank");
    int exponent = r * (r + 1) / 2;
    return {Rational(pow2(static_cast<unsigned>(exponent))) * factorial_ratio_product(r), exponent,
            Generator::xi};
}

/// Number of points of a zero-dimensional locus. A non-integral degree means
/// the class or the degree table is wrong, so it is reported, never rounded.
inline Integer count_points(const ThetaClass& cls, const PrymSpace& space)
{
    Rational deg = degree(cls, space);
    if (!is_integer(deg))
        throw InvariantViolation("count_points: degree " + to_string(deg) + " is not an integer");
    return boost::multiprecision::numerator(deg);
}

} // namespace pbn
