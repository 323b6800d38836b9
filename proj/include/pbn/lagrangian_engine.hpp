#pragma once

// Degeneracy-locus classes through Schur Q~/P~ polynomials. Q~_lambda is the
// Pfaffian of the antisymmetric matrix of two-row values Q~_(lambda_i, lambda_j),
// evaluated at a truncated Chern series. eval_identity is the closed-form
// product used as an independent check of the Pfaffian path.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bn_numerics.hpp"
#include "errors.hpp"
#include "pbn_formulas.hpp"
#include "rational.hpp"
#include "theta_ring.hpp"

namespace pbn {

/// lambda_1 > lambda_2 > ... > lambda_l > 0
class StrictPartition {
public:
    StrictPartition() = default;

    explicit StrictPartition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw ParameterError("StrictPartition: parts must be positive");
            if (i > 0 && parts_[i] >= parts_[i - 1])
                throw ParameterError("StrictPartition: parts must be strictly decreasing");
        }
    }

    StrictPartition(std::initializer_list<int> parts)
        : StrictPartition(std::vector<int>(parts))
    {
    }

    /// (m, m-1, ..., 1)
    static StrictPartition staircase(int m)
    {
        std::vector<int> parts;
        for (int p = m; p >= 1; --p)
            parts.push_back(p);
        return StrictPartition(std::move(parts));
    }

    /// lambda_i = a_i + 1, sorted descending.
    static StrictPartition from_vanishing(const VanishingSequence& a)
    {
        std::vector<int> parts;
        for (int i = a.rank(); i >= 0; --i)
            parts.push_back(a[i] + 1);
        return StrictPartition(std::move(parts));
    }

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const
    {
        int w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const StrictPartition& lambda)
{
    std::string out = "(";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(lambda[i]);
    }
    return out + ")";
}

/// All strict partitions of n, largest first part first.
inline std::vector<StrictPartition> strict_partitions(int n)
{
    std::vector<StrictPartition> out;
    std::vector<int> current;
    std::function<void(int, int)> fill = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            fill(remaining - p, p - 1);
            current.pop_back();
        }
    };
    if (n >= 0)
        fill(n, n);
    return out;
}

/// Q~_(a,b) = c_a c_b + 2 sum_{j=1}^{b} (-1)^j c_{a+j} c_{b-j}; Q~_(a,0) = c_a.
inline Rational q_two_coeff(int a, int b, const ChernSeries& c)
{
    if (b < 0 || a <= b)
        throw ParameterError("q_two: needs a > b >= 0, got (" + std::to_string(a) + ","
                             + std::to_string(b) + ")");
    if (c.order() < a + b)
        throw RangeError("q_two: Chern series truncated at order " + std::to_string(c.order())
                         + ", need " + std::to_string(a + b));
    Rational value = c.at(a) * c.at(b);
    for (int j = 1; j <= b; ++j) {
        Rational term = 2 * c.at(a + j) * c.at(b - j);
        if (j % 2)
            value -= term;
        else
            value += term;
    }
    return value;
}

inline ThetaClass q_two(int a, int b, const ChernSeries& c)
{
    return {q_two_coeff(a, b, c), a + b, Generator::theta_prime};
}

namespace detail {

/// Pfaffian of an antisymmetric matrix given by its upper-triangle entry
/// function. Sub-Pfaffians are memoized on the bitmask of surviving rows.
class PfaffianExpansion {
public:
    using Entry = std::function<Rational(int, int)>;

    PfaffianExpansion(int n, Entry upper)
        : n_(n)
        , upper_(std::move(upper))
    {
        if (n_ > 62)
            throw ParameterError("pfaffian: matrix too large");
    }

    /// Laplace expansion along `row` at the top level.
    Rational along_row(int row)
    {
        if (n_ % 2)
            return 0;
        if (n_ == 0)
            return 1;
        std::uint64_t all = (std::uint64_t{1} << n_) - 1;
        Rational total = 0;
        for (int j = 0; j < n_; ++j) {
            if (j == row)
                continue;
            // (-1)^{i+j+1+[j<i]} a_ij Pf(A without rows i, j)
            bool negative = ((row + j + 1 + (j < row ? 1 : 0)) % 2) != 0;
            Rational term = entry(row, j) * sub(all & ~(std::uint64_t{1} << row) & ~(std::uint64_t{1} << j));
            if (negative)
                total -= term;
            else
                total += term;
        }
        return total;
    }

private:
    Rational entry(int i, int j) const { return i < j ? upper_(i, j) : Rational(-upper_(j, i)); }

    Rational sub(std::uint64_t mask)
    {
        if (mask == 0)
            return 1;
        if (auto it = memo_.find(mask); it != memo_.end())
            return it->second;

        std::vector<int> idx;
        for (int i = 0; i < n_; ++i)
            if (mask & (std::uint64_t{1} << i))
                idx.push_back(i);

        Rational total = 0;
        int first = idx[0];
        for (std::size_t pos = 1; pos < idx.size(); ++pos) {
            int j = idx[pos];
            Rational term = entry(first, j)
                * sub(mask & ~(std::uint64_t{1} << first) & ~(std::uint64_t{1} << j));
            // position pos (0-based) in the reduced matrix: sign (-1)^{pos+1}
            if (pos % 2)
                total += term;
            else
                total -= term;
        }
        memo_.emplace(mask, total);
        return total;
    }

    int n_;
    Entry upper_;
    std::map<std::uint64_t, Rational> memo_;
};

/// lambda with a trailing 0 appended when its length is odd.
inline std::vector<int> padded_parts(const StrictPartition& lambda)
{
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2)
        parts.push_back(0);
    return parts;
}

} // namespace detail

/// Q~_lambda evaluated at c, expanding the Pfaffian along `row` of the
/// padded partition. Every row gives the same value.
inline Rational q_tilde_coeff_along_row(const StrictPartition& lambda, const ChernSeries& c, int row)
{
    if (c.order() < lambda.weight())
        throw RangeError("q_tilde: Chern series truncated at order " + std::to_string(c.order())
                         + ", need " + std::to_string(lambda.weight()));
    auto parts = detail::padded_parts(lambda);
    int n = static_cast<int>(parts.size());
    if (n == 0)
        return 1;
    if (row < 0 || row >= n)
        throw ParameterError("q_tilde: expansion row out of range");

    // two-row values are reused across sub-Pfaffians
    std::vector<Rational> two_row(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            two_row[static_cast<std::size_t>(i * n + j)] = q_two_coeff(parts[static_cast<std::size_t>(i)],
                                                                     parts[static_cast<std::size_t>(j)], c);

    detail::PfaffianExpansion pf(n, [&](int i, int j) { return two_row[static_cast<std::size_t>(i * n + j)]; });
    return pf.along_row(row);
}

inline ThetaClass q_tilde(const StrictPartition& lambda, const ChernSeries& c)
{
    return {q_tilde_coeff_along_row(lambda, c, 0), lambda.weight(), Generator::theta_prime};
}

/// P~_lambda = Q~_lambda / 2^{l(lambda)}, l counting nonzero parts only.
inline ThetaClass p_tilde(const StrictPartition& lambda, const ChernSeries& c)
{
    ThetaClass q = q_tilde(lambda, c);
    return {q.coeff() / Rational(pow2(static_cast<unsigned>(lambda.length()))), lambda.weight(),
            Generator::theta_prime};
}

/// Class of V^a_eta(f,p) as the Lagrangian degeneracy locus with ranks a_i + 1.
inline ThetaClass lagrangian_class_pointed(const VanishingSequence& a)
{
    auto lambda = StrictPartition::from_vanishing(a);
    return q_tilde(lambda, chern_series_W(lambda.weight()));
}

/// prod 1/lambda_i! prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j):
/// the value of Q~_lambda at c_i = 1/i!.
inline Rational eval_identity(const StrictPartition& lambda)
{
    Rational value = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        value /= Rational(factorial(static_cast<unsigned>(lambda[i])));
        for (int j = i + 1; j < lambda.length(); ++j)
            value *= Rational(lambda[i] - lambda[j], lambda[i] + lambda[j]);
    }
    return value;
}

} // namespace pbn
