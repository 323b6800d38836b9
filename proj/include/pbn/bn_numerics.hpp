#pragma once

// Brill-Noether numbers and expected-dimension verdicts for the Prym-Brill-Noether
// loci V^r(f), V^r_eta(f), their pointed versions, and the divisor twists.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pbn {

using Int = std::int64_t;

/// Strictly increasing non-negative vanishing orders a_0 < ... < a_r.
class VanishingSequence {
public:
    explicit VanishingSequence(std::vector<int> entries)
        : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw ParameterError("VanishingSequence: needs at least one entry");
        if (entries_.front() < 0)
            throw ParameterError("VanishingSequence: entries must be non-negative");
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i] <= entries_[i - 1])
                throw ParameterError("VanishingSequence: entries must be strictly increasing");
    }

    VanishingSequence(std::initializer_list<int> entries)
        : VanishingSequence(std::vector<int>(entries))
    {
    }

    /// (0, 1, ..., r)
    static VanishingSequence trivial(int r)
    {
        std::vector<int> v(static_cast<std::size_t>(r + 1));
        for (int i = 0; i <= r; ++i)
            v[static_cast<std::size_t>(i)] = i;
        return VanishingSequence(std::move(v));
    }

    int rank() const { return static_cast<int>(entries_.size()) - 1; }
    int size() const { return static_cast<int>(entries_.size()); }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    Int weight() const
    {
        Int sum = 0;
        for (int a : entries_)
            sum += a;
        return sum;
    }

    /// sum_i (a_i - i)
    Int ramification_weight() const
    {
        Int r = rank();
        return weight() - r * (r + 1) / 2;
    }

    std::span<const int> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
    friend auto operator<=>(const VanishingSequence&, const VanishingSequence&) = default;

private:
    std::vector<int> entries_;
};

inline std::string to_string(const VanishingSequence& a)
{
    std::string out = "(";
    for (int i = 0; i < a.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

enum class Exactness { theorem_exact, lower_bound_only };
enum class Emptiness { empty, nonempty, unknown };

inline std::string_view to_string(Exactness e)
{
    return e == Exactness::theorem_exact ? "theorem_exact" : "lower_bound_only";
}

inline std::string_view to_string(Emptiness e)
{
    switch (e) {
    case Emptiness::empty:
        return "empty";
    case Emptiness::nonempty:
        return "nonempty";
    default:
        return "unknown";
    }
}

struct DimReport {
    Int value;
    Exactness exactness;
    Emptiness emptiness;
    std::string source;

    friend bool operator==(const DimReport&, const DimReport&) = default;
};

/// rho(g, r, d) = g - (r+1)(g - d + r). Signed; never clamped.
constexpr Int rho(Int g, Int r, Int d)
{
    if (g < 0 || r < 0 || d < 0)
        throw ParameterError("rho: g, r and d must be non-negative");
    return g - (r + 1) * (g - d + r);
}

/// rho adjusted by the ramification sum (a_i - i) of a vanishing sequence.
inline Int rho_pointed(Int g, Int r, Int d, const VanishingSequence& a)
{
    if (a.rank() != r)
        throw ParameterError("rho_pointed: sequence of length " + std::to_string(a.size())
                             + " does not match rank " + std::to_string(r));
    if (a.back() > d)
        throw RangeError("rho_pointed: vanishing order " + std::to_string(a.back())
                         + " exceeds degree " + std::to_string(d));
    return rho(g, r, d) - a.ramification_weight();
}

namespace detail {

constexpr Int triangular(Int n)
{
    return n * (n + 1) / 2;
}

inline void require_nonneg(Int value, const char* what)
{
    if (value < 0)
        throw ParameterError(std::string(what) + " must be non-negative");
}

inline void require_twist_k(Int k, const char* op)
{
    if (k < 0 || k > 2)
        throw UnsupportedError(std::string(op) + ": supported for 0 <= k <= 2, got k = "
                               + std::to_string(k));
}

} // namespace detail

/// V^r(f) for f in R_{g,2k}. Exact for k = 0 (unramified) and k = 1; only
/// Kanev's lower bound otherwise.
inline DimReport expected_dim_V(Int g, Int k, Int r)
{
    if (g < 2)
        throw ParameterError("expected_dim_V: genus must be at least 2");
    detail::require_nonneg(k, "k");
    detail::require_nonneg(r, "r");

    Int value = g - 1 + k - k * (r + 1) - detail::triangular(r);
    if (k == 0 || k == 1) {
        return {value, Exactness::theorem_exact, value < 0 ? Emptiness::empty : Emptiness::nonempty,
                k == 0 ? "unramified Prym-Brill-Noether dimension g-1-r(r+1)/2 via Delta_1 limits; empty when negative"
                       : "ramified k=1 dimension theorem: dim V^r(f) = g-(r+1)(r+2)/2; non-empty iff non-negative"};
    }
    return {value, Exactness::lower_bound_only, Emptiness::unknown,
            "Kanev lower bound: dim V^r(f) >= g-1+k-k(r+1)-r(r+1)/2"};
}

/// V^r_eta(f), norm omega_C (x) eta.
inline DimReport expected_dim_V_eta(Int g, Int k, Int r)
{
    detail::require_twist_k(k, "expected_dim_V_eta");
    detail::require_nonneg(r, "r");

    Int value = g + k - 1 - detail::triangular(r + 1);
    Emptiness emptiness = value < 0 ? Emptiness::empty
        : k == 0                    ? Emptiness::unknown
                                    : Emptiness::nonempty;
    return {value, Exactness::theorem_exact, emptiness,
            k == 0 ? "unramified twisted dimension theorem: dim V^r_eta(f) = g-1-(r+1)(r+2)/2"
                   : "twisted dimension theorem: dim V^r_eta(f) = g+k-1-(r+1)(r+2)/2; non-empty iff non-negative"};
}

/// V^a_eta(f, p) with vanishing sequence a at a generic point.
inline DimReport expected_dim_V_eta_pointed(Int g, Int k, const VanishingSequence& a)
{
    detail::require_twist_k(k, "expected_dim_V_eta_pointed");
    if (a.back() > 2 * g - 2 + k)
        throw RangeError("expected_dim_V_eta_pointed: a_r = " + std::to_string(a.back())
                         + " exceeds 2g-2+k = " + std::to_string(2 * g - 2 + k));

    Int value = g + k - a.rank() - 2 - a.weight();
    Emptiness emptiness = value < 0 ? Emptiness::empty
        : k == 0                    ? Emptiness::unknown
                                    : Emptiness::nonempty;
    return {value, Exactness::theorem_exact, emptiness,
            "pointed twisted dimension theorem: dim V^a_eta(f,p) = g+k-r-2-|a|; empty when negative"};
}

/// V^r(f, D) for a generic effective divisor D of degree d on C.
inline DimReport expected_dim_V_divisor(Int g, Int k, Int r, Int d)
{
    detail::require_nonneg(k, "k");
    detail::require_nonneg(r, "r");
    detail::require_nonneg(d, "d");

    Int value = g - 1 + k - (d + k) * (r + 1) - detail::triangular(r);
    if (k == 0) {
        return {value, Exactness::theorem_exact, value < 0 ? Emptiness::empty : Emptiness::unknown,
                "divisor-twisted dimension theorem (unramified): dim V^r(f,D) = g-1-r(r+1)/2-d(r+1); empty when negative"};
    }
    return {value, Exactness::lower_bound_only, Emptiness::unknown,
            "Kanev lower bound: dim V^r(f,D) >= g-1+k-(d+k)(r+1)-r(r+1)/2"};
}

/// V^r_eta(f, D) for a generic effective divisor D of degree d on C.
inline DimReport expected_dim_V_eta_divisor(Int g, Int k, Int r, Int d)
{
    detail::require_twist_k(k, "expected_dim_V_eta_divisor");
    detail::require_nonneg(r, "r");
    detail::require_nonneg(d, "d");

    Int value = g - 1 + k - d * (r + 1) - detail::triangular(r + 1);
    return {value, Exactness::theorem_exact, value < 0 ? Emptiness::empty : Emptiness::unknown,
            "divisor-twisted twisted dimension theorem: dim V^r_eta(f,D) = g-1+k-(r+1)(r+2)/2-d(r+1); empty when negative"};
}

} // namespace pbn
