#pragma once

// Vanishing orders of Prym limit linear series over the boundary.
//
// Three problems are handled:
//   unramified_delta1  - limit g^r_{2g-2} on Y_1 u E~ u Y_2 over Delta_1; Y_i of genus g-1
//   ramified_x_plus_y  - limit g^r_{2g} in V^r(f, x+y) on Y_1 u R~ u Y_2; Y_i of genus g
//   ramified_dual      - limit g^r_{2g-2} in V^r(f) on the same ramified curve,
//                        obtained from the x+y problem at rank r+1 by Serre duality
//
// enumerate_candidates is a brute-force search over all sequences under the
// complementarity, parity/gap and rho-additivity constraints; solve_unique
// adds the endpoint constraint of each proof and insists on one survivor.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bn_numerics.hpp"
#include "errors.hpp"

namespace pbn {

enum class LimitFlavor { unramified_delta1, ramified_x_plus_y, ramified_dual };

inline std::string_view to_string(LimitFlavor flavor)
{
    switch (flavor) {
    case LimitFlavor::unramified_delta1:
        return "unramified_delta1";
    case LimitFlavor::ramified_x_plus_y:
        return "ramified_x_plus_y";
    default:
        return "ramified_dual";
    }
}

struct LimitProblem {
    LimitFlavor flavor;
    int g;
    int r;

    /// degree of the Y_1 aspect
    int degree() const { return flavor == LimitFlavor::ramified_x_plus_y ? 2 * g : 2 * g - 2; }

    int component_genus() const { return flavor == LimitFlavor::unramified_delta1 ? g - 1 : g; }

    /// required rho of each Y aspect
    Int s() const
    {
        switch (flavor) {
        case LimitFlavor::unramified_delta1:
            return g - 1 - Int{r} * (r + 1) / 2;
        case LimitFlavor::ramified_x_plus_y:
            return g - Int{r} * (r + 1) / 2;
        default:
            return g - Int{r + 1} * (r + 2) / 2;
        }
    }

    Int target_sum() const
    {
        return flavor == LimitFlavor::ramified_x_plus_y ? Int{r + 1} * g : Int{r + 1} * (g - 1);
    }

    bool solvable() const { return s() >= 0; }
};

inline void validate(const LimitProblem& p)
{
    if (p.g < 1)
        throw ParameterError("LimitProblem: genus must be positive");
    if (p.r < 0)
        throw ParameterError("LimitProblem: rank must be non-negative");
}

/// b_{r-i} = d - a_i
inline VanishingSequence complementary_vanishing(int d, const VanishingSequence& a)
{
    if (a.back() > d)
        throw RangeError("complementary_vanishing: a_r = " + std::to_string(a.back()) + " exceeds d = "
                         + std::to_string(d));
    std::vector<int> b(static_cast<std::size_t>(a.size()));
    for (int i = 0; i <= a.rank(); ++i)
        b[static_cast<std::size_t>(a.rank() - i)] = d - a[i];
    return VanishingSequence(std::move(b));
}

namespace detail {

inline VanishingSequence arithmetic_sequence(int start, int r)
{
    std::vector<int> a;
    for (int i = 0; i <= r; ++i)
        a.push_back(start + 2 * i);
    return VanishingSequence(std::move(a));
}

inline void require_solvable(const LimitProblem& p, const char* op)
{
    validate(p);
    if (!p.solvable())
        throw ParameterError(std::string(op) + ": no solution, s = " + std::to_string(p.s()) + " < 0");
}

/// #{j : a_j >= m}
inline int count_at_least(const VanishingSequence& a, int m)
{
    return static_cast<int>(std::count_if(a.begin(), a.end(), [m](int x) { return x >= m; }));
}

} // namespace detail

/// (g-r-1, g-r+1, ..., g+r-1)
inline VanishingSequence prym_limit_vanishing(int g, int r)
{
    detail::require_solvable({LimitFlavor::unramified_delta1, g, r}, "prym_limit_vanishing");
    return detail::arithmetic_sequence(g - r - 1, r);
}

/// (g-r, g-r+2, ..., g+r)
inline VanishingSequence prym_limit_vanishing_ramified(int g, int r)
{
    detail::require_solvable({LimitFlavor::ramified_x_plus_y, g, r}, "prym_limit_vanishing_ramified");
    return detail::arithmetic_sequence(g - r, r);
}

namespace detail {

/// h^0(Y, L_1 - m p) for the Y_1 aspect L_1 of V^r(f), read off from the
/// dual aspect M = omega_Y(2g p) (x) L_1^{-1} with vanishing orders `dual` by
/// Riemann-Roch: h^0(L_1 - m p) - h^0(M - (2g-m) p) = g - 1 - m.
inline int dual_section_count(int g, const VanishingSequence& dual, int m)
{
    return count_at_least(dual, 2 * g - m) + g - 1 - m;
}

} // namespace detail

/// Vanishing orders for V^r(f), f ramified, derived from the x+y solution at
/// rank r+1 and checked against the closed form (g-r-1+2i).
inline VanishingSequence prym_limit_vanishing_dual(int g, int r)
{
    detail::require_solvable({LimitFlavor::ramified_dual, g, r}, "prym_limit_vanishing_dual");
    VanishingSequence dual = prym_limit_vanishing_ramified(g, r + 1);

    // a_j is the largest order m with at least r+1-j sections vanishing to order m
    std::vector<int> a(static_cast<std::size_t>(r + 1), -1);
    for (int j = 0; j <= r; ++j)
        for (int m = 0; m <= 2 * g - 2; ++m)
            if (detail::dual_section_count(g, dual, m) >= r + 1 - j)
                a[static_cast<std::size_t>(j)] = m;

    VanishingSequence closed = detail::arithmetic_sequence(g - r - 1, r);
    if (!std::is_sorted(a.begin(), a.end()) || a.front() < 0
        || !std::equal(a.begin(), a.end(), closed.begin()))
        throw InvariantViolation("prym_limit_vanishing_dual: Riemann-Roch orders disagree with " + to_string(closed));
    return closed;
}

/// Every sequence in [0, d] meeting complementarity, parity (gap >= 2 for
/// the x+y problem) and the rho constraint on both aspects. Lexicographic.
inline std::vector<VanishingSequence> enumerate_candidates(const LimitProblem& p)
{
    validate(p);
    std::vector<VanishingSequence> out;
    if (!p.solvable())
        return out;

    const int d = p.degree();
    const int len = p.r + 1;
    if (len > d + 1)
        return out;

    auto accept = [&](const std::vector<int>& v) {
        if (p.flavor == LimitFlavor::ramified_x_plus_y) {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i] - v[i - 1] < 2)
                    return false;
        } else {
            for (int x : v)
                if ((x - v.front()) % 2)
                    return false;
        }
        VanishingSequence a(v);
        VanishingSequence b = complementary_vanishing(d, a);
        return rho_pointed(p.component_genus(), p.r, d, a) == p.s()
            && rho_pointed(p.component_genus(), p.r, d, b) == p.s();
    };

    // lexicographic walk over all strictly increasing len-subsets of [0, d]
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        v[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (accept(v))
            out.emplace_back(v);
        int i = len - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == d - (len - 1 - i))
            --i;
        if (i < 0)
            break;
        ++v[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < len; ++j)
            v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Endpoint/exactness filter for a candidate of problem p.
inline bool passes_endpoint_filter(const LimitProblem& p, const VanishingSequence& a)
{
    const int g = p.g;
    const int r = p.r;
    switch (p.flavor) {
    case LimitFlavor::unramified_delta1:
        // h^0(Y_1, L_1(-(2 + a_{r-i}) q)) = g + r - 1 - a_{r-i} - i, read against the aspect
        for (int i = 0; i <= r; ++i) {
            int top = a[r - i];
            if (g + r - 1 - top - i != detail::count_at_least(a, top + 2))
                return false;
        }
        return true;
    case LimitFlavor::ramified_x_plus_y:
        return a.front() == g - r && a.back() == g + r;
    default: {
        VanishingSequence dual = prym_limit_vanishing_ramified(g, r + 1);
        for (int m = 0; m <= p.degree(); ++m)
            if (detail::count_at_least(a, m) != std::clamp(detail::dual_section_count(g, dual, m), 0, r + 1))
                return false;
        return true;
    }
    }
}

inline VanishingSequence solve_unique(const LimitProblem& p)
{
    detail::require_solvable(p, "solve_unique");

    std::vector<VanishingSequence> survivors;
    for (auto& a : enumerate_candidates(p))
        if (passes_endpoint_filter(p, a))
            survivors.push_back(a);

    if (survivors.size() != 1)
        throw InvariantViolation("solve_unique: " + std::to_string(survivors.size()) + " survivors for "
                                 + std::string(to_string(p.flavor)) + " g=" + std::to_string(p.g)
                                 + " r=" + std::to_string(p.r));

    VanishingSequence closed = p.flavor == LimitFlavor::ramified_x_plus_y ? prym_limit_vanishing_ramified(p.g, p.r)
        : p.flavor == LimitFlavor::unramified_delta1                      ? prym_limit_vanishing(p.g, p.r)
                                                                          : prym_limit_vanishing_dual(p.g, p.r);
    if (survivors.front() != closed)
        throw InvariantViolation("solve_unique: survivor " + to_string(survivors.front())
                                 + " differs from closed form " + to_string(closed));
    return survivors.front();
}

struct AdditivityReport {
    Int lhs;        ///< rho(2g-1, r, 2g-2)
    Int aspect_a;   ///< adjusted rho of the Y_1 aspect at x_1
    Int aspect_b;   ///< adjusted rho of the Y_2 aspect at x_2
    Int bridge;     ///< adjusted rho of the elliptic bridge at x_1, x_2
    Int s;
    bool equality;

    Int total() const { return aspect_a + aspect_b + bridge; }
};

/// Brill-Noether additivity on Y_1 u E~ u Y_2 for Y-aspect orders a, b.
/// The bridge orders are the complements d - a_{r-i}, d - b_{r-i}.
inline AdditivityReport additivity_report(int g, int r, const VanishingSequence& a, const VanishingSequence& b)
{
    if (g < 2)
        throw ParameterError("additivity_report: genus must be at least 2");
    const int d = 2 * g - 2;
    AdditivityReport rep{};
    rep.s = g - 1 - Int{r} * (r + 1) / 2;
    rep.lhs = rho(2 * g - 1, r, d);
    rep.aspect_a = rho_pointed(g - 1, r, d, a);
    rep.aspect_b = rho_pointed(g - 1, r, d, b);
    rep.bridge = rho(1, r, d) - complementary_vanishing(d, a).ramification_weight()
        - complementary_vanishing(d, b).ramification_weight();
    rep.equality = rep.aspect_a == rep.s && rep.aspect_b == rep.s && rep.bridge == -r;
    return rep;
}

/// Expected dimension of W^r_{d,a}(Y) on a genus g_y curve.
inline Int w_locus_expected_dim(int g_y, int d, const VanishingSequence& a)
{
    return rho_pointed(g_y, a.rank(), d, a);
}

} // namespace pbn
