#pragma once

// Cross-module identity suites behind `pbn verify`. Each suite stops at its
// first counterexample.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bn_numerics.hpp"
#include "lagrangian_engine.hpp"
#include "limit_series.hpp"
#include "pbn_formulas.hpp"
#include "theta_ring.hpp"

namespace pbn {

struct VerifyBounds {
    int max_weight = 24;
    int max_g = 12;
    int max_r = 6;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::optional<std::string> counterexample;
};

struct VerificationSummary {
    std::vector<SuiteResult> suites;

    bool all_passed() const
    {
        for (auto& s : suites)
            if (!s.passed)
                return false;
        return true;
    }

    const SuiteResult* first_failure() const
    {
        for (auto& s : suites)
            if (!s.passed)
                return &s;
        return nullptr;
    }
};

/// Supplies the Chern series the engine is evaluated at, by truncation order.
using ChernProvider = std::function<ChernSeries(int)>;

namespace detail {

class SuiteRunner {
public:
    explicit SuiteRunner(std::string name) { result_.name = std::move(name); }

    /// Records one case; returns false once the suite has failed.
    template <class Check>
    bool check(Check&& fn)
    {
        if (!result_.passed)
            return false;
        ++result_.cases;
        try {
            if (auto failure = fn()) {
                result_.passed = false;
                result_.counterexample = std::move(*failure);
            }
        } catch (const Error& e) {
            result_.passed = false;
            result_.counterexample = e.what();
        }
        return result_.passed;
    }

    SuiteResult finish() { return std::move(result_); }

private:
    SuiteResult result_;
};

using Failure = std::optional<std::string>;

/// All vanishing sequences with |a| + r + 1 == n, i.e. strict partitions of n
/// shifted down by one.
inline std::vector<VanishingSequence> sequences_of_class_weight(int n)
{
    std::vector<VanishingSequence> out;
    for (auto& lambda : strict_partitions(n)) {
        std::vector<int> a;
        for (int i = lambda.length() - 1; i >= 0; --i)
            a.push_back(lambda[i] - 1);
        out.emplace_back(std::move(a));
    }
    return out;
}

} // namespace detail

inline SuiteResult verify_engine_oracle(const VerifyBounds& b, const ChernProvider& chern)
{
    detail::SuiteRunner run("engine_oracle");
    for (int n = 1; n <= b.max_weight; ++n)
        for (auto& lambda : strict_partitions(n))
            if (!run.check([&]() -> detail::Failure {
                    Rational engine = q_tilde(lambda, chern(n)).coeff();
                    Rational oracle = eval_identity(lambda);
                    if (engine != oracle)
                        return "lambda=" + to_string(lambda) + " engine " + to_string(engine) + " oracle "
                            + to_string(oracle);
                    return std::nullopt;
                }))
                return run.finish();
    return run.finish();
}

inline SuiteResult verify_pointed_formula(const VerifyBounds& b, const ChernProvider& chern)
{
    detail::SuiteRunner run("pointed_formula");
    for (int n = 1; n <= b.max_weight; ++n)
        for (auto& a : detail::sequences_of_class_weight(n))
            if (!run.check([&]() -> detail::Failure {
                    auto lambda = StrictPartition::from_vanishing(a);
                    ThetaClass engine = q_tilde(lambda, chern(lambda.weight()));
                    ThetaClass formula = twisted_pointed_class(a);
                    if (engine != formula)
                        return "a=" + to_string(a) + " engine " + to_string(engine) + " formula "
                            + to_string(formula);
                    return std::nullopt;
                }))
                return run.finish();
    return run.finish();
}

inline SuiteResult verify_staircase_relation(const VerifyBounds& b, const ChernProvider& chern)
{
    detail::SuiteRunner run("staircase_relation");
    for (int r = 0; r <= b.max_r; ++r) {
        auto lambda = StrictPartition::staircase(r + 1);
        if (lambda.weight() > b.max_weight)
            break;
        if (!run.check([&]() -> detail::Failure {
                Rational engine = q_tilde(lambda, chern(lambda.weight())).coeff();
                Rational expected = Rational(pow2(static_cast<unsigned>(r + 1))) * twisted_class(r).coeff();
                if (engine != expected)
                    return "r=" + std::to_string(r) + " engine " + to_string(engine) + " expected "
                        + to_string(expected);
                return std::nullopt;
            }))
            break;
    }
    return run.finish();
}

inline SuiteResult verify_unramified_reproduction(const VerifyBounds& b, const ChernProvider& chern)
{
    detail::SuiteRunner run("unramified_reproduction");
    for (int r = 1; r <= b.max_r; ++r) {
        auto lambda = StrictPartition::staircase(r);
        if (lambda.weight() > b.max_weight)
            break;
        if (!run.check([&]() -> detail::Failure {
                ThetaClass engine = substitute_theta_prime_as_2xi(p_tilde(lambda, chern(lambda.weight())));
                ThetaClass formula = unramified_class(r);
                if (engine != formula)
                    return "r=" + std::to_string(r) + " engine " + to_string(engine) + " formula "
                        + to_string(formula);
                return std::nullopt;
            }))
            break;
    }
    return run.finish();
}

/// Genus at which V^r_eta(f) is zero-dimensional for f in R_{g,2k}.
inline int dimension_zero_genus(int k, int r)
{
    return (r + 1) * (r + 2) / 2 + 1 - k;
}

inline SuiteResult verify_count_integrality(const VerifyBounds& b)
{
    detail::SuiteRunner run("count_integrality");
    for (int k = 1; k <= 2; ++k)
        for (int r = 1; r <= b.max_r; ++r) {
            ThetaClass cls = twisted_class(r);
            if (cls.exponent() > b.max_weight)
                break;
            int g = dimension_zero_genus(k, r);
            if (!run.check([&]() -> detail::Failure {
                    Integer n = count_points(cls, make_space(PrymFlavor::ramified_twisted, g, k));
                    if (n <= 0)
                        return "k=" + std::to_string(k) + " r=" + std::to_string(r) + " count " + n.str();
                    return std::nullopt;
                }))
                return run.finish();
        }
    return run.finish();
}

inline SuiteResult verify_limit_uniqueness(const VerifyBounds& b)
{
    detail::SuiteRunner run("limit_uniqueness");
    for (auto flavor : {LimitFlavor::unramified_delta1, LimitFlavor::ramified_x_plus_y, LimitFlavor::ramified_dual})
        for (int g = 1; g <= b.max_g; ++g)
            for (int r = 0; r <= b.max_r; ++r) {
                LimitProblem p{flavor, g, r};
                if (!p.solvable())
                    continue;
                if (!run.check([&]() -> detail::Failure {
                        // solve_unique throws on zero/multiple survivors or a closed-form mismatch
                        VanishingSequence a = solve_unique(p);
                        if (flavor == LimitFlavor::unramified_delta1 && g >= 2) {
                            auto rep = additivity_report(g, r, a, complementary_vanishing(p.degree(), a));
                            if (!rep.equality || rep.total() != rep.lhs)
                                return "additivity fails for g=" + std::to_string(g) + " r=" + std::to_string(r);
                        }
                        return std::nullopt;
                    }))
                    return run.finish();
            }
    return run.finish();
}

inline SuiteResult verify_w_consistency(const VerifyBounds& b)
{
    detail::SuiteRunner run("w_consistency");
    for (int g = 2; g <= b.max_g; ++g)
        for (int r = 0; r <= b.max_r && r <= g - 1; ++r)
            if (!run.check([&]() -> detail::Failure {
                    std::vector<int> even;
                    for (int i = 0; i <= r; ++i)
                        even.push_back(2 * i);
                    Int w = w_locus_expected_dim(g - 1, g + r - 1, VanishingSequence(even));
                    Int v = expected_dim_V(g, 0, r).value;
                    if (w != v)
                        return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " W " + std::to_string(w)
                            + " V " + std::to_string(v);
                    return std::nullopt;
                }))
                return run.finish();
    return run.finish();
}

inline VerificationSummary run_verification(const VerifyBounds& b, const ChernProvider& chern = chern_series_W)
{
    if (b.max_weight < 0 || b.max_g < 0 || b.max_r < 0)
        throw ParameterError("verify: bounds must be non-negative");
    VerificationSummary summary;
    summary.suites.push_back(verify_engine_oracle(b, chern));
    summary.suites.push_back(verify_pointed_formula(b, chern));
    summary.suites.push_back(verify_staircase_relation(b, chern));
    summary.suites.push_back(verify_unramified_reproduction(b, chern));
    summary.suites.push_back(verify_count_integrality(b));
    summary.suites.push_back(verify_limit_uniqueness(b));
    summary.suites.push_back(verify_w_consistency(b));
    return summary;
}

} // namespace pbn
