#pragma once

// Subcommands of the `pbn` tool as plain functions returning OutputRecords.
// Exit codes: 0 success (including empty loci), 1 invariant violation,
// 2 usage error.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bn_numerics.hpp"
#include "errors.hpp"
#include "lagrangian_engine.hpp"
#include "limit_series.hpp"
#include "output.hpp"
#include "pbn_formulas.hpp"
#include "theta_ring.hpp"
#include "verification.hpp"

namespace pbn {

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_usage = 2;

/// "0,2,5" -> (0,2,5)
inline VanishingSequence parse_sequence(std::string_view text)
{
    std::vector<int> entries;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw ParameterError("malformed vanishing sequence '" + std::string(text) + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw ParameterError("malformed vanishing sequence '" + std::string(text) + "'");
        entries.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (ch != ' ')
            token += ch;
    }
    flush();
    return VanishingSequence(std::move(entries));
}

struct DimArgs {
    std::string locus;
    std::optional<int> g;
    std::optional<int> k;
    std::optional<int> r;
    std::optional<int> d;
    std::optional<std::string> a;
};

namespace detail {

template <class T>
T require(const std::optional<T>& value, const char* flag, std::string_view ctx)
{
    if (!value)
        throw ParameterError(std::string(ctx) + " requires --" + flag);
    return *value;
}

template <class T>
void forbid(const std::optional<T>& value, const char* flag, std::string_view ctx)
{
    if (value)
        throw ParameterError(std::string(ctx) + " does not take --" + flag);
}

} // namespace detail

inline OutputRecord cmd_dim(const DimArgs& args)
{
    OutputRecord rec;
    rec.command = "dim";
    const std::string ctx = "dim --locus " + args.locus;
    int g = detail::require(args.g, "g", ctx);
    int k = detail::require(args.k, "k", ctx);
    rec.params = {{"locus", args.locus}, {"g", g}, {"k", k}};

    DimReport rep;
    if (args.locus == "V" || args.locus == "V_eta") {
        detail::forbid(args.d, "d", ctx);
        detail::forbid(args.a, "a", ctx);
        int r = detail::require(args.r, "r", ctx);
        rec.params["r"] = r;
        rep = args.locus == "V" ? expected_dim_V(g, k, r) : expected_dim_V_eta(g, k, r);
    } else if (args.locus == "V_eta_pointed") {
        detail::forbid(args.d, "d", ctx);
        auto a = parse_sequence(detail::require(args.a, "a", ctx));
        if (args.r && *args.r != a.rank())
            throw ParameterError("dim: --r disagrees with the length of --a");
        rec.params["a"] = to_json(a);
        rep = expected_dim_V_eta_pointed(g, k, a);
    } else if (args.locus == "V_div" || args.locus == "V_eta_div") {
        detail::forbid(args.a, "a", ctx);
        int r = detail::require(args.r, "r", ctx);
        int d = detail::require(args.d, "d", ctx);
        rec.params["r"] = r;
        rec.params["d"] = d;
        rep = args.locus == "V_div" ? expected_dim_V_divisor(g, k, r, d) : expected_dim_V_eta_divisor(g, k, r, d);
    } else {
        throw ParameterError("dim: unknown locus '" + args.locus + "'");
    }
    rec.result = to_json(rep);
    rec.citations = {rep.source};
    return rec;
}

struct ClassArgs {
    std::string locus;
    std::optional<int> r;
    std::optional<std::string> a;
    std::optional<int> g;
    std::optional<int> k;
    bool engine = false;
};

inline OutputRecord cmd_class(const ClassArgs& args)
{
    OutputRecord rec;
    rec.command = "class";
    const std::string ctx = "class --locus " + args.locus;
    rec.params = {{"locus", args.locus}, {"engine", args.engine}};

    std::optional<ThetaClass> formula;
    std::optional<ThetaClass> engine;
    PrymFlavor flavor = PrymFlavor::ramified_twisted;
    int k = args.k.value_or(1);

    if (args.locus == "V_unramified") {
        detail::forbid(args.a, "a", ctx);
        detail::forbid(args.k, "k", ctx);
        int r = detail::require(args.r, "r", ctx);
        if (r < 0)
            throw ParameterError("class: negative rank");
        rec.params["r"] = r;
        flavor = PrymFlavor::unramified_pm;
        k = 0;
        formula = unramified_class(r);
        rec.citations.push_back("de Concini-Pragacz class: [V^r(f)] = 2^{r(r+1)/2} prod_{i=1}^{r} i!/(2i)! xi^{r(r+1)/2}");
        if (args.engine) {
            auto lambda = StrictPartition::staircase(r);
            engine = substitute_theta_prime_as_2xi(p_tilde(lambda, chern_series_W(lambda.weight())));
        }
    } else if (args.locus == "V_eta") {
        detail::forbid(args.a, "a", ctx);
        int r = detail::require(args.r, "r", ctx);
        if (r < 0)
            throw ParameterError("class: negative rank");
        rec.params["r"] = r;
        formula = twisted_class(r);
        rec.citations.push_back("twisted class: [V^r_eta(f)] = prod_{i=1}^{r+1} i!/(2i)! (theta')^{(r+1)(r+2)/2}");
        if (args.engine) {
            auto lambda = StrictPartition::staircase(r + 1);
            engine = q_tilde(lambda, chern_series_W(lambda.weight()));
        }
    } else if (args.locus == "V_eta_pointed") {
        auto a = parse_sequence(detail::require(args.a, "a", ctx));
        if (args.r && *args.r != a.rank())
            throw ParameterError("class: --r disagrees with the length of --a");
        rec.params["a"] = to_json(a);
        formula = twisted_pointed_class(a);
        rec.citations.push_back(
            "pointed twisted class: [V^a_eta(f,p)] = prod 1/(a_i+1)! prod_{j<i} (a_i-a_j)/(a_i+a_j+2) (theta')^{|a|+r+1}");
        if (args.engine)
            engine = lagrangian_class_pointed(a);
    } else {
        throw ParameterError("class: unknown locus '" + args.locus + "'");
    }

    rec.result["class"] = to_json(*formula);
    if (engine) {
        rec.citations.push_back("type C Lagrangian degeneracy formula: Q~ Pfaffian at c_i(W^v) = (theta')^i/i!");
        rec.result["engine"] = to_json(*engine);
        rec.result["agrees"] = *engine == *formula;
        if (!formula->is_zero())
            rec.result["engine_ratio"] = to_string(engine->coeff() / formula->coeff());
    }

    if (args.g) {
        rec.params["g"] = *args.g;
        if (flavor == PrymFlavor::ramified_twisted)
            rec.params["k"] = k;
        PrymSpace space = make_space(flavor, *args.g, k);
        rec.result["space"] = to_json(space);
        if (space.theta_top && formula->exponent() == space.dim)
            rec.result["degree"] = to_string(degree(*formula, space));
    }
    return rec;
}

inline OutputRecord cmd_count(int g, int k, int r)
{
    OutputRecord rec;
    rec.command = "count";
    rec.params = {{"g", g}, {"k", k}, {"r", r}};
    if (k == 0)
        throw UnsupportedError("count: the top self-intersection of theta' on the k = 0 twisted torsor is not known");
    if (k < 0 || k > 2)
        throw UnsupportedError("count: supported for k in {1,2}, got k = " + std::to_string(k));
    if (r < 0)
        throw ParameterError("count: negative rank");

    DimReport rep = expected_dim_V_eta(g, k, r);
    if (rep.value != 0)
        throw ParameterError("count: V^r_eta has expected dimension " + std::to_string(rep.value)
                             + " at (g,k,r) = (" + std::to_string(g) + "," + std::to_string(k) + ","
                             + std::to_string(r) + "); counting needs dimension 0");

    PrymSpace space = make_space(PrymFlavor::ramified_twisted, g, k);
    ThetaClass cls = twisted_class(r);
    rec.result = {{"count", to_json(count_points(cls, space))}, {"class", to_json(cls)}, {"space", to_json(space)}};
    rec.citations = {k == 1 ? "cardinality theorem (k=1): #V^r_eta(f) = 2^g g! prod_{i=1}^{r+1} i!/(2i)!"
                            : "cardinality theorem (k=2): #V^r_eta(f) = (g+1)! 2^g prod_{i=1}^{r+1} i!/(2i)!"};
    return rec;
}

inline LimitFlavor parse_limit_flavor(std::string_view name)
{
    if (name == "unramified" || name == "unramified_delta1")
        return LimitFlavor::unramified_delta1;
    if (name == "ramified" || name == "ramified_x_plus_y")
        return LimitFlavor::ramified_x_plus_y;
    if (name == "dual" || name == "ramified_dual")
        return LimitFlavor::ramified_dual;
    throw ParameterError("limits: unknown flavor '" + std::string(name) + "'");
}

inline OutputRecord cmd_limits(std::string_view flavor_name, int g, int r, bool show_candidates)
{
    OutputRecord rec;
    rec.command = "limits";
    LimitProblem p{parse_limit_flavor(flavor_name), g, r};
    validate(p);
    rec.params = {{"flavor", std::string(to_string(p.flavor))}, {"g", g}, {"r", r},
                  {"show_candidates", show_candidates}};

    switch (p.flavor) {
    case LimitFlavor::unramified_delta1:
        rec.citations.push_back("Prym limits over Delta_1: Y_1-aspect orders (g-r-1, g-r+1, ..., g+r-1)");
        break;
    case LimitFlavor::ramified_x_plus_y:
        rec.citations.push_back("ramified Prym limits for V^r(f,x+y): Y_1-aspect orders (g-r, g-r+2, ..., g+r)");
        break;
    default:
        rec.citations.push_back("ramified Prym limits for V^r(f) via Serre duality: orders (g-r-1, g-r+1, ..., g+r-1)");
        break;
    }

    rec.result = {{"degree", p.degree()}, {"s", p.s()}, {"empty", !p.solvable()}};
    if (show_candidates) {
        json list = json::array();
        for (auto& a : enumerate_candidates(p))
            list.push_back(to_json(a));
        rec.result["candidates"] = list;
    }
    if (!p.solvable()) {
        rec.result["solution"] = nullptr;
        return rec;
    }

    VanishingSequence a = solve_unique(p);
    rec.result["solution"] = to_json(a);
    if (p.flavor == LimitFlavor::unramified_delta1 && g >= 2) {
        auto rep = additivity_report(g, r, a, complementary_vanishing(p.degree(), a));
        rec.result["additivity"] = {{"lhs", rep.lhs},           {"aspect_a", rep.aspect_a},
                                    {"aspect_b", rep.aspect_b}, {"bridge", rep.bridge},
                                    {"total", rep.total()},     {"equality", rep.equality}};
        rec.citations.push_back("Brill-Noether additivity: rho(2g-1,r,2g-2) = -r + 2s");
    }
    return rec;
}

inline OutputRecord cmd_verify(const VerifyBounds& bounds, const ChernProvider& chern = chern_series_W)
{
    OutputRecord rec;
    rec.command = "verify";
    rec.params = {{"max_weight", bounds.max_weight}, {"max_g", bounds.max_g}, {"max_r", bounds.max_r}};
    VerificationSummary summary = run_verification(bounds, chern);

    json suites = json::array();
    for (auto& s : summary.suites) {
        json entry = {{"name", s.name}, {"passed", s.passed}, {"cases", s.cases}};
        if (s.counterexample)
            entry["counterexample"] = *s.counterexample;
        suites.push_back(entry);
    }
    rec.result = {{"suites", suites}, {"all_passed", summary.all_passed()}};
    if (auto* failure = summary.first_failure())
        rec.result["first_counterexample"] = failure->name + ": " + failure->counterexample.value_or("");
    rec.citations = {"cross-checks: Q~ Pfaffian vs product formula, pointed class, staircase 2^{r+1} relation, "
                     "unramified class, count integrality, limit uniqueness, W-locus dimension"};
    rec.exit_code = summary.all_passed() ? exit_ok : exit_invariant;
    return rec;
}

} // namespace pbn
