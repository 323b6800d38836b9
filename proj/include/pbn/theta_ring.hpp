#pragma once

// Numerical-equivalence ring of a Prym torsor, restricted to the line spanned
// by powers of a single theta class. The degree map is fixed by the top
// self-intersection table below.

#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace pbn {

enum class PrymFlavor {
    unramified_pm,    ///< P+ or P-, principal polarization xi
    ramified_twisted, ///< P with Nm(L) = omega_C (x) eta, class theta'
};

enum class Generator { theta_prime, xi };

inline std::string_view to_string(PrymFlavor flavor)
{
    return flavor == PrymFlavor::unramified_pm ? "unramified_pm" : "ramified_twisted";
}

inline std::string_view to_string(Generator gen)
{
    return gen == Generator::theta_prime ? "theta_prime" : "xi";
}

struct PrymSpace {
    PrymFlavor flavor;
    int g;
    int k;
    int dim;
    /// degree(generator^dim); empty when the top intersection is not known.
    std::optional<Integer> theta_top;

    Generator generator() const
    {
        return flavor == PrymFlavor::unramified_pm ? Generator::xi : Generator::theta_prime;
    }
};

inline PrymSpace make_space(PrymFlavor flavor, int g, int k)
{
    if (g < 2)
        throw ParameterError("make_space: genus must be at least 2, got " + std::to_string(g));

    if (flavor == PrymFlavor::unramified_pm) {
        if (k != 0)
            throw ParameterError("make_space: P+/P- only exists for unramified covers (k = 0)");
        return {flavor, g, 0, g - 1, factorial(static_cast<unsigned>(g - 1))};
    }

    auto ug = static_cast<unsigned>(g);
    switch (k) {
    case 0:
        return {flavor, g, 0, g - 1, std::nullopt};
    case 1:
        return {flavor, g, 1, g, pow2(ug) * factorial(ug)};
    case 2:
        return {flavor, g, 2, g + 1, pow2(ug) * factorial(ug + 1)};
    default:
        throw ParameterError("make_space: twisted torsor supported for k in {0,1,2}, got k = "
                             + std::to_string(k));
    }
}

/// coeff * generator^exponent with coeff kept reduced; zero is always
/// stored with exponent 0.
class ThetaClass {
public:
    ThetaClass(Rational coeff, int exponent, Generator gen)
        : coeff_(std::move(coeff))
        , exponent_(exponent)
        , gen_(gen)
    {
        if (exponent < 0)
            throw ParameterError("ThetaClass: negative exponent");
        if (coeff_ == 0)
            exponent_ = 0;
    }

    static ThetaClass unit(Generator gen) { return {Rational(1), 0, gen}; }

    const Rational& coeff() const { return coeff_; }
    int exponent() const { return exponent_; }
    Generator generator() const { return gen_; }
    bool is_zero() const { return coeff_ == 0; }

    friend bool operator==(const ThetaClass&, const ThetaClass&) = default;

private:
    Rational coeff_;
    int exponent_;
    Generator gen_;
};

inline ThetaClass multiply(const ThetaClass& a, const ThetaClass& b)
{
    if (a.generator() != b.generator())
        throw GeneratorMismatch("multiply: classes live on different generators");
    return {a.coeff() * b.coeff(), a.exponent() + b.exponent(), a.generator()};
}

inline ThetaClass operator*(const ThetaClass& a, const ThetaClass& b)
{
    return multiply(a, b);
}

inline Rational degree(const ThetaClass& c, const PrymSpace& space)
{
    if (c.generator() != space.generator())
        throw GeneratorMismatch(std::string("degree: class in ") + std::string(to_string(c.generator()))
                                + " on a space generated by "
                                + std::string(to_string(space.generator())));
    if (!space.theta_top)
        throw UnsupportedError("degree: top self-intersection unavailable on the k = 0 twisted torsor");
    if (c.is_zero())
        return 0;
    if (c.exponent() != space.dim)
        throw DimensionMismatch("degree: class of exponent " + std::to_string(c.exponent())
                                + " on a space of dimension " + std::to_string(space.dim));
    return c.coeff() * Rational(*space.theta_top);
}

/// On P+/P- the restricted theta class is twice the principal class xi.
inline ThetaClass substitute_theta_prime_as_2xi(const ThetaClass& c)
{
    if (c.generator() != Generator::theta_prime)
        throw GeneratorMismatch("substitute_theta_prime_as_2xi: expects a theta' class");
    return {c.coeff() * Rational(pow2(static_cast<unsigned>(c.exponent()))), c.exponent(),
            Generator::xi};
}

inline std::string to_string(const ThetaClass& c)
{
    std::string symbol = c.generator() == Generator::theta_prime ? "theta'" : "xi";
    return to_string(c.coeff()) + " * " + symbol + "^" + std::to_string(c.exponent());
}

} // namespace pbn
