#pragma once

// OutputRecord and its canonical serializations. Object keys are sorted
// (nlohmann's default std::map storage), rationals are "p/q" strings and
// integers are bare JSON numbers.

#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bn_numerics.hpp"
#include "errors.hpp"
#include "lagrangian_engine.hpp"
#include "rational.hpp"
#include "theta_ring.hpp"

namespace pbn {

using json = nlohmann::json;

enum class OutputFormat { json, csv, md };

inline OutputFormat parse_format(std::string_view name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "md")
        return OutputFormat::md;
    throw ParameterError("unknown output format '" + std::string(name) + "'");
}

inline json to_json(const Rational& q)
{
    return to_string(q);
}

/// Bare number when it fits in 64 bits, decimal string otherwise.
inline json to_json(const Integer& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

inline json to_json(const ThetaClass& c)
{
    return {{"coeff", to_string(c.coeff())}, {"exponent", c.exponent()},
            {"generator", std::string(to_string(c.generator()))}};
}

inline json to_json(const VanishingSequence& a)
{
    return json(std::vector<int>(a.begin(), a.end()));
}

inline json to_json(const DimReport& rep)
{
    return {{"value", rep.value}, {"exactness", std::string(to_string(rep.exactness))},
            {"emptiness", std::string(to_string(rep.emptiness))}, {"source", rep.source}};
}

inline json to_json(const PrymSpace& s)
{
    json out = {{"flavor", std::string(to_string(s.flavor))}, {"g", s.g}, {"k", s.k}, {"dim", s.dim}};
    out["theta_top"] = s.theta_top ? to_json(*s.theta_top) : json(nullptr);
    return out;
}

struct OutputRecord {
    std::string command;
    json params = json::object();
    json result = json::object();
    std::vector<std::string> citations;
    int exit_code = 0;

    json to_json() const
    {
        return {{"command", command}, {"params", params}, {"result", result}, {"citations", citations}};
    }
};

namespace detail {

inline std::string csv_cell(const json& v)
{
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (!v.is_null())
        text = v.dump();
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

inline std::string md_cell(const json& v)
{
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out;
    for (char ch : text) {
        if (ch == '|')
            out += '\\';
        out += ch;
    }
    return out;
}

} // namespace detail

/// json: pretty-printed record. csv: header of flattened JSON-pointer keys
/// in sorted order plus one row. md: key/value table over the same keys.
inline std::string serialize(const OutputRecord& rec, OutputFormat format)
{
    json j = rec.to_json();
    if (format == OutputFormat::json)
        return j.dump(2) + "\n";

    json flat = j.flatten();
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        bool first = true;
        for (auto it = flat.begin(); it != flat.end(); ++it) {
            out << (first ? "" : ",") << detail::csv_cell(it.key());
            first = false;
        }
        out << "\n";
        first = true;
        for (auto it = flat.begin(); it != flat.end(); ++it) {
            out << (first ? "" : ",") << detail::csv_cell(it.value());
            first = false;
        }
        out << "\n";
        return out.str();
    }

    out << "| key | value |\n|---|---|\n";
    for (auto it = flat.begin(); it != flat.end(); ++it)
        out << "| " << detail::md_cell(it.key()) << " | " << detail::md_cell(it.value()) << " |\n";
    return out.str();
}

} // namespace pbn
