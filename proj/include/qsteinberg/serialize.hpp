#ifndef QSTEINBERG_SERIALIZE_HPP
#define QSTEINBERG_SERIALIZE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebraic.hpp"
#include "classify.hpp"
#include "query.hpp"

namespace qsteinberg {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json bigint_to_json(const BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

inline BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
            throw DomainError("malformed integer '" + s + "'");
        return BigInt(s);
    }
    throw DomainError("expected an integer, got " + j.dump());
}

inline Rational rational_from_string(const std::string& s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(bigint_from_json(json(s)));
    const BigInt den = bigint_from_json(json(s.substr(slash + 1)));
    if (den == 0)
        throw DomainError("zero denominator in '" + s + "'");
    return Rational(bigint_from_json(json(s.substr(0, slash))), den);
}

/// Integral values are plain integers; anything else is an object with
/// the exact fields of a + b i^e sqrt(m) and the rendered text.
inline json value_to_json(const AlgValue& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (v.is_rational() && denominator(v.a()) == 1)
        return bigint_to_json(numerator(v.a()));
    json j;
    j["a"] = AlgValue::rational_str(v.a());
    j["b"] = AlgValue::rational_str(v.b());
    j["e"] = v.e();
    j["m"] = bigint_to_json(v.m());
    j["text"] = v.str();
    return j;
}

inline AlgValue value_from_json(const json& j)
{
    if (!j.is_object())
        return AlgValue(bigint_from_json(j));
    for (const char* key : {"a", "b", "e", "m"})
        if (!j.contains(key))
            throw DomainError(std::string("value object lacks field '") + key + "'");
    return AlgValue::make(rational_from_string(j.at("a").get<std::string>()),
                          rational_from_string(j.at("b").get<std::string>()), j.at("e").get<int>(),
                          bigint_from_json(j.at("m")));
}

inline json table_to_json(const LabeledTable& t)
{
    json j;
    j["group"] = std::string(group_name(t.group));
    j["n"] = t.n;
    j["columns"] = t.columns;
    json rows = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        json values = json::array();
        for (const auto& v : t.values[i])
            values.push_back(value_to_json(v));
        rows.push_back({{"label", t.rows[i]}, {"values", std::move(values)}});
    }
    j["rows"] = std::move(rows);
    return j;
}

inline LabeledTable table_from_json(const json& j)
{
    LabeledTable t;
    t.group = parse_group(j.at("group").get<std::string>());
    t.n = j.at("n").get<unsigned>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
        t.rows.push_back(row.at("label").get<std::string>());
        t.values.emplace_back();
        for (const auto& v : row.at("values"))
            t.values.back().push_back(value_from_json(v));
        if (t.values.back().size() != t.columns.size())
            throw DomainError("row " + t.rows.back() + " has the wrong number of values");
    }
    return t;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string table_to_csv(const LabeledTable& t)
{
    std::ostringstream os;
    os << "label";
    for (const auto& c : t.columns)
        os << ',' << csv_field(c);
    os << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << csv_field(t.rows[i]);
        for (const auto& v : t.values[i])
            os << ',' << csv_field(v.str());
        os << '\n';
    }
    return os.str();
}

namespace detail {

/// Display width in code points, so that "√" counts once.
inline std::size_t text_width(const std::string& s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

inline std::string pad(const std::string& s, std::size_t width)
{
    const std::size_t w = text_width(s);
    return w >= width ? s : std::string(width - w, ' ') + s;
}

} // namespace detail

inline std::string table_to_text(const LabeledTable& t)
{
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    for (const auto& c : t.columns)
        grid.back().push_back(c);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        grid.push_back({t.rows[i]});
        for (const auto& v : t.values[i])
            grid.back().push_back(v.str());
    }
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], detail::text_width(row[c]));
    std::ostringstream os;
    os << group_name(t.group) << " n=" << t.n << '\n';
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "  " + detail::pad(row[c], width[c])
                     : row[c] + std::string(width[c] - detail::text_width(row[c]), ' '));
        os << '\n';
    }
    return os.str();
}

inline json report_to_json(const ClassificationReport& r)
{
    json j;
    j["group"] = std::string(group_name(r.group));
    j["n"] = r.n;
    j["p"] = r.p;
    json hits = json::array();
    for (const auto& h : r.hits)
        hits.push_back({{"label", h.label}, {"dim", bigint_to_json(h.dim)}, {"weak", h.weak}});
    j["hits"] = std::move(hits);
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"label", w.label}, {"class", w.cls}});
    j["witnesses"] = std::move(witnesses);
    return j;
}

inline ClassificationReport report_from_json(const json& j)
{
    ClassificationReport r;
    r.group = parse_group(j.at("group").get<std::string>());
    r.n = j.at("n").get<unsigned>();
    r.p = j.at("p").get<unsigned>();
    for (const auto& h : j.at("hits"))
        r.hits.push_back({h.at("label").get<std::string>(), bigint_from_json(h.at("dim")), h.at("weak").get<bool>()});
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("label").get<std::string>(), w.at("class").get<std::string>()});
    return r;
}

inline std::string reports_csv_header() { return "group,n,p,kind,label,dim,weak,class\n"; }

inline std::string report_to_csv_rows(const ClassificationReport& r)
{
    std::ostringstream os;
    const std::string cell =
        std::string(group_name(r.group)) + ',' + std::to_string(r.n) + ',' + std::to_string(r.p) + ',';
    for (const auto& h : r.hits)
        os << cell << "hit," << csv_field(h.label) << ',' << h.dim.str() << ',' << (h.weak ? "true" : "false")
           << ",\n";
    for (const auto& w : r.witnesses)
        os << cell << "witness," << csv_field(w.label) << ",,," << csv_field(w.cls) << '\n';
    return os.str();
}

inline std::string report_to_text(const ClassificationReport& r)
{
    std::ostringstream os;
    os << group_name(r.group) << " n=" << r.n << " p=" << r.p << ": " << r.hits.size() << " quasi "
       << r.p << "-Steinberg, " << r.witnesses.size() << " with a vanishing " << r.p << "-regular class\n";
    std::size_t w = 0;
    for (const auto& h : r.hits)
        w = std::max(w, h.label.size());
    for (const auto& h : r.hits)
        os << "  " << h.label << std::string(w - h.label.size(), ' ') << "  dim " << h.dim.str()
           << (h.weak ? "  weak" : "") << '\n';
    return os.str();
}

inline json verify_to_json(unsigned max_n, const VerifyResult& v)
{
    json j;
    j["max_n"] = max_n;
    j["pass"] = v.pass;
    j["diffs"] = v.diffs;
    json reports = json::array();
    for (const auto& r : v.reports)
        reports.push_back(report_to_json(r));
    j["reports"] = std::move(reports);
    return j;
}

} // namespace qsteinberg

#endif // QSTEINBERG_SERIALIZE_HPP
