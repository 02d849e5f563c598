#ifndef QSTEINBERG_QUERY_HPP
#define QSTEINBERG_QUERY_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algebraic.hpp"
#include "an_chars.hpp"
#include "classify.hpp"
#include "sn_chars.hpp"
#include "spin_chars.hpp"

namespace qsteinberg {

/// Character label of any of the four families.
using AnyLabel = std::variant<Partition, AnCharLabel, SpinLabel>;

inline std::string label_str(const AnyLabel& l)
{
    return std::visit([](const auto& x) { return x.str(); }, l);
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline std::string normalize_variant(std::string_view v)
{
    v = trim(v);
    if (v == "−")
        return "-";
    if (v == "↓")
        return "down";
    return std::string(v);
}

} // namespace detail

/// Parses a label such as "5,2,1", "3,1,1:+", "7,2:down" or "4:self". The
/// variant may also be given separately; an omitted variant is filled in
/// when only one choice exists.
inline AnyLabel parse_label(Group g, std::string_view text, std::string_view variant_text = {})
{
    text = detail::trim(text);
    std::string variant = detail::normalize_variant(variant_text);
    if (auto colon = text.rfind(':'); colon != std::string_view::npos) {
        const std::string inline_variant = detail::normalize_variant(text.substr(colon + 1));
        if (!variant.empty() && variant != inline_variant)
            throw DomainError("conflicting variants '" + inline_variant + "' and '" + variant + "'");
        variant = inline_variant;
        text = text.substr(0, colon);
    }
    const Partition lambda = Partition::parse(text);
    if (lambda.empty())
        throw DomainError("empty partition");

    switch (g) {
    case Group::sn:
        if (!variant.empty())
            throw DomainError("S_n labels take no variant");
        return lambda;
    case Group::an: {
        const bool self = is_self_conjugate(lambda);
        if (variant.empty())
            variant = self ? "?" : "down";
        if (variant == "+")
            return AnCharLabel(lambda, AnVariant::plus);
        if (variant == "-")
            return AnCharLabel(lambda, AnVariant::minus);
        if (variant == "down")
            return AnCharLabel(lambda, AnVariant::down);
        throw DomainError(self ? "A_n label " + lambda.str() + " is self-conjugate; give variant + or -"
                               : "unknown A_n variant '" + variant + "'");
    }
    case Group::sn_tilde_spin:
    case Group::an_tilde_spin: {
        if (!is_strict(lambda))
            throw DomainError("spin label " + lambda.str() + " must have distinct parts");
        const StrictPartition s(lambda);
        const CoverGroup cover = g == Group::sn_tilde_spin ? CoverGroup::sn_tilde : CoverGroup::an_tilde;
        if (variant.empty()) {
            if (cover == CoverGroup::sn_tilde && s.is_plus())
                variant = "self";
            else if (cover == CoverGroup::an_tilde && !s.is_plus())
                variant = "down";
            else
                throw DomainError("spin label " + lambda.str() + " needs variant + or -");
        }
        SpinVariant v;
        if (variant == "self")
            v = SpinVariant::self;
        else if (variant == "+")
            v = SpinVariant::plus;
        else if (variant == "-")
            v = SpinVariant::minus;
        else if (variant == "down")
            v = SpinVariant::down;
        else
            throw DomainError("unknown spin variant '" + variant + "'");
        return SpinLabel(s, v, cover);
    }
    }
    throw std::logic_error("unknown group");
}

inline unsigned label_size(const AnyLabel& l)
{
    if (auto p = std::get_if<Partition>(&l))
        return p->size();
    if (auto a = std::get_if<AnCharLabel>(&l))
        return a->lambda.size();
    return std::get<SpinLabel>(l).lambda.size();
}

/// Parses a class of the cover of A_n: an even cycle type, tagged with + or -
/// exactly when it has distinct odd parts.
inline AnSpinClass parse_an_spin_class(std::string_view text)
{
    AnSpinClass c;
    text = strip_sign_suffix(detail::trim(text), c.tag);
    c.alpha = Partition::parse(text);
    if (sign(c.alpha) != 1)
        throw DomainError("class " + c.alpha.str() + " is odd and does not lie in A_n");
    const bool tagged = c.alpha.size() >= 2 && is_distinct_odd(c.alpha);
    if (tagged && c.tag == SplitTag::plain)
        throw DomainError("class " + c.alpha.str() + " splits; append + or -");
    if (!tagged && c.tag != SplitTag::plain)
        throw DomainError("class " + c.alpha.str() + " does not split");
    return c;
}

/// Exact value of a label on a class given as text.
inline AlgValue evaluate(Group g, const AnyLabel& label, std::string_view class_text)
{
    class_text = detail::trim(class_text);
    const unsigned n = label_size(label);
    auto check_size = [&](const CycleType& alpha) {
        if (alpha.size() != n)
            throw DomainError("class " + alpha.str() + " is not a partition of " + std::to_string(n));
    };
    switch (g) {
    case Group::sn: {
        const CycleType alpha = Partition::parse(class_text);
        check_size(alpha);
        return AlgValue(mn_value(std::get<Partition>(label), alpha));
    }
    case Group::an: {
        const AnClass cls = parse_an_class(class_text);
        check_size(cls.alpha);
        return an_value(std::get<AnCharLabel>(label), cls);
    }
    case Group::sn_tilde_spin: {
        const CycleType alpha = Partition::parse(class_text);
        check_size(alpha);
        return schur_value(std::get<SpinLabel>(label), alpha);
    }
    case Group::an_tilde_spin: {
        const AnSpinClass cls = parse_an_spin_class(class_text);
        check_size(cls.alpha);
        return an_spin_label_value(std::get<SpinLabel>(label), cls);
    }
    }
    throw std::logic_error("unknown group");
}

/// Character table of any family with rendered row and column names.
/// Spin tables list only the classes on which spin characters can be
/// nonzero, at distinguished preimages.
struct LabeledTable {
    Group group = Group::sn;
    unsigned n = 0;
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    std::vector<std::vector<AlgValue>> values;
};

inline LabeledTable build_table(Group g, unsigned n, unsigned bound = kDefaultBound)
{
    if (n < 1)
        throw DomainError("n must be positive");
    if ((g == Group::an || g == Group::an_tilde_spin) && n < 2)
        throw DomainError("tables for the alternating families need n >= 2");
    if (n > bound)
        throw ResourceBoundExceeded("n = " + std::to_string(n) + " exceeds the table bound " + std::to_string(bound));
    LabeledTable t;
    t.group = g;
    t.n = n;
    switch (g) {
    case Group::sn: {
        const CharTable ct = character_table(n, default_mn_engine(), bound);
        for (const auto& c : ct.columns)
            t.columns.push_back(c.str());
        for (std::size_t i = 0; i < ct.rows.size(); ++i) {
            t.rows.push_back(ct.rows[i].str());
            t.values.emplace_back(ct.values[i].begin(), ct.values[i].end());
        }
        break;
    }
    case Group::an: {
        const auto classes = an_classes(n);
        for (const auto& c : classes)
            t.columns.push_back(c.str());
        for (const auto& l : an_labels(n)) {
            t.rows.push_back(l.str());
            t.values.emplace_back();
            for (const auto& c : classes)
                t.values.back().push_back(an_value(l, c));
        }
        break;
    }
    case Group::sn_tilde_spin: {
        const auto classes = spin_classes(n);
        for (const auto& c : classes)
            t.columns.push_back(c.str());
        for (const auto& l : spin_labels(n)) {
            t.rows.push_back(l.str());
            t.values.emplace_back();
            for (const auto& c : classes)
                t.values.back().push_back(schur_value(l, c));
        }
        break;
    }
    case Group::an_tilde_spin: {
        const auto classes = an_spin_classes(n);
        for (const auto& c : classes)
            t.columns.push_back(c.str());
        for (const auto& l : an_spin_labels(n)) {
            t.rows.push_back(l.str());
            t.values.emplace_back();
            for (const auto& c : classes)
                t.values.back().push_back(an_spin_label_value(l, c));
        }
        break;
    }
    }
    return t;
}

} // namespace qsteinberg

#endif // QSTEINBERG_QUERY_HPP
