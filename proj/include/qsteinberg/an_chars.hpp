#ifndef QSTEINBERG_AN_CHARS_HPP
#define QSTEINBERG_AN_CHARS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "algebraic.hpp"
#include "partitions.hpp"
#include "sn_chars.hpp"

namespace qsteinberg {

enum class SplitTag { plain, plus, minus };

/// Conjugacy class of A_n: an even cycle type, tagged when the S_n class
/// splits. Which half is called "plus" is a fixed but arbitrary choice.
struct AnClass {
    CycleType alpha;
    SplitTag tag = SplitTag::plain;

    std::string str() const
    {
        switch (tag) {
        case SplitTag::plus: return alpha.str() + "+";
        case SplitTag::minus: return alpha.str() + "-";
        case SplitTag::plain: break;
        }
        return alpha.str();
    }

    friend bool operator==(const AnClass&, const AnClass&) = default;
};

inline std::string_view strip_sign_suffix(std::string_view text, SplitTag& tag)
{
    tag = SplitTag::plain;
    constexpr std::string_view unicode_minus = "−";
    if (text.ends_with('+')) {
        tag = SplitTag::plus;
        text.remove_suffix(1);
    } else if (text.ends_with('-')) {
        tag = SplitTag::minus;
        text.remove_suffix(1);
    } else if (text.ends_with(unicode_minus)) {
        tag = SplitTag::minus;
        text.remove_suffix(unicode_minus.size());
    }
    return text;
}

/// Parses "5+", "5-" or "2,2,1" and checks the tag against the splitting rule.
inline AnClass parse_an_class(std::string_view text)
{
    AnClass c;
    text = strip_sign_suffix(text, c.tag);
    c.alpha = Partition::parse(text);
    if (sign(c.alpha) != 1)
        throw DomainError("class " + c.alpha.str() + " is odd and does not lie in A_n");
    const bool splits = class_info(c.alpha, c.alpha.size()).splits_in_an;
    if (splits && c.tag == SplitTag::plain)
        throw DomainError("class " + c.alpha.str() + " splits in A_n; append + or -");
    if (!splits && c.tag != SplitTag::plain)
        throw DomainError("class " + c.alpha.str() + " does not split in A_n");
    return c;
}

inline BigInt an_class_size(const AnClass& c)
{
    BigInt size = class_info(c.alpha, c.alpha.size()).class_size;
    return c.tag == SplitTag::plain ? size : size / 2;
}

/// Classes of A_n in reverse lexicographic order of cycle type, split
/// classes expanded as (plus, minus).
inline std::vector<AnClass> an_classes(unsigned n)
{
    if (n < 1)
        throw DomainError("an_classes: n must be positive");
    std::vector<AnClass> out;
    for (auto& alpha : partitions_of(n)) {
        if (sign(alpha) != 1)
            continue;
        if (class_info(alpha, n).splits_in_an) {
            out.push_back({alpha, SplitTag::plus});
            out.push_back({alpha, SplitTag::minus});
        } else {
            out.push_back({alpha, SplitTag::plain});
        }
    }
    return out;
}

enum class AnVariant { down, plus, minus };

/// Irreducible character of A_n: chi_lambda restricted (down) when lambda is
/// not self-conjugate, or one of the two constituents when it is.
struct AnCharLabel {
    Partition lambda;
    AnVariant variant = AnVariant::down;

    AnCharLabel() = default;
    AnCharLabel(Partition l, AnVariant v)
        : lambda(std::move(l))
        , variant(v)
    {
        const bool self = is_self_conjugate(lambda);
        if (self && variant == AnVariant::down)
            throw DomainError("A_n label " + lambda.str() + " is self-conjugate; variant must be + or -");
        if (!self && variant != AnVariant::down)
            throw DomainError("A_n label " + lambda.str() + " is not self-conjugate; variant must be down");
    }

    /// Down-labels are reported under the larger of {lambda, lambda'}.
    AnCharLabel canonical() const
    {
        if (variant != AnVariant::down)
            return *this;
        return {canonical_of_pair(lambda), AnVariant::down};
    }

    std::string str() const
    {
        switch (variant) {
        case AnVariant::plus: return lambda.str() + ":+";
        case AnVariant::minus: return lambda.str() + ":-";
        case AnVariant::down: break;
        }
        return lambda.str() + ":down";
    }

    friend bool operator==(const AnCharLabel& a, const AnCharLabel& b)
    {
        return a.lambda == b.lambda && a.variant == b.variant;
    }
};

/// Canonical list of A_n irreducibles: one label per conjugate pair, two per
/// self-conjugate partition.
inline std::vector<AnCharLabel> an_labels(unsigned n)
{
    std::vector<AnCharLabel> out;
    for (auto& lambda : partitions_of(n)) {
        const Partition c = conjugate(lambda);
        if (c == lambda) {
            out.emplace_back(lambda, AnVariant::plus);
            out.emplace_back(lambda, AnVariant::minus);
        } else if (lambda > c) {
            out.emplace_back(lambda, AnVariant::down);
        }
    }
    return out;
}

inline BigInt an_dimension(const AnCharLabel& label)
{
    BigInt d = dimension(label.lambda);
    return label.variant == AnVariant::down ? d : d / 2;
}

namespace detail {

inline void check_an_pair(const AnCharLabel& label, const AnClass& cls)
{
    if (label.lambda.size() != cls.alpha.size())
        throw DomainError("an_value: label " + label.str() + " and class " + cls.str() + " have different sizes");
    if (label.lambda.size() < 2)
        throw DomainError("an_value: A_n characters need n >= 2");
    if (sign(cls.alpha) != 1)
        throw DomainError("an_value: class " + cls.alpha.str() + " is odd");
}

inline bool folds_onto(const Partition& lambda, const CycleType& alpha)
{
    return is_distinct_odd(alpha) && fold(alpha) == lambda;
}

} // namespace detail

/// Exact value of an A_n irreducible on an A_n class.
///
/// Off the folded class the value is chi_lambda(alpha), halved for the two
/// constituents of a self-conjugate lambda. On the class alpha with
/// fold(alpha) = lambda the constituents take (eps +- sqrt(eps * z_alpha)) / 2,
/// where z_alpha = n!/|C_alpha| and eps = epsilon_mu(alpha); the two halves
/// of the split class exchange the signs.
inline AlgValue an_value(const AnCharLabel& label, const AnClass& cls, MnEngine& engine = default_mn_engine())
{
    detail::check_an_pair(label, cls);
    if (label.variant == AnVariant::down)
        return AlgValue(engine.value(label.lambda, cls.alpha));

    if (detail::folds_onto(label.lambda, cls.alpha)) {
        if (cls.tag == SplitTag::plain)
            throw std::logic_error("an_value: class " + cls.alpha.str() + " folds onto "
                                   + label.lambda.str() + " but carries no split tag");
        const int eps = epsilon_mu(cls.alpha);
        const BigInt z = centralizer_order(cls.alpha);
        const bool same = (label.variant == AnVariant::plus) == (cls.tag == SplitTag::plus);
        return AlgValue::make(Rational(eps, 2), Rational(same ? 1 : -1, 2), eps < 0 ? 1 : 0, z);
    }
    return AlgValue(engine.value(label.lambda, cls.alpha)).scaled(Rational(1, 2));
}

/// Whether an_value is nonzero, without building the algebraic value. On the
/// folded class eps +- sqrt(eps * z) = 0 forces z = 1, impossible for n >= 2.
inline bool an_nonzero(const AnCharLabel& label, const AnClass& cls, MnEngine& engine = default_mn_engine())
{
    detail::check_an_pair(label, cls);
    if (label.variant != AnVariant::down && detail::folds_onto(label.lambda, cls.alpha))
        return true;
    return engine.value(label.lambda, cls.alpha) != 0;
}

} // namespace qsteinberg

#endif // QSTEINBERG_AN_CHARS_HPP
