#include <set>

#include <gtest/gtest.h>

#include <qsteinberg/an_chars.hpp>

#include "oracles.hpp"

using namespace qsteinberg;

namespace {

AnCharLabel label(std::initializer_list<unsigned> parts, AnVariant v) { return {Partition(parts), v}; }

} // namespace

TEST(AnClasses, ParseAndValidate)
{
    auto c = parse_an_class("5+");
    EXPECT_EQ(c.alpha, Partition({5}));
    EXPECT_EQ(c.tag, SplitTag::plus);
    EXPECT_EQ(parse_an_class("5−").tag, SplitTag::minus);
    EXPECT_EQ(parse_an_class("2,2,1").tag, SplitTag::plain);
    EXPECT_THROW(parse_an_class("5"), DomainError);
    EXPECT_THROW(parse_an_class("2,2,1+"), DomainError);
    EXPECT_THROW(parse_an_class("2,1,1,1"), DomainError);
    EXPECT_EQ(c.str(), "5+");
}

TEST(AnClasses, SizesMatchConjugationOrbits)
{
    for (int n = 2; n <= 7; ++n) {
        std::map<std::vector<unsigned>, std::multiset<long long>> ours;
        BigInt total = 0;
        for (const auto& cls : an_classes(static_cast<unsigned>(n))) {
            ours[cls.alpha.parts()].insert(static_cast<long long>(an_class_size(cls)));
            total += an_class_size(cls);
        }
        EXPECT_EQ(ours, oracle::an_class_sizes(n)) << "n=" << n;
        EXPECT_EQ(total, factorial(static_cast<unsigned>(n)) / 2);
    }
}

TEST(AnLabels, CountMatchesClasses)
{
    for (unsigned n = 2; n <= 14; ++n)
        EXPECT_EQ(an_labels(n).size(), an_classes(n).size()) << "n=" << n;
    EXPECT_THROW(AnCharLabel(Partition({2, 2}), AnVariant::down), DomainError);
    EXPECT_THROW(AnCharLabel(Partition({3, 1}), AnVariant::plus), DomainError);
    EXPECT_EQ(label({2, 1, 1}, AnVariant::down).canonical(), label({3, 1}, AnVariant::down));
    EXPECT_EQ(label({3, 1, 1}, AnVariant::minus).str(), "3,1,1:-");
}

TEST(AnValue, GoldenSplitClasses)
{
    auto plus = label({3, 1, 1}, AnVariant::plus);
    auto minus = label({3, 1, 1}, AnVariant::minus);
    auto c5p = parse_an_class("5+");
    auto c5m = parse_an_class("5-");
    EXPECT_EQ(an_value(plus, c5p).str(), "(1 + √5)/2");
    EXPECT_EQ(an_value(plus, c5m).str(), "(1 - √5)/2");
    EXPECT_EQ(an_value(minus, c5p).str(), "(1 - √5)/2");
    EXPECT_EQ(an_value(minus, c5m).str(), "(1 + √5)/2");
    EXPECT_EQ(an_value(plus, parse_an_class("1,1,1,1,1")), AlgValue(3));
    EXPECT_EQ(an_value(plus, parse_an_class("3,1,1")), AlgValue(0));
    EXPECT_EQ(an_value(plus, parse_an_class("2,2,1")), AlgValue(-1));

    // A_3: the two non-trivial linear characters take primitive cube roots of unity
    auto w = an_value(label({2, 1}, AnVariant::plus), parse_an_class("3+"));
    EXPECT_EQ(w.str(), "(-1 + i√3)/2");
    EXPECT_EQ(w * w * w, AlgValue(1));
}

TEST(AnValue, Validation)
{
    EXPECT_THROW(an_value(label({3, 1, 1}, AnVariant::plus), {Partition({2, 1, 1, 1}), SplitTag::plain}), DomainError);
    EXPECT_THROW(an_value(label({3, 1}, AnVariant::down), {Partition({3})}), DomainError);
    EXPECT_THROW(an_value(AnCharLabel(Partition({1}), AnVariant::down), {Partition({1})}), DomainError);
    EXPECT_THROW(an_value(label({3, 1, 1}, AnVariant::plus), {Partition({5}), SplitTag::plain}), std::logic_error);
}

TEST(AnValue, ConstituentsSumToRestriction)
{
    for (unsigned n = 2; n <= 12; ++n)
        for (const auto& lab : an_labels(n)) {
            if (lab.variant != AnVariant::plus)
                continue;
            AnCharLabel other(lab.lambda, AnVariant::minus);
            for (const auto& cls : an_classes(n))
                EXPECT_EQ(an_value(lab, cls) + an_value(other, cls), AlgValue(mn_value(lab.lambda, cls.alpha)))
                    << lab.str() << " at " << cls.str();
        }
}

TEST(AnValue, NonzeroPredicateAgrees)
{
    for (unsigned n = 2; n <= 11; ++n)
        for (const auto& lab : an_labels(n))
            for (const auto& cls : an_classes(n))
                EXPECT_EQ(an_nonzero(lab, cls), !an_value(lab, cls).is_zero()) << lab.str() << " at " << cls.str();
}

TEST(AnValue, Orthonormality)
{
    for (unsigned n = 2; n <= 8; ++n) {
        const auto labels = an_labels(n);
        const auto classes = an_classes(n);
        const BigInt order = factorial(n) / 2;
        std::vector<std::vector<AlgValue>> table;
        for (const auto& lab : labels) {
            table.emplace_back();
            for (const auto& cls : classes)
                table.back().push_back(an_value(lab, cls));
        }
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i; j < labels.size(); ++j) {
                oracle::ExactSum sum;
                for (std::size_t c = 0; c < classes.size(); ++c)
                    sum.add((table[i][c] * table[j][c].conj()).scaled(Rational(an_class_size(classes[c]), order)));
                EXPECT_TRUE(sum.is_rational()) << labels[i].str() << " vs " << labels[j].str();
                EXPECT_EQ(sum.rational_part(), i == j ? 1 : 0)
                    << "n=" << n << ": " << labels[i].str() << " vs " << labels[j].str();
            }
        // degrees: value on the identity class
        for (std::size_t i = 0; i < labels.size(); ++i)
            EXPECT_EQ(table[i].back(), AlgValue(an_dimension(labels[i])));
    }
}
