#ifndef QSTEINBERG_SPIN_CHARS_HPP
#define QSTEINBERG_SPIN_CHARS_HPP

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algebraic.hpp"
#include "an_chars.hpp"
#include "memo_cache.hpp"
#include "partitions.hpp"

namespace qsteinberg {

/// Partition with strictly decreasing parts; labels spin characters.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(Partition p)
        : p_(std::move(p))
    {
        if (!is_strict(p_))
            throw DomainError("partition " + p_.str() + " does not have distinct parts");
    }
    StrictPartition(std::initializer_list<unsigned> parts)
        : StrictPartition(Partition(parts))
    {
    }

    const Partition& partition() const noexcept { return p_; }
    const std::vector<unsigned>& parts() const noexcept { return p_.parts(); }
    unsigned size() const noexcept { return p_.size(); }
    std::size_t length() const noexcept { return p_.length(); }
    unsigned operator[](std::size_t i) const { return p_[i]; }
    bool empty() const noexcept { return p_.empty(); }
    std::string str() const { return p_.str(); }

    /// Member of D+(n): an even number of even parts. The empty partition is in D+.
    bool is_plus() const { return even_part_count(p_) % 2 == 0; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.p_ <=> b.p_; }

private:
    Partition p_;
};

/// 0 on D+(n), 1 on D-(n).
inline int spin_parity(const StrictPartition& p)
{
    return p.is_plus() ? 0 : 1;
}

/// Shifted diagram of lambda glued to its reflection: the partition with
/// Frobenius coordinates (lambda_1, ..., lambda_l | lambda_1 - 1, ..., lambda_l - 1).
/// Row i of the shifted diagram occupies columns i+1 .. i+lambda_i.
inline Partition shift_symmetric_diagram(const StrictPartition& lambda)
{
    std::vector<unsigned> arms(lambda.parts());
    std::vector<unsigned> legs;
    for (unsigned x : arms)
        legs.push_back(x - 1);
    return from_frobenius(arms, legs);
}

namespace detail {

struct ShiftedHook {
    std::size_t row = 0;
    unsigned length = 0;
    unsigned leg = 0;
};

/// Hooks of the shift-symmetric diagram at the cells of the shifted diagram.
inline std::vector<ShiftedHook> shifted_hooks(const StrictPartition& lambda)
{
    const Partition ss = shift_symmetric_diagram(lambda);
    const Partition ssc = conjugate(ss);
    std::vector<ShiftedHook> out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (unsigned j = static_cast<unsigned>(i) + 1; j <= i + lambda[i]; ++j) {
            const unsigned arm = ss[i] - j - 1;
            const unsigned leg = ssc[j] - static_cast<unsigned>(i) - 1;
            out.push_back({i, arm + leg + 1, leg});
        }
    }
    return out;
}

} // namespace detail

/// Bar lengths, one list per row, read off the shift-symmetric diagram.
inline std::vector<std::vector<unsigned>> bar_lengths(const StrictPartition& lambda)
{
    std::vector<std::vector<unsigned>> rows(lambda.length());
    for (const auto& h : detail::shifted_hooks(lambda))
        rows[h.row].push_back(h.length);
    return rows;
}

inline BigInt bar_product(const StrictPartition& lambda)
{
    BigInt b = 1;
    for (const auto& row : bar_lengths(lambda))
        for (unsigned x : row)
            b *= x;
    return b;
}

struct BarRemoval {
    StrictPartition result;
    unsigned leg = 0;      // leg length of the matching hook in the shift-symmetric diagram
    unsigned doubling = 0; // 1 exactly when lambda is in D+ and the result in D-
    unsigned length = 0;
};

/// Every l-bar of lambda, by row. An l-bar either shortens a part by l
/// (deleting it when it reaches zero) or deletes two parts summing to l.
inline std::vector<BarRemoval> bar_removals(const StrictPartition& lambda, unsigned l)
{
    if (l == 0)
        throw DomainError("bar_removals: length must be positive");
    std::vector<BarRemoval> out;
    for (const auto& h : detail::shifted_hooks(lambda)) {
        if (h.length != l)
            continue;
        std::vector<unsigned> parts = lambda.parts();
        const unsigned top = parts[h.row];
        if (l > top) {
            const unsigned partner = l - top;
            auto it = std::find(parts.begin() + static_cast<std::ptrdiff_t>(h.row) + 1, parts.end(), partner);
            if (it == parts.end())
                throw std::logic_error("bar_removals: no partner part for a long bar");
            parts.erase(it);
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(h.row));
        } else {
            parts[h.row] = top - l;
        }
        StrictPartition result(Partition::from_unsorted(std::move(parts)));
        const unsigned doubling = spin_parity(result) - spin_parity(lambda) == 1 ? 1u : 0u;
        out.push_back({std::move(result), h.leg, doubling, l});
    }
    return out;
}

/// Degree of the spin character: 2^floor((n - l(lambda))/2) n! / B_lambda.
inline BigInt spin_dimension(const StrictPartition& lambda)
{
    const unsigned n = lambda.size();
    const unsigned shift = static_cast<unsigned>((n - lambda.length()) / 2);
    return ipow(2, shift) * factorial(n) / bar_product(lambda);
}

/// Memoized Morris recursion for spin values on classes with odd parts,
/// stripping the largest part of alpha first.
class MorrisEngine {
public:
    explicit MorrisEngine(std::size_t cache_entries = default_cache_size())
        : cache_(cache_entries)
    {
    }

    BigInt value(const StrictPartition& lambda, const CycleType& alpha)
    {
        if (lambda.size() != alpha.size())
            throw DomainError("morris_value: lambda " + lambda.str() + " and class " + alpha.str()
                              + " have different sizes");
        if (!all_odd(alpha))
            throw DomainError("morris_value: class " + alpha.str() + " has an even part");
        return eval(lambda, alpha.parts());
    }

    std::size_t cache_size() const { return cache_.size(); }
    void clear_cache() { cache_.clear(); }
    void set_cache_limit(std::size_t entries) { cache_.set_max_entries(entries); }

private:
    BigInt eval(const StrictPartition& lambda, std::span<const unsigned> alpha)
    {
        if (alpha.empty())
            return 1;
        std::string key = pair_key(lambda.parts(), alpha);
        if (auto hit = cache_.find(key))
            return *hit;
        BigInt total = 0;
        for (const auto& bar : bar_removals(lambda, alpha[0])) {
            BigInt term = eval(bar.result, alpha.subspan(1));
            if (bar.doubling)
                term *= 2;
            if (bar.leg % 2 == 0)
                total += term;
            else
                total -= term;
        }
        cache_.insert(std::move(key), total);
        return total;
    }

    MemoCache<BigInt> cache_;
};

inline MorrisEngine& default_morris_engine()
{
    static MorrisEngine engine;
    return engine;
}

inline BigInt morris_value(const StrictPartition& lambda, const CycleType& alpha)
{
    return default_morris_engine().value(lambda, alpha);
}

/// self: the self-associate character of lambda in D+ (on the cover of S_n).
/// plus/minus: associates for lambda in D- (cover of S_n), or the two
/// constituents for lambda in D+ (cover of A_n).
/// down: the restriction to the cover of A_n for lambda in D-.
enum class SpinVariant { self, plus, minus, down };

enum class CoverGroup { sn_tilde, an_tilde };

struct SpinLabel {
    StrictPartition lambda;
    SpinVariant variant = SpinVariant::self;

    SpinLabel() = default;
    SpinLabel(StrictPartition l, SpinVariant v, CoverGroup group = CoverGroup::sn_tilde)
        : lambda(std::move(l))
        , variant(v)
    {
        const bool plus = lambda.is_plus();
        bool ok = false;
        if (group == CoverGroup::sn_tilde)
            ok = plus ? v == SpinVariant::self : (v == SpinVariant::plus || v == SpinVariant::minus);
        else
            ok = plus ? (v == SpinVariant::plus || v == SpinVariant::minus) : v == SpinVariant::down;
        if (!ok)
            throw DomainError("spin label " + lambda.str() + ": variant does not match "
                              + (plus ? std::string("D+") : std::string("D-")) + " membership");
    }

    std::string str() const
    {
        switch (variant) {
        case SpinVariant::self: return lambda.str() + ":self";
        case SpinVariant::plus: return lambda.str() + ":+";
        case SpinVariant::minus: return lambda.str() + ":-";
        case SpinVariant::down: return lambda.str() + ":down";
        }
        return lambda.str();
    }

    friend bool operator==(const SpinLabel& a, const SpinLabel& b)
    {
        return a.lambda == b.lambda && a.variant == b.variant;
    }
};

/// Spin irreducibles of the double cover of S_n, in reverse lexicographic order.
inline std::vector<SpinLabel> spin_labels(unsigned n)
{
    std::vector<SpinLabel> out;
    for (auto& p : partitions_of(n, PartitionFilter::distinct)) {
        StrictPartition lambda(p);
        if (lambda.is_plus()) {
            out.emplace_back(lambda, SpinVariant::self);
        } else {
            out.emplace_back(lambda, SpinVariant::plus);
            out.emplace_back(lambda, SpinVariant::minus);
        }
    }
    return out;
}

/// Spin irreducibles of the double cover of A_n.
inline std::vector<SpinLabel> an_spin_labels(unsigned n)
{
    std::vector<SpinLabel> out;
    for (auto& p : partitions_of(n, PartitionFilter::distinct)) {
        StrictPartition lambda(p);
        if (lambda.is_plus()) {
            out.emplace_back(lambda, SpinVariant::plus, CoverGroup::an_tilde);
            out.emplace_back(lambda, SpinVariant::minus, CoverGroup::an_tilde);
        } else {
            out.emplace_back(lambda, SpinVariant::down, CoverGroup::an_tilde);
        }
    }
    return out;
}

inline BigInt spin_label_dimension(const SpinLabel& label, CoverGroup group)
{
    BigInt d = spin_dimension(label.lambda);
    if (group == CoverGroup::an_tilde && label.lambda.is_plus())
        return d / 2;
    return d;
}

/// Cycle types whose preimage in the cover of S_n splits: O(n) and D-(n).
/// Spin characters vanish on all other classes.
inline std::vector<CycleType> spin_classes(unsigned n)
{
    std::vector<CycleType> out;
    for (auto& alpha : partitions_of(n))
        if (class_info(alpha, n).splits_in_cover)
            out.push_back(alpha);
    return out;
}

namespace detail {

inline BigInt part_product(const StrictPartition& lambda)
{
    BigInt prod = 1;
    for (unsigned x : lambda.parts())
        prod *= x;
    return prod;
}

} // namespace detail

/// Value of a spin character of the cover of S_n at the distinguished
/// preimage sigma_alpha; the value at z * sigma_alpha is its negative.
///
/// On alpha in O(n) this is the Morris value (associates agree). Off O(n)
/// the value vanishes except at alpha = lambda in D-(n), where the plus
/// associate takes i^{(n - l + 1)/2} sqrt(prod lambda_j / 2) and the minus
/// associate its negative.
inline AlgValue schur_value(const SpinLabel& label, const CycleType& alpha,
                            MorrisEngine& engine = default_morris_engine())
{
    const StrictPartition& lambda = label.lambda;
    if (lambda.size() != alpha.size())
        throw DomainError("schur_value: label " + label.str() + " and class " + alpha.str()
                          + " have different sizes");
    if (label.variant == SpinVariant::down)
        throw DomainError("schur_value: down labels belong to the cover of A_n");
    if (all_odd(alpha))
        return AlgValue(engine.value(lambda, alpha));
    if (!lambda.is_plus() && alpha == lambda.partition()) {
        const unsigned n = lambda.size();
        const long long power = static_cast<long long>((n - lambda.length() + 1) / 2);
        const BigInt radicand = detail::part_product(lambda) / 2;
        const int s = label.variant == SpinVariant::minus ? -1 : 1;
        return AlgValue::make(0, s, power, radicand);
    }
    return {};
}

/// Value of a spin character of the cover of A_n on an even class.
///
/// For lambda in D-(n) this is the common value of the two associates. For
/// lambda in D+(n) it is (chi_lambda + delta_sign * Delta)(sigma_alpha) / 2,
/// with Delta = i^{(n - l)/2} sqrt(prod lambda_j) at alpha = lambda and 0
/// elsewhere; the two classes over alpha = lambda carry opposite delta signs.
inline AlgValue an_spin_value(const StrictPartition& lambda, const CycleType& alpha, int delta_sign,
                              MorrisEngine& engine = default_morris_engine())
{
    if (sign(alpha) != 1)
        throw DomainError("an_spin_value: class " + alpha.str() + " is odd");
    if (delta_sign != 1 && delta_sign != -1)
        throw DomainError("an_spin_value: delta sign must be +1 or -1");
    if (!lambda.is_plus())
        return schur_value(SpinLabel(lambda, SpinVariant::plus), alpha, engine);
    AlgValue full = schur_value(SpinLabel(lambda, SpinVariant::self), alpha, engine);
    if (alpha == lambda.partition()) {
        const unsigned n = lambda.size();
        const long long power = static_cast<long long>((n - lambda.length()) / 2);
        full = full + AlgValue::make(0, delta_sign, power, detail::part_product(lambda));
    }
    return full.scaled(Rational(1, 2));
}

/// Class of the cover of A_n as seen by spin characters: an even cycle type
/// in O(n) or D+(n), at its distinguished preimage. Distinct odd types split
/// in A_n and carry a tag selecting the sign of Delta; an untagged class
/// takes the plus sign.
struct AnSpinClass {
    CycleType alpha;
    SplitTag tag = SplitTag::plain;

    std::string str() const { return AnClass{alpha, tag}.str(); }
};

inline std::vector<AnSpinClass> an_spin_classes(unsigned n)
{
    std::vector<AnSpinClass> out;
    for (auto& alpha : partitions_of(n)) {
        if (sign(alpha) != 1)
            continue;
        if (is_distinct_odd(alpha)) {
            out.push_back({alpha, SplitTag::plus});
            out.push_back({alpha, SplitTag::minus});
        } else if (all_odd(alpha) || in_distinct_plus(alpha)) {
            out.push_back({alpha, SplitTag::plain});
        }
    }
    return out;
}

/// Value of an A_n-cover spin label on a tagged class.
inline AlgValue an_spin_label_value(const SpinLabel& label, const AnSpinClass& cls,
                                    MorrisEngine& engine = default_morris_engine())
{
    if (label.lambda.size() != cls.alpha.size())
        throw DomainError("an_spin_value: size mismatch");
    int delta = 1;
    if (label.variant == SpinVariant::minus)
        delta = -delta;
    if (cls.tag == SplitTag::minus)
        delta = -delta;
    return an_spin_value(label.lambda, cls.alpha, delta, engine);
}

/// Whether the class alpha has a p-regular preimage in the double cover.
/// Preimage orders differ from ord(w_alpha) by at most a factor 2, and an
/// odd-order w_alpha always has a preimage of the same order.
inline bool cover_p_regular(const CycleType& alpha, unsigned p)
{
    return is_p_regular(alpha, p);
}

} // namespace qsteinberg

#endif // QSTEINBERG_SPIN_CHARS_HPP
