#ifndef QSTEINBERG_PARTITIONS_HPP
#define QSTEINBERG_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace qsteinberg {

/// Weakly decreasing sequence of positive integers. Labels both irreducible
/// characters and conjugacy classes (cycle types) of S_n. The empty
/// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("partition parts must be weakly decreasing");
            n_ += parts_[i];
        }
    }

    Partition(std::initializer_list<unsigned> parts)
        : Partition(std::vector<unsigned>(parts))
    {
    }

    /// Sorts the input first; zeros are dropped.
    static Partition from_unsorted(std::vector<unsigned> parts)
    {
        std::erase(parts, 0u);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses "5,2,1" or exponent shorthand such as "3,1^4". The empty
    /// string parses as the empty partition.
    static Partition parse(std::string_view text)
    {
        std::vector<unsigned> parts;
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        auto number = [](std::string_view s) -> unsigned {
            if (s.empty() || s.size() > 6)
                throw DomainError("malformed partition entry '" + std::string(s) + "'");
            unsigned v = 0;
            for (char c : s) {
                if (c < '0' || c > '9')
                    throw DomainError("malformed partition entry '" + std::string(s) + "'");
                v = v * 10 + static_cast<unsigned>(c - '0');
            }
            return v;
        };
        text = trim(text);
        if (text.empty() || text == "()")
            return {};
        if (text.front() == '(' && text.back() == ')')
            text = text.substr(1, text.size() - 2);
        while (true) {
            auto comma = text.find(',');
            auto item = trim(text.substr(0, comma));
            auto caret = item.find('^');
            unsigned value = number(trim(item.substr(0, caret)));
            unsigned count = caret == std::string_view::npos ? 1 : number(trim(item.substr(caret + 1)));
            if (value == 0)
                throw DomainError("partition parts must be positive");
            parts.insert(parts.end(), count, value);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return Partition(std::move(parts));
    }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned size() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Comma-joined parts, "" for the empty partition.
    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p)
    {
        return os << '(' << p.str() << ')';
    }

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

using CycleType = Partition;

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (unsigned x : p)
            h = (h ^ x) * 0x100000001b3ull;
        return h;
    }
};

// Family predicates. O(n): all parts odd. D(n): distinct parts.
// D+(n)/D-(n): distinct parts with an even/odd number of even parts.

inline bool all_odd(const Partition& p)
{
    return std::all_of(p.begin(), p.end(), [](unsigned x) { return x % 2 == 1; });
}

inline bool is_strict(const Partition& p)
{
    return std::adjacent_find(p.begin(), p.end()) == p.end();
}

inline std::size_t even_part_count(const Partition& p)
{
    return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](unsigned x) { return x % 2 == 0; }));
}

inline bool in_distinct_plus(const Partition& p) { return is_strict(p) && even_part_count(p) % 2 == 0; }
inline bool in_distinct_minus(const Partition& p) { return is_strict(p) && even_part_count(p) % 2 == 1; }
inline bool is_distinct_odd(const Partition& p) { return is_strict(p) && all_odd(p); }

enum class PartitionFilter { all, distinct, odd, distinct_plus, distinct_minus };

inline bool matches(const Partition& p, PartitionFilter f)
{
    switch (f) {
    case PartitionFilter::all: return true;
    case PartitionFilter::distinct: return is_strict(p);
    case PartitionFilter::odd: return all_odd(p);
    case PartitionFilter::distinct_plus: return in_distinct_plus(p);
    case PartitionFilter::distinct_minus: return in_distinct_minus(p);
    }
    return false;
}

namespace detail {

inline void enumerate_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                                 PartitionFilter filter, std::vector<Partition>& out)
{
    if (remaining == 0) {
        Partition p(prefix);
        if (matches(p, filter))
            out.push_back(std::move(p));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        // distinct-part families never repeat a part
        if (filter != PartitionFilter::all && filter != PartitionFilter::odd && !prefix.empty()
            && part == prefix.back())
            continue;
        if (filter == PartitionFilter::odd && part % 2 == 0)
            continue;
        prefix.push_back(part);
        enumerate_partitions(remaining - part, part, prefix, filter, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n in the family, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(unsigned n, PartitionFilter filter = PartitionFilter::all)
{
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    detail::enumerate_partitions(n, n, prefix, filter, out);
    return out;
}

inline Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<unsigned> c(p[0], 0);
    for (unsigned row : p)
        for (unsigned j = 0; j < row; ++j)
            ++c[j];
    return Partition(std::move(c));
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

/// Hook length of every cell, row by row.
inline std::vector<std::vector<unsigned>> hook_lengths(const Partition& p)
{
    const Partition c = conjugate(p);
    std::vector<std::vector<unsigned>> grid(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        grid[i].resize(p[i]);
        for (unsigned j = 0; j < p[i]; ++j)
            grid[i][j] = (p[i] - j - 1) + (c[j] - static_cast<unsigned>(i) - 1) + 1;
    }
    return grid;
}

inline BigInt hook_product(const Partition& p)
{
    BigInt h = 1;
    for (const auto& row : hook_lengths(p))
        for (unsigned x : row)
            h *= x;
    return h;
}

/// Number of hooks of length exactly m.
inline unsigned m_weight(const Partition& p, unsigned m)
{
    if (m == 0)
        throw DomainError("m_weight: m must be positive");
    unsigned count = 0;
    for (const auto& row : hook_lengths(p))
        count += static_cast<unsigned>(std::count(row.begin(), row.end(), m));
    return count;
}

/// Maximal number of m-rim hooks that can be removed in succession, which
/// equals the number of hooks whose length is a multiple of m.
inline unsigned core_weight(const Partition& p, unsigned m)
{
    if (m == 0)
        throw DomainError("core_weight: m must be positive");
    unsigned count = 0;
    for (const auto& row : hook_lengths(p))
        count += static_cast<unsigned>(std::count_if(row.begin(), row.end(), [m](unsigned h) { return h % m == 0; }));
    return count;
}

struct RimHookRemoval {
    Partition result;
    unsigned height = 0; // rows met by the strip
    unsigned length = 0;
};

/// Every way to remove a rim hook of length l, ordered by the row where the
/// strip ends (top first). Uses the beta-set (abacus) description: a rim hook
/// of length l is a bead moved from x to x - l.
inline std::vector<RimHookRemoval> rim_hook_removals(const Partition& p, unsigned l)
{
    if (l == 0)
        throw DomainError("rim_hook_removals: length must be positive");
    const std::size_t len = p.length();
    std::vector<unsigned> beta(len);
    for (std::size_t k = 0; k < len; ++k)
        beta[k] = p[k] + static_cast<unsigned>(len - 1 - k);

    std::vector<RimHookRemoval> out;
    for (std::size_t k = 0; k < len; ++k) {
        const unsigned x = beta[k];
        if (x < l)
            continue;
        const unsigned target = x - l;
        if (std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        unsigned between = 0;
        for (unsigned y : beta)
            if (y > target && y < x)
                ++between;
        std::vector<unsigned> moved = beta;
        moved[k] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<unsigned> parts;
        for (std::size_t r = 0; r < len; ++r) {
            unsigned part = moved[r] - static_cast<unsigned>(len - 1 - r);
            if (part > 0)
                parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), between + 1, l});
    }
    return out;
}

/// Degree of the irreducible character: n! / product of hook lengths.
inline BigInt dimension(const Partition& p)
{
    return factorial(p.size()) / hook_product(p);
}

inline int sign(const CycleType& alpha)
{
    return (alpha.size() - alpha.length()) % 2 == 0 ? 1 : -1;
}

/// Order of the centralizer in S_n: product of i^{m_i} m_i! over multiplicities.
inline BigInt centralizer_order(const CycleType& alpha)
{
    BigInt z = 1;
    std::size_t i = 0;
    while (i < alpha.length()) {
        std::size_t j = i;
        while (j < alpha.length() && alpha[j] == alpha[i])
            ++j;
        const unsigned mult = static_cast<unsigned>(j - i);
        z *= ipow(alpha[i], mult) * factorial(mult);
        i = j;
    }
    return z;
}

struct ClassInfo {
    CycleType alpha;
    unsigned n = 0;
    int sign = 1;
    BigInt centralizer_order;
    BigInt class_size;
    bool splits_in_an = false;
    bool splits_in_cover = false;
};

inline ClassInfo class_info(const CycleType& alpha, unsigned n)
{
    if (alpha.size() != n)
        throw DomainError("class_info: cycle type " + alpha.str() + " is not a partition of " + std::to_string(n));
    ClassInfo info;
    info.alpha = alpha;
    info.n = n;
    info.sign = sign(alpha);
    info.centralizer_order = centralizer_order(alpha);
    info.class_size = factorial(n) / info.centralizer_order;
    // A_1 = S_1, so nothing can split there.
    info.splits_in_an = n >= 2 && is_distinct_odd(alpha);
    info.splits_in_cover = all_odd(alpha) || in_distinct_minus(alpha);
    return info;
}

inline bool is_p_regular(const CycleType& alpha, unsigned p)
{
    if (!is_prime(p))
        throw DomainError("is_p_regular: p must be prime");
    return std::none_of(alpha.begin(), alpha.end(), [p](unsigned x) { return x % p == 0; });
}

/// Builds a Young diagram from Frobenius coordinates (a_1 > a_2 > ... | b_1 > b_2 > ...).
inline Partition from_frobenius(std::span<const unsigned> arms, std::span<const unsigned> legs)
{
    if (arms.size() != legs.size())
        throw DomainError("from_frobenius: arm and leg counts differ");
    const std::size_t d = arms.size();
    for (std::size_t i = 1; i < d; ++i)
        if (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1])
            throw DomainError("from_frobenius: coordinates must be strictly decreasing");
    std::vector<unsigned> rows;
    for (std::size_t i = 0; i < d; ++i)
        rows.push_back(arms[i] + static_cast<unsigned>(i) + 1);
    for (std::size_t i = d;; ++i) {
        unsigned cells = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (legs[j] + j >= i)
                ++cells;
        if (cells == 0)
            break;
        rows.push_back(cells);
    }
    return Partition(std::move(rows));
}

/// Bends each odd part 2m+1 into a symmetric hook (m+1, 1^m) along the diagonal.
inline Partition fold(const Partition& mu)
{
    if (!is_distinct_odd(mu))
        throw DomainError("fold: parts must be distinct and odd, got " + mu.str());
    std::vector<unsigned> half;
    for (unsigned x : mu)
        half.push_back((x - 1) / 2);
    return from_frobenius(half, half);
}

/// Inverse of fold: the principal hook lengths of a self-conjugate partition.
inline Partition unfold(const Partition& lambda)
{
    if (!is_self_conjugate(lambda))
        throw DomainError("unfold: partition " + lambda.str() + " is not self-conjugate");
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < lambda.length() && lambda[i] > i; ++i)
        out.push_back(2 * (lambda[i] - static_cast<unsigned>(i) - 1) + 1);
    return Partition(std::move(out));
}

/// (-1)^{sum m_i} for mu = (2m_1+1, 2m_2+1, ...).
inline int epsilon_mu(const Partition& mu)
{
    if (!is_distinct_odd(mu))
        throw DomainError("epsilon_mu: parts must be distinct and odd, got " + mu.str());
    unsigned s = 0;
    for (unsigned x : mu)
        s += (x - 1) / 2;
    return s % 2 == 0 ? 1 : -1;
}

/// Of a conjugate pair, the lexicographically larger member.
inline Partition canonical_of_pair(const Partition& p)
{
    Partition c = conjugate(p);
    return c > p ? c : p;
}

} // namespace qsteinberg

template <>
struct std::hash<qsteinberg::Partition> : qsteinberg::PartitionHash {};

#endif // QSTEINBERG_PARTITIONS_HPP
