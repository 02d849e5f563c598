#ifndef QSTEINBERG_SN_CHARS_HPP
#define QSTEINBERG_SN_CHARS_HPP

#include <span>
#include <string>
#include <vector>

#include "integer.hpp"
#include "memo_cache.hpp"
#include "partitions.hpp"

namespace qsteinberg {

/// Largest n for which full tables and searches are accepted by default.
inline constexpr unsigned kDefaultBound = 20;

/// Memoized Murnaghan-Nakayama evaluation of chi_lambda(alpha).
///
/// The recursion always strips the largest remaining part of alpha, so a
/// subproblem is identified by (lambda, suffix of alpha) and the cache key is
/// canonical. Safe to call from several threads.
class MnEngine {
public:
    explicit MnEngine(std::size_t cache_entries = default_cache_size())
        : cache_(cache_entries)
    {
    }

    BigInt value(const Partition& lambda, const CycleType& alpha)
    {
        if (lambda.size() != alpha.size())
            throw DomainError("mn_value: lambda " + lambda.str() + " and class " + alpha.str()
                              + " have different sizes");
        return eval(lambda, alpha.parts());
    }

    std::size_t cache_size() const { return cache_.size(); }
    void clear_cache() { cache_.clear(); }
    void set_cache_limit(std::size_t entries) { cache_.set_max_entries(entries); }

private:
    BigInt eval(const Partition& lambda, std::span<const unsigned> alpha)
    {
        if (alpha.empty())
            return 1;
        if (lambda.length() == 1)
            return 1; // trivial character
        std::string key = pair_key(lambda.parts(), alpha);
        if (auto hit = cache_.find(key))
            return *hit;

        BigInt total = 0;
        for (const auto& r : rim_hook_removals(lambda, alpha[0])) {
            BigInt sub = eval(r.result, alpha.subspan(1));
            if ((r.height - 1) % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        cache_.insert(std::move(key), total);
        return total;
    }

    MemoCache<BigInt> cache_;
};

inline MnEngine& default_mn_engine()
{
    static MnEngine engine;
    return engine;
}

/// chi_lambda(alpha) through the shared engine.
inline BigInt mn_value(const Partition& lambda, const CycleType& alpha)
{
    return default_mn_engine().value(lambda, alpha);
}

enum class Vanishing { Zero, Unknown };

/// Cheap sufficient conditions for chi_lambda(alpha) = 0:
///  - some part alpha_i with no hook of that length in lambda;
///  - alpha = (a1, a2), lambda has a single a1-hook and what remains after
///    removing it has no a2-hook.
inline Vanishing vanishes_fast(const Partition& lambda, const CycleType& alpha)
{
    if (lambda.size() != alpha.size())
        throw DomainError("vanishes_fast: size mismatch");
    unsigned previous = 0;
    for (unsigned part : alpha) {
        if (part == previous)
            continue;
        previous = part;
        if (m_weight(lambda, part) == 0)
            return Vanishing::Zero;
    }
    if (alpha.length() == 2) {
        auto removals = rim_hook_removals(lambda, alpha[0]);
        if (removals.size() == 1 && m_weight(removals.front().result, alpha[1]) == 0)
            return Vanishing::Zero;
    }
    return Vanishing::Unknown;
}

struct CharTable {
    unsigned n = 0;
    std::vector<Partition> rows;    // character labels
    std::vector<CycleType> columns; // classes
    std::vector<std::vector<BigInt>> values;
};

/// Full character table of S_n; rows and columns in reverse lexicographic order.
inline CharTable character_table(unsigned n, MnEngine& engine = default_mn_engine(), unsigned bound = kDefaultBound)
{
    if (n < 1)
        throw DomainError("character_table: n must be positive");
    if (n > bound)
        throw ResourceBoundExceeded("character_table: n = " + std::to_string(n) + " exceeds bound "
                                    + std::to_string(bound));
    CharTable t;
    t.n = n;
    t.rows = partitions_of(n);
    t.columns = t.rows;
    t.values.resize(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        t.values[i].reserve(t.columns.size());
        for (const auto& alpha : t.columns)
            t.values[i].push_back(engine.value(t.rows[i], alpha));
    }
    return t;
}

} // namespace qsteinberg

#endif // QSTEINBERG_SN_CHARS_HPP
