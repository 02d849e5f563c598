#ifndef QSTEINBERG_MEMO_CACHE_HPP
#define QSTEINBERG_MEMO_CACHE_HPP

#include <cstddef>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>

namespace qsteinberg {

/// Entry bound used when no explicit size is configured. Overridden by the
/// QSTEINBERG_CACHE_SIZE environment variable.
inline std::size_t default_cache_size()
{
    if (const char* env = std::getenv("QSTEINBERG_CACHE_SIZE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

/// Thread-safe memo table with a bound on the number of entries. When the
/// bound is reached the table is flushed; cached values are pure functions
/// of their keys so a flush only costs recomputation.
template <class Value>
class MemoCache {
public:
    explicit MemoCache(std::size_t max_entries = default_cache_size())
        : max_entries_(max_entries == 0 ? 1 : max_entries)
    {
    }

    std::optional<Value> find(const std::string& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(std::string key, const Value& value)
    {
        std::unique_lock lock(mutex_);
        if (map_.size() >= max_entries_)
            map_.clear();
        map_.emplace(std::move(key), value);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    std::size_t max_entries() const
    {
        std::shared_lock lock(mutex_);
        return max_entries_;
    }

    void set_max_entries(std::size_t n)
    {
        std::unique_lock lock(mutex_);
        max_entries_ = n == 0 ? 1 : n;
        if (map_.size() > max_entries_)
            map_.clear();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> map_;
    std::size_t max_entries_;
};

/// Packs two part lists into a map key, two bytes per part.
inline std::string pair_key(std::span<const unsigned> first, std::span<const unsigned> second)
{
    std::string key;
    key.reserve(2 * (first.size() + second.size() + 1));
    auto put = [&key](unsigned x) {
        key.push_back(static_cast<char>(x & 0xffu));
        key.push_back(static_cast<char>((x >> 8) & 0xffu));
    };
    for (unsigned x : first)
        put(x);
    put(0);
    for (unsigned x : second)
        put(x);
    return key;
}

} // namespace qsteinberg

#endif // QSTEINBERG_MEMO_CACHE_HPP
