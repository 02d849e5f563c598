#ifndef QSTEINBERG_CLASSIFY_HPP
#define QSTEINBERG_CLASSIFY_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "an_chars.hpp"
#include "integer.hpp"
#include "partitions.hpp"
#include "sn_chars.hpp"
#include "spin_chars.hpp"

namespace qsteinberg {

enum class Group { sn, an, sn_tilde_spin, an_tilde_spin };

inline constexpr Group kAllGroups[] = {Group::sn, Group::an, Group::sn_tilde_spin, Group::an_tilde_spin};

inline std::string_view group_name(Group g)
{
    switch (g) {
    case Group::sn: return "sn";
    case Group::an: return "an";
    case Group::sn_tilde_spin: return "sn-tilde-spin";
    case Group::an_tilde_spin: return "an-tilde-spin";
    }
    return "?";
}

inline Group parse_group(std::string_view name)
{
    for (Group g : kAllGroups)
        if (group_name(g) == name)
            return g;
    throw DomainError("unknown group '" + std::string(name) + "' (expected sn, an, sn-tilde-spin or an-tilde-spin)");
}

inline bool is_spin(Group g) { return g == Group::sn_tilde_spin || g == Group::an_tilde_spin; }

inline BigInt group_order(Group g, unsigned n)
{
    switch (g) {
    case Group::sn: return factorial(n);
    case Group::an: return n < 2 ? BigInt(1) : factorial(n) / 2;
    case Group::sn_tilde_spin: return 2 * factorial(n);
    case Group::an_tilde_spin: return n < 2 ? BigInt(2) : factorial(n);
    }
    return 0;
}

/// Exponent of p in the group order.
inline unsigned group_p_exponent(Group g, unsigned n, unsigned p)
{
    return valuation(group_order(g, n), p);
}

struct ClassifyOptions {
    unsigned threads = 1; // 0: one per hardware thread
    unsigned bound = kDefaultBound;
    bool fast_filters = true;
};

struct Hit {
    std::string label;
    BigInt dim;
    bool weak = false;
};

struct Witness {
    std::string label;
    std::string cls;
};

struct ClassificationReport {
    Group group = Group::sn;
    unsigned n = 0;
    unsigned p = 0;
    std::vector<Hit> hits;
    std::vector<Witness> witnesses;
};

/// Rejects arguments outside the search contract: p must be a prime dividing
/// the group order, n within the bound, and n >= 4 for the spin families.
inline void check_classify_args(Group g, unsigned n, unsigned p, const ClassifyOptions& opt)
{
    if (!is_prime(p))
        throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n < 1)
        throw DomainError("n must be positive");
    if (g == Group::an && n < 3)
        throw DomainError("A_n searches need n >= 3");
    if (is_spin(g) && n < 4)
        throw DomainError("spin searches need n >= 4");
    if (n > opt.bound)
        throw ResourceBoundExceeded("n = " + std::to_string(n) + " exceeds the search bound "
                                    + std::to_string(opt.bound));
    if (group_order(g, n) % p != 0)
        throw DomainError("p = " + std::to_string(p) + " does not divide the order of " + std::string(group_name(g))
                          + " at n = " + std::to_string(n));
}

/// Primes p for which (g, n, p) is a valid search cell.
inline std::vector<unsigned> searchable_primes(Group g, unsigned n)
{
    std::vector<unsigned> out;
    const BigInt order = group_order(g, n);
    for (unsigned p : primes_up_to(std::max(n, 2u)))
        if (order % p == 0)
            out.push_back(p);
    return out;
}

namespace detail {

/// Applies fn to 0..count-1 on up to `threads` workers and returns the
/// results in index order, so the output never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(count);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

/// For each label, the index of the first class (in the given order) where
/// nonzero() fails, or nullopt when the label is nonzero everywhere.
template <class Label, class Class, class Nonzero>
std::vector<std::optional<std::size_t>> first_zeros(const std::vector<Label>& labels,
                                                    const std::vector<Class>& classes, Nonzero nonzero,
                                                    unsigned threads)
{
    return parallel_map(labels.size(), threads, [&](std::size_t i) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (!nonzero(labels[i], classes[c]))
                return c;
        return std::nullopt;
    });
}

struct Model {
    std::vector<std::string> labels;
    std::vector<BigInt> dims;
    std::vector<std::string> classes; // p-regular, canonical order
    std::vector<std::optional<std::size_t>> zeros;
    std::vector<std::size_t> singular_nonzero; // per label: count of p-singular classes with nonzero value
};

inline Model sn_model(unsigned n, unsigned p, const ClassifyOptions& opt, bool check_singular)
{
    MnEngine& engine = default_mn_engine();
    const auto labels = partitions_of(n);
    std::vector<CycleType> regular, singular;
    for (auto& a : partitions_of(n))
        (is_p_regular(a, p) ? regular : singular).push_back(a);
    auto nonzero = [&](const Partition& l, const CycleType& a) {
        if (opt.fast_filters && vanishes_fast(l, a) == Vanishing::Zero)
            return false;
        return engine.value(l, a) != 0;
    };
    Model m;
    m.zeros = first_zeros(labels, regular, nonzero, opt.threads);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.labels.push_back(labels[i].str());
        m.dims.push_back(dimension(labels[i]));
        std::size_t bad = 0;
        if (check_singular && !m.zeros[i])
            for (auto& a : singular)
                bad += nonzero(labels[i], a);
        m.singular_nonzero.push_back(bad);
    }
    for (auto& a : regular)
        m.classes.push_back(a.str());
    return m;
}

inline Model an_model(unsigned n, unsigned p, const ClassifyOptions& opt, bool check_singular)
{
    MnEngine& engine = default_mn_engine();
    const auto labels = an_labels(n);
    std::vector<AnClass> regular, singular;
    for (auto& c : an_classes(n))
        (is_p_regular(c.alpha, p) ? regular : singular).push_back(c);
    auto nonzero = [&](const AnCharLabel& l, const AnClass& c) {
        const bool folded = l.variant != AnVariant::down && detail::folds_onto(l.lambda, c.alpha);
        if (opt.fast_filters && !folded && vanishes_fast(l.lambda, c.alpha) == Vanishing::Zero)
            return false;
        return an_nonzero(l, c, engine);
    };
    Model m;
    m.zeros = first_zeros(labels, regular, nonzero, opt.threads);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.labels.push_back(labels[i].str());
        m.dims.push_back(an_dimension(labels[i]));
        std::size_t bad = 0;
        if (check_singular && !m.zeros[i])
            for (auto& c : singular)
                bad += nonzero(labels[i], c);
        m.singular_nonzero.push_back(bad);
    }
    for (auto& c : regular)
        m.classes.push_back(c.str());
    return m;
}

inline Model sn_spin_model(unsigned n, unsigned p, const ClassifyOptions& opt, bool check_singular)
{
    MorrisEngine& engine = default_morris_engine();
    const auto labels = spin_labels(n);
    std::vector<CycleType> regular, singular;
    for (auto& a : partitions_of(n))
        (cover_p_regular(a, p) ? regular : singular).push_back(a);
    auto nonzero = [&](const SpinLabel& l, const CycleType& a) {
        if (opt.fast_filters && !all_odd(a) && a != l.lambda.partition())
            return false; // vanishes off O(n) except at its own D- class
        return !schur_value(l, a, engine).is_zero();
    };
    Model m;
    m.zeros = first_zeros(labels, regular, nonzero, opt.threads);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.labels.push_back(labels[i].str());
        m.dims.push_back(spin_label_dimension(labels[i], CoverGroup::sn_tilde));
        std::size_t bad = 0;
        if (check_singular && !m.zeros[i])
            for (auto& a : singular)
                bad += nonzero(labels[i], a);
        m.singular_nonzero.push_back(bad);
    }
    for (auto& a : regular)
        m.classes.push_back(a.str());
    return m;
}

/// Even classes of the cover of A_n at distinguished preimages; distinct
/// odd types appear twice (tagged), every other even type once.
inline std::vector<AnSpinClass> an_spin_even_classes(unsigned n)
{
    std::vector<AnSpinClass> out;
    for (auto& a : partitions_of(n)) {
        if (sign(a) != 1)
            continue;
        if (n >= 2 && is_distinct_odd(a)) {
            out.push_back({a, SplitTag::plus});
            out.push_back({a, SplitTag::minus});
        } else {
            out.push_back({a, SplitTag::plain});
        }
    }
    return out;
}

inline Model an_spin_model(unsigned n, unsigned p, const ClassifyOptions& opt, bool check_singular)
{
    MorrisEngine& engine = default_morris_engine();
    const auto labels = an_spin_labels(n);
    std::vector<AnSpinClass> regular, singular;
    for (auto& c : an_spin_even_classes(n))
        (cover_p_regular(c.alpha, p) ? regular : singular).push_back(c);
    auto nonzero = [&](const SpinLabel& l, const AnSpinClass& c) {
        if (opt.fast_filters && !all_odd(c.alpha) && c.alpha != l.lambda.partition())
            return false;
        return !an_spin_label_value(l, c, engine).is_zero();
    };
    Model m;
    m.zeros = first_zeros(labels, regular, nonzero, opt.threads);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.labels.push_back(labels[i].str());
        m.dims.push_back(spin_label_dimension(labels[i], CoverGroup::an_tilde));
        std::size_t bad = 0;
        if (check_singular && !m.zeros[i])
            for (auto& c : singular)
                bad += nonzero(labels[i], c);
        m.singular_nonzero.push_back(bad);
    }
    for (auto& c : regular)
        m.classes.push_back(c.str());
    return m;
}

inline Model build_model(Group g, unsigned n, unsigned p, const ClassifyOptions& opt, bool check_singular)
{
    switch (g) {
    case Group::sn: return sn_model(n, p, opt, check_singular);
    case Group::an: return an_model(n, p, opt, check_singular);
    case Group::sn_tilde_spin: return sn_spin_model(n, p, opt, check_singular);
    case Group::an_tilde_spin: return an_spin_model(n, p, opt, check_singular);
    }
    throw std::logic_error("unknown group");
}

} // namespace detail

/// Quasi p-Steinberg search for one (group, n, p) cell. Hits are listed in
/// canonical label order with their degree and weak flag; every other label
/// gets the first p-regular class on which it vanishes.
///
/// A hit is weak when its degree is the full p-part of the group order. For
/// n <= 9 such hits are also checked to vanish on every p-singular class.
inline ClassificationReport classify(Group g, unsigned n, unsigned p, const ClassifyOptions& opt = {})
{
    check_classify_args(g, n, p, opt);
    const bool check_singular = n <= 9;
    const detail::Model m = detail::build_model(g, n, p, opt, check_singular);
    const BigInt p_part = ipow(p, group_p_exponent(g, n, p));

    ClassificationReport r;
    r.group = g;
    r.n = n;
    r.p = p;
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        if (m.zeros[i]) {
            r.witnesses.push_back({m.labels[i], m.classes[*m.zeros[i]]});
            continue;
        }
        const bool weak = m.dims[i] == p_part;
        if (weak && check_singular && m.singular_nonzero[i] != 0)
            throw std::logic_error("character " + m.labels[i] + " has p-part degree but does not vanish on "
                                   + std::to_string(m.singular_nonzero[i]) + " p-singular classes");
        r.hits.push_back({m.labels[i], m.dims[i], weak});
    }
    return r;
}

inline std::vector<Partition> quasi_steinberg_sn(unsigned n, unsigned p, const ClassifyOptions& opt = {})
{
    std::vector<Partition> out;
    for (const auto& h : classify(Group::sn, n, p, opt).hits)
        out.push_back(Partition::parse(h.label));
    return out;
}

inline std::vector<AnCharLabel> quasi_steinberg_an(unsigned n, unsigned p, const ClassifyOptions& opt = {})
{
    const auto report = classify(Group::an, n, p, opt);
    std::vector<AnCharLabel> out;
    for (const auto& label : an_labels(n))
        for (const auto& h : report.hits)
            if (h.label == label.str())
                out.push_back(label);
    return out;
}

inline std::vector<SpinLabel> quasi_steinberg_spin(unsigned n, unsigned p, CoverGroup cover,
                                                   const ClassifyOptions& opt = {})
{
    const Group g = cover == CoverGroup::sn_tilde ? Group::sn_tilde_spin : Group::an_tilde_spin;
    const auto report = classify(g, n, p, opt);
    const auto labels = cover == CoverGroup::sn_tilde ? spin_labels(n) : an_spin_labels(n);
    std::vector<SpinLabel> out;
    for (const auto& label : labels)
        for (const auto& h : report.hits)
            if (h.label == label.str())
                out.push_back(label);
    return out;
}

/// Weak p-Steinberg test for a label already known to be quasi p-Steinberg:
/// its degree must equal the p-part of the group order.
inline bool is_weak_steinberg(const BigInt& degree, Group g, unsigned n, unsigned p)
{
    return degree == ipow(p, group_p_exponent(g, n, p));
}

/// Partitions of n whose q-core weight is maximal, floor(n/q), for every
/// prime q <= n other than p.
inline std::vector<Partition> a_np_set(unsigned n, unsigned p)
{
    if (!is_prime(p))
        throw DomainError("a_np_set: p = " + std::to_string(p) + " is not prime");
    std::vector<Partition> out;
    for (auto& lambda : partitions_of(n)) {
        bool ok = true;
        for (unsigned q : primes_up_to(n))
            if (q != p && core_weight(lambda, q) != n / q) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(lambda);
    }
    return out;
}

/// One expected non-linear hit of a classification table.
struct ExpectedHit {
    Group group = Group::sn;
    unsigned n = 0;
    unsigned p = 0;
    std::string label;
    bool weak = false;

    friend bool operator==(const ExpectedHit&, const ExpectedHit&) = default;
};

/// Reference classification data: the non-linear hits for S_n and A_n and
/// the spin hits for both covers, with their weak flags.
struct ExpectedTables {
    std::vector<ExpectedHit> hits;

    static ExpectedTables reference(unsigned max_n)
    {
        struct Row {
            unsigned n;
            std::vector<std::vector<unsigned>> lambdas;
            unsigned p;
        };
        const std::vector<Row> sn_rows{
            {3, {{2, 1}}, 2},
            {4, {{2, 2}}, 2},
            {4, {{3, 1}, {2, 1, 1}}, 3},
            {5, {{4, 1}, {2, 1, 1, 1}}, 2},
            {5, {{3, 2}, {2, 2, 1}}, 5},
            {6, {{3, 2, 1}}, 2},
            {6, {{4, 2}, {2, 2, 1, 1}}, 3},
            {8, {{5, 2, 1}, {3, 2, 1, 1, 1}}, 2},
        };
        const std::set<std::pair<std::vector<unsigned>, unsigned>> sn_not_weak{
            {{2, 2}, 2}, {{4, 1}, 2}, {{2, 1, 1, 1}, 2}, {{5, 2, 1}, 2}, {{3, 2, 1, 1, 1}, 2},
        };
        const std::vector<Row> an_rows{
            {3, {{2, 1}}, 3},
            {4, {{2, 2}}, 2},
            {4, {{3, 1}, {2, 2}}, 3},
            {5, {{4, 1}}, 2},
            {5, {{3, 1, 1}}, 3},
            {5, {{3, 2}}, 5},
            {6, {{3, 2, 1}}, 2},
            {6, {{4, 2}}, 3},
            {6, {{5, 1}, {3, 3}}, 5},
            {8, {{5, 2, 1}}, 2},
            {9, {{7, 2}}, 3},
        };
        // listed under either member of a conjugate pair; compared canonically
        const std::set<std::pair<std::vector<unsigned>, unsigned>> an_not_weak{
            {{2, 1}, 3}, {{2, 2}, 2}, {{2, 2}, 3}, {{2, 2, 1, 1, 1, 1, 1}, 3},
        };
        std::set<std::pair<Partition, unsigned>> an_not_weak_canonical;
        for (const auto& [parts, p] : an_not_weak)
            an_not_weak_canonical.insert({canonical_of_pair(Partition(parts)), p});

        ExpectedTables t;
        for (const auto& row : sn_rows) {
            if (row.n > max_n)
                continue;
            for (const auto& parts : row.lambdas)
                t.hits.push_back({Group::sn, row.n, row.p, Partition(parts).str(), !sn_not_weak.count({parts, row.p})});
        }
        for (const auto& row : an_rows) {
            if (row.n > max_n)
                continue;
            for (const auto& parts : row.lambdas) {
                const Partition lambda = canonical_of_pair(Partition(parts));
                const bool weak = !an_not_weak_canonical.count({lambda, row.p});
                if (is_self_conjugate(lambda)) {
                    t.hits.push_back({Group::an, row.n, row.p, AnCharLabel(lambda, AnVariant::plus).str(), weak});
                    t.hits.push_back({Group::an, row.n, row.p, AnCharLabel(lambda, AnVariant::minus).str(), weak});
                } else {
                    t.hits.push_back({Group::an, row.n, row.p, AnCharLabel(lambda, AnVariant::down).str(), weak});
                }
            }
        }
        const std::vector<std::vector<unsigned>> sporadic{{3, 1}, {3, 2}, {3, 2, 1}, {5, 1}, {5, 2, 1}};
        for (unsigned n = 4; n <= max_n; ++n) {
            std::vector<StrictPartition> lambdas{StrictPartition({n})};
            for (const auto& parts : sporadic)
                if (Partition(parts).size() == n)
                    lambdas.emplace_back(Partition(parts));
            for (const auto& lambda : lambdas) {
                for (const auto& l : spin_labels(n))
                    if (l.lambda == lambda)
                        t.hits.push_back({Group::sn_tilde_spin, n, 2, l.str(), false});
                for (const auto& l : an_spin_labels(n))
                    if (l.lambda == lambda)
                        t.hits.push_back({Group::an_tilde_spin, n, 2, l.str(), false});
            }
        }
        return t;
    }
};

struct VerifyResult {
    bool pass = true;
    std::vector<std::string> diffs;
    std::vector<ClassificationReport> reports;
};

namespace detail {

inline bool is_linear_label(Group g, unsigned n, const std::string& label)
{
    const std::string row = Partition({n}).str();
    const std::string column = Partition(std::vector<unsigned>(n, 1)).str();
    if (g == Group::sn)
        return label == row || label == column;
    if (g == Group::an)
        return label == AnCharLabel(Partition({n}), AnVariant::down).str();
    return false;
}

inline std::string cell_name(Group g, unsigned n, unsigned p)
{
    return "group=" + std::string(group_name(g)) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
}

} // namespace detail

/// Runs every classifier over 3 <= n <= max_n (spin families from n = 4) and
/// every prime dividing the group order, then compares against `expected`:
/// non-linear hits must match exactly, weak flags must agree, and for
/// n >= 9 every non-linear character of S_n must carry a p-regular witness
/// that re-evaluates to zero without fast filters.
inline VerifyResult verify_paper(unsigned max_n, const ClassifyOptions& opt = {},
                                 const std::optional<ExpectedTables>& expected = std::nullopt)
{
    if (max_n < 3)
        throw DomainError("verify-paper needs max_n >= 3");
    if (max_n > opt.bound)
        throw ResourceBoundExceeded("max_n = " + std::to_string(max_n) + " exceeds the search bound "
                                    + std::to_string(opt.bound));
    const ExpectedTables table = expected ? *expected : ExpectedTables::reference(max_n);

    using Cell = std::tuple<Group, unsigned, unsigned>;
    std::map<Cell, std::map<std::string, bool>> want;
    for (const auto& h : table.hits)
        if (h.n <= max_n)
            want[{h.group, h.n, h.p}][h.label] = h.weak;

    VerifyResult result;
    for (Group g : kAllGroups) {
        for (unsigned n = is_spin(g) ? 4 : 3; n <= max_n; ++n) {
            for (unsigned p : searchable_primes(g, n)) {
                ClassificationReport r = classify(g, n, p, opt);
                const std::string cell = detail::cell_name(g, n, p);
                std::map<std::string, bool> got;
                for (const auto& h : r.hits)
                    if (!detail::is_linear_label(g, n, h.label))
                        got[h.label] = h.weak;
                const auto it = want.find({g, n, p});
                const std::map<std::string, bool> empty;
                const auto& expect = it == want.end() ? empty : it->second;
                for (const auto& [label, weak] : got) {
                    auto e = expect.find(label);
                    if (e == expect.end())
                        result.diffs.push_back("unexpected hit: " + cell + " label=" + label);
                    else if (e->second != weak)
                        result.diffs.push_back("weak flag mismatch: " + cell + " label=" + label + " expected="
                                               + (e->second ? "weak" : "not-weak")
                                               + " got=" + (weak ? "weak" : "not-weak"));
                }
                for (const auto& [label, weak] : expect)
                    if (!got.count(label))
                        result.diffs.push_back("missing hit: " + cell + " label=" + label);

                if (g == Group::sn && n >= 9) {
                    std::set<std::string> covered;
                    for (const auto& w : r.witnesses) {
                        covered.insert(w.label);
                        const Partition lambda = Partition::parse(w.label);
                        const CycleType alpha = Partition::parse(w.cls);
                        if (!is_p_regular(alpha, p) || MnEngine(0).value(lambda, alpha) != 0)
                            result.diffs.push_back("invalid witness: " + cell + " label=" + w.label
                                                   + " class=" + w.cls);
                    }
                    for (const auto& lambda : partitions_of(n))
                        if (!detail::is_linear_label(g, n, lambda.str()) && !covered.count(lambda.str()))
                            result.diffs.push_back("no vanishing p-regular class: " + cell + " label=" + lambda.str());
                }
                result.reports.push_back(std::move(r));
            }
        }
    }
    // expected cells that the sweep never visited
    for (const auto& [cell, labels] : want) {
        const auto& [g, n, p] = cell;
        const auto primes = searchable_primes(g, n);
        const bool visited = n >= (is_spin(g) ? 4u : 3u) && n <= max_n
            && std::find(primes.begin(), primes.end(), p) != primes.end();
        if (!visited)
            for (const auto& [label, weak] : labels)
                result.diffs.push_back("missing hit: " + detail::cell_name(g, n, p) + " label=" + label);
    }
    result.pass = result.diffs.empty();
    return result;
}

} // namespace qsteinberg

#endif // QSTEINBERG_CLASSIFY_HPP
