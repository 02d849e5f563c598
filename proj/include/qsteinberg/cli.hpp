#ifndef QSTEINBERG_CLI_HPP
#define QSTEINBERG_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classify.hpp"
#include "query.hpp"
#include "serialize.hpp"

namespace qsteinberg::cli {

enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct Common {
    std::string format = "text";
    std::string output;
    unsigned threads = 1;
    std::size_t cache_size = 0; // 0: keep the default
    unsigned bound = kDefaultBound;
};

namespace detail {

inline void add_common(CLI::App& cmd, Common& c, bool with_threads)
{
    cmd.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd.add_option("--output,-o", c.output, "Write output to this file instead of stdout");
    cmd.add_option("--cache-size", c.cache_size, "Maximum memo entries per engine")->check(CLI::PositiveNumber);
    cmd.add_option("--bound", c.bound, "Largest n accepted")->check(CLI::Range(1u, 64u));
    if (with_threads)
        cmd.add_option("--threads,-j", c.threads, "Worker threads (0 = all cores)");
}

inline Format format_of(const Common& c)
{
    if (c.format == "json")
        return Format::json;
    if (c.format == "csv")
        return Format::csv;
    return Format::text;
}

inline std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    for (const std::string sep : {"..", ":", "-"}) {
        const auto pos = text.find(sep);
        if (pos == std::string::npos)
            continue;
        try {
            std::size_t used_a = 0, used_b = 0;
            const std::string a = text.substr(0, pos), b = text.substr(pos + sep.size());
            const unsigned long lo = std::stoul(a, &used_a), hi = std::stoul(b, &used_b);
            if (used_a == a.size() && used_b == b.size() && lo <= hi)
                return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
        } catch (const std::exception&) {
        }
        break;
    }
    throw DomainError("malformed n-range '" + text + "' (expected e.g. 3..12)");
}

inline std::vector<unsigned> parse_primes(const std::string& text)
{
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long p = std::stoul(item, &used);
            if (used != item.size())
                throw DomainError("");
            out.push_back(static_cast<unsigned>(p));
        } catch (const std::exception&) {
            throw DomainError("malformed prime list '" + text + "'");
        }
    }
    if (out.empty())
        throw DomainError("empty prime list");
    return out;
}

inline std::string one_line(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

} // namespace detail

/// Runs the command line `args` (without the program name). Data goes to
/// `out` (or --output), diagnostics to `err`; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact character values and quasi p-Steinberg classification for symmetric and "
                 "alternating groups and their double covers",
                 "qsteinberg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Common common;
    std::string group_text = "sn";

    auto* table = app.add_subcommand("table", "Print a full character table");
    unsigned table_n = 0;
    table->add_option("--group,-g", group_text, "sn, an, sn-tilde-spin or an-tilde-spin");
    table->add_option("--n", table_n, "Degree n")->required();
    detail::add_common(*table, common, false);

    auto* value = app.add_subcommand("value", "Evaluate one character on one class");
    std::string lambda_text, variant_text, class_text;
    std::optional<unsigned> value_n;
    value->add_option("--group,-g", group_text, "sn, an, sn-tilde-spin or an-tilde-spin");
    value->add_option("--n", value_n, "Degree n (checked against the label)");
    value->add_option("--lambda,-l", lambda_text, "Character label, e.g. 3,1,1 or 3,1,1:+")->required();
    value->add_option("--variant", variant_text, "+, -, down or self");
    value->add_option("--class,-c", class_text, "Class, e.g. 5+ or 2,2,1")->required();
    detail::add_common(*value, common, false);

    auto* classify_cmd = app.add_subcommand("classify", "Search for quasi p-Steinberg characters");
    std::optional<unsigned> classify_n;
    std::string range_text, primes_text;
    std::optional<unsigned> classify_p;
    bool no_filters = false;
    classify_cmd->add_option("--group,-g", group_text, "sn, an, sn-tilde-spin or an-tilde-spin")->required();
    auto* n_opt = classify_cmd->add_option("--n", classify_n, "Degree n");
    auto* range_opt = classify_cmd->add_option("--n-range", range_text, "Range of n, e.g. 3..12");
    n_opt->excludes(range_opt);
    auto* p_opt = classify_cmd->add_option("--p", classify_p, "Prime p");
    auto* primes_opt = classify_cmd->add_option("--primes", primes_text, "Comma separated primes (default: all)");
    p_opt->excludes(primes_opt);
    classify_cmd->add_flag("--no-fast-filters", no_filters, "Evaluate every class without vanishing shortcuts");
    detail::add_common(*classify_cmd, common, true);

    auto* verify = app.add_subcommand("verify-paper", "Re-derive the reference classification tables");
    unsigned max_n = 12;
    verify->add_option("--max-n", max_n, "Largest n to sweep");
    detail::add_common(*verify, common, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << detail::one_line(e.what()) << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        const Group group = parse_group(group_text);
        const Format format = detail::format_of(common);
        if (common.cache_size > 0) {
            default_mn_engine().set_cache_limit(common.cache_size);
            default_morris_engine().set_cache_limit(common.cache_size);
        }

        if (*table) {
            const LabeledTable t = build_table(group, table_n, common.bound);
            if (format == Format::json)
                buffer << table_to_json(t).dump(2) << '\n';
            else if (format == Format::csv)
                buffer << table_to_csv(t);
            else
                buffer << table_to_text(t);
        } else if (*value) {
            const AnyLabel label = parse_label(group, lambda_text, variant_text);
            if (value_n && *value_n != label_size(label))
                throw DomainError("label " + label_str(label) + " is not a partition of " + std::to_string(*value_n));
            if (label_size(label) > common.bound)
                throw ResourceBoundExceeded("n = " + std::to_string(label_size(label)) + " exceeds the bound "
                                            + std::to_string(common.bound));
            const AlgValue v = evaluate(group, label, class_text);
            if (format == Format::json) {
                json j;
                j["group"] = std::string(group_name(group));
                j["label"] = label_str(label);
                j["class"] = class_text;
                j["value"] = value_to_json(v);
                j["text"] = v.str();
                buffer << j.dump(2) << '\n';
            } else if (format == Format::csv) {
                buffer << "group,label,class,value\n"
                       << group_name(group) << ',' << csv_field(label_str(label)) << ',' << csv_field(class_text)
                       << ',' << csv_field(v.str()) << '\n';
            } else {
                buffer << v.str() << '\n';
            }
        } else if (*classify_cmd) {
            unsigned lo = 0, hi = 0;
            if (classify_n) {
                lo = hi = *classify_n;
            } else if (!range_text.empty()) {
                std::tie(lo, hi) = detail::parse_range(range_text);
            } else {
                throw DomainError("classify needs --n or --n-range");
            }
            ClassifyOptions opt;
            opt.threads = common.threads;
            opt.bound = common.bound;
            opt.fast_filters = !no_filters;
            std::vector<unsigned> explicit_primes;
            if (classify_p)
                explicit_primes = {*classify_p};
            else if (!primes_text.empty())
                explicit_primes = detail::parse_primes(primes_text);

            std::vector<ClassificationReport> reports;
            for (unsigned n = lo; n <= hi; ++n) {
                const auto primes = explicit_primes.empty() ? searchable_primes(group, n) : explicit_primes;
                for (unsigned p : primes)
                    reports.push_back(classify(group, n, p, opt));
            }
            if (format == Format::json) {
                json arr = json::array();
                for (const auto& r : reports)
                    arr.push_back(report_to_json(r));
                buffer << arr.dump(2) << '\n';
            } else if (format == Format::csv) {
                buffer << reports_csv_header();
                for (const auto& r : reports)
                    buffer << report_to_csv_rows(r);
            } else {
                for (const auto& r : reports)
                    buffer << report_to_text(r);
            }
        } else if (*verify) {
            ClassifyOptions opt;
            opt.threads = common.threads;
            opt.bound = common.bound;
            const VerifyResult result = verify_paper(max_n, opt);
            if (format == Format::json) {
                buffer << verify_to_json(max_n, result).dump(2) << '\n';
            } else if (format == Format::csv) {
                buffer << reports_csv_header();
                for (const auto& r : result.reports)
                    buffer << report_to_csv_rows(r);
            } else {
                buffer << "verify-paper max_n=" << max_n << ": " << (result.pass ? "PASS" : "FAIL") << " ("
                       << result.reports.size() << " cells, " << result.diffs.size() << " diffs)\n";
                for (const auto& d : result.diffs)
                    buffer << "  " << d << '\n';
            }
            if (!result.pass) {
                for (const auto& d : result.diffs)
                    err << "diff: " << d << '\n';
                code = kExitMismatch;
            }
        }
    } catch (const ResourceBoundExceeded& e) {
        err << "error: resource bound exceeded: " << detail::one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << detail::one_line(e.what()) << '\n';
        return kExitUsage;
    }

    if (common.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(common.output, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write " << common.output << '\n';
            return kExitUsage;
        }
    }
    return code;
}

} // namespace qsteinberg::cli

#endif // QSTEINBERG_CLI_HPP
