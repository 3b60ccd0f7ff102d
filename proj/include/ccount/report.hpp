#pragma once

// The lexicon -> split -> enumerate -> filter -> oracle pipeline and its
// report rows.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ccount/conjoin.hpp"
#include "ccount/lexicon.hpp"

namespace ccount {

/// Scientific notation with `digits` significant digits, e.g. `6.0e3`,
/// `3.3e-1`.  Rounds half up on the exact value.  Zero renders as `0`.
std::string format_sci(const Rational& value, int digits = 2);

/// Exact value of a decimal or scientific literal such as `2e1` or `3.3e-1`.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

struct StageTiming {
    double split_ms = 0;
    double enumerate_left_ms = 0;
    double enumerate_right_ms = 0;
    double filter_ms = 0;
    double oracle_ms = 0;

    double total_ms() const { return split_ms + enumerate_left_ms + enumerate_right_ms + filter_ms + oracle_ms; }
};

struct RunReport {
    std::size_t length = 0;  // words including the coordinator
    FilterStats stats;
    std::optional<std::uint64_t> oracle_confirmed;
    bool truncated_left = false;
    bool truncated_right = false;
    StageTiming timing;
    std::optional<std::string> error;  // set for rows that could not run
};

struct FilterOptions {
    BasicType goal{"s"};
    std::string coordinator = "&";
    std::optional<std::size_t> cap;
    bool oracle = false;
};

struct FilterRun {
    RunReport report;
    SideEnumeration left;
    SideEnumeration right;
    FilterResult filtered;
    std::vector<bool> confirmed;  // per surviving pair, when the oracle ran
};

/// Throws SplitError or UnknownWordError.
FilterRun run_filter(const Lexicon& lex, const std::vector<std::string>& words, const FilterOptions& opts);

/// `L  PA  CP  CP/PA%  AA  AA/CP%  AA/PA%` followed by `oracle` and `flags`.
std::string tsv_header();
std::string tsv_row(const RunReport& r);

nlohmann::json to_json(const RunReport& r);

}  // namespace ccount
