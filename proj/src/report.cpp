#include "ccount/report.hpp"

#include <cctype>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "ccount/oracle.hpp"

namespace ccount {

namespace {

BigInt pow10(int e) {
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= 10;
    return p;
}

// 10^e as an exact rational, negative exponents included.
Rational pow10q(int e) { return e >= 0 ? Rational(pow10(e)) : Rational(BigInt(1), pow10(-e)); }

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string pct(const Rational& ratio) { return format_sci(ratio * 100); }

}  // namespace

std::string format_sci(const Rational& value, int digits) {
    if (digits < 1) throw std::invalid_argument("format_sci needs at least one digit");
    if (value == 0) return "0";
    std::string sign = value < 0 ? "-" : "";
    Rational q = value < 0 ? Rational(-value) : value;

    // Exponent so that 1 <= q / 10^e < 10.
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    while (q < pow10q(e)) --e;
    while (q >= pow10q(e + 1)) ++e;

    // Round q * 10^(digits-1-e) half up.
    Rational scaled = q * pow10q(digits - 1 - e);
    BigInt mant = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    if ((scaled - Rational(mant)) * 2 >= 1) ++mant;
    if (mant == pow10(digits)) {
        mant /= 10;
        ++e;
    }

    std::string m = mant.str();
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

Rational parse_decimal(std::string_view text) {
    std::size_t i = 0;
    auto bad = [&] { return std::invalid_argument("malformed number '" + std::string(text) + "'"); };
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    BigInt mant = 0;
    int scale = 0;
    bool any = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any = true) {
        mant = mant * 10 + (text[i] - '0');
    }
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any = true) {
            mant = mant * 10 + (text[i] - '0');
            --scale;
        }
    }
    if (!any) throw bad();
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool neg_exp = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg_exp = text[i++] == '-';
        if (i == text.size()) throw bad();
        int exp = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            exp = exp * 10 + (text[i] - '0');
            if (exp > 100000) throw bad();
        }
        scale += neg_exp ? -exp : exp;
    }
    if (i != text.size()) throw bad();
    Rational out = Rational(mant) * pow10q(scale);
    return negative ? Rational(-out) : out;
}

FilterRun run_filter(const Lexicon& lex, const std::vector<std::string>& words, const FilterOptions& opts) {
    FilterRun run;
    run.report.length = words.size();

    auto t0 = Clock::now();
    CoordSplit split = split_coordination(words, opts.coordinator);
    run.report.stats.pa = possible_assignments_count(split.left, lex) * possible_assignments_count(split.right, lex);
    run.report.timing.split_ms = ms_since(t0);

    t0 = Clock::now();
    run.left = opts.cap ? enumerate_side(split.left, lex, Side::LeftConjunct, opts.cap)
                        : enumerate_side_parallel(split.left, lex, Side::LeftConjunct);
    run.report.timing.enumerate_left_ms = ms_since(t0);

    t0 = Clock::now();
    run.right = opts.cap ? enumerate_side(split.right, lex, Side::RightConjunct, opts.cap)
                         : enumerate_side_parallel(split.right, lex, Side::RightConjunct);
    run.report.timing.enumerate_right_ms = ms_since(t0);
    run.report.truncated_left = run.left.truncated;
    run.report.truncated_right = run.right.truncated;

    t0 = Clock::now();
    run.filtered = filter_product(registers_of(run.left), registers_of(run.right), opts.goal);
    BigInt pa = run.report.stats.pa;
    run.report.stats = run.filtered.stats;
    run.report.stats.pa = pa;
    run.report.timing.filter_ms = ms_since(t0);

    if (opts.oracle) {
        t0 = Clock::now();
        const auto goal = CatType::basic(opts.goal);
        const auto& pairs = run.filtered.pairs;
        std::vector<char> ok(pairs.size(), 0);
        const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t k = 0; k < n; ++k) {
            const auto& p = pairs[static_cast<std::size_t>(k)];
            ok[static_cast<std::size_t>(k)] = coord_derive(run.left.survivors[p.left].assignment.types,
                                                           run.right.survivors[p.right].assignment.types, goal)
                                                  .derivable;
        }
        run.confirmed.assign(ok.begin(), ok.end());
        std::uint64_t confirmed = 0;
        for (char c : ok) confirmed += c ? 1 : 0;
        run.report.oracle_confirmed = confirmed;
        run.report.timing.oracle_ms = ms_since(t0);
    }
    return run;
}

std::string tsv_header() { return "L\tPA\tCP\tCP/PA%\tAA\tAA/CP%\tAA/PA%\toracle\tflags"; }

std::string tsv_row(const RunReport& r) {
    std::ostringstream out;
    out << r.length << '\t';
    if (r.error) {
        out << "\t\t\t\t\t\t\terror: " << *r.error;
        return out.str();
    }
    const auto& s = r.stats;
    out << format_sci(Rational(s.pa)) << '\t' << format_sci(Rational(BigInt(s.cp))) << '\t' << pct(s.cp_over_pa())
        << '\t' << s.aa << '\t' << (s.cp == 0 ? "" : pct(s.aa_over_cp())) << '\t' << pct(s.aa_over_pa()) << '\t';
    if (r.oracle_confirmed) out << *r.oracle_confirmed;
    out << '\t';
    std::string flags;
    if (r.truncated_left) flags += "truncated-left";
    if (r.truncated_right) flags += std::string(flags.empty() ? "" : ",") + "truncated-right";
    out << flags;
    return out.str();
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["length"] = r.length;
    if (r.error) {
        j["error"] = *r.error;
        return j;
    }
    const auto& s = r.stats;
    j["stats"] = {
        {"pa", s.pa.str()},
        {"ll", s.ll},
        {"rr", s.rr},
        {"cp", s.cp},
        {"aa", s.aa},
        {"cp_pa_pct", pct(s.cp_over_pa())},
        {"aa_cp_pct", s.cp == 0 ? nlohmann::json(nullptr) : nlohmann::json(pct(s.aa_over_cp()))},
        {"aa_pa_pct", pct(s.aa_over_pa())},
    };
    j["oracle_confirmed"] = r.oracle_confirmed ? nlohmann::json(*r.oracle_confirmed) : nlohmann::json(nullptr);
    j["truncated_left"] = r.truncated_left;
    j["truncated_right"] = r.truncated_right;
    j["timing_ms"] = {
        {"split", r.timing.split_ms},
        {"enumerate_left", r.timing.enumerate_left_ms},
        {"enumerate_right", r.timing.enumerate_right_ms},
        {"filter", r.timing.filter_ms},
        {"oracle", r.timing.oracle_ms},
        {"total", r.timing.total_ms()},
    };
    return j;
}

}  // namespace ccount
