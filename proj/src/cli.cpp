#include "ccount/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ccount/conjoin.hpp"
#include "ccount/lexicon.hpp"
#include "ccount/occurrence.hpp"
#include "ccount/oracle.hpp"
#include "ccount/report.hpp"
#include "ccount/types.hpp"

namespace ccount {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BasicType parse_goal(const std::string& text) {
    if (!BasicType::valid_name(text)) {
        throw UsageError("goal must be a basic type, got '" + text + "'");
    }
    return BasicType(text);
}

TypeSequence parse_args(const std::vector<std::string>& args) {
    TypeSequence out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        try {
            out.push_back(parse_type(args[i]));
        } catch (const ParseError& e) {
            throw UsageError("type " + std::to_string(i + 1) + " '" + args[i] + "': " + e.what());
        }
    }
    return out;
}

TypeSequence parse_list(const std::string& what, const std::string& text) {
    try {
        return parse_sequence(text);
    } catch (const ParseError& e) {
        throw UsageError(what + " '" + text + "': " + e.what());
    }
}

std::string signed_count(int c) { return c > 0 ? "+" + std::to_string(c) : std::to_string(c); }

int cmd_check(const std::vector<std::string>& args, const std::string& goal_text, std::ostream& out) {
    const BasicType goal = parse_goal(goal_text);
    const TypeSequence seq = parse_args(args);
    auto support = basics_of(seq);
    support.insert(goal);
    for (const auto& x : support) {
        int c = count_seq(x, seq);
        int want = x == goal ? 1 : 0;
        out << x.name() << ": " << signed_count(c) << " (expected " << signed_count(want) << ")"
            << (c == want ? "" : " *") << '\n';
    }
    bool pass = count_invariance_holds(seq, goal);
    out << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? ExitOk : ExitFail;
}

int cmd_registers(const std::vector<std::string>& args, const std::string& side_text, std::ostream& out) {
    const Side side = side_text == "left" ? Side::LeftConjunct : Side::RightConjunct;
    auto sat = saturate(parse_args(args), side);
    out << render_register(sat.reg) << render_verdict(sat.verdict) << '\n';
    return sat.verdict.ok ? ExitOk : ExitFail;
}

void emit(const RunReport& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << tsv_header() << '\n' << tsv_row(r) << '\n';
    }
}

struct PipelineArgs {
    std::string lexicon;
    std::string goal = "s";
    std::string coord = "&";
    std::optional<std::size_t> cap;
    std::string format = "tsv";
    std::string oracle = "off";

    FilterOptions options() const {
        FilterOptions o;
        o.goal = parse_goal(goal);
        o.coordinator = coord;
        o.cap = cap;
        o.oracle = oracle == "on";
        return o;
    }
};

Lexicon open_lexicon(const std::string& path) {
    try {
        return load_lexicon_file(path);
    } catch (const LexiconError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

int cmd_filter(const PipelineArgs& a, const std::string& sentence, const std::vector<std::string>& words_arg,
               std::ostream& out) {
    const FilterOptions opts = a.options();
    const Lexicon lex = open_lexicon(a.lexicon);
    std::vector<std::string> words = tokenize(sentence);
    words.insert(words.end(), words_arg.begin(), words_arg.end());
    FilterRun run;
    try {
        run = run_filter(lex, words, opts);
    } catch (const SplitError& e) {
        throw UsageError(e.what());
    } catch (const UnknownWordError& e) {
        throw UsageError(e.what());
    }
    emit(run.report, a.format, out);
    return ExitOk;
}

int cmd_bench(const PipelineArgs& a, const std::string& sentences_path, std::ostream& out) {
    const FilterOptions opts = a.options();
    const Lexicon lex = open_lexicon(a.lexicon);
    std::ifstream in(sentences_path);
    if (!in) throw UsageError("cannot open sentences file '" + sentences_path + "'");

    std::vector<RunReport> rows;
    bool any_error = false;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::string line; std::getline(in, line);) {
        auto words = tokenize(line);
        if (words.empty() || words.front().front() == '#') continue;
        try {
            rows.push_back(run_filter(lex, words, opts).report);
        } catch (const std::exception& e) {
            RunReport r;
            r.length = words.size();
            r.error = e.what();
            rows.push_back(std::move(r));
            any_error = true;
        }
    }
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (a.format == "json") {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows) j["rows"].push_back(to_json(r));
        j["total_ms"] = total_ms;
        out << j.dump(2) << '\n';
    } else {
        out << tsv_header() << '\n';
        for (const auto& r : rows) out << tsv_row(r) << '\n';
        out << "# sentences=" << rows.size() << " total_ms=" << total_ms << '\n';
    }
    return any_error ? ExitFail : ExitOk;
}

int cmd_oracle(const std::string& left_text, const std::string& right_text, const std::string& goal_text,
               std::ostream& out) {
    const BasicType goal = parse_goal(goal_text);
    const TypeSequence left = parse_list("left", left_text);
    const TypeSequence right = parse_list("right", right_text);
    if (left.empty() || right.empty()) throw UsageError("both conjuncts need at least one type");

    auto sl = saturate(left, Side::LeftConjunct);
    auto sr = saturate(right, Side::RightConjunct);
    out << "left:  " << format_sequence(left) << "  " << render_verdict(sl.verdict) << '\n';
    out << "right: " << format_sequence(right) << "  " << render_verdict(sr.verdict) << '\n';
    auto pv = conjoinable(sl.reg, sr.reg, goal);
    out << "conjoinable: " << (pv.conjoinable ? "yes" : "no") << '\n' << render_pair_verdict(pv);

    auto res = coord_derive(left, right, CatType::basic(goal));
    out << "derivable: " << (res.derivable ? "yes" : "no") << '\n';
    if (res.witness) {
        const auto& w = *res.witness;
        out << "witness: Y'=[" << format_sequence(w.y_prime) << "] C1=[" << format_sequence(w.c1) << "] C2=["
            << format_sequence(w.c2) << "] Z'=[" << format_sequence(w.z_prime) << "] c=" << format_type(w.c)
            << '\n';
    }
    return res.derivable ? ExitOk : ExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coordinative count filtering for categorial type assignments"};
    app.require_subcommand(1);

    std::vector<std::string> types;
    std::string goal = "s";

    auto* check = app.add_subcommand("check", "Count invariance of a type sequence against a basic goal");
    check->add_option("types", types, "Types of the sequence")->required();
    check->add_option("--goal", goal, "Basic goal type");

    std::string side = "left";
    auto* registers = app.add_subcommand("registers", "Saturation register of one conjunct");
    registers->add_option("types", types, "Types of the conjunct")->required();
    registers->add_option("--side", side, "Conjunct side")->check(CLI::IsMember({"left", "right"}));

    PipelineArgs pa;
    std::string sentence;
    std::vector<std::string> words;
    auto add_pipeline_flags = [&pa](CLI::App* sub) {
        sub->add_option("--lexicon", pa.lexicon, "Lexicon file")->required();
        sub->add_option("--goal", pa.goal, "Basic goal type");
        sub->add_option("--coord", pa.coord, "Coordinator token");
        sub->add_option("--cap", pa.cap, "Maximum assignments kept per side");
        sub->add_option("--format", pa.format, "Report format")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--oracle", pa.oracle, "Confirm surviving pairs by derivation")
            ->check(CLI::IsMember({"on", "off"}));
    };
    auto* filter = app.add_subcommand("filter", "Run the pipeline on one coordinated sentence");
    add_pipeline_flags(filter);
    filter->add_option("--sentence", sentence, "Sentence text");
    filter->add_option("words", words, "Sentence words");

    std::string sentences_path;
    auto* bench = app.add_subcommand("bench", "Run the pipeline on every line of a file");
    add_pipeline_flags(bench);
    bench->add_option("--sentences", sentences_path, "One sentence per line")->required();

    std::string left_text, right_text;
    auto* oracle = app.add_subcommand("oracle", "Derivability of L & R by the coordination scheme");
    oracle->add_option("--left", left_text, "Left conjunct types")->required();
    oracle->add_option("--right", right_text, "Right conjunct types")->required();
    oracle->add_option("--goal", goal, "Basic goal type");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ExitOk : ExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(types, goal, out);
        if (registers->parsed()) return cmd_registers(types, side, out);
        if (filter->parsed()) return cmd_filter(pa, sentence, words, out);
        if (bench->parsed()) return cmd_bench(pa, sentences_path, out);
        if (oracle->parsed()) return cmd_oracle(left_text, right_text, goal, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return ExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitInternal;
    }
    return ExitUsage;
}

}  // namespace ccount
