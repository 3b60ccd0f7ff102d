#include "ccount/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace ccount {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

const char* split_error_text(SplitErrorKind k) {
    switch (k) {
        case SplitErrorKind::NoCoordinator: return "NoCoordinator: sentence has no coordinator";
        case SplitErrorKind::MultipleCoordinators: return "MultipleCoordinators: more than one coordinator";
        case SplitErrorKind::EmptySide: return "EmptySide: a conjunct would be empty";
    }
    return "split error";
}

struct Odometer {
    std::vector<const std::vector<CatType>*> choices;

    // Decodes a linear index, last word fastest.
    std::vector<std::size_t> digits(std::uint64_t index) const {
        std::vector<std::size_t> d(choices.size());
        for (std::size_t k = choices.size(); k-- > 0;) {
            auto base = choices[k]->size();
            d[k] = static_cast<std::size_t>(index % base);
            index /= base;
        }
        return d;
    }

    bool advance(std::vector<std::size_t>& d) const {
        for (std::size_t k = d.size(); k-- > 0;) {
            if (++d[k] < choices[k]->size()) return true;
            d[k] = 0;
        }
        return false;
    }

    TypeSequence types(const std::vector<std::size_t>& d) const {
        TypeSequence out;
        out.reserve(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) out.push_back((*choices[k])[d[k]]);
        return out;
    }
};

Odometer make_odometer(const std::vector<std::string>& words, const Lexicon& lex) {
    if (words.empty()) throw std::invalid_argument("cannot enumerate an empty conjunct");
    Odometer o;
    for (const auto& w : words) o.choices.push_back(&lex.types(w));
    return o;
}

std::optional<SideCandidate> try_candidate(const std::vector<std::string>& words, TypeSequence types, Side side,
                                           const AdmissionCheck& admit) {
    auto sat = saturate(types, side);
    if (!sat.verdict.ok) return std::nullopt;
    if (admit && !admit(types, side)) return std::nullopt;
    return SideCandidate{Assignment{words, std::move(types)}, std::move(sat.reg)};
}

}  // namespace

LexiconError::LexiconError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

UnknownWordError::UnknownWordError(const std::string& word)
    : std::runtime_error("unknown word '" + word + "'"), word_(word) {}

SplitError::SplitError(SplitErrorKind kind) : std::runtime_error(split_error_text(kind)), kind_(kind) {}

void Lexicon::add(const std::string& word, const CatType& type) {
    auto& types = entries_[word];
    if (std::find(types.begin(), types.end(), type) != types.end()) return;
    auto text = format_type(type);
    auto it = std::find_if(types.begin(), types.end(), [&](const CatType& t) { return text < format_type(t); });
    types.insert(it, type);
}

const std::vector<CatType>& Lexicon::types(const std::string& word) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) throw UnknownWordError(word);
    return it->second;
}

Lexicon load_lexicon(std::string_view text) {
    Lexicon lex;
    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty() || trim(line).front() == '#') continue;

        auto tab = line.find('\t');
        if (tab == std::string_view::npos) throw LexiconError("missing tab between word and types", lineno);
        std::string word(trim(line.substr(0, tab)));
        if (word.empty()) throw LexiconError("empty word", lineno);
        std::string_view list = trim(line.substr(tab + 1));
        if (list.empty()) throw LexiconError("empty type list for '" + word + "'", lineno);

        std::size_t start = 0;
        while (start <= list.size()) {
            auto comma = list.find(',', start);
            auto item = trim(list.substr(start, comma == std::string_view::npos ? list.npos : comma - start));
            if (item.empty()) throw LexiconError("empty type in list for '" + word + "'", lineno);
            try {
                lex.add(word, parse_type(item));
            } catch (const ParseError& e) {
                throw LexiconError(std::string("type syntax: ") + e.what(), lineno);
            } catch (const std::invalid_argument& e) {
                throw LexiconError(std::string("type syntax: ") + e.what(), lineno);
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return lex;
}

Lexicon load_lexicon_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open lexicon '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_lexicon(buf.str());
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> out;
    std::istringstream in{std::string(sentence)};
    for (std::string w; in >> w;) out.push_back(std::move(w));
    return out;
}

BigInt possible_assignments_count(const std::vector<std::string>& words, const Lexicon& lex) {
    BigInt pa = 1;
    for (const auto& w : words) pa *= lex.types(w).size();
    return pa;
}

CoordSplit split_coordination(const std::vector<std::string>& words, const std::string& coordinator) {
    auto n = std::count(words.begin(), words.end(), coordinator);
    if (n == 0) throw SplitError(SplitErrorKind::NoCoordinator);
    if (n > 1) throw SplitError(SplitErrorKind::MultipleCoordinators);
    auto at = std::find(words.begin(), words.end(), coordinator);
    CoordSplit out{{words.begin(), at}, coordinator, {at + 1, words.end()}};
    if (out.left.empty() || out.right.empty()) throw SplitError(SplitErrorKind::EmptySide);
    return out;
}

SideEnumeration enumerate_side(const std::vector<std::string>& words, const Lexicon& lex, Side side,
                               std::optional<std::size_t> cap, const AdmissionCheck& admit) {
    const Odometer odo = make_odometer(words, lex);
    SideEnumeration out;
    std::vector<std::size_t> d(words.size(), 0);
    do {
        ++out.inspected;
        auto c = try_candidate(words, odo.types(d), side, admit);
        if (!c) continue;
        if (cap && out.survivors.size() == *cap) {
            out.truncated = true;
            break;
        }
        out.survivors.push_back(std::move(*c));
    } while (odo.advance(d));
    return out;
}

SideEnumeration enumerate_side_parallel(const std::vector<std::string>& words, const Lexicon& lex, Side side,
                                        const AdmissionCheck& admit) {
    const Odometer odo = make_odometer(words, lex);
    BigInt total = possible_assignments_count(words, lex);
    if (total > BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
        return enumerate_side(words, lex, side, std::nullopt, admit);
    }
    const auto n = total.convert_to<std::int64_t>();
    constexpr std::int64_t chunk = 512;
    const std::int64_t chunks = (n + chunk - 1) / chunk;

    std::vector<std::vector<SideCandidate>> found(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * chunk;
        const std::int64_t end = std::min(n, begin + chunk);
        auto d = odo.digits(static_cast<std::uint64_t>(begin));
        auto& bucket = found[static_cast<std::size_t>(c)];
        for (std::int64_t i = begin; i < end; ++i) {
            if (auto cand = try_candidate(words, odo.types(d), side, admit)) bucket.push_back(std::move(*cand));
            odo.advance(d);
        }
    }

    SideEnumeration out;
    out.inspected = static_cast<std::uint64_t>(n);
    for (auto& bucket : found) {
        for (auto& cand : bucket) out.survivors.push_back(std::move(cand));
    }
    return out;
}

std::vector<Register> registers_of(const SideEnumeration& e) {
    std::vector<Register> out;
    out.reserve(e.survivors.size());
    for (const auto& s : e.survivors) out.push_back(s.reg);
    return out;
}

}  // namespace ccount
