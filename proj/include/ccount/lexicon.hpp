#pragma once

// Lexicon files, coordinator splitting, and per-side assignment enumeration.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccount/conjoin.hpp"
#include "ccount/occurrence.hpp"
#include "ccount/types.hpp"

namespace ccount {

class LexiconError : public std::runtime_error {
public:
    LexiconError(const std::string& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnknownWordError : public std::runtime_error {
public:
    explicit UnknownWordError(const std::string& word);
    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

/// Word -> non-empty set of types.  Each word's types are deduplicated and
/// kept in textual order, which fixes the enumeration order.
class Lexicon {
public:
    void add(const std::string& word, const CatType& type);

    bool contains(const std::string& word) const { return entries_.count(word) != 0; }
    const std::vector<CatType>& types(const std::string& word) const;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, std::vector<CatType>>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, std::vector<CatType>> entries_;
};

/// `word<TAB>type(,type)*` per line; `#` lines and blank lines are skipped and
/// repeated words merge.
Lexicon load_lexicon(std::string_view text);
Lexicon load_lexicon_file(const std::filesystem::path& path);

/// Whitespace-separated, case-sensitive.
std::vector<std::string> tokenize(std::string_view sentence);

/// PA: the product of the words' type-set sizes.
BigInt possible_assignments_count(const std::vector<std::string>& words, const Lexicon& lex);

enum class SplitErrorKind { NoCoordinator, MultipleCoordinators, EmptySide };

class SplitError : public std::runtime_error {
public:
    explicit SplitError(SplitErrorKind kind);
    SplitErrorKind kind() const noexcept { return kind_; }

private:
    SplitErrorKind kind_;
};

struct CoordSplit {
    std::vector<std::string> left;
    std::string coordinator;
    std::vector<std::string> right;
};

CoordSplit split_coordination(const std::vector<std::string>& words, const std::string& coordinator);

struct Assignment {
    std::vector<std::string> words;
    TypeSequence types;
};

struct SideCandidate {
    Assignment assignment;
    Register reg;
};

struct SideEnumeration {
    std::vector<SideCandidate> survivors;
    bool truncated = false;
    std::uint64_t inspected = 0;  // candidates tried
};

/// Extra admission test applied after the side verdict.
using AdmissionCheck = std::function<bool(const TypeSequence&, Side)>;

/// Streams the Cartesian product of the words' type choices, lexicographic in
/// the per-word type indices (last word varies fastest), and keeps the
/// candidates whose side verdict is Ok.  With a cap, enumeration stops as soon
/// as a (cap+1)-th survivor is found; `truncated` is then set and exactly
/// `cap` survivors are returned.
SideEnumeration enumerate_side(const std::vector<std::string>& words, const Lexicon& lex, Side side,
                               std::optional<std::size_t> cap = std::nullopt,
                               const AdmissionCheck& admit = {});

/// Same output as the uncapped enumerate_side, with the index space split
/// across OpenMP threads.
SideEnumeration enumerate_side_parallel(const std::vector<std::string>& words, const Lexicon& lex, Side side,
                                        const AdmissionCheck& admit = {});

std::vector<Register> registers_of(const SideEnumeration& e);

}  // namespace ccount
