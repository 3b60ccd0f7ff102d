#pragma once

// Categorial types, their textual notation, and the count protocol.
//
// Notation is result-first: `a/b` seeks an argument `b` to its right,
// `a\b` seeks an argument `b` to its left.  Both slashes bind with equal
// precedence and associate to the left, so `z\x\u` reads `(z\x)\u`.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccount {

enum class Slash : std::uint8_t { Rightward, Leftward };

constexpr Slash opposite(Slash s) {
    return s == Slash::Rightward ? Slash::Leftward : Slash::Rightward;
}

constexpr char slash_char(Slash s) { return s == Slash::Rightward ? '/' : '\\'; }

/// An atomic category such as `s` or `np`.
class BasicType {
public:
    /// Throws std::invalid_argument on an illegal name.
    explicit BasicType(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const BasicType&, const BasicType&) = default;
    friend auto operator<=>(const BasicType&, const BasicType&) = default;

    static bool valid_name(std::string_view name) noexcept;

private:
    std::string name_;
};

/// Immutable categorial type tree with structural equality.
///
/// Nodes are shared, so copies are cheap and a CatType may be used from any
/// number of threads.
class CatType {
public:
    static CatType basic(BasicType b);
    static CatType basic(std::string name) { return basic(BasicType(std::move(name))); }
    static CatType fraction(CatType result, Slash slash, CatType argument);

    bool is_basic() const noexcept { return node_->result == nullptr; }

    // Valid only when is_basic().
    const BasicType& atom() const;

    // Valid only when !is_basic().
    Slash slash() const;
    CatType result() const;
    CatType argument() const;

    std::size_t hash() const noexcept { return node_->hash; }
    /// Atoms have depth 0; a fraction is one deeper than its deeper operand.
    int depth() const noexcept { return node_->depth; }

    friend bool operator==(const CatType& a, const CatType& b) noexcept;

private:
    struct Node {
        std::optional<BasicType> atom;
        std::shared_ptr<const Node> result;
        std::shared_ptr<const Node> argument;
        Slash slash = Slash::Rightward;
        std::size_t hash = 0;
        int depth = 0;
    };

    explicit CatType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static bool equal(const Node* a, const Node* b) noexcept;

    std::shared_ptr<const Node> node_;
};

struct CatTypeHash {
    std::size_t operator()(const CatType& t) const noexcept { return t.hash(); }
};

using TypeSequence = std::vector<CatType>;

/// Thrown by parse_type. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses `T := ATOM | T '/' T | T '\' T | '(' T ')'`; whitespace is ignored.
CatType parse_type(std::string_view text);

/// Parses a whitespace-separated list of types (no whitespace inside a type).
TypeSequence parse_sequence(std::string_view text);

/// Minimal-parenthesis rendering; parse_type(format_type(t)) == t.
std::string format_type(const CatType& t);

std::string format_sequence(const TypeSequence& s);

/// Orders types by their textual form.
bool textual_less(const CatType& a, const CatType& b);

CatType flip_slashes(const CatType& t);

int count(const BasicType& x, const CatType& t);
int count_seq(const BasicType& x, const TypeSequence& s);

std::set<BasicType> basics_of(const CatType& t);
std::set<BasicType> basics_of(const TypeSequence& s);

/// Necessary (not sufficient) condition for `s => goal`: every basic type
/// counts 0 except the goal, which counts 1.
bool count_invariance_holds(const TypeSequence& s, const BasicType& goal);

}  // namespace ccount
