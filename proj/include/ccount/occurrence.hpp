#pragma once

// Signed, directed basic-type occurrences and the per-conjunct saturation
// registers built from them.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccount/types.hpp"

namespace ccount {

enum class Polarity : std::uint8_t { Head, Argument };
enum class Direction : std::uint8_t { None, Leftward, Rightward };
enum class Side : std::uint8_t { LeftConjunct, RightConjunct };

struct Position {
    std::size_t token = 0;
    std::size_t rank = 0;  // leaf ordinal within the token's type, pre-order

    friend auto operator<=>(const Position&, const Position&) = default;
};

struct Occurrence {
    BasicType basic;
    Polarity polarity;
    Direction direction;
    Position position;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Occurrences of a single type, all with token index 0.
///
/// Result subtrees keep polarity; argument subtrees flip it.  An occurrence's
/// direction is taken from the outermost slash that introduced an argument on
/// its path from the root, so top-level heads have direction None.
std::vector<Occurrence> occurrences(const CatType& t);

std::vector<Occurrence> seq_occurrences(const TypeSequence& s);

struct Quadruple {
    int sathead = 0;
    int satarg = 0;
    int freehead = 0;
    int freearg = 0;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Per-conjunct mapping from basic type to quadruple, sorted by type.
class Register {
public:
    using Entry = std::pair<BasicType, Quadruple>;

    explicit Register(Side side) : side_(side) {}
    Register(Side side, std::vector<Entry> entries);

    Side side() const noexcept { return side_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// All-zero for absent types.
    Quadruple quad(const BasicType& x) const;

    friend bool operator==(const Register&, const Register&) = default;

private:
    Side side_;
    std::vector<Entry> entries_;
};

inline Quadruple quad(const Register& reg, const BasicType& x) { return reg.quad(x); }

enum class FailureReason : std::uint8_t { FreeLeftwardArgInLeft, FreeRightwardArgInRight };

struct SideVerdict {
    bool ok = true;
    std::optional<FailureReason> reason;
    std::optional<Occurrence> offending;

    static SideVerdict pass() { return {}; }
    static SideVerdict fail(FailureReason r, Occurrence o) { return {false, r, std::move(o)}; }
};

struct Saturation {
    Register reg;
    SideVerdict verdict;
};

/// Builds the register of one conjunct.
///
/// Per basic type, arguments are matched to heads by a maximum-cardinality
/// matching where a Rightward argument may only take a head positioned after
/// it, a Leftward argument only one before it, and never a head of its own
/// token.  Among maximum matchings the one saturating the most heads through
/// the counted slash (Leftward on the left side, Rightward on the right) is
/// chosen.
///
/// Left side: satarg/freearg split the Rightward arguments; sathead counts
/// heads taken by Leftward arguments; freehead counts unmatched heads.  Any
/// unmatched Leftward argument fails the verdict.  The right side mirrors this.
Saturation saturate(const TypeSequence& s, Side side);

/// `x: <sathead,satarg,freehead,freearg>` lines sorted by type name.
std::string render_register(const Register& reg);
std::string render_verdict(const SideVerdict& v);

std::string to_string(Side side);
std::string to_string(FailureReason r);
std::string to_string(Direction d);

/// The same sequence read right-to-left with every slash flipped.
TypeSequence mirror(const TypeSequence& s);

}  // namespace ccount
