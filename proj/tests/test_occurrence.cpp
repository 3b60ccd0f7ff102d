#include "doctest.h"

#include "ccount/occurrence.hpp"
#include "ccount/oracle.hpp"
#include "ccount/types.hpp"
#include "generators.hpp"
#include "matching_oracle.hpp"

using namespace ccount;

namespace {

CatType T(const char* s) { return parse_type(s); }
BasicType B(const char* s) { return BasicType(s); }
TypeSequence S(const char* s) { return parse_sequence(s); }

Occurrence occ(const char* x, Polarity p, Direction d, std::size_t token, std::size_t rank) {
    return {B(x), p, d, {token, rank}};
}

constexpr auto H = Polarity::Head;
constexpr auto A = Polarity::Argument;
constexpr auto None = Direction::None;
constexpr auto Left = Direction::Leftward;
constexpr auto Right = Direction::Rightward;

Quadruple Q(int sh, int sa, int fh, int fa) { return {sh, sa, fh, fa}; }

}  // namespace

TEST_CASE("occurrences of single types") {
    CHECK(occurrences(T("x/y")) == std::vector{occ("x", H, None, 0, 0), occ("y", A, Right, 0, 1)});
    CHECK(occurrences(T("z\\x")) == std::vector{occ("z", H, None, 0, 0), occ("x", A, Left, 0, 1)});
    CHECK(occurrences(T("z\\x\\u")) ==
          std::vector{occ("z", H, None, 0, 0), occ("x", A, Left, 0, 1), occ("u", A, Left, 0, 2)});
    CHECK(count(B("u"), T("z\\x\\u")) == -1);
}

TEST_CASE("nested occurrences take the outermost argument slash") {
    // s/(s\np): the inner \ does not override the outer /.
    CHECK(occurrences(T("s/(s\\np)")) ==
          std::vector{occ("s", H, None, 0, 0), occ("s", A, Right, 0, 1), occ("np", H, Right, 0, 2)});
    // Heads inside a result keep direction None until an argument is entered.
    CHECK(occurrences(T("(s\\np)/np")) ==
          std::vector{occ("s", H, None, 0, 0), occ("np", A, Left, 0, 1), occ("np", A, Right, 0, 2)});
}

TEST_CASE("seq_occurrences attaches token indices") {
    CHECK(seq_occurrences(S("x/y y")) ==
          std::vector{occ("x", H, None, 0, 0), occ("y", A, Right, 0, 1), occ("y", H, None, 1, 0)});
    CHECK(seq_occurrences({}).empty());
    CHECK(seq_occurrences(S("x y\\x")) ==
          std::vector{occ("x", H, None, 0, 0), occ("y", H, None, 1, 0), occ("x", A, Left, 1, 1)});
}

TEST_CASE("saturate reproduces the worked example") {
    auto left = saturate(S("x"), Side::LeftConjunct);
    CHECK(left.verdict.ok);
    CHECK(left.reg.quad(B("x")) == Q(0, 0, 1, 0));

    auto right = saturate(S("x y\\x"), Side::RightConjunct);
    CHECK(right.verdict.ok);
    CHECK(right.reg.quad(B("x")) == Q(0, 1, 0, 0));
}

TEST_CASE("saturate flags a free leftward argument on the left") {
    auto sat = saturate(S("x\\y y"), Side::LeftConjunct);
    REQUIRE_FALSE(sat.verdict.ok);
    CHECK(*sat.verdict.reason == FailureReason::FreeLeftwardArgInLeft);
    CHECK(*sat.verdict.offending == occ("y", A, Left, 0, 1));
    CHECK(render_verdict(sat.verdict) == "Fail FreeLeftwardArgInLeft: y at token 0");

    auto mirrored = saturate(S("y x/y"), Side::RightConjunct);
    REQUIRE_FALSE(mirrored.verdict.ok);
    CHECK(*mirrored.verdict.reason == FailureReason::FreeRightwardArgInRight);

    // The same argument is coordinator-facing on the other side, hence allowed.
    CHECK(saturate(S("x\\y y"), Side::RightConjunct).verdict.ok);
}

TEST_CASE("quad lookups") {
    Register empty(Side::LeftConjunct);
    CHECK(empty.quad(B("q")) == Q(0, 0, 0, 0));
    CHECK(quad(saturate(S("x"), Side::LeftConjunct).reg, B("x")) == Q(0, 0, 1, 0));
    // The head y is saturated by a rightward argument: satarg, not sathead.
    CHECK(quad(saturate(S("x/y y"), Side::LeftConjunct).reg, B("y")) == Q(0, 1, 0, 0));
}

TEST_CASE("a type never saturates itself") {
    auto sat = saturate(S("x\\x"), Side::LeftConjunct);
    CHECK_FALSE(sat.verdict.ok);
    CHECK(saturate(S("x/x"), Side::LeftConjunct).reg.quad(B("x")) == Q(0, 0, 1, 1));
}

TEST_CASE("tie-break prefers heads saturated through the counted slash") {
    // One head x, two candidate arguments: the leftward one (counted in
    // sathead on the left side) wins over the rightward one.
    auto sat = saturate(S("y/x x y\\x"), Side::LeftConjunct);
    CHECK(sat.verdict.ok);
    CHECK(sat.reg.quad(B("x")) == Q(1, 0, 0, 1));
}

TEST_CASE("register rendering") {
    auto sat = saturate(S("x/y y"), Side::LeftConjunct);
    CHECK(render_register(sat.reg) == "x: <0,0,1,0>\ny: <0,1,0,0>\n");
    CHECK(render_verdict(sat.verdict) == "Ok");
}

TEST_CASE("register invariants on random sequences") {
    testing::TypeGen gen(42, {"x", "y", "z"});
    for (int iter = 0; iter < 3000; ++iter) {
        TypeSequence s = gen.sequence(5, 2, 1);
        auto occs = seq_occurrences(s);
        for (Side side : {Side::LeftConjunct, Side::RightConjunct}) {
            const Direction outward = side == Side::LeftConjunct ? Direction::Rightward : Direction::Leftward;
            auto sat = saturate(s, side);
            auto best = testing::brute_force_matching(s, side);
            for (const auto& x : basics_of(s)) {
                int heads = 0, outward_args = 0, inward_args = 0;
                for (const auto& o : occs) {
                    if (o.basic != x) continue;
                    if (o.polarity == Polarity::Head) {
                        ++heads;
                    } else if (o.direction == outward) {
                        ++outward_args;
                    } else {
                        ++inward_args;
                    }
                }
                auto q = sat.reg.quad(x);
                REQUIRE(q.satarg + q.freearg == outward_args);
                REQUIRE(q.sathead + q.freehead <= heads);
                if (q.satarg == 0) REQUIRE(q.sathead + q.freehead == heads);
                REQUIRE(heads - outward_args - inward_args == count_seq(x, s));
                REQUIRE(q.sathead + q.satarg == best[x].cardinality);
                REQUIRE(q.sathead == best[x].inward);
                if (q.sathead < inward_args) REQUIRE_FALSE(sat.verdict.ok);
            }
        }
        auto l = saturate(s, Side::LeftConjunct);
        auto r = saturate(mirror(s), Side::RightConjunct);
        REQUIRE(l.reg.entries() == r.reg.entries());
        REQUIRE(l.verdict.ok == r.verdict.ok);
    }
}

TEST_CASE("derivable first-order sequences pass both side verdicts") {
    auto types = testing::all_types({"x", "y", "s"}, 1);
    int derivable = 0;
    for (const auto& s : testing::all_sequences(types, 3)) {
        bool basic_result = false;
        for (const auto& t : derivable_types(s)) basic_result = basic_result || t.is_basic();
        if (!basic_result) continue;
        ++derivable;
        REQUIRE(saturate(s, Side::LeftConjunct).verdict.ok);
        REQUIRE(saturate(s, Side::RightConjunct).verdict.ok);
    }
    CHECK(derivable > 100);
}
