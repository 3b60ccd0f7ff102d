#pragma once

// Conjoinability of a left and a right assignment, and the LL x RR product
// filter.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccount/occurrence.hpp"

namespace ccount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum Violation : std::uint8_t {
    LambdaVsSatargR = 1u << 0,      // lambda > satarg(R)
    RhoVsSatargL = 1u << 1,         // rho > satarg(L)
    NegLambdaVsSatheadL = 1u << 2,  // -lambda > sathead(L) + satarg(L)
    NegRhoVsSatheadR = 1u << 3,     // -rho > sathead(R) + satarg(R)
};

/// Bitmask of Violation flags.
using ViolationSet = std::uint8_t;

std::vector<std::string> violation_names(ViolationSet v);

struct TypeDetail {
    BasicType basic;
    int lambda = 0;
    int rho = 0;
    ViolationSet violations = 0;
};

struct PairVerdict {
    bool conjoinable = true;
    std::vector<TypeDetail> detail;  // every examined type, sorted
};

/// lambda = freehead(L) - freearg(R), rho = freehead(R) - freearg(L).
/// Throws std::invalid_argument unless reg_left is a left-conjunct register
/// and reg_right a right-conjunct one.
std::pair<int, int> lambda_rho(const BasicType& x, const Register& reg_left, const Register& reg_right);

ViolationSet conjoinable_for(const BasicType& x, const Register& reg_left, const Register& reg_right);

/// Checks every basic type present in either register except the goal.
PairVerdict conjoinable(const Register& reg_left, const Register& reg_right, const BasicType& goal);

/// Allocation-free form of conjoinable().  If `examined` is given it receives
/// the number of basic types checked.
bool is_conjoinable(const Register& reg_left, const Register& reg_right, const BasicType& goal,
                    std::size_t* examined = nullptr);

/// `x: λ=<v> ρ=<v> violated=[...]` for each failing type.
std::string render_pair_verdict(const PairVerdict& v);

struct FilterStats {
    BigInt pa = 1;
    std::uint64_t ll = 0;
    std::uint64_t rr = 0;
    std::uint64_t cp = 0;
    std::uint64_t aa = 0;

    Rational cp_over_pa() const;
    Rational aa_over_cp() const;
    Rational aa_over_pa() const;
};

struct SurvivingPair {
    std::size_t left = 0;   // index into LL
    std::size_t right = 0;  // index into RR

    friend bool operator==(const SurvivingPair&, const SurvivingPair&) = default;
};

struct FilterResult {
    std::vector<SurvivingPair> pairs;  // ordered by (left, right)
    FilterStats stats;
};

/// Pairwise conjoinability over LL x RR, OpenMP-parallel over LL.
/// `stats.pa` is left at 1; the caller owns the sentence-level product.
FilterResult filter_product(const std::vector<Register>& left, const std::vector<Register>& right,
                            const BasicType& goal);

/// Single-threaded reference for filter_product.
FilterResult filter_product_serial(const std::vector<Register>& left, const std::vector<Register>& right,
                                   const BasicType& goal);

}  // namespace ccount
