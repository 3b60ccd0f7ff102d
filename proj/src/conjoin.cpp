#include "ccount/conjoin.hpp"

#include <sstream>
#include <stdexcept>

namespace ccount {

namespace {

void require_sides(const Register& reg_left, const Register& reg_right) {
    if (reg_left.side() != Side::LeftConjunct || reg_right.side() != Side::RightConjunct) {
        throw std::invalid_argument("conjoinability needs a left-conjunct and a right-conjunct register");
    }
}

struct LambdaRho {
    int lambda;
    int rho;
    ViolationSet violations;
};

LambdaRho check(const Quadruple& l, const Quadruple& r) {
    LambdaRho out{l.freehead - r.freearg, r.freehead - l.freearg, 0};
    if (out.lambda > r.satarg) out.violations |= LambdaVsSatargR;
    if (out.rho > l.satarg) out.violations |= RhoVsSatargL;
    // Heads saturated through either slash can absorb surplus arguments from
    // the other side; sathead alone rejects derivable x/x-style modifiers.
    if (-out.lambda > l.sathead + l.satarg) out.violations |= NegLambdaVsSatheadL;
    if (-out.rho > r.sathead + r.satarg) out.violations |= NegRhoVsSatheadR;
    return out;
}

// Walks the union of both registers' types in order, once each, skipping the
// goal.  The visitor returns false to stop early.
template <typename Visit>
std::size_t for_each_type(const Register& reg_left, const Register& reg_right, const BasicType& goal,
                          Visit&& visit) {
    static const Quadruple zero{};
    const auto& le = reg_left.entries();
    const auto& re = reg_right.entries();
    std::size_t i = 0, j = 0, examined = 0;
    while (i < le.size() || j < re.size()) {
        const BasicType* x;
        const Quadruple* l = &zero;
        const Quadruple* r = &zero;
        if (j == re.size() || (i < le.size() && le[i].first < re[j].first)) {
            x = &le[i].first;
            l = &le[i++].second;
        } else if (i == le.size() || re[j].first < le[i].first) {
            x = &re[j].first;
            r = &re[j++].second;
        } else {
            x = &le[i].first;
            l = &le[i++].second;
            r = &re[j++].second;
        }
        if (*x == goal) continue;
        ++examined;
        if (!visit(*x, check(*l, *r))) break;
    }
    return examined;
}

void require_all(const std::vector<Register>& left, const std::vector<Register>& right) {
    for (const auto& r : left) {
        if (r.side() != Side::LeftConjunct) throw std::invalid_argument("LL holds a right-conjunct register");
    }
    for (const auto& r : right) {
        if (r.side() != Side::RightConjunct) throw std::invalid_argument("RR holds a left-conjunct register");
    }
}

}  // namespace

std::vector<std::string> violation_names(ViolationSet v) {
    std::vector<std::string> out;
    if (v & LambdaVsSatargR) out.emplace_back("LambdaVsSatargR");
    if (v & RhoVsSatargL) out.emplace_back("RhoVsSatargL");
    if (v & NegLambdaVsSatheadL) out.emplace_back("NegLambdaVsSatheadL");
    if (v & NegRhoVsSatheadR) out.emplace_back("NegRhoVsSatheadR");
    return out;
}

std::pair<int, int> lambda_rho(const BasicType& x, const Register& reg_left, const Register& reg_right) {
    require_sides(reg_left, reg_right);
    auto c = check(reg_left.quad(x), reg_right.quad(x));
    return {c.lambda, c.rho};
}

ViolationSet conjoinable_for(const BasicType& x, const Register& reg_left, const Register& reg_right) {
    require_sides(reg_left, reg_right);
    return check(reg_left.quad(x), reg_right.quad(x)).violations;
}

PairVerdict conjoinable(const Register& reg_left, const Register& reg_right, const BasicType& goal) {
    require_sides(reg_left, reg_right);
    PairVerdict out;
    for_each_type(reg_left, reg_right, goal, [&](const BasicType& x, const LambdaRho& c) {
        out.detail.push_back({x, c.lambda, c.rho, c.violations});
        if (c.violations) out.conjoinable = false;
        return true;
    });
    return out;
}

bool is_conjoinable(const Register& reg_left, const Register& reg_right, const BasicType& goal,
                    std::size_t* examined) {
    require_sides(reg_left, reg_right);
    bool ok = true;
    std::size_t n = for_each_type(reg_left, reg_right, goal, [&](const BasicType&, const LambdaRho& c) {
        if (c.violations) ok = false;
        return ok;
    });
    if (examined) *examined = n;
    return ok;
}

std::string render_pair_verdict(const PairVerdict& v) {
    std::ostringstream out;
    for (const auto& d : v.detail) {
        if (!d.violations) continue;
        out << d.basic.name() << ": λ=" << d.lambda << " ρ=" << d.rho << " violated=[";
        auto names = violation_names(d.violations);
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
        out << "]\n";
    }
    return out.str();
}

Rational FilterStats::cp_over_pa() const { return pa == 0 ? Rational(0) : Rational(BigInt(cp), pa); }
Rational FilterStats::aa_over_cp() const { return cp == 0 ? Rational(0) : Rational(BigInt(aa), BigInt(cp)); }
Rational FilterStats::aa_over_pa() const { return pa == 0 ? Rational(0) : Rational(BigInt(aa), pa); }

FilterResult filter_product_serial(const std::vector<Register>& left, const std::vector<Register>& right,
                                   const BasicType& goal) {
    require_all(left, right);
    FilterResult out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (is_conjoinable(left[i], right[j], goal)) out.pairs.push_back({i, j});
        }
    }
    out.stats.ll = left.size();
    out.stats.rr = right.size();
    out.stats.cp = static_cast<std::uint64_t>(left.size()) * right.size();
    out.stats.aa = out.pairs.size();
    return out;
}

FilterResult filter_product(const std::vector<Register>& left, const std::vector<Register>& right,
                            const BasicType& goal) {
    require_all(left, right);

    // One row of survivors per left member, concatenated in order afterwards.
    std::vector<std::vector<std::size_t>> rows(left.size());
    const auto n = static_cast<std::int64_t>(left.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        const auto& reg = left[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (is_conjoinable(reg, right[j], goal)) row.push_back(j);
        }
    }

    FilterResult out;
    std::size_t total = 0;
    for (const auto& row : rows) total += row.size();
    out.pairs.reserve(total);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j : rows[i]) out.pairs.push_back({i, j});
    }
    out.stats.ll = left.size();
    out.stats.rr = right.size();
    out.stats.cp = static_cast<std::uint64_t>(left.size()) * right.size();
    out.stats.aa = out.pairs.size();
    return out;
}

}  // namespace ccount
