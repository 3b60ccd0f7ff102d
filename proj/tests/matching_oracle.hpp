#pragma once

// Exhaustive search over direction-respecting matchings, independent of the
// augmenting-path matcher used by saturate().

#include <map>
#include <utility>
#include <vector>

#include "ccount/occurrence.hpp"

namespace ccount::testing {

struct BestMatching {
    int cardinality = 0;
    int inward = 0;  // arguments matched that point away from the coordinator

    friend bool operator==(const BestMatching&, const BestMatching&) = default;
};

inline bool can_take(const Occurrence& arg, const Occurrence& head) {
    if (arg.position.token == head.position.token) return false;
    if (arg.direction == Direction::Rightward) {
        return std::pair(head.position.token, head.position.rank) > std::pair(arg.position.token, arg.position.rank);
    }
    return std::pair(head.position.token, head.position.rank) < std::pair(arg.position.token, arg.position.rank);
}

namespace detail {

inline void search(const std::vector<Occurrence>& args, const std::vector<Occurrence>& heads, Direction inward,
                   std::size_t a, std::vector<bool>& used, BestMatching cur, BestMatching& best) {
    if (a == args.size()) {
        if (cur.cardinality > best.cardinality ||
            (cur.cardinality == best.cardinality && cur.inward > best.inward)) {
            best = cur;
        }
        return;
    }
    search(args, heads, inward, a + 1, used, cur, best);
    for (std::size_t h = 0; h < heads.size(); ++h) {
        if (used[h] || !can_take(args[a], heads[h])) continue;
        used[h] = true;
        BestMatching next{cur.cardinality + 1, cur.inward + (args[a].direction == inward ? 1 : 0)};
        search(args, heads, inward, a + 1, used, next, best);
        used[h] = false;
    }
}

}  // namespace detail

/// Lexicographically best (cardinality, inward) per basic type.
inline std::map<BasicType, BestMatching> brute_force_matching(const TypeSequence& s, Side side) {
    const Direction inward = side == Side::LeftConjunct ? Direction::Leftward : Direction::Rightward;
    std::map<BasicType, std::pair<std::vector<Occurrence>, std::vector<Occurrence>>> groups;
    for (const auto& o : seq_occurrences(s)) {
        auto& g = groups[o.basic];
        (o.polarity == Polarity::Head ? g.second : g.first).push_back(o);
    }
    std::map<BasicType, BestMatching> out;
    for (const auto& [x, g] : groups) {
        std::vector<bool> used(g.second.size(), false);
        BestMatching best;
        detail::search(g.first, g.second, inward, 0, used, {}, best);
        out[x] = best;
    }
    return out;
}

}  // namespace ccount::testing
