#pragma once

// Random categorial types and sequences for property tests.

#include <random>
#include <string>
#include <vector>

#include "ccount/types.hpp"

namespace ccount::testing {

class TypeGen {
public:
    TypeGen(std::uint64_t seed, std::vector<std::string> atoms) : rng_(seed), atoms_(std::move(atoms)) {}

    CatType type(int max_depth) {
        std::uniform_int_distribution<int> coin(0, 2);
        if (max_depth == 0 || coin(rng_) == 0) return atom();
        auto slash = std::uniform_int_distribution<int>(0, 1)(rng_) ? Slash::Rightward : Slash::Leftward;
        CatType r = type(max_depth - 1);
        CatType a = type(max_depth - 1);
        return CatType::fraction(r, slash, a);
    }

    CatType atom() {
        std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
        return CatType::basic(atoms_[pick(rng_)]);
    }

    TypeSequence sequence(std::size_t max_len, int max_depth, std::size_t min_len = 0) {
        std::uniform_int_distribution<std::size_t> len(min_len, max_len);
        TypeSequence s(len(rng_), CatType::basic(atoms_.front()));
        for (auto& t : s) t = type(max_depth);
        return s;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::vector<std::string> atoms_;
};

/// Every type over `atoms` with at most `slashes` nested slashes.
inline std::vector<CatType> all_types(const std::vector<std::string>& atoms, int slashes) {
    std::vector<CatType> level;
    for (const auto& a : atoms) level.push_back(CatType::basic(a));
    for (int d = 0; d < slashes; ++d) {
        std::vector<CatType> next;
        for (const auto& a : atoms) next.push_back(CatType::basic(a));
        for (const auto& r : level) {
            for (const auto& g : level) {
                next.push_back(CatType::fraction(r, Slash::Rightward, g));
                next.push_back(CatType::fraction(r, Slash::Leftward, g));
            }
        }
        level = std::move(next);
    }
    return level;
}

/// Every sequence of length 1..max_len over `types`.
inline std::vector<TypeSequence> all_sequences(const std::vector<CatType>& types, std::size_t max_len) {
    std::vector<TypeSequence> out;
    std::vector<TypeSequence> frontier{TypeSequence{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<TypeSequence> next;
        for (const auto& s : frontier) {
            for (const auto& t : types) {
                auto e = s;
                e.push_back(t);
                next.push_back(std::move(e));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace ccount::testing
