#include "ccount/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccount {

namespace {

void add_unique(std::vector<CatType>& cell, const CatType& t) {
    if (std::find(cell.begin(), cell.end(), t) == cell.end()) cell.push_back(t);
}

void combine(const std::vector<CatType>& lhs, const std::vector<CatType>& rhs, std::vector<CatType>& out) {
    for (const auto& a : lhs) {
        for (const auto& b : rhs) {
            if (!a.is_basic() && a.slash() == Slash::Rightward && a.argument() == b) add_unique(out, a.result());
            if (!b.is_basic() && b.slash() == Slash::Leftward && b.argument() == a) add_unique(out, b.result());
        }
    }
}

TypeSequence slice(const TypeSequence& s, std::size_t begin, std::size_t end) {
    return TypeSequence(s.begin() + static_cast<std::ptrdiff_t>(begin), s.begin() + static_cast<std::ptrdiff_t>(end));
}

}  // namespace

AbChart::AbChart(const TypeSequence& s) : n_(s.size()), cells_((s.size() + 1) * (s.size() + 1)) {
    for (std::size_t i = 0; i < n_; ++i) cells_[i * (n_ + 1) + i + 1].push_back(s[i]);
    for (std::size_t width = 2; width <= n_; ++width) {
        for (std::size_t i = 0; i + width <= n_; ++i) {
            const std::size_t j = i + width;
            auto& out = cells_[i * (n_ + 1) + j];
            for (std::size_t k = i + 1; k < j; ++k) combine(cell(i, k), cell(k, j), out);
        }
    }
}

const std::vector<CatType>& AbChart::cell(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > n_) throw std::out_of_range("empty or out-of-range chart span");
    return cells_[begin * (n_ + 1) + end];
}

bool ab_derive(const TypeSequence& s, const CatType& goal) {
    if (s.empty()) return false;
    const AbChart chart(s);
    const auto& top = chart.cell(0, s.size());
    return std::find(top.begin(), top.end(), goal) != top.end();
}

std::vector<CatType> derivable_types(const TypeSequence& s) {
    if (s.empty()) return {};
    auto out = AbChart(s).cell(0, s.size());
    std::sort(out.begin(), out.end(), textual_less);
    return out;
}

CoordResult coord_derive(const TypeSequence& left, const TypeSequence& right, const CatType& goal) {
    if (left.empty() || right.empty()) return {};
    const AbChart lchart(left);
    const AbChart rchart(right);
    const std::size_t n = left.size(), m = right.size();

    for (std::size_t i = 0; i < n; ++i) {
        const auto& c1_types = lchart.cell(i, n);
        for (std::size_t j = m; j >= 1; --j) {
            std::vector<CatType> shared;
            for (const auto& t : rchart.cell(0, j)) {
                if (std::find(c1_types.begin(), c1_types.end(), t) != c1_types.end()) shared.push_back(t);
            }
            std::sort(shared.begin(), shared.end(), textual_less);
            for (const auto& c : shared) {
                TypeSequence joined = slice(left, 0, i);
                joined.push_back(c);
                joined.insert(joined.end(), right.begin() + static_cast<std::ptrdiff_t>(j), right.end());
                if (ab_derive(joined, goal)) {
                    return {true, CoordWitness{slice(left, 0, i), slice(left, i, n), slice(right, 0, j),
                                               slice(right, j, m), c}};
                }
            }
        }
    }
    return {};
}

}  // namespace ccount
