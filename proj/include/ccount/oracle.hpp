#pragma once

// Brute-force AB (application-only) derivability, used as ground truth for
// the filter.

#include <optional>
#include <vector>

#include "ccount/types.hpp"

namespace ccount {

/// CYK chart over a type sequence under forward (`a/b b => a`) and backward
/// (`b a\b => a`) application.
class AbChart {
public:
    explicit AbChart(const TypeSequence& s);

    std::size_t size() const noexcept { return n_; }
    /// Types derivable from tokens [begin, end).
    const std::vector<CatType>& cell(std::size_t begin, std::size_t end) const;

private:
    std::size_t n_;
    std::vector<std::vector<CatType>> cells_;  // row-major (begin, end)
};

bool ab_derive(const TypeSequence& s, const CatType& goal);

/// Everything the whole sequence derives, in textual order.
std::vector<CatType> derivable_types(const TypeSequence& s);

struct CoordWitness {
    TypeSequence y_prime;
    TypeSequence c1;
    TypeSequence c2;
    TypeSequence z_prime;
    CatType c;
};

struct CoordResult {
    bool derivable = false;
    std::optional<CoordWitness> witness;
};

/// `L & R => goal` under the coordination scheme: some non-empty suffix C1 of
/// L and non-empty prefix C2 of R both derive a type c, and Y' c Z' => goal.
/// The witness is the first found trying the longest C1, then the longest C2,
/// then c in textual order.
CoordResult coord_derive(const TypeSequence& left, const TypeSequence& right, const CatType& goal);

}  // namespace ccount
