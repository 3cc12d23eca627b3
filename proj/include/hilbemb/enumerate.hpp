#ifndef HILBEMB_ENUMERATE_HPP
#define HILBEMB_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hilbemb/ideal.hpp"

namespace hilbemb {

struct EnumerationConstraints {
    /// Exact Hilbert series to match (zero-padded to the cap).
    std::optional<HilbertSeries> target;
    /// Optional inclusive [min, max] size of each degree piece; missing
    /// degrees are unconstrained.
    std::vector<std::pair<std::size_t, std::size_t>> size_bounds;
};

/// Return false to stop the enumeration early.
using IdealVisitor = std::function<bool(const MonomialIdeal&)>;

/// Visits every monomial ideal of the ring (up to its cap) satisfying the
/// constraints, each exactly once, in a fixed order: degree by degree, piece
/// sizes ascending, then lexicographic in the basis indices. A nonzero
/// `budget` caps the number of visited ideals; exceeding it throws
/// BudgetExceeded. Returns the number of ideals visited.
std::size_t enumerate_monomial_ideals(const RingPtr& ring, const EnumerationConstraints& constraints,
                                      const IdealVisitor& visit, std::size_t budget = 0);

std::vector<MonomialIdeal> all_monomial_ideals(const RingPtr& ring, const EnumerationConstraints& constraints = {},
                                               std::size_t budget = 0);

/// First ideal (in enumeration order) with the given series, if any.
std::optional<MonomialIdeal> find_ideal_with_series(const RingPtr& ring, const HilbertSeries& series);

} // namespace hilbemb

#endif
