#ifndef HILBEMB_GROWTH_HPP
#define HILBEMB_GROWTH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hilbemb {

/// Subset of the standard basis in one degree, as a bitmask over basis indices.
using IndexSet = boost::dynamic_bitset<>;

IndexSet make_index_set(std::size_t n, std::span<const std::size_t> members);
IndexSet prefix_set(std::size_t n, std::size_t k);
std::vector<std::size_t> members(const IndexSet& s);

/// Layered multiplication graph of a graded ring truncated at a top degree:
/// level d holds the basis of degree d, and the successors of an element are
/// the nonzero basis elements of degree d+1 reached by multiplying with a
/// generator of degree one. Everything about growth (R_1 V) is computed here.
class GrowthGraph {
public:
    GrowthGraph() = default;
    GrowthGraph(std::vector<std::size_t> sizes, std::vector<std::vector<IndexSet>> successors);

    int top_degree() const { return static_cast<int>(sizes_.size()) - 1; }
    std::size_t size(int d) const { return sizes_.at(static_cast<std::size_t>(d)); }
    const IndexSet& successors(int d, std::size_t k) const;

    /// R_1 V for V a subset of level d < top_degree().
    IndexSet growth(int d, const IndexSet& v) const;

    /// Graph of the m-th Veronese: level i is level i*m of this graph and an
    /// edge is an m-step path.
    GrowthGraph veronese(int m) const;

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<IndexSet>> succ_;
};

/// Minimum of |R_1 W| over all r-element subsets W of level d. Exhaustive
/// branch and bound; the partial union is a lower bound for any completion.
std::size_t min_growth(const GrowthGraph& g, int d, std::size_t r);

/// min_growth(g, d, r) for r = 0..size(d). Values of r are split across
/// `workers` threads; the result does not depend on the worker count.
std::vector<std::size_t> min_growth_table(const GrowthGraph& g, int d, int workers = 1);

} // namespace hilbemb

#endif
