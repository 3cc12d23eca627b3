#ifndef HILBEMB_EMBED_HPP
#define HILBEMB_EMBED_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hilbemb/ideal.hpp"
#include "hilbemb/order.hpp"

namespace hilbemb {

// ---- search ---------------------------------------------------------------

struct OrderSearchOptions {
    /// Degree -> monomials that must open that degree's listing, in order.
    std::map<int, std::vector<Monomial>> forced;
    /// Stop after this many orders (1 = first found).
    std::size_t limit = 1;
    /// Maximum number of search nodes; 0 means unlimited.
    std::size_t node_budget = 0;
    int workers = 1;
};

struct OrderSearchResult {
    std::vector<GradedOrder> orders;
    /// True when the whole tree was explored (or the limit was reached).
    bool complete = true;
    /// An empty result is a proof of non-existence only for exact rings.
    bool conclusive = false;
    std::size_t nodes = 0;
};

/// Depth-first search degree by degree. Candidates are tried in grlex order;
/// a prefix is extended only while its growth stays minimal, and each degree
/// lists the growth of the previous degree's prefixes in nested blocks.
/// Throws BudgetExceeded when node_budget is exhausted.
OrderSearchResult find_embedding_orders(const RingPtr& ring, const OrderSearchOptions& options = {});

std::optional<GradedOrder> find_embedding_order(const RingPtr& ring,
                                                const std::map<int, std::vector<Monomial>>& forced = {});

// ---- the induced embedding -----------------------------------------------

/// Ideal whose degree-d piece is the first H^d monomials of the listing.
/// Throws PreconditionError when the prefixes are not closed under growth.
MonomialIdeal prefix_ideal(const GradedOrder& order, const HilbertSeries& h);

/// epsilon(H). Rejects H that no monomial ideal realizes (checked by
/// enumeration, bounded by `budget` ideals when nonzero).
MonomialIdeal embed(const GradedOrder& order, const HilbertSeries& h, std::size_t budget = 0);

/// Hilbert series of all monomial ideals, sorted and deduplicated.
std::vector<HilbertSeries> hilbert_poset(const RingPtr& ring, std::size_t budget = 0);

enum class LatticeMissing { max, min };

struct LatticeWitness {
    HilbertSeries h;
    HilbertSeries h2;
    LatticeMissing missing;
    HilbertSeries value;
};

/// Which closure (if any) the pair violates; meets are tested first.
std::optional<LatticeWitness> lattice_violation(const std::vector<HilbertSeries>& poset, const HilbertSeries& a,
                                                const HilbertSeries& b);

/// First violating pair in the sorted poset, pairs (i, j) with i < j taken
/// in lexicographic order.
std::optional<LatticeWitness> lattice_check(const std::vector<HilbertSeries>& poset);
std::optional<LatticeWitness> lattice_check(const RingPtr& ring, std::size_t budget = 0);

// ---- derived checks -------------------------------------------------------

struct MonomialOrderViolation {
    int degree;
    Monomial f;
    Monomial f2;
    Monomial g;
};

/// Checks that the basis is closed under divisors and that for f < f' of
/// equal degree and every common divisor g, f/g < f'/g.
std::optional<MonomialOrderViolation> is_monomial_order(const GradedOrder& order);

struct RefinementViolation {
    Monomial f;
    Monomial f2;
};

/// Relabels the variables by the degree-1 listing and checks that the order
/// refines grlex in every degree. Throws PreconditionError unless the order
/// is both an embedding order and a monomial order.
std::optional<RefinementViolation> lex_refinement_check(const GradedOrder& order);

/// The order restricted to R/I for a prefix ideal I.
GradedOrder inherit_order(const GradedOrder& order, const MonomialIdeal& prefix);

struct VeroneseRestriction {
    GrowthGraph graph;
    std::vector<std::vector<std::size_t>> listing;
    int cap;
};

/// Grading S_i = R_{im}, growth by R_m. `cap_s` defaults to cap/m.
VeroneseRestriction veronese_restrict(const GradedOrder& order, int m, std::optional<int> cap_s = std::nullopt);
std::optional<OrderViolation> check_veronese(const VeroneseRestriction& v, int workers = 1);

struct GotzmannResult {
    bool holds;
    std::optional<int> witness_degree;
    MonomialIdeal embedded;
};

/// I must be generated in degrees <= d and epsilon(H_I) must have no
/// generators in degree d+1; holds iff epsilon(H_I) has none above d+1.
GotzmannResult gotzmann_check(const GradedOrder& order, const MonomialIdeal& ideal, int d);

/// Monomials of degree d with no nonzero multiple in degree d+1. At the cap
/// this is known only for exact rings; otherwise the result is empty.
IndexSet socle(const QuotientRing& ring, int d);

/// First degree where the socle is not a prefix of the listing.
std::optional<int> socle_segment_check(const GradedOrder& order);

/// First j with betti1(I, j) > betti1(epsilon(H_I), j).
std::optional<int> betti1_dominance_check(const GradedOrder& order, const MonomialIdeal& ideal);

} // namespace hilbemb

#endif
