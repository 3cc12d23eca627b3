#include "hilbemb/embed.hpp"

#include <algorithm>
#include <set>

#include "hilbemb/enumerate.hpp"
#include "hilbemb/error.hpp"

namespace hilbemb {

namespace {

class OrderSearch {
public:
    OrderSearch(const RingPtr& ring, const OrderSearchOptions& opt) : ring_(ring), r_(*ring), opt_(opt) {
        for (int d = 0; d < r_.cap(); ++d) tables_.push_back(min_growth_table(r_.growth_graph(), d, opt_.workers));
        forced_.resize(static_cast<std::size_t>(r_.cap()) + 1);
        for (const auto& [d, mons] : opt_.forced) {
            if (d < 0 || d > r_.cap()) throw PreconditionError("forced prefix in degree outside 0..cap");
            for (const auto& m : mons) {
                auto k = r_.index_of(m);
                if (!k || m.degree() != d) {
                    throw PreconditionError("forced monomial " + r_.format(m) + " is not standard in degree " +
                                            std::to_string(d));
                }
                forced_[static_cast<std::size_t>(d)].push_back(*k);
            }
        }
        listing_.resize(static_cast<std::size_t>(r_.cap()) + 1);
    }

    OrderSearchResult run() {
        result_.conclusive = r_.is_exact();
        start_degree(0, {});
        return std::move(result_);
    }

private:
    using Chain = std::vector<IndexSet>;

    // Each returns true once the requested number of orders is reached.
    bool start_degree(int d, Chain chain) {
        if (d > r_.cap()) {
            result_.orders.emplace_back(ring_, listing_);
            return result_.orders.size() >= opt_.limit;
        }
        auto key = std::make_pair(d, chain);
        if (failed_.contains(key)) return false;
        std::size_t before = result_.orders.size();
        IndexSet used(r_.dim(d));
        IndexSet acc(d < r_.cap() ? r_.dim(d + 1) : 0);
        Chain next;
        bool stop = extend(d, chain, 0, used, acc, next);
        if (!stop && result_.orders.size() == before) failed_.insert(std::move(key));
        return stop;
    }

    bool extend(int d, const Chain& chain, std::size_t block, IndexSet& used, const IndexSet& acc, Chain& next) {
        if (opt_.node_budget && ++result_.nodes > opt_.node_budget) {
            throw BudgetExceeded("order search exceeded budget of " + std::to_string(opt_.node_budget) + " nodes");
        }
        auto& here = listing_[static_cast<std::size_t>(d)];
        std::size_t k = here.size();
        if (k == r_.dim(d)) {
            Chain sig;
            for (const auto& s : next) {
                if (sig.empty() || sig.back() != s) sig.push_back(s);
            }
            return start_degree(d + 1, std::move(sig));
        }
        while (block < chain.size() && chain[block].is_subset_of(used)) ++block;
        IndexSet allowed = block < chain.size() ? chain[block] - used : ~used;
        const auto& forced = forced_[static_cast<std::size_t>(d)];
        if (k < forced.size()) {
            IndexSet only(allowed.size());
            if (allowed.test(forced[k])) only.set(forced[k]);
            allowed = only;
        }
        for (auto c = allowed.find_first(); c != IndexSet::npos; c = allowed.find_next(c)) {
            IndexSet grown = acc;
            if (d < r_.cap()) {
                grown |= r_.growth_graph().successors(d, c);
                if (grown.count() != tables_[static_cast<std::size_t>(d)][k + 1]) continue;
                next.push_back(grown);
            }
            used.set(c);
            here.push_back(c);
            bool stop = extend(d, chain, block, used, grown, next);
            here.pop_back();
            used.reset(c);
            if (d < r_.cap()) next.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const RingPtr& ring_;
    const QuotientRing& r_;
    const OrderSearchOptions& opt_;
    std::vector<std::vector<std::size_t>> tables_;
    std::vector<std::vector<std::size_t>> forced_;
    std::vector<std::vector<std::size_t>> listing_;
    std::set<std::pair<int, Chain>> failed_;
    OrderSearchResult result_;
};

GrowthGraph truncate_graph(const GrowthGraph& g, int top) {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<IndexSet>> succ;
    for (int d = 0; d <= top; ++d) sizes.push_back(g.size(d));
    for (int d = 0; d < top; ++d) {
        std::vector<IndexSet> level;
        for (std::size_t k = 0; k < g.size(d); ++k) level.push_back(g.successors(d, k));
        succ.push_back(std::move(level));
    }
    return GrowthGraph(std::move(sizes), std::move(succ));
}

} // namespace

OrderSearchResult find_embedding_orders(const RingPtr& ring, const OrderSearchOptions& options) {
    if (options.limit == 0) return OrderSearchResult{};
    OrderSearch search(ring, options);
    return search.run();
}

std::optional<GradedOrder> find_embedding_order(const RingPtr& ring,
                                                const std::map<int, std::vector<Monomial>>& forced) {
    OrderSearchOptions opt;
    opt.forced = forced;
    auto res = find_embedding_orders(ring, opt);
    if (res.orders.empty()) return std::nullopt;
    return res.orders.front();
}

MonomialIdeal prefix_ideal(const GradedOrder& order, const HilbertSeries& h) {
    auto padded = h.padded(order.cap());
    std::vector<IndexSet> pieces;
    for (int d = 0; d <= order.cap(); ++d) {
        auto want = static_cast<std::size_t>(padded[static_cast<std::size_t>(d)]);
        if (want > order.ring().dim(d)) {
            throw PreconditionError("series exceeds the ring dimension in degree " + std::to_string(d));
        }
        pieces.push_back(order.prefix(d, want));
    }
    return MonomialIdeal(order.ring_ptr(), std::move(pieces));
}

MonomialIdeal embed(const GradedOrder& order, const HilbertSeries& h, std::size_t budget) {
    auto padded = h.padded(order.cap());
    EnumerationConstraints c;
    c.target = padded;
    bool realized = false;
    enumerate_monomial_ideals(
        order.ring_ptr(), c,
        [&](const MonomialIdeal&) {
            realized = true;
            return false;
        },
        budget);
    if (!realized) throw PreconditionError("no monomial ideal has Hilbert series " + padded.to_string());
    return prefix_ideal(order, padded);
}

std::vector<HilbertSeries> hilbert_poset(const RingPtr& ring, std::size_t budget) {
    std::set<HilbertSeries> seen;
    enumerate_monomial_ideals(
        ring, {},
        [&](const MonomialIdeal& i) {
            seen.insert(i.hilbert_series());
            return true;
        },
        budget);
    return {seen.begin(), seen.end()};
}

std::optional<LatticeWitness> lattice_violation(const std::vector<HilbertSeries>& poset, const HilbertSeries& a,
                                                const HilbertSeries& b) {
    auto lo = pointwise_min(a, b);
    if (!std::binary_search(poset.begin(), poset.end(), lo)) return LatticeWitness{a, b, LatticeMissing::min, lo};
    auto hi = pointwise_max(a, b);
    if (!std::binary_search(poset.begin(), poset.end(), hi)) return LatticeWitness{a, b, LatticeMissing::max, hi};
    return std::nullopt;
}

std::optional<LatticeWitness> lattice_check(const std::vector<HilbertSeries>& poset) {
    for (std::size_t i = 0; i < poset.size(); ++i) {
        for (std::size_t j = i + 1; j < poset.size(); ++j) {
            if (auto w = lattice_violation(poset, poset[i], poset[j])) return w;
        }
    }
    return std::nullopt;
}

std::optional<LatticeWitness> lattice_check(const RingPtr& ring, std::size_t budget) {
    return lattice_check(hilbert_poset(ring, budget));
}

std::optional<MonomialOrderViolation> is_monomial_order(const GradedOrder& order) {
    const auto& r = order.ring();
    for (int d = 1; d <= r.cap(); ++d) {
        for (const auto& m : r.standard_basis(d)) {
            for (std::size_t v = 0; v < r.num_vars(); ++v) {
                if (m[v] == 0) continue;
                auto x = Monomial::variable(r.num_vars(), v);
                auto q = *m.quotient(x);
                if (r.is_zero(q)) return MonomialOrderViolation{d, m, q, x};
            }
        }
    }
    for (int d = 1; d <= r.cap(); ++d) {
        auto mons = order.monomials(d);
        for (std::size_t p = 0; p < mons.size(); ++p) {
            for (std::size_t q = p + 1; q < mons.size(); ++q) {
                auto g = mons[p].gcd(mons[q]);
                // every divisor of g except 1
                std::vector<int> e(r.num_vars(), 0);
                while (true) {
                    std::size_t v = 0;
                    while (v < e.size() && ++e[v] > g[v]) e[v++] = 0;
                    if (v == e.size()) break;
                    Monomial div(e);
                    auto a = *mons[p].quotient(div);
                    auto b = *mons[q].quotient(div);
                    if (!order.less(a, b)) return MonomialOrderViolation{d, mons[p], mons[q], div};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<RefinementViolation> lex_refinement_check(const GradedOrder& order) {
    if (auto v = check_embedding_order(order)) {
        throw PreconditionError("lex refinement needs an embedding order (" + to_string(v->kind) + " at degree " +
                                std::to_string(v->degree) + ")");
    }
    if (is_monomial_order(order)) throw PreconditionError("lex refinement needs a monomial order");
    const auto& r = order.ring();
    if (r.cap() < 1) return std::nullopt;
    auto linear = order.monomials(1);
    if (linear.size() != r.num_vars()) throw PreconditionError("lex refinement needs every variable in degree 1");
    std::vector<std::size_t> var_at;
    for (const auto& x : linear) {
        auto e = x.exponents();
        var_at.push_back(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin()));
    }
    auto relabel = [&](const Monomial& m) {
        std::vector<int> e(var_at.size());
        for (std::size_t p = 0; p < var_at.size(); ++p) e[p] = m[var_at[p]];
        return Monomial(std::move(e));
    };
    for (int d = 1; d <= r.cap(); ++d) {
        auto mons = order.monomials(d);
        for (std::size_t p = 0; p + 1 < mons.size(); ++p) {
            if (cmp_grlex(relabel(mons[p]), relabel(mons[p + 1])) > 0) {
                return RefinementViolation{mons[p], mons[p + 1]};
            }
        }
    }
    return std::nullopt;
}

GradedOrder inherit_order(const GradedOrder& order, const MonomialIdeal& prefix) {
    const auto& r = order.ring();
    if (&prefix.ring() != &r) throw PreconditionError("ideal belongs to a different ring");
    for (int d = 0; d <= r.cap(); ++d) {
        if (prefix.piece(d) != order.prefix(d, prefix.piece(d).count())) {
            throw PreconditionError("ideal is not a prefix ideal of the order in degree " + std::to_string(d));
        }
    }
    auto gens = r.generators();
    for (auto& g : prefix.minimal_generators()) gens.push_back(std::move(g));
    auto quotient = make_ring(r.var_names(), gens, r.cap(), r.truncate_above());
    std::vector<std::vector<Monomial>> listing;
    for (int d = 0; d <= r.cap(); ++d) {
        std::vector<Monomial> keep;
        for (auto k : order.listing(d)) {
            if (!prefix.piece(d).test(k)) keep.push_back(r.basis_element(d, k));
        }
        listing.push_back(std::move(keep));
    }
    return GradedOrder::from_monomials(quotient, listing);
}

VeroneseRestriction veronese_restrict(const GradedOrder& order, int m, std::optional<int> cap_s) {
    if (m < 1) throw PreconditionError("Veronese degree must be at least 1");
    int top = cap_s.value_or(order.cap() / m);
    if (top < 0 || static_cast<long>(top) * m > order.cap()) {
        throw PreconditionError("Veronese cap " + std::to_string(top) + " times " + std::to_string(m) +
                                " exceeds the ring cap " + std::to_string(order.cap()));
    }
    auto graph = truncate_graph(order.ring().growth_graph().veronese(m), top);
    std::vector<std::vector<std::size_t>> listing;
    for (int i = 0; i <= top; ++i) listing.push_back(order.listing(i * m));
    return VeroneseRestriction{std::move(graph), std::move(listing), top};
}

std::optional<OrderViolation> check_veronese(const VeroneseRestriction& v, int workers) {
    return check_filtration(v.graph, v.listing, workers);
}

GotzmannResult gotzmann_check(const GradedOrder& order, const MonomialIdeal& ideal, int d) {
    const int cap = order.cap();
    for (int j = d + 1; j <= cap; ++j) {
        if (betti1(ideal, j) != 0) {
            throw PreconditionError("ideal has a minimal generator in degree " + std::to_string(j) + " > " +
                                    std::to_string(d));
        }
    }
    auto e = prefix_ideal(order, ideal.hilbert_series());
    if (d + 1 <= cap && betti1(e, d + 1) != 0) {
        throw PreconditionError("embedded ideal has a minimal generator in degree " + std::to_string(d + 1));
    }
    for (int j = d + 2; j <= cap; ++j) {
        if (betti1(e, j) != 0) return GotzmannResult{false, j, e};
    }
    return GotzmannResult{true, std::nullopt, e};
}

IndexSet socle(const QuotientRing& ring, int d) {
    IndexSet s(ring.dim(d));
    if (d == ring.cap()) {
        if (ring.is_exact()) s.set();
        return s;
    }
    for (std::size_t k = 0; k < ring.dim(d); ++k) {
        if (ring.growth_graph().successors(d, k).none()) s.set(k);
    }
    return s;
}

std::optional<int> socle_segment_check(const GradedOrder& order) {
    for (int d = 0; d <= order.cap(); ++d) {
        auto s = socle(order.ring(), d);
        if (s != order.prefix(d, s.count())) return d;
    }
    return std::nullopt;
}

std::optional<int> betti1_dominance_check(const GradedOrder& order, const MonomialIdeal& ideal) {
    auto e = prefix_ideal(order, ideal.hilbert_series());
    for (int j = 0; j <= order.cap(); ++j) {
        if (betti1(ideal, j) > betti1(e, j)) return j;
    }
    return std::nullopt;
}

} // namespace hilbemb
