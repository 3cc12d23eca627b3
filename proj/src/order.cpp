#include "hilbemb/order.hpp"

#include <algorithm>

#include "hilbemb/error.hpp"

namespace hilbemb {

GradedOrder::GradedOrder(RingPtr ring, std::vector<std::vector<std::size_t>> listing)
    : ring_(std::move(ring)), listing_(std::move(listing)) {
    const auto& r = *ring_;
    if (listing_.size() != static_cast<std::size_t>(r.cap()) + 1) {
        throw PreconditionError("order must list every degree 0.." + std::to_string(r.cap()));
    }
    for (int d = 0; d <= r.cap(); ++d) {
        const auto& l = listing_[static_cast<std::size_t>(d)];
        std::vector<std::size_t> rk(r.dim(d), SIZE_MAX);
        if (l.size() != r.dim(d)) {
            throw PreconditionError("degree " + std::to_string(d) + " lists " + std::to_string(l.size()) +
                                    " monomials, basis has " + std::to_string(r.dim(d)));
        }
        for (std::size_t p = 0; p < l.size(); ++p) {
            if (l[p] >= rk.size() || rk[l[p]] != SIZE_MAX) {
                throw PreconditionError("degree " + std::to_string(d) + " is not a permutation of the basis");
            }
            rk[l[p]] = p;
        }
        rank_.push_back(std::move(rk));
    }
}

GradedOrder GradedOrder::grlex(RingPtr ring) {
    std::vector<std::vector<std::size_t>> l;
    for (int d = 0; d <= ring->cap(); ++d) {
        std::vector<std::size_t> p(ring->dim(d));
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = k;
        l.push_back(std::move(p));
    }
    return GradedOrder(std::move(ring), std::move(l));
}

GradedOrder GradedOrder::from_monomials(RingPtr ring, const std::vector<std::vector<Monomial>>& listing) {
    const auto& r = *ring;
    if (listing.size() != static_cast<std::size_t>(r.cap()) + 1) {
        throw PreconditionError("order must list every degree 0.." + std::to_string(r.cap()));
    }
    std::vector<std::vector<std::size_t>> l;
    for (int d = 0; d <= r.cap(); ++d) {
        std::vector<bool> seen(r.dim(d), false);
        std::vector<std::size_t> p;
        for (const auto& m : listing[static_cast<std::size_t>(d)]) {
            auto k = r.index_of(m);
            if (!k || m.degree() != d) {
                throw PreconditionError("order lists " + r.format(m) + " in degree " + std::to_string(d) +
                                        ", which is not a standard monomial of that degree");
            }
            if (seen[*k]) throw PreconditionError("order lists " + r.format(m) + " twice");
            seen[*k] = true;
            p.push_back(*k);
        }
        for (std::size_t k = 0; k < seen.size(); ++k) {
            if (!seen[k]) {
                throw PreconditionError("order is missing " + r.format(r.basis_element(d, k)) + " in degree " +
                                        std::to_string(d));
            }
        }
        l.push_back(std::move(p));
    }
    return GradedOrder(std::move(ring), std::move(l));
}

std::vector<Monomial> GradedOrder::monomials(int d) const {
    std::vector<Monomial> out;
    for (auto k : listing(d)) out.push_back(ring_->basis_element(d, k));
    return out;
}

std::size_t GradedOrder::rank_of(const Monomial& m) const {
    auto k = ring_->index_of(m);
    if (!k) throw PreconditionError(ring_->format(m) + " is not a standard monomial");
    return rank(m.degree(), *k);
}

IndexSet GradedOrder::prefix(int d, std::size_t r) const {
    const auto& l = listing(d);
    if (r > l.size()) throw std::out_of_range("prefix longer than the basis");
    IndexSet s(l.size());
    for (std::size_t p = 0; p < r; ++p) s.set(l[p]);
    return s;
}

bool GradedOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return rank_of(a) < rank_of(b);
}

std::string to_string(ViolationKind k) { return k == ViolationKind::not_prefix ? "not_prefix" : "not_minimal"; }

std::optional<OrderViolation> check_filtration(const GrowthGraph& graph,
                                               const std::vector<std::vector<std::size_t>>& listing, int workers) {
    for (int d = 0; d < graph.top_degree(); ++d) {
        const auto& here = listing.at(static_cast<std::size_t>(d));
        const auto& next = listing.at(static_cast<std::size_t>(d) + 1);
        std::vector<std::size_t> next_rank(next.size());
        for (std::size_t p = 0; p < next.size(); ++p) next_rank[next[p]] = p;
        auto table = min_growth_table(graph, d, workers);

        IndexSet acc(graph.size(d + 1));
        for (std::size_t k = 1; k <= here.size(); ++k) {
            acc |= graph.successors(d, here[k - 1]);
            std::size_t n = acc.count();
            if (n != table[k]) return OrderViolation{d, k, ViolationKind::not_minimal};
            for (auto j = acc.find_first(); j != IndexSet::npos; j = acc.find_next(j)) {
                if (next_rank[j] >= n) return OrderViolation{d, k, ViolationKind::not_prefix};
            }
        }
    }
    return std::nullopt;
}

std::optional<OrderViolation> check_embedding_order(const GradedOrder& order, int workers) {
    return check_filtration(order.ring().growth_graph(), order.listings(), workers);
}

EmbeddingCertificate certify(const GradedOrder& order, int workers) {
    if (auto v = check_embedding_order(order, workers)) {
        throw VerificationError("not an embedding order: " + to_string(v->kind) + " at degree " +
                                std::to_string(v->degree) + ", prefix size " + std::to_string(v->prefix_size));
    }
    return EmbeddingCertificate{order, order.cap()};
}

} // namespace hilbemb
