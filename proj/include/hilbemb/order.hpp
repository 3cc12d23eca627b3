#ifndef HILBEMB_ORDER_HPP
#define HILBEMB_ORDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbemb/ring.hpp"

namespace hilbemb {

/// A graded total order on the standard basis: for every degree 0..cap a
/// permutation of the basis indices, smallest first. Segments are prefixes.
class GradedOrder {
public:
    /// `listing[d]` must be a permutation of 0..dim(d)-1 for every d <= cap.
    GradedOrder(RingPtr ring, std::vector<std::vector<std::size_t>> listing);

    /// grlex order (the basis order of the ring).
    static GradedOrder grlex(RingPtr ring);
    /// Throws PreconditionError naming a missing, repeated or non-standard
    /// monomial when some degree is not a permutation of the basis.
    static GradedOrder from_monomials(RingPtr ring, const std::vector<std::vector<Monomial>>& listing);

    const QuotientRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    int cap() const { return ring_->cap(); }

    const std::vector<std::size_t>& listing(int d) const { return listing_.at(static_cast<std::size_t>(d)); }
    const std::vector<std::vector<std::size_t>>& listings() const { return listing_; }
    std::vector<Monomial> monomials(int d) const;
    /// Position of basis index k within degree d.
    std::size_t rank(int d, std::size_t k) const { return rank_.at(static_cast<std::size_t>(d)).at(k); }
    /// Position of a standard monomial; throws if m is not standard.
    std::size_t rank_of(const Monomial& m) const;
    /// The first r elements of degree d.
    IndexSet prefix(int d, std::size_t r) const;
    bool less(const Monomial& a, const Monomial& b) const;

    bool operator==(const GradedOrder& other) const { return listing_ == other.listing_; }

private:
    RingPtr ring_;
    std::vector<std::vector<std::size_t>> listing_;
    std::vector<std::vector<std::size_t>> rank_;
};

enum class ViolationKind { not_prefix, not_minimal };

std::string to_string(ViolationKind k);

struct OrderViolation {
    int degree;
    std::size_t prefix_size;
    ViolationKind kind;
    bool operator==(const OrderViolation&) const = default;
};

/// Checks every prefix V of every degree d below the top of the graph: the
/// growth of V must be a prefix of degree d+1, and its size must equal the
/// minimum growth over all subsets of that size. Returns the violation with
/// the smallest (d, |V|); minimality is tested before the prefix condition.
std::optional<OrderViolation> check_filtration(const GrowthGraph& graph,
                                               const std::vector<std::vector<std::size_t>>& listing,
                                               int workers = 1);

std::optional<OrderViolation> check_embedding_order(const GradedOrder& order, int workers = 1);

struct EmbeddingCertificate {
    GradedOrder order;
    int verified_cap;
};

/// Throws VerificationError with the violation when the order fails.
EmbeddingCertificate certify(const GradedOrder& order, int workers = 1);

} // namespace hilbemb

#endif
