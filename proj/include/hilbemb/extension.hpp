#ifndef HILBEMB_EXTENSION_HPP
#define HILBEMB_EXTENSION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbemb/ideal.hpp"
#include "hilbemb/order.hpp"

namespace hilbemb {

/// S = R[z]/(z^t) over a base ring R with a certified embedding order.
/// t = nullopt stands for t = infinity. S is itself a QuotientRing on the
/// variables of R followed by z.
class ExtensionRing {
public:
    ExtensionRing(EmbeddingCertificate base, std::optional<int> t, int cap, std::string z_name = "z");

    const QuotientRing& base() const { return base_.order.ring(); }
    const GradedOrder& base_order() const { return base_.order; }
    const RingPtr& ring_ptr() const { return ring_; }
    const QuotientRing& ring() const { return *ring_; }
    std::optional<int> t() const { return t_; }
    int cap() const { return ring_->cap(); }
    std::size_t z_index() const { return base().num_vars(); }

    /// Largest level index in degree d: min(d, t-1).
    int top_level(int d) const;
    /// |R_{d-i}|.
    std::size_t level_size(int d, int i) const { return base().dim(d - i); }

    /// (level i, basis index in R_{d-i}) of the k-th basis element of S_d.
    std::pair<int, std::size_t> split(int d, std::size_t k) const { return split_.at(static_cast<std::size_t>(d)).at(k); }
    std::size_t join(int d, int i, std::size_t base_index) const;

    /// V_{e, r}: the first r monomials of R_e in the base order.
    IndexSet base_prefix(int e, std::size_t r) const { return base_.order.prefix(e, r); }
    /// R_k V for V a subset of R_e (k-fold growth).
    IndexSet base_growth(int e, const IndexSet& v, int k) const;

private:
    EmbeddingCertificate base_;
    std::optional<int> t_;
    RingPtr ring_;
    std::vector<std::vector<std::pair<int, std::size_t>>> split_;
    std::vector<std::vector<std::vector<std::size_t>>> join_;
};

/// Levels W_{d-i} (i = 0..top_level(d)) of a multigraded subset of S_d,
/// each a subset of the base basis in degree d-i.
struct CoefficientSequence {
    int d;
    std::vector<IndexSet> levels;

    std::size_t size() const;
    bool operator==(const CoefficientSequence&) const = default;
};

CoefficientSequence coefficient_sequence(const ExtensionRing& s, int d, const IndexSet& w);
/// Throws PreconditionError for monomials of the wrong degree or with
/// z-exponent >= t.
CoefficientSequence coefficient_sequence(const ExtensionRing& s, int d, const std::vector<Monomial>& w);
IndexSet to_subset(const ExtensionRing& s, const CoefficientSequence& c);

/// Levels V_{d-i, r_i} from prefix ranks.
CoefficientSequence from_ranks(const ExtensionRing& s, int d, const std::vector<std::size_t>& ranks);

/// Smallest positive i with R_1 W_{d-i} not inside W_{d-i+1}.
std::optional<int> is_z_stable(const ExtensionRing& s, const CoefficientSequence& c);
bool is_z_stable(const ExtensionRing& s, const MonomialIdeal& ideal);

/// Partial sums of level sizes.
std::vector<std::size_t> d_r(const CoefficientSequence& c);
std::vector<std::size_t> d_r_of_ranks(const std::vector<std::size_t>& ranks);

/// Rank tuple satisfies the segment condition (z-stable and every
/// V_{d-i,r_i} inside R_{j-i} V_{d-j, min(1+r_j, |R_{d-j}|)}).
bool is_segment(const ExtensionRing& s, int d, const std::vector<std::size_t>& ranks);

struct SegmentTrace {
    std::vector<std::size_t> ranks;
    std::size_t moves = 0;
};

/// Prefix ranks (r_{d-i})_i of the unique segment of length s: greedy fill
/// of low levels, then exchange moves until the segment condition holds.
SegmentTrace segment_ranks(const ExtensionRing& s, int d, std::size_t length);
CoefficientSequence segment(const ExtensionRing& s, int d, std::size_t length);

/// J_d = segment of length |I_d|. Throws PreconditionError when I is not
/// z-stable.
MonomialIdeal extend_embedding(const ExtensionRing& s, const MonomialIdeal& ideal);

/// The order on S whose prefixes are the segments. Built from the
/// non-strict pairwise rule and cross-checked against segment().
GradedOrder extended_order(const ExtensionRing& s);

struct StrongHypViolation {
    int i;
    int degree;
};

/// |(I + (z^i))_d| >= |(J + (z^i))_d| for J = extend_embedding(I), every
/// i in 0..min(t-1, cap) and every degree.
std::optional<StrongHypViolation> strong_hyp_check(const ExtensionRing& s, const MonomialIdeal& ideal);

} // namespace hilbemb

#endif
