#ifndef HILBEMB_IDEAL_HPP
#define HILBEMB_IDEAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "hilbemb/ring.hpp"

namespace hilbemb {

/// Truncated Hilbert series (H^0, ..., H^cap).
class HilbertSeries {
public:
    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<long> coeffs);

    static HilbertSeries zeros(int cap) { return HilbertSeries(std::vector<long>(static_cast<std::size_t>(cap) + 1, 0)); }

    std::size_t size() const { return coeffs_.size(); }
    long operator[](std::size_t d) const { return coeffs_.at(d); }
    const std::vector<long>& coeffs() const { return coeffs_; }

    /// Pointwise >= (the order on Hilb_R).
    bool dominates(const HilbertSeries& other) const;

    /// Zero-padded copy with exactly cap+1 coefficients; throws if longer.
    HilbertSeries padded(int cap) const;

    std::string to_string() const;

    auto operator<=>(const HilbertSeries&) const = default;

private:
    std::vector<long> coeffs_;
};

HilbertSeries pointwise_max(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries pointwise_min(const HilbertSeries& a, const HilbertSeries& b);

/// Parses "0,1,3,2". Whitespace is ignored.
HilbertSeries parse_series(const std::string& text);

/// A monomial ideal of R truncated at the cap: one set of standard
/// monomials per degree, closed under multiplication by the variables.
class MonomialIdeal {
public:
    /// Validates the closure invariant; throws PreconditionError otherwise.
    MonomialIdeal(RingPtr ring, std::vector<IndexSet> pieces);

    static MonomialIdeal zero(RingPtr ring);
    static MonomialIdeal unit(RingPtr ring);
    /// Ideal generated by the given monomials, truncated at the cap.
    /// Generators that are zero in R contribute nothing.
    static MonomialIdeal generated_by(RingPtr ring, const std::vector<Monomial>& gens);

    const QuotientRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const IndexSet& piece(int d) const { return pieces_.at(static_cast<std::size_t>(d)); }
    const std::vector<IndexSet>& pieces() const { return pieces_; }
    std::vector<Monomial> monomials(int d) const { return to_monomials(*ring_, d, piece(d)); }
    bool contains(const Monomial& m) const;

    HilbertSeries hilbert_series() const;
    /// Minimal generators up to the cap, ascending in grlex.
    std::vector<Monomial> minimal_generators() const;
    bool is_subset_of(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& other) const { return pieces_ == other.pieces_; }

private:
    RingPtr ring_;
    std::vector<IndexSet> pieces_;
};

inline HilbertSeries hilbert_series(const MonomialIdeal& i) { return i.hilbert_series(); }

/// Number of minimal generators of I in degree j: |I_j| - |R_1 I_{j-1}|.
long betti1(const MonomialIdeal& i, int j);

} // namespace hilbemb

#endif
