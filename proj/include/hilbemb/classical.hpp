#ifndef HILBEMB_CLASSICAL_HPP
#define HILBEMB_CLASSICAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilbemb/ideal.hpp"

namespace hilbemb {

std::uint64_t binomial(long n, long k);

/// a = C(k_d, d) + C(k_{d-1}, d-1) + ... with k_d > k_{d-1} > ... >= i.
struct MacaulayRep {
    std::uint64_t a;
    int d;
    /// (k_i, i) pairs, i descending.
    std::vector<std::pair<long, int>> terms;

    std::uint64_t value() const;
    /// a^<d>: every C(k, i) replaced by C(k+1, i+1).
    std::uint64_t upper() const;
};

MacaulayRep macaulay_rep(std::uint64_t a, int d);

/// First r monomials of the degree-d standard basis.
std::vector<Monomial> lex_segment(const QuotientRing& ring, int d, std::size_t r);

/// Growth of the lex segment of length r in k[x_1..x_n]. Cross-checked
/// against the Macaulay formula C(n+d, d+1) - (C(n+d-1, d) - r)^<d>;
/// a disagreement throws VerificationError.
std::uint64_t macaulay_min_growth(int n, int d, std::uint64_t r);

/// Exponent bounds e_1 <= ... <= e_n; nullopt means no bound.
using ExponentBounds = std::vector<std::optional<int>>;

/// k[x_1..x_n]/(x_i^{e_i}) with the given cap. Throws PreconditionError
/// unless the bounds are ascending and at least 2.
RingPtr clements_lindstrom_ring(const ExponentBounds& e, int cap);

/// Growth of the lex segment of length r in the Clements-Lindstrom ring.
std::uint64_t cl_min_growth(const ExponentBounds& e, int d, std::uint64_t r);

/// Some series in the poset that is not the series of the image of a
/// lex-segment ideal of the ambient ring, if any.
std::optional<HilbertSeries> is_macaulay_lex(const RingPtr& ring, std::size_t budget = 0);

/// The image in R of the smallest lex-segment ideal of A whose image has
/// series h, if one exists.
std::optional<MonomialIdeal> lex_image_with_series(const RingPtr& ring, const HilbertSeries& h);

} // namespace hilbemb

#endif
