#ifndef HILBEMB_RING_HPP
#define HILBEMB_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbemb/growth.hpp"
#include "hilbemb/monomial.hpp"

namespace hilbemb {

class HilbertSeries;

/// R = A/a with A a polynomial ring and a a monomial ideal, truncated at a
/// degree cap. Standard bases and the multiplication graph are built once at
/// construction; the object is immutable afterwards.
class QuotientRing {
public:
    /// `relations` need not be minimal: divisible or duplicate generators are
    /// dropped and noted in warnings(). `truncate_above = d0` adds every
    /// monomial of degree d0+1 to the defining ideal.
    QuotientRing(std::vector<std::string> var_names, std::vector<Monomial> relations, int cap,
                 std::optional<int> truncate_above = std::nullopt);

    const std::vector<std::string>& var_names() const { return vars_; }
    std::size_t num_vars() const { return vars_.size(); }
    /// Minimal monomial generators of a, ascending in grlex.
    const std::vector<Monomial>& generators() const { return gens_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    int cap() const { return cap_; }
    std::optional<int> truncate_above() const { return truncate_above_; }

    /// True when R vanishes above the cap, so truncated results are exact.
    bool is_exact() const { return exact_; }

    /// True when m lies in a (i.e. m is zero in R).
    bool is_zero(const Monomial& m) const;

    /// Degree-d monomials outside a, ascending in grlex. Throws for d > cap.
    const std::vector<Monomial>& standard_basis(int d) const;
    std::size_t dim(int d) const { return standard_basis(d).size(); }
    std::optional<std::size_t> index_of(const Monomial& m) const;
    const Monomial& basis_element(int d, std::size_t k) const { return standard_basis(d).at(k); }

    const GrowthGraph& growth_graph() const { return graph_; }

    /// H_R up to the cap.
    HilbertSeries hilbert_series() const;

    std::optional<std::size_t> var_index(std::string_view name) const;
    std::string format(const Monomial& m) const { return format_monomial(m, vars_); }
    Monomial parse(std::string_view text) const { return parse_monomial(text, vars_); }

    /// Throws PreconditionError if a has a generator of degree <= 1.
    void require_no_linear_relations() const;

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
    std::vector<std::string> warnings_;
    int cap_;
    std::optional<int> truncate_above_;
    bool exact_ = false;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    GrowthGraph graph_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

template <class... Args>
RingPtr make_ring(Args&&... args) {
    return std::make_shared<const QuotientRing>(std::forward<Args>(args)...);
}

/// The polynomial ring on the same variables and cap.
RingPtr ambient_ring(const QuotientRing& r);

/// Same ring with a different cap.
RingPtr with_cap(const QuotientRing& r, int cap);

/// Monomials of the ambient ring of degree d that lie in a.
std::vector<Monomial> relation_monomials(const QuotientRing& r, int d);

/// R_1 V on monomials: every nonzero product of a variable with a member of V.
/// All members must be standard monomials of degree d < cap.
std::vector<Monomial> growth(const QuotientRing& r, int d, const std::vector<Monomial>& v);

/// Minimum |R_1 W| over r-subsets W of the degree-d standard basis.
std::size_t min_growth_oracle(const QuotientRing& r, int d, std::size_t size);

IndexSet to_index_set(const QuotientRing& r, int d, const std::vector<Monomial>& v);
std::vector<Monomial> to_monomials(const QuotientRing& r, int d, const IndexSet& s);

} // namespace hilbemb

#endif
