#include "hilbemb/classical.hpp"

#include <algorithm>
#include <set>

#include "hilbemb/embed.hpp"
#include "hilbemb/error.hpp"

namespace hilbemb {

std::uint64_t binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (long i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t MacaulayRep::value() const {
    std::uint64_t s = 0;
    for (auto [k, i] : terms) s += binomial(k, i);
    return s;
}

std::uint64_t MacaulayRep::upper() const {
    std::uint64_t s = 0;
    for (auto [k, i] : terms) s += binomial(k + 1, i + 1);
    return s;
}

MacaulayRep macaulay_rep(std::uint64_t a, int d) {
    if (d < 1) throw PreconditionError("Macaulay representation needs d >= 1");
    MacaulayRep rep{a, d, {}};
    std::uint64_t rest = a;
    for (int i = d; i >= 1 && rest > 0; --i) {
        long k = i;
        while (binomial(k + 1, i) <= rest) ++k;
        rep.terms.emplace_back(k, i);
        rest -= binomial(k, i);
    }
    return rep;
}

std::vector<Monomial> lex_segment(const QuotientRing& ring, int d, std::size_t r) {
    const auto& b = ring.standard_basis(d);
    if (r > b.size()) throw std::out_of_range("lex segment longer than the basis");
    return {b.begin(), b.begin() + static_cast<long>(r)};
}

namespace {

std::vector<std::string> var_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::uint64_t lex_growth(const QuotientRing& ring, int d, std::uint64_t r) {
    if (r > ring.dim(d)) throw std::out_of_range("r exceeds the basis size");
    return ring.growth_graph().growth(d, prefix_set(ring.dim(d), r)).count();
}

} // namespace

std::uint64_t macaulay_min_growth(int n, int d, std::uint64_t r) {
    if (n < 1 || d < 0) throw PreconditionError("macaulay_min_growth needs n >= 1 and d >= 0");
    std::uint64_t full = binomial(n + d - 1, d);
    if (r > full) throw std::out_of_range("r exceeds the number of degree-d monomials");
    auto poly = make_ring(var_names(n), std::vector<Monomial>{}, d + 1);
    auto got = lex_growth(*poly, d, r);
    if (d >= 1) {
        auto formula = binomial(n + d, d + 1) - macaulay_rep(full - r, d).upper();
        if (formula != got) {
            throw VerificationError("lex growth " + std::to_string(got) + " disagrees with the Macaulay formula " +
                                    std::to_string(formula));
        }
    }
    return got;
}

RingPtr clements_lindstrom_ring(const ExponentBounds& e, int cap) {
    if (e.empty()) throw PreconditionError("at least one variable is needed");
    std::vector<Monomial> rel;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] && *e[i] < 2) throw PreconditionError("exponent bounds must be at least 2");
        if (i > 0 && e[i] && (!e[i - 1] || *e[i - 1] > *e[i])) {
            throw PreconditionError("exponent bounds must be ascending (infinite bounds last)");
        }
        if (e[i]) rel.push_back(Monomial::variable(e.size(), i, *e[i]));
    }
    return make_ring(var_names(static_cast<int>(e.size())), rel, cap);
}

std::uint64_t cl_min_growth(const ExponentBounds& e, int d, std::uint64_t r) {
    auto ring = clements_lindstrom_ring(e, d + 1);
    return lex_growth(*ring, d, r);
}

std::optional<MonomialIdeal> lex_image_with_series(const RingPtr& ring, const HilbertSeries& h) {
    const auto& r = *ring;
    auto target = h.padded(r.cap());
    const std::size_t n = r.num_vars();
    std::vector<IndexSet> pieces;
    std::size_t lower = 0;
    for (int d = 0; d <= r.cap(); ++d) {
        auto amb = monomials_of_degree(n, d);
        auto want = static_cast<std::size_t>(target[static_cast<std::size_t>(d)]);
        std::size_t len = lower;
        auto image_size = [&](std::size_t l) {
            std::size_t c = 0;
            for (std::size_t p = 0; p < l; ++p) c += r.index_of(amb[p]).has_value();
            return c;
        };
        std::size_t have = image_size(len);
        while (have < want && len < amb.size()) have += r.index_of(amb[len++]).has_value();
        if (have != want) return std::nullopt;
        IndexSet piece(r.dim(d));
        std::set<Monomial> seg(amb.begin(), amb.begin() + static_cast<long>(len));
        for (const auto& m : seg) {
            if (auto k = r.index_of(m)) piece.set(*k);
        }
        pieces.push_back(std::move(piece));
        std::set<Monomial> grown;
        for (const auto& m : seg) {
            for (std::size_t v = 0; v < n; ++v) grown.insert(m.times_var(v));
        }
        lower = grown.size();
    }
    return MonomialIdeal(ring, std::move(pieces));
}

std::optional<HilbertSeries> is_macaulay_lex(const RingPtr& ring, std::size_t budget) {
    for (const auto& h : hilbert_poset(ring, budget)) {
        if (!lex_image_with_series(ring, h)) return h;
    }
    return std::nullopt;
}

} // namespace hilbemb
