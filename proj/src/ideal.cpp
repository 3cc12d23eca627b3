#include "hilbemb/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "hilbemb/error.hpp"

namespace hilbemb {

HilbertSeries::HilbertSeries(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) {
    for (long c : coeffs_) {
        if (c < 0) throw PreconditionError("Hilbert series coefficients must be non-negative");
    }
}

bool HilbertSeries::dominates(const HilbertSeries& other) const {
    if (other.size() != size()) throw std::invalid_argument("comparing series of different lengths");
    for (std::size_t d = 0; d < size(); ++d) {
        if (coeffs_[d] < other.coeffs_[d]) return false;
    }
    return true;
}

HilbertSeries HilbertSeries::padded(int cap) const {
    auto want = static_cast<std::size_t>(cap) + 1;
    if (coeffs_.size() > want) {
        throw PreconditionError("series " + to_string() + " has terms beyond the cap " + std::to_string(cap));
    }
    auto c = coeffs_;
    c.resize(want, 0);
    return HilbertSeries(std::move(c));
}

std::string HilbertSeries::to_string() const {
    std::ostringstream os;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) os << (d ? "," : "") << coeffs_[d];
    return os.str();
}

HilbertSeries pointwise_max(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<long> c(a.size());
    for (std::size_t d = 0; d < c.size(); ++d) c[d] = std::max(a[d], b[d]);
    return HilbertSeries(std::move(c));
}

HilbertSeries pointwise_min(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<long> c(a.size());
    for (std::size_t d = 0; d < c.size(); ++d) c[d] = std::min(a[d], b[d]);
    return HilbertSeries(std::move(c));
}

HilbertSeries parse_series(const std::string& text) {
    std::vector<long> c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) throw ParseError("empty entry in series '" + text + "'");
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw ParseError("bad entry '" + tok + "' in series");
            c.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad entry '" + tok + "' in series");
        }
    }
    if (c.empty()) throw ParseError("empty series");
    return HilbertSeries(std::move(c));
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<IndexSet> pieces)
    : ring_(std::move(ring)), pieces_(std::move(pieces)) {
    const auto& r = *ring_;
    if (pieces_.size() != static_cast<std::size_t>(r.cap()) + 1) {
        throw PreconditionError("ideal must have one piece per degree 0..cap");
    }
    for (int d = 0; d <= r.cap(); ++d) {
        if (piece(d).size() != r.dim(d)) throw PreconditionError("ideal piece has the wrong width");
    }
    for (int d = 0; d < r.cap(); ++d) {
        IndexSet g = r.growth_graph().growth(d, piece(d));
        if (!g.is_subset_of(piece(d + 1))) {
            auto missing = members(g - piece(d + 1));
            throw PreconditionError("not an ideal: " + r.format(r.basis_element(d + 1, missing.front())) +
                                    " is a multiple of a member but missing in degree " + std::to_string(d + 1));
        }
    }
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
    std::vector<IndexSet> p;
    for (int d = 0; d <= ring->cap(); ++d) p.emplace_back(ring->dim(d));
    return MonomialIdeal(std::move(ring), std::move(p));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
    std::vector<IndexSet> p;
    for (int d = 0; d <= ring->cap(); ++d) p.push_back(prefix_set(ring->dim(d), ring->dim(d)));
    return MonomialIdeal(std::move(ring), std::move(p));
}

MonomialIdeal MonomialIdeal::generated_by(RingPtr ring, const std::vector<Monomial>& gens) {
    const auto& r = *ring;
    std::vector<IndexSet> p;
    for (int d = 0; d <= r.cap(); ++d) {
        IndexSet s(r.dim(d));
        if (d > 0) s = r.growth_graph().growth(d - 1, p.back());
        for (const auto& g : gens) {
            if (g.num_vars() != r.num_vars()) throw PreconditionError("generator has the wrong number of variables");
            if (g.degree() != d) continue;
            if (auto k = r.index_of(g)) s.set(*k);
        }
        p.push_back(std::move(s));
    }
    return MonomialIdeal(std::move(ring), std::move(p));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.degree() > ring_->cap()) throw std::out_of_range("monomial above the cap");
    auto k = ring_->index_of(m);
    return !k || piece(m.degree()).test(*k);
}

HilbertSeries MonomialIdeal::hilbert_series() const {
    std::vector<long> c;
    for (const auto& p : pieces_) c.push_back(static_cast<long>(p.count()));
    return HilbertSeries(std::move(c));
}

std::vector<Monomial> MonomialIdeal::minimal_generators() const {
    std::vector<Monomial> out;
    for (int d = 0; d <= ring_->cap(); ++d) {
        IndexSet fresh = piece(d);
        if (d > 0) fresh -= ring_->growth_graph().growth(d - 1, piece(d - 1));
        for (auto& m : to_monomials(*ring_, d, fresh)) out.push_back(std::move(m));
    }
    return out;
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
    for (std::size_t d = 0; d < pieces_.size(); ++d) {
        if (!pieces_[d].is_subset_of(other.pieces_.at(d))) return false;
    }
    return true;
}

long betti1(const MonomialIdeal& i, int j) {
    const auto& r = i.ring();
    if (j < 0 || j > r.cap()) throw std::out_of_range("betti1: degree outside 0..cap");
    long here = static_cast<long>(i.piece(j).count());
    if (j == 0) return here;
    return here - static_cast<long>(r.growth_graph().growth(j - 1, i.piece(j - 1)).count());
}

} // namespace hilbemb
