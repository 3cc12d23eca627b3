#include "hilbemb/extension.hpp"

#include <algorithm>
#include <numeric>

#include "hilbemb/error.hpp"

namespace hilbemb {

ExtensionRing::ExtensionRing(EmbeddingCertificate base, std::optional<int> t, int cap, std::string z_name)
    : base_(std::move(base)), t_(t) {
    const auto& r = base_.order.ring();
    if (t_ && *t_ < 1) throw PreconditionError("t must be positive or infinite");
    if (cap < 0 || cap > base_.verified_cap || cap > r.cap()) {
        throw PreconditionError("extension cap " + std::to_string(cap) + " exceeds the certified base cap " +
                                std::to_string(std::min(base_.verified_cap, r.cap())));
    }
    if (r.var_index(z_name)) throw PreconditionError("variable name '" + z_name + "' already used by the base ring");
    auto vars = r.var_names();
    vars.push_back(z_name);
    const std::size_t n = r.num_vars();
    std::vector<Monomial> rels;
    for (const auto& g : r.generators()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end());
        e.push_back(0);
        rels.emplace_back(std::move(e));
    }
    if (t_) rels.push_back(Monomial::variable(n + 1, n, *t_));
    ring_ = make_ring(vars, rels, cap);

    for (int d = 0; d <= cap; ++d) {
        std::vector<std::pair<int, std::size_t>> sp;
        std::vector<std::vector<std::size_t>> jn(static_cast<std::size_t>(top_level(d)) + 1);
        for (int i = 0; i <= top_level(d); ++i) jn[static_cast<std::size_t>(i)].assign(r.dim(d - i), SIZE_MAX);
        const auto& basis = ring_->standard_basis(d);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto& m = basis[k];
            int i = m[n];
            std::vector<int> e(m.exponents().begin(), m.exponents().end() - 1);
            auto bk = r.index_of(Monomial(std::move(e)));
            if (!bk) throw VerificationError("extension basis element with a non-standard coefficient");
            sp.emplace_back(i, *bk);
            jn[static_cast<std::size_t>(i)][*bk] = k;
        }
        split_.push_back(std::move(sp));
        join_.push_back(std::move(jn));
    }
}

int ExtensionRing::top_level(int d) const { return t_ ? std::min(d, *t_ - 1) : d; }

std::size_t ExtensionRing::join(int d, int i, std::size_t base_index) const {
    return join_.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(i)).at(base_index);
}

IndexSet ExtensionRing::base_growth(int e, const IndexSet& v, int k) const {
    IndexSet cur = v;
    for (int step = 0; step < k; ++step) cur = base().growth_graph().growth(e + step, cur);
    return cur;
}

std::size_t CoefficientSequence::size() const {
    std::size_t s = 0;
    for (const auto& l : levels) s += l.count();
    return s;
}

CoefficientSequence coefficient_sequence(const ExtensionRing& s, int d, const IndexSet& w) {
    if (w.size() != s.ring().dim(d)) throw std::invalid_argument("subset width does not match S_d");
    CoefficientSequence c{d, {}};
    for (int i = 0; i <= s.top_level(d); ++i) c.levels.emplace_back(s.level_size(d, i));
    for (auto k = w.find_first(); k != IndexSet::npos; k = w.find_next(k)) {
        auto [i, bk] = s.split(d, k);
        c.levels[static_cast<std::size_t>(i)].set(bk);
    }
    return c;
}

CoefficientSequence coefficient_sequence(const ExtensionRing& s, int d, const std::vector<Monomial>& w) {
    IndexSet set(s.ring().dim(d));
    for (const auto& m : w) {
        if (m.num_vars() != s.ring().num_vars() || m.degree() != d) {
            throw PreconditionError(s.ring().format(m) + " is not a monomial of degree " + std::to_string(d) + " in S");
        }
        if (s.t() && m[s.z_index()] >= *s.t()) {
            throw PreconditionError(s.ring().format(m) + " has z-exponent >= t");
        }
        auto k = s.ring().index_of(m);
        if (!k) throw PreconditionError(s.ring().format(m) + " is zero in S");
        set.set(*k);
    }
    return coefficient_sequence(s, d, set);
}

IndexSet to_subset(const ExtensionRing& s, const CoefficientSequence& c) {
    IndexSet w(s.ring().dim(c.d));
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        const auto& l = c.levels[i];
        for (auto k = l.find_first(); k != IndexSet::npos; k = l.find_next(k)) {
            w.set(s.join(c.d, static_cast<int>(i), k));
        }
    }
    return w;
}

CoefficientSequence from_ranks(const ExtensionRing& s, int d, const std::vector<std::size_t>& ranks) {
    if (ranks.size() != static_cast<std::size_t>(s.top_level(d)) + 1) {
        throw std::invalid_argument("rank tuple has the wrong length for degree " + std::to_string(d));
    }
    CoefficientSequence c{d, {}};
    for (std::size_t i = 0; i < ranks.size(); ++i) c.levels.push_back(s.base_prefix(d - static_cast<int>(i), ranks[i]));
    return c;
}

std::optional<int> is_z_stable(const ExtensionRing& s, const CoefficientSequence& c) {
    for (std::size_t i = 1; i < c.levels.size(); ++i) {
        int e = c.d - static_cast<int>(i);
        if (!s.base().growth_graph().growth(e, c.levels[i]).is_subset_of(c.levels[i - 1])) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

bool is_z_stable(const ExtensionRing& s, const MonomialIdeal& ideal) {
    for (int d = 0; d <= s.cap(); ++d) {
        if (is_z_stable(s, coefficient_sequence(s, d, ideal.piece(d)))) return false;
    }
    return true;
}

std::vector<std::size_t> d_r(const CoefficientSequence& c) {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (const auto& l : c.levels) out.push_back(acc += l.count());
    return out;
}

std::vector<std::size_t> d_r_of_ranks(const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> out(ranks.size());
    std::partial_sum(ranks.begin(), ranks.end(), out.begin());
    return out;
}

namespace {

// V_{d-i, r_i} inside R_{j-i} V_{d-j, min(1+r_j, |R_{d-j}|)}?
bool pair_ok(const ExtensionRing& s, int d, const std::vector<std::size_t>& ranks, std::size_t i, std::size_t j) {
    int ei = d - static_cast<int>(i);
    int ej = d - static_cast<int>(j);
    std::size_t nj = s.level_size(d, static_cast<int>(j));
    auto bigger = s.base_prefix(ej, std::min(ranks[j] + 1, nj));
    auto grown = s.base_growth(ej, bigger, static_cast<int>(j - i));
    return s.base_prefix(ei, ranks[i]).is_subset_of(grown);
}

std::optional<std::pair<std::size_t, std::size_t>> first_bad_pair(const ExtensionRing& s, int d,
                                                                  const std::vector<std::size_t>& ranks) {
    for (std::size_t gap = 1; gap < ranks.size(); ++gap) {
        for (std::size_t i = 0; i + gap < ranks.size(); ++i) {
            if (!pair_ok(s, d, ranks, i, i + gap)) return std::make_pair(i, i + gap);
        }
    }
    return std::nullopt;
}

} // namespace

bool is_segment(const ExtensionRing& s, int d, const std::vector<std::size_t>& ranks) {
    if (is_z_stable(s, from_ranks(s, d, ranks))) return false;
    return !first_bad_pair(s, d, ranks).has_value();
}

SegmentTrace segment_ranks(const ExtensionRing& s, int d, std::size_t length) {
    if (d < 0 || d > s.cap()) throw std::out_of_range("segment degree outside 0..cap");
    const int top = s.top_level(d);
    std::size_t total = s.ring().dim(d);
    if (length > total) {
        throw std::out_of_range("segment length " + std::to_string(length) + " exceeds |S_d| = " + std::to_string(total));
    }
    SegmentTrace tr;
    std::size_t left = length;
    for (int i = 0; i <= top; ++i) {
        std::size_t take = std::min(left, s.level_size(d, i));
        tr.ranks.push_back(take);
        left -= take;
    }
    const std::size_t max_moves = length * static_cast<std::size_t>(top + 1) + 1;
    while (auto bad = first_bad_pair(s, d, tr.ranks)) {
        auto [i, j] = *bad;
        --tr.ranks[i];
        ++tr.ranks[j];
        if (++tr.moves > max_moves || is_z_stable(s, from_ranks(s, d, tr.ranks))) {
            throw VerificationError("segment exchange left the z-stable region in degree " + std::to_string(d));
        }
    }
    return tr;
}

CoefficientSequence segment(const ExtensionRing& s, int d, std::size_t length) {
    return from_ranks(s, d, segment_ranks(s, d, length).ranks);
}

MonomialIdeal extend_embedding(const ExtensionRing& s, const MonomialIdeal& ideal) {
    if (&ideal.ring() != &s.ring()) throw PreconditionError("ideal does not belong to the extension ring");
    std::vector<IndexSet> pieces;
    for (int d = 0; d <= s.cap(); ++d) {
        if (auto i = is_z_stable(s, coefficient_sequence(s, d, ideal.piece(d)))) {
            throw PreconditionError("ideal is not z-stable (degree " + std::to_string(d) + ", level " +
                                    std::to_string(*i) + "); stabilize it first");
        }
        pieces.push_back(to_subset(s, segment(s, d, ideal.piece(d).count())));
    }
    for (int d = 0; d < s.cap(); ++d) {
        if (!s.ring().growth_graph().growth(d, pieces[static_cast<std::size_t>(d)]).is_subset_of(
                pieces[static_cast<std::size_t>(d) + 1])) {
            throw VerificationError("growth of the degree " + std::to_string(d) + " segment is not inside the next one");
        }
    }
    MonomialIdeal j(s.ring_ptr(), std::move(pieces));
    if (j.hilbert_series() != ideal.hilbert_series()) throw VerificationError("extension changed the Hilbert series");
    return j;
}

namespace {

// Smallest base-order rank among standard divisors of f of degree e.
std::optional<std::size_t> min_divisor_rank(const ExtensionRing& s, const Monomial& f, int e) {
    std::optional<std::size_t> best;
    for (const auto& g : s.base().standard_basis(e)) {
        if (g.divides(f)) {
            auto r = s.base_order().rank_of(g);
            if (!best || r < *best) best = r;
        }
    }
    return best;
}

} // namespace

GradedOrder extended_order(const ExtensionRing& s) {
    const auto& base = s.base();
    const auto& order = s.base_order();
    std::vector<std::vector<std::size_t>> listing;
    for (int d = 0; d <= s.cap(); ++d) {
        const std::size_t n = s.ring().dim(d);
        std::vector<std::size_t> below(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto [a, fk] = s.split(d, p);
                auto [b, gk] = s.split(d, q);
                bool p_first;
                if (a == b) {
                    p_first = order.rank(d - a, fk) < order.rank(d - b, gk);
                } else {
                    bool swapped = a > b;
                    if (swapped) {
                        std::swap(a, b);
                        std::swap(fk, gk);
                    }
                    const auto& f = base.basis_element(d - a, fk);
                    auto m = min_divisor_rank(s, f, d - b);
                    bool low_first = m && *m <= order.rank(d - b, gk);
                    p_first = low_first != swapped;
                }
                ++below[p_first ? q : p];
            }
        }
        std::vector<std::size_t> l(n, SIZE_MAX);
        for (std::size_t p = 0; p < n; ++p) {
            if (l[below[p]] != SIZE_MAX) {
                throw VerificationError("extended order is not transitive in degree " + std::to_string(d));
            }
            l[below[p]] = p;
        }
        IndexSet prefix(n);
        for (std::size_t len = 0; len <= n; ++len) {
            if (len > 0) prefix.set(l[len - 1]);
            if (prefix != to_subset(s, segment(s, d, len))) {
                throw VerificationError("extended order prefix of length " + std::to_string(len) + " in degree " +
                                        std::to_string(d) + " is not the segment");
            }
        }
        listing.push_back(std::move(l));
    }
    return GradedOrder(s.ring_ptr(), std::move(listing));
}

std::optional<StrongHypViolation> strong_hyp_check(const ExtensionRing& s, const MonomialIdeal& ideal) {
    auto j = extend_embedding(s, ideal);
    int last = s.t() ? std::min(*s.t() - 1, s.cap()) : s.cap();
    for (int i = 0; i <= last; ++i) {
        for (int d = 0; d <= s.cap(); ++d) {
            auto count = [&](const IndexSet& piece) {
                std::size_t c = 0;
                for (std::size_t k = 0; k < piece.size(); ++k) c += piece.test(k) || s.split(d, k).first >= i;
                return c;
            };
            if (count(ideal.piece(d)) < count(j.piece(d))) return StrongHypViolation{i, d};
        }
    }
    return std::nullopt;
}

} // namespace hilbemb
