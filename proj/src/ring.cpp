#include "hilbemb/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hilbemb/error.hpp"
#include "hilbemb/ideal.hpp"

namespace hilbemb {

QuotientRing::QuotientRing(std::vector<std::string> var_names, std::vector<Monomial> relations, int cap,
                           std::optional<int> truncate_above)
    : vars_(std::move(var_names)), cap_(cap), truncate_above_(truncate_above) {
    if (cap_ < 0) throw PreconditionError("cap must be non-negative");
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw PreconditionError("duplicate variable names");
    const std::size_t n = vars_.size();

    if (truncate_above_) {
        if (*truncate_above_ < 0) throw PreconditionError("truncate_above must be non-negative");
        for (auto& m : monomials_of_degree(n, *truncate_above_ + 1)) relations.push_back(std::move(m));
    }
    for (const auto& m : relations) {
        if (m.num_vars() != n) throw PreconditionError("relation has the wrong number of variables");
    }
    std::stable_sort(relations.begin(), relations.end(), GrlexLess{});
    for (const auto& m : relations) {
        auto divisor = std::find_if(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
        if (divisor != gens_.end()) {
            // Truncation monomials are expected to overlap; only report user relations.
            bool from_truncation = truncate_above_ && m.degree() == *truncate_above_ + 1;
            if (!from_truncation) {
                warnings_.push_back("dropped relation " + format(m) + " (divisible by " + format(*divisor) + ")");
            }
            continue;
        }
        gens_.push_back(m);
    }

    bases_.resize(static_cast<std::size_t>(cap_) + 1);
    index_.resize(static_cast<std::size_t>(cap_) + 1);
    for (int d = 0; d <= cap_; ++d) {
        for (auto& m : monomials_of_degree(n, d)) {
            if (!is_zero(m)) {
                index_[static_cast<std::size_t>(d)].emplace(m, bases_[static_cast<std::size_t>(d)].size());
                bases_[static_cast<std::size_t>(d)].push_back(std::move(m));
            }
        }
    }
    auto beyond = monomials_of_degree(n, cap_ + 1);
    exact_ = std::all_of(beyond.begin(), beyond.end(), [&](const Monomial& m) { return is_zero(m); });

    std::vector<std::size_t> sizes;
    std::vector<std::vector<IndexSet>> succ;
    for (int d = 0; d <= cap_; ++d) sizes.push_back(bases_[static_cast<std::size_t>(d)].size());
    for (int d = 0; d < cap_; ++d) {
        std::vector<IndexSet> level;
        for (const auto& m : bases_[static_cast<std::size_t>(d)]) {
            IndexSet s(sizes[static_cast<std::size_t>(d) + 1]);
            for (std::size_t v = 0; v < n; ++v) {
                auto it = index_[static_cast<std::size_t>(d) + 1].find(m.times_var(v));
                if (it != index_[static_cast<std::size_t>(d) + 1].end()) s.set(it->second);
            }
            level.push_back(std::move(s));
        }
        succ.push_back(std::move(level));
    }
    graph_ = GrowthGraph(std::move(sizes), std::move(succ));
}

bool QuotientRing::is_zero(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

const std::vector<Monomial>& QuotientRing::standard_basis(int d) const {
    if (d < 0 || d > cap_) {
        throw std::out_of_range("degree " + std::to_string(d) + " outside 0.." + std::to_string(cap_));
    }
    return bases_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> QuotientRing::index_of(const Monomial& m) const {
    if (m.num_vars() != vars_.size() || m.degree() > cap_) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(m.degree())];
    auto it = idx.find(m);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

HilbertSeries QuotientRing::hilbert_series() const {
    std::vector<long> c;
    for (const auto& b : bases_) c.push_back(static_cast<long>(b.size()));
    return HilbertSeries(std::move(c));
}

std::optional<std::size_t> QuotientRing::var_index(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

void QuotientRing::require_no_linear_relations() const {
    for (const auto& g : gens_) {
        if (g.degree() <= 1) {
            throw PreconditionError("defining ideal has a generator of degree " + std::to_string(g.degree()) +
                                    " (" + format(g) + "); relations must have degree >= 2");
        }
    }
}

RingPtr ambient_ring(const QuotientRing& r) {
    return make_ring(r.var_names(), std::vector<Monomial>{}, r.cap());
}

RingPtr with_cap(const QuotientRing& r, int cap) {
    return make_ring(r.var_names(), r.generators(), cap);
}

std::vector<Monomial> relation_monomials(const QuotientRing& r, int d) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(r.num_vars(), d)) {
        if (r.is_zero(m)) out.push_back(std::move(m));
    }
    return out;
}

IndexSet to_index_set(const QuotientRing& r, int d, const std::vector<Monomial>& v) {
    IndexSet s(r.dim(d));
    for (const auto& m : v) {
        auto k = r.index_of(m);
        if (!k || m.degree() != d) {
            throw PreconditionError(r.format(m) + " is not a standard monomial of degree " + std::to_string(d));
        }
        s.set(*k);
    }
    return s;
}

std::vector<Monomial> to_monomials(const QuotientRing& r, int d, const IndexSet& s) {
    std::vector<Monomial> out;
    for (auto k : members(s)) out.push_back(r.basis_element(d, k));
    return out;
}

std::vector<Monomial> growth(const QuotientRing& r, int d, const std::vector<Monomial>& v) {
    if (d >= r.cap()) throw std::out_of_range("growth: degree must be below the cap");
    return to_monomials(r, d + 1, r.growth_graph().growth(d, to_index_set(r, d, v)));
}

std::size_t min_growth_oracle(const QuotientRing& r, int d, std::size_t size) {
    return min_growth(r.growth_graph(), d, size);
}

} // namespace hilbemb
