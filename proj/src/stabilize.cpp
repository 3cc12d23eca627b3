#include "hilbemb/stabilize.hpp"

#include <algorithm>
#include <set>

#include "hilbemb/error.hpp"

namespace hilbemb {

namespace {

// t when the ring is B/(aB, z^t), nothing when it is B/(aB).
std::optional<int> z_truncation(const QuotientRing& ring, std::size_t z) {
    if (z >= ring.num_vars()) throw PreconditionError("z index out of range");
    if (ring.truncate_above()) throw PreconditionError("stabilization needs a ring without truncate_above");
    std::optional<int> t;
    for (const auto& g : ring.generators()) {
        if (g[z] == 0) continue;
        if (g[z] != g.degree()) {
            throw PreconditionError("generator " + ring.format(g) + " mixes " + ring.var_names()[z] +
                                    " with other variables");
        }
        t = g[z];
    }
    return t;
}

std::vector<long> x_weight(std::size_t n, std::size_t z) {
    std::vector<long> w(n, 1);
    w[z] = 0;
    return w;
}

} // namespace

std::optional<int> z_stability_violation(const MonomialIdeal& ideal, std::size_t z) {
    const auto& r = ideal.ring();
    for (int d = 1; d <= r.cap(); ++d) {
        for (const auto& m : ideal.monomials(d)) {
            if (m[z] == 0) continue;
            auto f = *m.quotient(Monomial::variable(r.num_vars(), z));
            for (std::size_t x = 0; x < r.num_vars(); ++x) {
                if (x == z) continue;
                auto g = f.times_var(x);
                if (!r.is_zero(g) && !ideal.contains(g)) return d;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> level_sums(const MonomialIdeal& ideal, std::size_t z) {
    std::vector<std::vector<std::size_t>> out;
    for (int d = 0; d <= ideal.ring().cap(); ++d) {
        std::vector<std::size_t> s(static_cast<std::size_t>(d) + 1, 0);
        for (const auto& m : ideal.monomials(d)) ++s[static_cast<std::size_t>(m[z])];
        for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
        out.push_back(std::move(s));
    }
    return out;
}

DistractionMatrix stabilization_matrix(const QuotientRing& ring, std::size_t z, std::size_t l,
                                       const FieldConfig& field) {
    const std::size_t n = ring.num_vars();
    if (l == z || l >= n) throw PreconditionError("stabilization variable must be one of the x variables");
    auto t = z_truncation(ring, z);
    if (!t) {
        DistractionMatrix m(n, 2);
        auto f = variable_form(n, l);
        f[z] = 1;
        m.set(z, 1, std::move(f));
        return m;
    }
    if (field.root_order() != t) {
        throw PreconditionError("field " + field.describe() + " lacks a designated primitive root of order " +
                                std::to_string(*t));
    }
    DistractionMatrix m(n, *t + 1);
    for (int k = 1; k <= *t; ++k) {
        auto f = variable_form(n, l);
        f[z] = field.sub(0, field.pow(field.zeta(), k - 1));
        m.set(z, k, std::move(f));
    }
    return m;
}

MonomialIdeal distract_and_degenerate(const MonomialIdeal& ideal, const DistractionMatrix& l, std::size_t z,
                                      const FieldConfig& field) {
    const auto& r = ideal.ring();
    TermOrder order{{x_weight(r.num_vars(), z)}};
    std::vector<IndexSet> pieces;
    for (int d = 0; d <= r.cap(); ++d) {
        auto mons = ambient_piece(ideal, d);
        PolySpace v(field, order, d);
        for (const auto& m : mons) v.insert(apply_distraction(l, m, field));
        if (v.dim() != mons.size()) {
            throw VerificationError("distraction lost dimension in degree " + std::to_string(d));
        }
        auto lead = v.leading_monomials();
        std::set<Monomial> lead_set(lead.begin(), lead.end());
        IndexSet piece(r.dim(d));
        for (const auto& m : relation_monomials(r, d)) {
            if (!lead_set.contains(m)) {
                throw VerificationError("stabilization step moved the relation " + r.format(m));
            }
        }
        for (const auto& m : lead) {
            if (auto k = r.index_of(m)) piece.set(*k);
        }
        pieces.push_back(std::move(piece));
    }
    return MonomialIdeal(ideal.ring_ptr(), std::move(pieces));
}

namespace {

bool dominates(const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b) {
    for (std::size_t d = 0; d < a.size(); ++d) {
        for (std::size_t i = 0; i < a[d].size(); ++i) {
            if (a[d][i] < b[d][i]) return false;
        }
    }
    return true;
}

StabilizationRun run(const MonomialIdeal& ideal, std::size_t z, const FieldConfig& field) {
    const auto& r = ideal.ring();
    std::vector<DistractionMatrix> steps;
    for (std::size_t l = r.num_vars(); l-- > 0;) {
        if (l == z) continue;
        steps.push_back(stabilization_matrix(r, z, l, field));
        steps.back().check_spanning(field, r.cap());
    }
    std::size_t total = 0;
    for (int d = 0; d <= r.cap(); ++d) total += r.dim(d);
    const std::size_t budget = std::max<std::size_t>(1, total * total);

    StabilizationRun out{ideal, 0};
    auto sums = level_sums(ideal, z);
    while (true) {
        auto next = out.ideal;
        for (const auto& l : steps) next = distract_and_degenerate(next, l, z, field);
        if (next == out.ideal) break;
        auto next_sums = level_sums(next, z);
        if (!dominates(next_sums, sums)) {
            throw VerificationError("level sums decreased in stabilization round " + std::to_string(out.rounds + 1));
        }
        if (++out.rounds > budget) {
            throw BudgetExceeded("stabilization did not reach a fixpoint within " + std::to_string(budget) + " rounds");
        }
        out.ideal = std::move(next);
        sums = std::move(next_sums);
    }
    if (out.ideal.hilbert_series() != ideal.hilbert_series()) {
        throw VerificationError("stabilization changed the Hilbert series");
    }
    if (auto d = z_stability_violation(out.ideal, z)) {
        throw VerificationError("stabilization fixpoint is not z-stable in degree " + std::to_string(*d));
    }
    return out;
}

} // namespace

StabilizationRun stabilize(const MonomialIdeal& ideal, std::size_t z, const FieldConfig& field) {
    if (z_truncation(ideal.ring(), z)) throw PreconditionError("ring truncates z; use stabilize_truncated");
    return run(ideal, z, field);
}

StabilizationRun stabilize_truncated(const MonomialIdeal& ideal, std::size_t z, std::optional<FieldConfig> field) {
    const auto& r = ideal.ring();
    auto t = z_truncation(r, z);
    if (!t) throw PreconditionError("ring does not truncate " + r.var_names()[z] + "; use stabilize");
    for (std::size_t x = 0; x < r.num_vars(); ++x) {
        if (x != z && !r.is_zero(Monomial::variable(r.num_vars(), x, *t))) {
            throw PreconditionError(r.var_names()[x] + "^" + std::to_string(*t) + " is not in the defining ideal");
        }
    }
    return run(ideal, z, field ? *field : FieldConfig::for_roots_of_unity(*t));
}

Monomial polarize_monomial(const Monomial& m, std::size_t y, int d) {
    const std::size_t z = m.num_vars() - 1;
    if (y >= z) throw PreconditionError("y must precede the appended z variable");
    if (m[y] < d) return m;
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    --e[y];
    ++e[z];
    return Monomial(std::move(e));
}

namespace {

Monomial lift(const Monomial& m) {
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    e.push_back(0);
    return Monomial(std::move(e));
}

} // namespace

Polarization polarize(const QuotientRing& ring, std::size_t y, int d, const std::string& z_name) {
    if (d < 1) throw PreconditionError("polarization degree must be at least 1");
    if (y >= ring.num_vars()) throw PreconditionError("y index out of range");
    if (ring.truncate_above()) throw PreconditionError("polarization needs a ring without truncate_above");
    if (ring.var_index(z_name)) throw PreconditionError("variable name '" + z_name + "' already in use");
    auto vars = ring.var_names();
    vars.push_back(z_name);
    std::vector<Monomial> gens;
    for (const auto& g : ring.generators()) gens.push_back(polarize_monomial(lift(g), y, d));
    Polarization p{make_ring(vars, gens, ring.cap()), y, ring.num_vars(), d};

    for (int e = 0; e <= ring.cap(); ++e) {
        for (const auto& m : relation_monomials(ring, e)) {
            auto image = polarize_monomial(lift(m), y, d);
            if (!p.ring->is_zero(image)) {
                throw VerificationError("polarization of " + ring.format(m) + " is outside the polarized ideal");
            }
        }
    }
    auto ha = ring.hilbert_series();
    auto hb = p.ring->hilbert_series();
    for (std::size_t k = 0; k < ha.size(); ++k) {
        long diff = hb[k] - (k ? hb[k - 1] : 0);
        if (diff != ha[k]) {
            throw VerificationError("series identity fails in degree " + std::to_string(k) + ": " +
                                    std::to_string(ha[k]) + " != " + std::to_string(diff));
        }
    }
    return p;
}

} // namespace hilbemb
