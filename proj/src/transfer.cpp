#include "hilbemb/transfer.hpp"

#include <set>

#include "hilbemb/embed.hpp"
#include "hilbemb/enumerate.hpp"
#include "hilbemb/error.hpp"
#include "hilbemb/extension.hpp"

namespace hilbemb {

namespace {

std::vector<Monomial> leading_after(const DistractionMatrix& l, const std::vector<Monomial>& mons,
                                    const TermOrder& order, const FieldConfig& field, int d) {
    PolySpace v(field, order, d);
    for (const auto& m : mons) v.insert(apply_distraction(l, m, field));
    if (v.dim() != mons.size()) throw VerificationError("distraction lost dimension in degree " + std::to_string(d));
    return v.leading_monomials();
}

std::vector<Monomial> sorted(std::vector<Monomial> v) {
    std::sort(v.begin(), v.end(), GrlexLess());
    return v;
}

} // namespace

PolarizationEmbedding polarization_embedding(const EmbeddingCertificate& base, std::size_t y, int d, int cap,
                                             const std::string& z_name, const FieldConfig& field) {
    const auto& r = base.order.ring();
    auto pol = polarize(*with_cap(r, cap), y, d, z_name);
    ExtensionRing ext(base, std::nullopt, cap, z_name);
    auto tau = extended_order(ext);
    const auto& s = *pol.ring;
    const std::size_t n = s.num_vars();
    const std::size_t z = pol.z;

    DistractionMatrix l(n, d + 1);
    auto yz = variable_form(n, y);
    yz[z] = 1;
    l.set(y, d, yz);
    l.check_spanning(field, cap);
    std::vector<long> wx(n, 1), wz(n, 0);
    wx[y] = wx[z] = 0;
    wz[z] = 1;
    const TermOrder order{{wx, wz}};

    std::vector<std::vector<std::size_t>> listing;
    for (int e = 0; e <= cap; ++e) {
        PolySpace v(field, order, e);
        for (const auto& m : relation_monomials(ext.ring(), e)) v.insert(apply_distraction(l, m, field));
        if (v.leading_monomials() != sorted(relation_monomials(s, e))) {
            throw VerificationError("initial space of the distracted extension differs from the polarization in degree " +
                                    std::to_string(e));
        }
        std::vector<std::size_t> row;
        for (const auto& m : tau.monomials(e)) {
            auto lead = v.insert(apply_distraction(l, m, field));
            if (!lead) throw VerificationError("distraction lost dimension in degree " + std::to_string(e));
            auto k = s.index_of(*lead);
            if (!k) throw VerificationError("leading monomial " + s.format(*lead) + " is zero in the polarized ring");
            row.push_back(*k);
        }
        listing.push_back(std::move(row));
    }

    DistractionMatrix g(n, 1);
    auto zy = variable_form(n, z);
    zy[y] = 1;
    g.set(z, 1, zy);
    std::vector<long> wxy(n, 1);
    wxy[z] = 0;
    for (int e = 0; e <= cap; ++e) {
        auto lead = leading_after(g, relation_monomials(s, e), TermOrder{{wxy}}, field, e);
        if (lead != sorted(relation_monomials(ext.ring(), e))) {
            throw VerificationError("substituting y + z for z does not recover the extended ideal in degree " +
                                    std::to_string(e));
        }
    }
    return {pol, GradedOrder(pol.ring, std::move(listing))};
}

DistractionFiltration distraction_embedding(const EmbeddingCertificate& base, const DistractionMatrix& l,
                                            const FieldConfig& field) {
    const auto& r = base.order.ring();
    const std::size_t n = r.num_vars();
    if (l.num_vars() != n) throw PreconditionError("distraction matrix and ring differ in variables");
    for (auto row : l.special_rows()) {
        if (row != 0) throw PreconditionError("only the first row of the distraction matrix may differ from the identity");
    }
    for (int j = 1; j <= std::min(l.stable_column(), std::max(1, r.cap())); ++j) {
        if (field.reduce(l.entry(0, j)[0]) == 0) {
            throw PreconditionError("entry in column " + std::to_string(j) + " of the first row has no " +
                                    r.var_names()[0] + " term");
        }
    }
    l.check_spanning(field, r.cap());
    std::vector<long> w(n, 0);
    w[0] = 1;
    DistractionFiltration out{field, base.order.ring_ptr(), {}, {}};
    for (int e = 0; e <= r.cap(); ++e) {
        auto rel = relation_monomials(r, e);
        if (leading_after(l, rel, TermOrder{{w}}, field, e) != sorted(rel)) {
            throw VerificationError("initial space of the distracted ideal differs from the ideal in degree " +
                                    std::to_string(e));
        }
        std::vector<Polynomial> rows, flag;
        for (const auto& m : rel) rows.push_back(apply_distraction(l, m, field));
        for (const auto& m : base.order.monomials(e)) flag.push_back(apply_distraction(l, m, field));
        out.relations.push_back(std::move(rows));
        out.flag.push_back(std::move(flag));
    }
    return out;
}

std::optional<OrderViolation> check_filtration(const DistractionFiltration& f, int workers) {
    const auto& r = *f.base;
    for (int e = 0; e < r.cap(); ++e) {
        const auto ue = static_cast<std::size_t>(e);
        auto table = min_growth_table(r.growth_graph(), e, workers);
        PolySpace grown(f.field, TermOrder{}, e + 1);
        for (const auto& p : f.relations[ue + 1]) grown.insert(p);
        auto multiply_in = [&](const Polynomial& p) {
            for (std::size_t x = 0; x < r.num_vars(); ++x) {
                Polynomial q;
                for (const auto& [m, c] : p) q.emplace(m.times_var(x), c);
                grown.insert(q);
            }
        };
        for (const auto& p : f.relations[ue]) multiply_in(p);
        for (std::size_t k = 0; k <= f.flag[ue].size(); ++k) {
            if (k > 0) multiply_in(f.flag[ue][k - 1]);
            std::size_t g = grown.dim() - f.relations[ue + 1].size();
            if (g != table[k]) return OrderViolation{e, k, ViolationKind::not_minimal};
            PolySpace target(f.field, TermOrder{}, e + 1);
            for (const auto& p : f.relations[ue + 1]) target.insert(p);
            for (std::size_t j = 0; j < g; ++j) target.insert(f.flag[ue + 1][j]);
            for (const auto& p : grown.rows()) {
                if (!target.contains(p)) return OrderViolation{e, k, ViolationKind::not_prefix};
            }
        }
    }
    return std::nullopt;
}

GradedOrder clements_lindstrom_extend(const EmbeddingCertificate& base, std::optional<int> t, int cap,
                                      const ClExtendOptions& options, const std::string& z_name) {
    const auto& r = base.order.ring();
    if (t) {
        for (std::size_t x = 0; x < r.num_vars(); ++x) {
            if (!r.is_zero(Monomial::variable(r.num_vars(), x, *t))) {
                throw PreconditionError(r.var_names()[x] + "^" + std::to_string(*t) + " is not in the defining ideal");
            }
        }
    }
    ExtensionRing ext(base, t, cap, z_name);
    auto tau = extended_order(ext);
    if (options.verify_ideals == 0) return tau;

    const std::size_t z = ext.z_index();
    std::size_t seen = 0;
    enumerate_monomial_ideals(ext.ring_ptr(), {}, [&](const MonomialIdeal& ideal) {
        auto stable = t ? stabilize_truncated(ideal, z, options.field)
                        : stabilize(ideal, z, options.field.value_or(FieldConfig::rationals()));
        auto image = extend_embedding(ext, stable.ideal);
        if (!(image == prefix_ideal(tau, ideal.hilbert_series()))) {
            throw VerificationError("extension of the stabilized ideal is not a prefix ideal of the extended order (series " +
                                    ideal.hilbert_series().to_string() + ")");
        }
        return ++seen < options.verify_ideals;
    });
    return tau;
}

} // namespace hilbemb
