// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when
// every criterion passes inside its time bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hilbemb/classical.hpp"
#include "hilbemb/embed.hpp"
#include "hilbemb/error.hpp"
#include "hilbemb/extension.hpp"
#include "hilbemb/report.hpp"
#include "hilbemb/stabilize.hpp"
#include "hilbemb/transfer.hpp"

using namespace hilbemb;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

RingPtr ring_of(std::vector<std::string> vars, std::vector<std::string> rels, int cap) {
    std::vector<Monomial> ms;
    for (const auto& r : rels) ms.push_back(parse_monomial(r, vars));
    return make_ring(vars, ms, cap);
}

std::string t_name(std::optional<int> t) { return "t=" + format_t(t); }

const std::vector<std::optional<int>> kTs{2, 3, std::nullopt};

Outcome from_example(const std::string& id) {
    auto rep = run_example(id);
    Outcome o;
    o.ok = rep.passed();
    std::size_t good = 0;
    for (const auto& c : rep.claims()) {
        good += c.passed;
        if (!c.passed) o.detail += " [" + c.name + ": got " + c.actual.dump() + "]";
    }
    o.detail = std::to_string(good) + "/" + std::to_string(rep.claims().size()) + " claims" + o.detail;
    return o;
}

// Every exponent tuple over {2,3,4,inf}, not only ascending ones. The
// closed form is evaluated on the sorted tuple; the oracle sees the ring
// as given.
Outcome classical_grid() {
    const std::vector<std::optional<int>> bounds{2, 3, 4, std::nullopt};
    std::size_t points = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> vars;
        for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        for (int d = 0; d <= 4; ++d) {
            auto poly = make_ring(vars, std::vector<Monomial>{}, d + 1);
            for (std::size_t r = 0; r <= poly->dim(d); ++r) {
                ++points;
                bad += macaulay_min_growth(n, d, r) != min_growth_oracle(*poly, d, r);
            }
        }
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<Monomial> rels;
            std::vector<std::size_t> sorted = pick;
            std::sort(sorted.begin(), sorted.end());
            ExponentBounds e;
            for (auto p : sorted) e.push_back(bounds[p]);
            for (std::size_t v = 0; v < pick.size(); ++v) {
                if (bounds[pick[v]]) rels.push_back(Monomial::variable(static_cast<std::size_t>(n), v, *bounds[pick[v]]));
            }
            for (int d = 0; d <= 4; ++d) {
                auto ring = make_ring(vars, rels, d + 1);
                for (std::size_t r = 0; r <= ring->dim(d); ++r) {
                    ++points;
                    bad += cl_min_growth(e, d, r) != min_growth_oracle(*ring, d, r);
                }
            }
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == bounds.size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    }
    return {bad == 0, std::to_string(points) + " grid points, " + std::to_string(bad) + " mismatches"};
}

std::vector<RingPtr> segment_bases() {
    return {ring_of({"x"}, {"x^3"}, 4), ring_of({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"}, 4)};
}

std::string describe(const QuotientRing& r) {
    std::string s = "k[";
    for (std::size_t v = 0; v < r.num_vars(); ++v) s += (v ? "," : "") + r.var_names()[v];
    s += "]/(";
    for (std::size_t g = 0; g < r.generators().size(); ++g) s += (g ? "," : "") + r.format(r.generators()[g]);
    return s + ")";
}

// Brute force over all rank tuples: z-stable ones, then the componentwise
// minima of their partial-sum vectors.
std::vector<std::vector<std::size_t>> minimal_stable_tuples(const ExtensionRing& s, int d, std::size_t length) {
    int top = s.top_level(d);
    std::vector<std::vector<std::size_t>> stable;
    std::vector<std::size_t> cur(static_cast<std::size_t>(top) + 1, 0);
    std::function<void(int, std::size_t)> rec = [&](int i, std::size_t left) {
        if (i > top) {
            if (left == 0 && !is_z_stable(s, from_ranks(s, d, cur))) stable.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r <= std::min(left, s.level_size(d, i)); ++r) {
            cur[static_cast<std::size_t>(i)] = r;
            rec(i + 1, left - r);
        }
    };
    rec(0, length);
    std::vector<std::vector<std::size_t>> minimal;
    for (const auto& a : stable) {
        auto da = d_r_of_ranks(a);
        bool dominated = false;
        for (const auto& b : stable) {
            auto db = d_r_of_ranks(b);
            bool le = true;
            for (std::size_t i = 0; i < da.size(); ++i) le = le && db[i] <= da[i];
            dominated = dominated || (le && db != da);
        }
        if (!dominated) minimal.push_back(a);
    }
    return minimal;
}

Outcome segment_theory() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& base : segment_bases()) {
        for (auto t : kTs) {
            ExtensionRing s(certify(GradedOrder::grlex(base)), t, 4);
            for (int d = 0; d <= 4; ++d) {
                CoefficientSequence prev = segment(s, d, 0);
                for (std::size_t len = 0; len <= s.ring().dim(d); ++len) {
                    ++checked;
                    auto ranks = segment_ranks(s, d, len).ranks;
                    auto minimal = minimal_stable_tuples(s, d, len);
                    auto seg = from_ranks(s, d, ranks);
                    bool nested = true;
                    for (std::size_t i = 0; i < seg.levels.size(); ++i) {
                        nested = nested && prev.levels[i].is_subset_of(seg.levels[i]);
                    }
                    bool grows = true;
                    if (d < 4) {
                        auto grown = s.ring().growth_graph().growth(d, to_subset(s, seg));
                        grows = grown == to_subset(s, segment(s, d + 1, grown.count()));
                    }
                    if (minimal.size() != 1 || minimal.front() != ranks || !nested || grows == false) {
                        o.ok = false;
                        o.detail += " [" + describe(*base) + " " + t_name(t) + " d=" + std::to_string(d) +
                                    " s=" + std::to_string(len) + "]";
                    }
                    prev = seg;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " (d,s) pairs over 6 rings" + o.detail;
    return o;
}

Outcome extended_orders() {
    Outcome o;
    std::size_t passed = 0, total = 0;
    for (const auto& base : segment_bases()) {
        for (auto t : kTs) {
            ++total;
            auto g = GradedOrder::grlex(base);
            ExtensionRing s(certify(g), t, 4);
            auto tau = extended_order(s);
            std::vector<std::string> why;
            for (int d = 0; d <= 4; ++d) {
                for (std::size_t k = 0; k <= s.ring().dim(d); ++k) {
                    if (tau.prefix(d, k) != to_subset(s, segment(s, d, k))) {
                        why.push_back("prefix d=" + std::to_string(d) + " s=" + std::to_string(k) + " is not a segment");
                        d = 5;
                        break;
                    }
                }
            }
            if (auto v = check_embedding_order(tau)) {
                why.push_back("not an embedding order: degree " + std::to_string(v->degree) + ", prefix " +
                              std::to_string(v->prefix_size) + ", " + to_string(v->kind));
            }
            if (!is_monomial_order(g)) {
                auto lin = tau.monomials(1);
                if (lin.back() != Monomial::variable(base->num_vars() + 1, base->num_vars())) {
                    why.push_back("z does not follow the base variables");
                }
                if (is_monomial_order(tau)) why.push_back("not a monomial order");
            }
            if (why.empty()) {
                ++passed;
                continue;
            }
            o.ok = false;
            o.detail += " [" + describe(*base) + " " + t_name(t) + ":";
            for (const auto& w : why) o.detail += " " + w;
            o.detail += "]";
        }
    }
    o.detail = std::to_string(passed) + "/" + std::to_string(total) + " rings" + o.detail;
    return o;
}

MonomialIdeal random_ideal(const RingPtr& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 3), deg(1, ring->cap());
    std::vector<Monomial> gens;
    int k = count(rng);
    for (int g = 0; g < k; ++g) {
        auto mons = monomials_of_degree(ring->num_vars(), deg(rng));
        gens.push_back(mons[std::uniform_int_distribution<std::size_t>(0, mons.size() - 1)(rng)]);
    }
    return MonomialIdeal::generated_by(ring, gens);
}

Outcome stabilization() {
    Outcome o;
    std::mt19937 rng(20261017);
    std::size_t samples = 0, bad = 0;
    for (auto t : kTs) {
        auto base = t ? ring_of({"x1", "x2"}, {"x1^" + std::to_string(*t), "x2^" + std::to_string(*t)}, 4)
                      : ring_of({"x1", "x2"}, {}, 4);
        ExtensionRing ext(certify(GradedOrder::grlex(base)), t, 4);
        const auto z = ext.z_index();
        for (int trial = 0; trial < 200; ++trial) {
            ++samples;
            auto ideal = random_ideal(ext.ring_ptr(), rng);
            std::string why;
            try {
                auto run = t ? stabilize_truncated(ideal, z) : stabilize(ideal, z);
                if (!is_z_stable(ext, run.ideal)) why = "not z-stable";
                else if (run.ideal.hilbert_series() != ideal.hilbert_series()) why = "series changed";
                else if (auto v = strong_hyp_check(ext, run.ideal)) why = "strong hypothesis fails";
            } catch (const BudgetExceeded&) {
                why = "budget exceeded";
            }
            if (!why.empty()) {
                ++bad;
                o.ok = false;
                if (bad <= 5) o.detail += " [" + t_name(t) + " sample " + std::to_string(trial) + ": " + why + "]";
            }
        }
    }
    o.detail = std::to_string(samples - bad) + "/" + std::to_string(samples) + " samples" + o.detail;
    return o;
}

Outcome polarization() {
    struct Case {
        std::vector<std::string> vars;
        std::vector<std::string> rels;
        std::size_t y;
    };
    Outcome o;
    std::size_t passed = 0;
    const std::vector<Case> cases{{{"y"}, {"y^2"}, 0}, {{"x", "y"}, {"x^2", "x*y", "y^2"}, 1}, {{"x", "y"}, {"x*y^3"}, 1}};
    for (const auto& c : cases) {
        auto r = ring_of(c.vars, c.rels, 5);
        std::vector<std::string> why;
        auto p = polarize(*r, c.y, 2);
        const auto n = p.ring->num_vars();
        for (int k = 0; k <= 5; ++k) {
            long here = 0, below = 0;
            for (const auto& m : monomials_of_degree(n, k)) here += !p.ring->is_zero(m);
            if (k) for (const auto& m : monomials_of_degree(n, k - 1)) below += !p.ring->is_zero(m);
            if (here - below != static_cast<long>(r->dim(k))) why.push_back("series differs in degree " + std::to_string(k));
        }
        auto order = find_embedding_order(r);
        if (!order) {
            why.push_back("no base embedding order");
        } else if (auto v = check_embedding_order(polarization_embedding(certify(*order), c.y, 2, 5).order)) {
            why.push_back("output fails in degree " + std::to_string(v->degree));
        }
        if (why.empty()) {
            ++passed;
            continue;
        }
        o.ok = false;
        o.detail += " [" + describe(*r) + ":";
        for (const auto& w : why) o.detail += " " + w;
        o.detail += "]";
    }
    o.detail = std::to_string(passed) + "/" + std::to_string(cases.size()) + " ideals, d=2, cap 5" + o.detail;
    return o;
}

Outcome cl_extension() {
    auto r = ring_of({"x", "y"}, {"x^2", "y^2"}, 4);
    auto out = clements_lindstrom_extend(certify(GradedOrder::grlex(r)), 2, 4);
    Outcome o;
    if (auto v = check_embedding_order(out)) {
        o.ok = false;
        o.detail += " [not an embedding order in degree " + std::to_string(v->degree) + "]";
    }
    std::size_t prefixes = 0, bad = 0;
    for (int d = 0; d < 4; ++d) {
        for (std::size_t k = 0; k <= out.ring().dim(d); ++k) {
            ++prefixes;
            bad += out.ring().growth_graph().growth(d, out.prefix(d, k)).count() != cl_min_growth({2, 2, 2}, d, k);
        }
    }
    o.ok = o.ok && bad == 0;
    o.detail = describe(out.ring()) + ", " + std::to_string(prefixes) + " prefixes, " + std::to_string(bad) +
               " growth mismatches" + o.detail;
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double bound_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "tensor example", 1, [] { return from_example("tensor-product"); }},
        {2, "strongly stable example", 5, [] { return from_example("strongly-stable"); }},
        {3, "flag example", 5, [] { return from_example("grobner-flag"); }},
        {4, "w,x,y,z example", 30, [] { return from_example("wxyz-embedding"); }},
        {5, "persistence counterexample", 1, [] { return from_example("gotzmann-counterexample"); }},
        {6, "classical bounds grid", 120, classical_grid},
        {7, "segment theory", 60, segment_theory},
        {8, "extended order", 60, extended_orders},
        {9, "stabilization", 120, stabilization},
        {10, "polarization", 60, polarization},
        {11, "Clements-Lindstrom extension", 30, cl_extension},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.bound_seconds;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::printf("criterion %2d %s: %s (%.3f s, bound %.0f s%s) %s\n", c.number, ok ? "PASS" : "FAIL", c.title, secs,
                    c.bound_seconds, in_time ? "" : ", too slow", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
