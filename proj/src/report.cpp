#include "hilbemb/report.hpp"

#include <algorithm>

#include "hilbemb/classical.hpp"
#include "hilbemb/embed.hpp"
#include "hilbemb/enumerate.hpp"
#include "hilbemb/error.hpp"

namespace hilbemb {

Json ClaimResult::to_json() const {
    return Json{{"name", name},         {"operation", operation}, {"source", source},
                {"expected", expected}, {"actual", actual},       {"status", passed ? "pass" : "fail"}};
}

ClaimResult make_claim(std::string name, std::string operation, std::string source, Json expected, Json actual) {
    bool ok = expected == actual;
    return {std::move(name), std::move(operation), std::move(source), std::move(expected), std::move(actual), ok};
}

Report::Report(std::string command, Json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {}

bool Report::passed() const {
    return std::all_of(claims_.begin(), claims_.end(), [](const ClaimResult& c) { return c.passed; });
}

Json Report::to_json(std::optional<double> seconds) const {
    Json claims = Json::array();
    for (const auto& c : claims_) claims.push_back(c.to_json());
    Json j{{"schema_version", kSchemaVersion},
           {"command", command_},
           {"inputs", inputs_},
           {"inputs_digest", inputs_digest(inputs_)},
           {"results", results_},
           {"claims", claims},
           {"status", passed() ? "pass" : "fail"}};
    if (seconds) j["timing"] = {{"seconds", *seconds}};
    return j;
}

namespace {

std::vector<Monomial> parse_all(const QuotientRing& r, std::initializer_list<const char*> texts) {
    std::vector<Monomial> out;
    for (auto t : texts) out.push_back(r.parse(t));
    return out;
}

Json series_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    return series_to_json(MonomialIdeal::generated_by(r, parse_all(*r, gens)).hilbert_series());
}

Json realizer(const RingPtr& r, const HilbertSeries& h) {
    auto found = find_ideal_with_series(r, h.padded(r->cap()));
    return found ? ideal_to_json(*found)["gens"] : Json(nullptr);
}

std::vector<ClaimResult> tensor_product(const RunOptions& opt) {
    auto r = make_ring(std::vector<std::string>{"x", "y", "z"}, std::vector<Monomial>{}, 3);
    r = make_ring(r->var_names(), parse_all(*r, {"x^3", "x^2*y", "x*y^2", "y^3", "z^2"}), 3);
    const std::string src = "tensor product of k[x,y]/(x,y)^3 and k[z]/(z^2)";
    std::vector<ClaimResult> out;
    out.push_back(make_claim("H of (x)", "hilbert_series", src, Json{0, 1, 3, 2}, series_of(r, {"x"})));
    out.push_back(make_claim("H of (z)", "hilbert_series", src, Json{0, 1, 2, 3}, series_of(r, {"z"})));
    out.push_back(make_claim("no ideal with H = (0,1,2,2)", "enumerate_monomial_ideals", src, Json(nullptr),
                             realizer(r, HilbertSeries({0, 1, 2, 2}))));
    auto w = lattice_check(r, opt.budget);
    Json got = nullptr;
    if (w) {
        got = {{"pair", {series_to_json(w->h), series_to_json(w->h2)}},
               {"missing", w->missing == LatticeMissing::min ? "meet" : "join"}};
    }
    out.push_back(make_claim("lattice witness", "lattice_check", src,
                             Json{{"pair", {Json{0, 1, 2, 3}, Json{0, 1, 3, 2}}}, {"missing", "meet"}}, got));
    return out;
}

std::vector<ClaimResult> strongly_stable(const RunOptions&) {
    std::vector<std::string> vars{"x1", "x2", "x3"};
    std::vector<Monomial> rels;
    for (const auto& m : monomials_of_degree(3, 4)) {
        if (m[0] + m[1] >= 2) rels.push_back(m);
    }
    auto r = make_ring(vars, rels, 5);
    const std::string src = "(x1,x2)^2 (x1,x2,x3)^2 in k[x1,x2,x3]";
    std::vector<ClaimResult> out;
    out.push_back(make_claim("H of (x1^2, x1*x2, x2^2)", "hilbert_series", src, Json{0, 0, 3, 7, 0, 0},
                             series_of(r, {"x1^2", "x1*x2", "x2^2"})));
    out.push_back(make_claim("H of (x1^2, x1*x2, x1*x3)", "hilbert_series", src, Json{0, 0, 3, 6, 1, 1},
                             series_of(r, {"x1^2", "x1*x2", "x1*x3"})));
    out.push_back(make_claim("no ideal with H = (0,0,3,6,0)", "enumerate_monomial_ideals", src, Json(nullptr),
                             realizer(with_cap(*r, 4), HilbertSeries({0, 0, 3, 6, 0}))));
    return out;
}

std::vector<ClaimResult> grobner_flag(const RunOptions&) {
    std::vector<std::string> vars{"x1", "x2", "x3", "x4", "x5", "x6"};
    auto r0 = make_ring(vars, std::vector<Monomial>{}, 3);
    auto r = make_ring(vars,
                       parse_all(*r0, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x3^2", "x4^2", "x4*x5",
                                       "x5^2", "x5*x6"}),
                       3);
    const std::string src = "quadratic monomial ring in six variables";
    std::vector<ClaimResult> out;
    out.push_back(make_claim("H of (x1)", "hilbert_series", src, Json{0, 1, 2, 1}, series_of(r, {"x1"})));
    out.push_back(make_claim("H of (x5)", "hilbert_series", src, Json{0, 1, 3, 0}, series_of(r, {"x5"})));
    out.push_back(make_claim("no ideal with H = (0,1,2,0)", "enumerate_monomial_ideals", src, Json(nullptr),
                             realizer(r, HilbertSeries({0, 1, 2, 0}))));
    return out;
}

GradedOrder wxyz_listed_order(const RingPtr& r) {
    return GradedOrder::from_monomials(
        r, {{Monomial::one(4)},
            parse_all(*r, {"w", "x", "y", "z"}),
            parse_all(*r, {"w*x", "w*y", "w^2", "w*z", "x*y", "x^2", "x*z", "y^2", "y*z", "z^2"}),
            parse_all(*r, {"w^2*x", "w*x^2", "w^2*y", "w*y^2", "w^3", "w^2*z", "w*z^2", "x^2*y", "x*y^2", "x^3",
                           "x^2*z", "x*z^2", "y^3", "y^2*z", "y*z^2", "z^3"}),
            {}});
}

std::vector<ClaimResult> wxyz_embedding(const RunOptions& opt) {
    std::vector<std::string> vars{"w", "x", "y", "z"};
    auto r0 = make_ring(vars, std::vector<Monomial>{}, 4);
    auto r = make_ring(vars, parse_all(*r0, {"w*x*y", "w*x*z", "w*y*z", "x*y*z"}), 4, 3);
    const std::string src = "k[w,x,y,z]/(wxy, wxz, wyz, xyz) truncated above degree 3";
    std::vector<ClaimResult> out;
    out.push_back(make_claim("growth of w^2", "growth", src, 4, growth(*r, 2, parse_all(*r, {"w^2"})).size()));
    out.push_back(make_claim("growth of w*x", "growth", src, 2, growth(*r, 2, parse_all(*r, {"w*x"})).size()));
    auto v = check_embedding_order(wxyz_listed_order(r), opt.workers);
    Json got = nullptr;
    if (v) got = {{"degree", v->degree}, {"prefix_size", v->prefix_size}, {"kind", to_string(v->kind)}};
    out.push_back(make_claim("listed order is an embedding order", "is_embedding_order", src, Json(nullptr), got));
    OrderSearchOptions so;
    so.forced[2] = parse_all(*r, {"w^2"});
    so.node_budget = opt.budget;
    so.workers = opt.workers;
    auto res = find_embedding_orders(r, so);
    out.push_back(make_claim("no embedding order starts with w^2", "find_embedding_order", src,
                             Json{{"found", 0}, {"complete", true}},
                             Json{{"found", res.orders.size()}, {"complete", res.complete}}));
    return out;
}

std::vector<ClaimResult> gotzmann_counterexample(const RunOptions&) {
    std::vector<std::string> vars{"x", "y"};
    auto r0 = make_ring(vars, std::vector<Monomial>{}, 4);
    auto r = make_ring(vars, parse_all(*r0, {"x^3"}), 4);
    auto order = GradedOrder::grlex(r);
    auto i = MonomialIdeal::generated_by(r, parse_all(*r, {"y"}));
    auto g = gotzmann_check(order, i, 1);
    Json betti = Json::object();
    for (int j = 1; j <= r->cap(); ++j) {
        if (auto b = betti1(g.embedded, j)) betti[std::to_string(j)] = b;
    }
    const std::string src = "k[x,y]/(x^3) with the lex-induced order";
    std::vector<ClaimResult> out;
    out.push_back(make_claim("image of (y)", "embed", src, Json{"x", "y^3"}, ideal_to_json(g.embedded)["gens"]));
    out.push_back(make_claim("first Betti numbers of the image", "betti1", src, Json{{"1", 1}, {"3", 1}}, betti));
    out.push_back(make_claim("Gotzmann persistence fails in degree 3", "gotzmann_check", src,
                             Json{{"holds", false}, {"witness_degree", 3}},
                             Json{{"holds", g.holds},
                                  {"witness_degree", g.witness_degree ? Json(*g.witness_degree) : Json(nullptr)}}));
    return out;
}

std::vector<ClaimResult> cl_kk_grid(const RunOptions&) {
    const std::vector<std::optional<int>> bounds{2, 3, 4, std::nullopt};
    std::size_t points = 0, mac_bad = 0, cl_bad = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> vars;
        for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        for (int d = 0; d <= 4; ++d) {
            auto poly = make_ring(vars, std::vector<Monomial>{}, d + 1);
            for (std::size_t r = 0; r <= poly->dim(d); ++r) {
                mac_bad += macaulay_min_growth(n, d, r) != min_growth_oracle(*poly, d, r);
            }
        }
        // Ascending exponent tuples with infinite bounds last.
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            bool ascending = std::is_sorted(pick.begin(), pick.end());
            if (ascending) {
                ExponentBounds e;
                for (auto p : pick) e.push_back(bounds[p]);
                for (int d = 0; d <= 4; ++d) {
                    auto ring = clements_lindstrom_ring(e, d + 1);
                    for (std::size_t r = 0; r <= ring->dim(d); ++r) {
                        ++points;
                        cl_bad += cl_min_growth(e, d, r) != min_growth_oracle(*ring, d, r);
                    }
                }
            }
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == bounds.size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    }
    const std::string src = "Macaulay and Clements-Lindstrom bounds, n <= 3, e_i in {2,3,4,inf}, d <= 4";
    return {make_claim("Macaulay growth equals the exhaustive minimum", "macaulay_min_growth", src, 0, mac_bad),
            make_claim("Clements-Lindstrom growth equals the exhaustive minimum", "cl_min_growth", src,
                       Json{{"mismatches", 0}, {"points", points}}, Json{{"mismatches", cl_bad}, {"points", points}})};
}

} // namespace

const std::vector<ExampleRecord>& example_registry() {
    static const std::vector<ExampleRecord> reg{
        {"tensor-product", "Hilbert series of (x) and (z) in a tensor product, and a missing meet", tensor_product},
        {"strongly-stable", "two strongly stable ideals and an unrealizable series", strongly_stable},
        {"grobner-flag", "series of (x1) and (x5) and an unrealizable series", grobner_flag},
        {"wxyz-embedding", "growth numbers and the listed embedding order", wxyz_embedding},
        {"gotzmann-counterexample", "persistence fails for the lex-induced embedding", gotzmann_counterexample},
        {"cl-kk-grid", "classical growth bounds against exhaustive search", cl_kk_grid},
    };
    return reg;
}

Report run_example(const std::string& id, const RunOptions& options) {
    const auto& reg = example_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const ExampleRecord& e) { return e.id == id; });
    if (it == reg.end()) throw PreconditionError("unknown example '" + id + "'");
    Report report("paper-example", Json{{"id", id}, {"budget", options.budget}});
    report.set_results(Json{{"description", it->description}});
    for (auto& c : it->claims(options)) report.add_claim(std::move(c));
    return report;
}

} // namespace hilbemb
