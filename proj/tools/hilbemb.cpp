#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilbemb/classical.hpp"
#include "hilbemb/embed.hpp"
#include "hilbemb/error.hpp"
#include "hilbemb/extension.hpp"
#include "hilbemb/report.hpp"
#include "hilbemb/transfer.hpp"

using namespace hilbemb;

namespace {

struct Common {
    std::string out = "json";
    std::size_t budget = 0;
    int workers = 1;
    bool timing = false;
};

void emit(const Json& j, const Common& c) { std::cout << (c.out == "pretty" ? j.dump(2) : j.dump()) << "\n"; }

Json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"status", "error"},
                {"error", {{"kind", kind}, {"message", message}}}};
}

Json violation_json(const std::optional<OrderViolation>& v) {
    if (!v) return nullptr;
    return {{"degree", v->degree}, {"prefix_size", v->prefix_size}, {"kind", to_string(v->kind)}};
}

EmbeddingCertificate certified(const GradedOrder& order, int workers) {
    if (auto v = check_embedding_order(order, workers)) {
        throw PreconditionError("order is not an embedding order (degree " + std::to_string(v->degree) + ", prefix " +
                                std::to_string(v->prefix_size) + ", " + to_string(v->kind) + ")");
    }
    return EmbeddingCertificate{order, order.cap()};
}

std::map<int, std::vector<Monomial>> parse_forced(const std::vector<std::string>& specs, const QuotientRing& r) {
    std::map<int, std::vector<Monomial>> out;
    for (const auto& s : specs) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError("--force-prefix expects d:m1,m2,...");
        int d = 0;
        try {
            d = std::stoi(s.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError("--force-prefix: bad degree in '" + s + "'");
        }
        std::stringstream rest(s.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) out[d].push_back(r.parse(item));
    }
    return out;
}

std::vector<std::string> names(const QuotientRing& r, const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(r.format(m));
    return out;
}

// B/(aB) or B/(aB, z^t) on the ring's variables followed by z.
RingPtr extension_of(const QuotientRing& r, std::optional<int> t, int cap, const std::string& z) {
    if (r.var_index(z)) throw PreconditionError("variable name '" + z + "' already used by the ring");
    auto vars = r.var_names();
    vars.push_back(z);
    std::vector<Monomial> rels;
    for (const auto& g : r.generators()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end());
        e.push_back(0);
        rels.emplace_back(std::move(e));
    }
    if (t) rels.push_back(Monomial::variable(vars.size(), vars.size() - 1, *t));
    return make_ring(vars, rels, cap);
}

ExponentBounds parse_bounds(const std::string& text) {
    ExponentBounds e;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) e.push_back(parse_t(item));
    return e;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embeddings of Hilbert functions for monomial quotient rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--out", c.out, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--budget", c.budget, "enumeration / search guard (0 = unlimited)");
    app.add_option("--workers", c.workers, "threads for min-growth tables")->check(CLI::PositiveNumber);
    app.add_flag("--timing", c.timing, "include wall-clock timing in the report");

    std::string command;
    std::function<Report()> action;
    std::string ring_file, order_file, ideal_file, matrix_file, t_text = "inf", series_text, z_name = "z", y_name;
    std::string e_text, field_text = "QQ", example_id;
    std::optional<int> cap_opt;
    int degree = 0, d_pol = 2;
    std::size_t length = 0, n_arg = 0, r_arg = 0;
    int d_arg = 0;
    std::vector<std::string> forced;
    bool all = false, list = false;

    auto load_ring = [&] { return parse_ring(read_json_file(ring_file)); };
    auto load_order = [&](const RingPtr& r) { return parse_order(read_json_file(order_file), r); };
    auto with_ring = [&](CLI::App* s) { s->add_option("--ring", ring_file, "ring JSON file")->required(); };
    auto with_order = [&](CLI::App* s) { s->add_option("--order", order_file, "order JSON file")->required(); };
    auto with_t = [&](CLI::App* s) { s->add_option("--t", t_text, "truncation exponent of z, or inf"); };
    auto with_cap = [&](CLI::App* s) { s->add_option("--cap", cap_opt, "degree cap (defaults to the ring's)"); };
    auto on = [&](CLI::App* s, std::function<Report()> f) {
        s->callback([&, s, f] {
            command = s->get_name();
            action = f;
        });
    };

    auto* find = app.add_subcommand("find-order", "search for an embedding order");
    with_ring(find);
    find->add_option("--force-prefix", forced, "d:m1,m2 forces the first monomials of degree d");
    find->add_flag("--all", all, "list every embedding order");
    on(find, [&] {
        auto r = load_ring();
        OrderSearchOptions o;
        o.forced = parse_forced(forced, *r);
        o.limit = all ? 0 : 1;
        o.node_budget = c.budget;
        o.workers = c.workers;
        auto res = find_embedding_orders(r, o);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"forced", forced}, {"all", all}});
        Json orders = Json::array();
        for (const auto& ord : res.orders) orders.push_back(order_to_json(ord));
        rep.set_results({{"found", res.orders.size()},
                         {"complete", res.complete},
                         {"conclusive", res.conclusive},
                         {"nodes", res.nodes},
                         {"orders", orders}});
        return rep;
    });

    auto* check = app.add_subcommand("check-order", "check the embedding-order conditions");
    with_ring(check);
    with_order(check);
    on(check, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}});
        auto v = violation_json(check_embedding_order(o, c.workers));
        rep.set_results({{"violation", v}});
        rep.add_claim(make_claim("order is an embedding order", "is_embedding_order", "input", nullptr, v));
        return rep;
    });

    auto* lattice = app.add_subcommand("lattice-check", "test whether the monomial Hilbert poset is a lattice");
    with_ring(lattice);
    on(lattice, [&] {
        auto r = load_ring();
        Report rep(command, {{"ring", ring_to_json(*r)}, {"budget", c.budget}});
        auto poset = hilbert_poset(r, c.budget);
        auto w = lattice_check(poset);
        Json wj = nullptr;
        if (w) {
            wj = {{"pair", {series_to_json(w->h), series_to_json(w->h2)}},
                  {"missing", w->missing == LatticeMissing::min ? "meet" : "join"},
                  {"value", series_to_json(w->value)}};
        }
        rep.set_results({{"poset_size", poset.size()}, {"witness", wj}});
        rep.add_claim(make_claim("poset is a lattice", "lattice_check", "input", nullptr, wj));
        return rep;
    });

    auto* emb = app.add_subcommand("embed", "the embedded ideal for a Hilbert series");
    with_ring(emb);
    with_order(emb);
    emb->add_option("--series", series_text, "ideal series, e.g. 0,0,1,2,0")->required();
    on(emb, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto h = parse_series(series_text);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"series", series_to_json(h)}});
        auto i = embed(o, h, c.budget);
        rep.set_results({{"ideal", ideal_to_json(i)["gens"]}, {"series", series_to_json(i.hilbert_series())}});
        return rep;
    });

    auto* mac = app.add_subcommand("macaulay-growth", "minimal growth in a polynomial ring");
    mac->add_option("n", n_arg)->required();
    mac->add_option("d", d_arg)->required();
    mac->add_option("r", r_arg)->required();
    on(mac, [&] {
        Report rep(command, {{"n", n_arg}, {"d", d_arg}, {"r", r_arg}});
        rep.set_results({{"d", d_arg}, {"r", r_arg}, {"growth", macaulay_min_growth(static_cast<int>(n_arg), d_arg, r_arg)}});
        return rep;
    });

    auto* clg = app.add_subcommand("cl-growth", "minimal growth in k[x]/(x_i^e_i)");
    clg->add_option("--e", e_text, "exponent bounds, e.g. 2,3,inf")->required();
    clg->add_option("d", d_arg)->required();
    clg->add_option("r", r_arg)->required();
    on(clg, [&] {
        auto e = parse_bounds(e_text);
        Json ej = Json::array();
        for (auto b : e) ej.push_back(format_t(b));
        Report rep(command, {{"e", ej}, {"d", d_arg}, {"r", r_arg}});
        rep.set_results({{"d", d_arg}, {"r", r_arg}, {"growth", cl_min_growth(e, d_arg, r_arg)}});
        return rep;
    });

    auto* mlex = app.add_subcommand("macaulay-lex-check", "is every monomial series attained by a lex image");
    with_ring(mlex);
    on(mlex, [&] {
        auto r = load_ring();
        Report rep(command, {{"ring", ring_to_json(*r)}, {"budget", c.budget}});
        auto w = is_macaulay_lex(r, c.budget);
        Json wj = w ? series_to_json(*w) : Json(nullptr);
        rep.set_results({{"macaulay_lex", !w.has_value()}, {"witness", wj}});
        rep.add_claim(make_claim("ring is Macaulay-lex", "is_macaulay_lex", "input", nullptr, wj));
        return rep;
    });

    auto extension = [&](const RingPtr& r, const GradedOrder& o) {
        return ExtensionRing(certified(o, c.workers), parse_t(t_text), cap_opt.value_or(r->cap()), z_name);
    };

    auto* seg = app.add_subcommand("segment", "the segment of a given length in R[z]/(z^t)");
    with_ring(seg);
    with_order(seg);
    with_t(seg);
    with_cap(seg);
    seg->add_option("--degree", degree)->required();
    seg->add_option("--length", length)->required();
    on(seg, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto s = extension(r, o);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"t", t_text},
                             {"degree", degree}, {"length", length}});
        auto tr = segment_ranks(s, degree, length);
        auto mons = to_monomials(s.ring(), degree, to_subset(s, from_ranks(s, degree, tr.ranks)));
        rep.set_results({{"ranks", tr.ranks}, {"moves", tr.moves}, {"monomials", names(s.ring(), mons)}});
        return rep;
    });

    auto* ext = app.add_subcommand("extend-order", "extended embedding order on R[z]/(z^t)");
    with_ring(ext);
    with_order(ext);
    with_t(ext);
    with_cap(ext);
    on(ext, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto s = extension(r, o);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"t", t_text}, {"cap", s.cap()}});
        auto out = extended_order(s);
        auto v = violation_json(check_embedding_order(out, c.workers));
        rep.set_results({{"ring", ring_to_json(s.ring())}, {"order", order_to_json(out)}, {"violation", v}});
        rep.add_claim(make_claim("extended order is an embedding order", "is_embedding_order", "extended_order", nullptr, v));
        return rep;
    });

    auto* strong = app.add_subcommand("strong-hyp", "compare I + (z^i) with its segment image");
    with_ring(strong);
    with_order(strong);
    with_t(strong);
    with_cap(strong);
    strong->add_option("--ideal", ideal_file, "ideal of R[z]/(z^t)")->required();
    on(strong, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto s = extension(r, o);
        auto i = parse_ideal(read_json_file(ideal_file), s.ring_ptr());
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"t", t_text},
                             {"ideal", ideal_to_json(i)}});
        auto v = strong_hyp_check(s, i);
        Json vj = v ? Json{{"i", v->i}, {"degree", v->degree}} : Json(nullptr);
        rep.set_results({{"image", ideal_to_json(extend_embedding(s, i))["gens"]}, {"violation", vj}});
        rep.add_claim(make_claim("sizes dominate for every i", "strong_hyp_check", "input", nullptr, vj));
        return rep;
    });

    auto* stab = app.add_subcommand("stabilize", "z-stable ideal with the same Hilbert series");
    with_ring(stab);
    with_t(stab);
    with_cap(stab);
    stab->add_option("--ideal", ideal_file, "ideal of R[z]/(z^t)")->required();
    stab->add_option("--z", z_name, "name of the new variable");
    stab->add_option("--field", field_text, "QQ or a prime (z free only)");
    on(stab, [&] {
        auto r = load_ring();
        auto t = parse_t(t_text);
        auto s = extension_of(*r, t, cap_opt.value_or(r->cap()), z_name);
        auto i = parse_ideal(read_json_file(ideal_file), s);
        const std::size_t z = s->num_vars() - 1;
        Report rep(command, {{"ring", ring_to_json(*r)}, {"t", t_text}, {"cap", s->cap()}, {"ideal", ideal_to_json(i)},
                             {"field", field_text}});
        auto run = [&] {
            if (t) return stabilize_truncated(i, z);
            if (field_text == "QQ") return stabilize(i, z);
            std::uint64_t p = 0;
            try {
                p = std::stoull(field_text);
            } catch (const std::exception&) {
                throw ParseError("--field must be QQ or a prime");
            }
            return stabilize(i, z, FieldConfig::prime(p));
        }();
        rep.set_results({{"ideal", ideal_to_json(run.ideal)["gens"]},
                         {"rounds", run.rounds},
                         {"series", series_to_json(run.ideal.hilbert_series())}});
        return rep;
    });

    auto* pol = app.add_subcommand("polarize", "polarize the defining ideal in one variable");
    with_ring(pol);
    pol->add_option("--y", y_name, "variable to polarize")->required();
    pol->add_option("--d", d_pol, "threshold exponent");
    pol->add_option("--z", z_name, "name of the new variable");
    on(pol, [&] {
        auto r = load_ring();
        auto y = r->var_index(y_name);
        if (!y) throw ParseError("--y: unknown variable '" + y_name + "'");
        Report rep(command, {{"ring", ring_to_json(*r)}, {"y", y_name}, {"d", d_pol}});
        auto p = polarize(*r, *y, d_pol, z_name);
        rep.set_results({{"ring", ring_to_json(*p.ring)}, {"series", series_to_json(p.ring->hilbert_series())}});
        return rep;
    });

    auto* pemb = app.add_subcommand("polarize-embed", "embedding order on the polarized ring");
    with_ring(pemb);
    with_order(pemb);
    with_cap(pemb);
    pemb->add_option("--y", y_name, "variable to polarize")->required();
    pemb->add_option("--d", d_pol, "threshold exponent");
    pemb->add_option("--z", z_name, "name of the new variable");
    on(pemb, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto y = r->var_index(y_name);
        if (!y) throw ParseError("--y: unknown variable '" + y_name + "'");
        int cap = cap_opt.value_or(r->cap());
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"y", y_name}, {"d", d_pol},
                             {"cap", cap}});
        auto out = polarization_embedding(certified(o, c.workers), *y, d_pol, cap, z_name);
        auto v = violation_json(check_embedding_order(out.order, c.workers));
        rep.set_results({{"ring", ring_to_json(*out.polarization.ring)}, {"order", order_to_json(out.order)}, {"violation", v}});
        rep.add_claim(make_claim("output is an embedding order", "is_embedding_order", "polarization_embedding", nullptr, v));
        return rep;
    });

    auto* dem = app.add_subcommand("distraction-embed", "transfer an embedding through a distraction");
    with_ring(dem);
    with_order(dem);
    dem->add_option("--matrix", matrix_file, "distraction matrix JSON file")->required();
    on(dem, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto l = parse_distraction(read_json_file(matrix_file), *r);
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"matrix", distraction_to_json(l, *r)}});
        auto f = distraction_embedding(certified(o, c.workers), l);
        Json rels = Json::object();
        for (std::size_t d = 0; d < f.relations.size(); ++d) {
            Json row = Json::array();
            for (const auto& p : f.relations[d]) row.push_back(format_polynomial(p, r->var_names()));
            rels[std::to_string(d)] = row;
        }
        auto v = violation_json(check_filtration(f, c.workers));
        rep.set_results({{"relations", rels}, {"violation", v}});
        rep.add_claim(make_claim("transferred flags are an embedding filtration", "check_filtration",
                                 "distraction_embedding", nullptr, v));
        return rep;
    });

    auto* cle = app.add_subcommand("cl-extend", "embedding order on R[z]/(z^t) with x^t in the ideal");
    with_ring(cle);
    with_order(cle);
    with_t(cle);
    with_cap(cle);
    on(cle, [&] {
        auto r = load_ring();
        auto o = load_order(r);
        auto t = parse_t(t_text);
        int cap = cap_opt.value_or(r->cap());
        Report rep(command, {{"ring", ring_to_json(*r)}, {"order", order_to_json(o)}, {"t", t_text}, {"cap", cap}});
        ClExtendOptions opt;
        if (c.budget) opt.verify_ideals = c.budget;
        auto out = clements_lindstrom_extend(certified(o, c.workers), t, cap, opt, z_name);
        auto v = violation_json(check_embedding_order(out, c.workers));
        rep.set_results({{"ring", ring_to_json(out.ring())}, {"order", order_to_json(out)}, {"violation", v}});
        rep.add_claim(make_claim("output is an embedding order", "is_embedding_order", "clements_lindstrom_extend", nullptr, v));
        return rep;
    });

    auto* ex = app.add_subcommand("paper-example", "run a registered worked example");
    ex->add_option("id", example_id, "example id");
    ex->add_flag("--list", list, "list the registered ids");
    on(ex, [&] {
        if (list || example_id.empty()) {
            Report rep(command, {{"list", true}});
            Json ids = Json::array();
            for (const auto& e : example_registry()) ids.push_back({{"id", e.id}, {"description", e.description}});
            rep.set_results({{"examples", ids}});
            return rep;
        }
        return run_example(example_id, RunOptions{c.budget, c.workers});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_doc(command, "usage", e.what()), c);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        auto rep = action();
        std::optional<double> secs;
        if (c.timing) secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(rep.to_json(secs), c);
        return rep.passed() ? 0 : 1;
    } catch (const ParseError& e) {
        emit(error_doc(command, "parse", e.what()), c);
        return 2;
    } catch (const PreconditionError& e) {
        emit(error_doc(command, "precondition", e.what()), c);
        return 2;
    } catch (const std::out_of_range& e) {
        emit(error_doc(command, "precondition", e.what()), c);
        return 2;
    } catch (const BudgetExceeded& e) {
        emit(error_doc(command, "budget", e.what()), c);
        return 1;
    } catch (const VerificationError& e) {
        emit(error_doc(command, "verification", e.what()), c);
        return 1;
    }
}
