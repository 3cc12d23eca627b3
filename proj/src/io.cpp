#include "hilbemb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "hilbemb/error.hpp"

namespace hilbemb {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

void check_fields(const Json& j, const std::string& what, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw ParseError(what + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "schema_version") {
            if (!value.is_number_integer() || value.get<int>() != kSchemaVersion) {
                throw ParseError(what + ".schema_version: unsupported (expected " + std::to_string(kSchemaVersion) + ")");
            }
            continue;
        }
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError(what + ": unknown field '" + key + "'");
        }
    }
}

const Json& need(const Json& j, const std::string& what, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
    return *it;
}

int get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> get_strings(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(get_string(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

template <class F>
auto rethrow(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<std::string> formatted(const QuotientRing& r, const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(r.format(m));
    return out;
}

} // namespace

Json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::string msg = e.what();
        auto pos = msg.find("; ");
        std::string detail = pos == std::string::npos ? msg : msg.substr(pos + 2);
        throw ParseError(source + ":" + line_col(text, e.byte ? e.byte - 1 : 0) + ": " + detail);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

RingPtr parse_ring(const Json& j) {
    check_fields(j, "ring", {"vars", "relations", "cap", "truncate_above"});
    auto vars = get_strings(need(j, "ring", "vars"), "ring.vars");
    if (vars.empty()) throw ParseError("ring.vars: at least one variable is needed");
    for (const auto& v : vars) {
        bool ok = !v.empty() && !std::isdigit(static_cast<unsigned char>(v[0])) &&
                  std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
        if (!ok) throw ParseError("ring.vars: '" + v + "' is not an identifier");
    }
    int cap = get_int(need(j, "ring", "cap"), "ring.cap");
    std::optional<int> trunc;
    if (j.contains("truncate_above")) trunc = get_int(j["truncate_above"], "ring.truncate_above");
    std::vector<Monomial> rels;
    if (j.contains("relations")) {
        auto texts = get_strings(j["relations"], "ring.relations");
        for (std::size_t k = 0; k < texts.size(); ++k) {
            rels.push_back(rethrow("ring.relations[" + std::to_string(k) + "]",
                                   [&] { return parse_monomial(texts[k], vars); }));
        }
    }
    return rethrow("ring", [&] {
        auto r = make_ring(vars, rels, cap, trunc);
        r->require_no_linear_relations();
        return r;
    });
}

Json ring_to_json(const QuotientRing& ring) {
    std::vector<Monomial> rels;
    for (const auto& g : ring.generators()) {
        if (ring.truncate_above() && g.degree() == *ring.truncate_above() + 1) continue;
        rels.push_back(g);
    }
    Json j{{"schema_version", kSchemaVersion},
           {"vars", ring.var_names()},
           {"relations", formatted(ring, rels)},
           {"cap", ring.cap()}};
    if (ring.truncate_above()) j["truncate_above"] = *ring.truncate_above();
    return j;
}

bool same_ring(const QuotientRing& a, const QuotientRing& b) {
    return a.var_names() == b.var_names() && a.generators() == b.generators() && a.cap() == b.cap() &&
           a.truncate_above() == b.truncate_above();
}

MonomialIdeal parse_ideal(const Json& j, const RingPtr& ring) {
    check_fields(j, "ideal", {"gens"});
    auto texts = get_strings(need(j, "ideal", "gens"), "ideal.gens");
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < texts.size(); ++k) {
        gens.push_back(rethrow("ideal.gens[" + std::to_string(k) + "]", [&] { return ring->parse(texts[k]); }));
    }
    return MonomialIdeal::generated_by(ring, gens);
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    return Json{{"schema_version", kSchemaVersion}, {"gens", formatted(ideal.ring(), ideal.minimal_generators())}};
}

GradedOrder parse_order(const Json& j, const RingPtr& ring) {
    check_fields(j, "order", {"degrees"});
    const auto& deg = need(j, "order", "degrees");
    if (!deg.is_object()) throw ParseError("order.degrees: expected an object");
    std::vector<std::vector<Monomial>> listing(static_cast<std::size_t>(ring->cap()) + 1);
    std::set<int> given;
    for (const auto& [key, value] : deg.items()) {
        int d = -1;
        auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), d);
        if (ec != std::errc() || p != key.data() + key.size() || d < 0) {
            throw ParseError("order.degrees: key '" + key + "' is not a degree");
        }
        if (d > ring->cap()) throw ParseError("order.degrees: degree " + key + " exceeds the cap");
        given.insert(d);
        const std::string where = "order.degrees." + key;
        for (const auto& text : get_strings(value, where)) {
            listing[static_cast<std::size_t>(d)].push_back(rethrow(where, [&] { return ring->parse(text); }));
        }
    }
    if (!given.contains(0)) listing[0] = {Monomial::one(ring->num_vars())};
    for (int d = 1; d <= ring->cap(); ++d) {
        if (!given.contains(d) && ring->dim(d) > 0) throw ParseError("order.degrees: degree " + std::to_string(d) + " missing");
    }
    return rethrow("order", [&] { return GradedOrder::from_monomials(ring, listing); });
}

Json order_to_json(const GradedOrder& order) {
    Json deg = Json::object();
    for (int d = 0; d <= order.cap(); ++d) deg[std::to_string(d)] = formatted(order.ring(), order.monomials(d));
    return Json{{"schema_version", kSchemaVersion}, {"degrees", deg}};
}

namespace {

LinearForm parse_form_json(const Json& j, const QuotientRing& ring, const std::string& where) {
    if (j.is_string()) return rethrow(where, [&] { return parse_linear_form(j.get<std::string>(), ring.var_names()); });
    if (!j.is_object()) throw ParseError(where + ": expected a string or a coefficient map");
    LinearForm f(ring.num_vars(), mpq_class(0));
    for (const auto& [name, c] : j.items()) {
        auto v = ring.var_index(name);
        if (!v) throw ParseError(where + ": unknown variable '" + name + "'");
        if (c.is_number_integer()) {
            f[*v] = mpq_class(c.get<long>());
        } else if (c.is_string()) {
            try {
                f[*v] = mpq_class(c.get<std::string>());
                f[*v].canonicalize();
            } catch (const std::invalid_argument&) {
                throw ParseError(where + "." + name + ": bad coefficient");
            }
        } else {
            throw ParseError(where + "." + name + ": expected an integer or a \"p/q\" string");
        }
    }
    return f;
}

} // namespace

DistractionMatrix parse_distraction(const Json& j, const QuotientRing& ring) {
    check_fields(j, "distraction", {"rows", "N"});
    int n = get_int(need(j, "distraction", "N"), "distraction.N");
    const auto& rows = need(j, "distraction", "rows");
    if (!rows.is_object()) throw ParseError("distraction.rows: expected an object");
    return rethrow("distraction", [&] {
        DistractionMatrix l(ring.num_vars(), n);
        for (const auto& [name, cols] : rows.items()) {
            auto v = ring.var_index(name);
            if (!v) throw ParseError("rows: unknown variable '" + name + "'");
            if (!cols.is_object()) throw ParseError("rows." + name + ": expected an object");
            for (const auto& [key, form] : cols.items()) {
                int c = 0;
                auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), c);
                if (ec != std::errc() || p != key.data() + key.size()) {
                    throw ParseError("rows." + name + ": column '" + key + "' is not an integer");
                }
                l.set(*v, c, parse_form_json(form, ring, "rows." + name + "." + key));
            }
        }
        return l;
    });
}

Json distraction_to_json(const DistractionMatrix& l, const QuotientRing& ring) {
    Json rows = Json::object();
    for (const auto& [key, form] : l.overrides()) {
        rows[ring.var_names()[key.first]][std::to_string(key.second)] = format_linear_form(form, ring.var_names());
    }
    return Json{{"schema_version", kSchemaVersion}, {"rows", rows}, {"N", l.stable_column()}};
}

Json series_to_json(const HilbertSeries& h) { return h.coeffs(); }

HilbertSeries parse_series_json(const Json& j) {
    if (!j.is_array()) throw ParseError("series: expected an array");
    std::vector<long> c;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0) throw ParseError("series: expected non-negative integers");
        c.push_back(v.get<long>());
    }
    return HilbertSeries(c);
}

std::optional<int> parse_t(std::string_view text) {
    if (text == "inf") return std::nullopt;
    int t = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), t);
    if (ec != std::errc() || p != text.data() + text.size() || t < 1) {
        throw ParseError("t must be a positive integer or \"inf\", got '" + std::string(text) + "'");
    }
    return t;
}

std::string format_t(std::optional<int> t) { return t ? std::to_string(*t) : "inf"; }

std::string inputs_digest(const Json& inputs) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : inputs.dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

} // namespace hilbemb
