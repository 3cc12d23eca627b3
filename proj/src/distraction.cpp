#include "hilbemb/distraction.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "hilbemb/error.hpp"

namespace hilbemb {

LinearForm variable_form(std::size_t num_vars, std::size_t var) {
    LinearForm f(num_vars, mpq_class(0));
    f.at(var) = 1;
    return f;
}

LinearForm parse_linear_form(std::string_view text, std::span<const std::string> names) {
    LinearForm out(names.size(), mpq_class(0));
    std::vector<bool> seen(names.size(), false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw ParseError("linear form '" + std::string(text) + "': " + why);
    };
    skip();
    if (pos == text.size()) fail("empty");
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected + or - at position " + std::to_string(pos));
        }
        first = false;
        mpq_class coeff(1);
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            try {
                coeff = mpq_class(std::string(text.substr(start, pos - start)));
            } catch (const std::invalid_argument&) {
                fail("bad coefficient");
            }
            if (coeff.get_den() == 0) fail("zero denominator");
            coeff.canonicalize();
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (start == pos) fail("expected a variable at position " + std::to_string(start));
        auto name = text.substr(start, pos - start);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable '" + std::string(name) + "'");
        auto v = static_cast<std::size_t>(it - names.begin());
        if (seen[v]) fail("variable '" + std::string(name) + "' repeated");
        seen[v] = true;
        out[v] = sign * coeff;
    }
    return out;
}

namespace {

std::string signed_term(const mpq_class& c, const std::string& body, bool first) {
    std::string s;
    mpq_class a = abs(c);
    if (c < 0) s = first ? "-" : " - ";
    else if (!first) s = " + ";
    if (body.empty()) return s + a.get_str();
    if (a != 1) s += a.get_str() + "*";
    return s + body;
}

} // namespace

std::string format_linear_form(const LinearForm& f, std::span<const std::string> names) {
    std::string s;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v] != 0) s += signed_term(f[v], names[v], s.empty());
    }
    return s.empty() ? "0" : s;
}

std::string format_polynomial(const Polynomial& f, std::span<const std::string> names) {
    std::vector<std::pair<Monomial, mpq_class>> terms(f.begin(), f.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return cmp_grlex(a.first, b.first) < 0; });
    std::string s;
    for (const auto& [m, c] : terms) {
        std::string body = m.degree() == 0 ? "" : format_monomial(m, names);
        s += signed_term(c, body, s.empty());
    }
    return s.empty() ? "0" : s;
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    for (const auto& w : weights) {
        long wa = 0, wb = 0;
        for (std::size_t v = 0; v < w.size() && v < a.num_vars(); ++v) {
            wa += w[v] * a[v];
            wb += w[v] * b[v];
        }
        if (wa != wb) return wa > wb;
    }
    return cmp_grlex(a, b) < 0;
}

PolySpace::PolySpace(FieldConfig field, TermOrder order, int degree)
    : field_(std::move(field)), order_(std::move(order)), degree_(degree) {}

namespace {

const Monomial* leading(const Polynomial& f, const TermOrder& order) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f) {
        if (!best || order.greater(m, *best)) best = &m;
    }
    return best;
}

void axpy(Polynomial& f, const mpq_class& a, const Polynomial& g, const FieldConfig& field) {
    for (const auto& [m, c] : g) {
        auto it = f.find(m);
        if (it == f.end()) {
            auto v = field.mul(a, c);
            if (v != 0) f.emplace(m, v);
        } else {
            it->second = field.add(it->second, field.mul(a, c));
            if (it->second == 0) f.erase(it);
        }
    }
}

} // namespace

Polynomial PolySpace::reduce(Polynomial f) const {
    for (auto& [m, c] : f) c = field_.reduce(c);
    std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
    while (!f.empty()) {
        const Monomial* lead = leading(f, order_);
        if (lead->degree() != degree_) throw PreconditionError("polynomial of the wrong degree for this space");
        auto it = pivot_.find(*lead);
        if (it == pivot_.end()) break;
        mpq_class c = f.at(*lead);
        axpy(f, -c, rows_[it->second], field_);
    }
    return f;
}

std::optional<Monomial> PolySpace::insert(const Polynomial& f) {
    auto r = reduce(f);
    if (r.empty()) return std::nullopt;
    Monomial lead = *leading(r, order_);
    mpq_class c = r.at(lead);
    for (auto& [m, v] : r) v = field_.div(v, c);
    pivot_.emplace(lead, rows_.size());
    rows_.push_back(std::move(r));
    return lead;
}

std::vector<Monomial> PolySpace::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& [m, k] : pivot_) out.push_back(m);
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

std::vector<Monomial> initial_space(const TermOrder& order, const std::vector<Polynomial>& forms,
                                    const FieldConfig& field, int degree) {
    PolySpace v(field, order, degree);
    for (const auto& f : forms) v.insert(f);
    return v.leading_monomials();
}

std::vector<Monomial> initial_space(const TermOrder& order, const PolySpace& v) {
    return initial_space(order, v.rows(), v.field(), v.degree());
}

DistractionMatrix::DistractionMatrix(std::size_t num_vars, int stable_column) : n_(num_vars), n_col_(stable_column) {
    if (stable_column < 1) throw PreconditionError("stability column must be at least 1");
}

void DistractionMatrix::set(std::size_t row, int column, LinearForm form) {
    if (row >= n_) throw PreconditionError("distraction row out of range");
    if (column < 1 || column > n_col_) {
        throw PreconditionError("distraction column " + std::to_string(column) + " outside 1.." + std::to_string(n_col_));
    }
    if (form.size() != n_) throw PreconditionError("linear form has the wrong number of variables");
    over_[{row, column}] = std::move(form);
}

LinearForm DistractionMatrix::entry(std::size_t row, int column) const {
    if (row >= n_ || column < 1) throw std::out_of_range("distraction entry out of range");
    auto it = over_.find({row, std::min(column, n_col_)});
    return it == over_.end() ? variable_form(n_, row) : it->second;
}

std::vector<std::size_t> DistractionMatrix::special_rows() const {
    std::set<std::size_t> rows;
    for (const auto& [key, f] : over_) {
        if (f != variable_form(n_, key.first)) rows.insert(key.first);
    }
    return {rows.begin(), rows.end()};
}

namespace {

std::size_t rank_of(std::vector<LinearForm> rows, const FieldConfig& field) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && field.reduce(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (field.reduce(rows[r][c]) == 0) continue;
            auto f = field.div(rows[r][c], rows[rank][c]);
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

void DistractionMatrix::check_spanning(const FieldConfig& field, int cap) const {
    const int cols = std::max(1, std::min(n_col_, cap));
    std::vector<std::vector<std::pair<int, LinearForm>>> choices(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (int j = 1; j <= cols; ++j) {
            auto f = entry(r, j);
            bool dup = std::any_of(choices[r].begin(), choices[r].end(), [&](const auto& c) { return c.second == f; });
            if (!dup) choices[r].emplace_back(j, std::move(f));
        }
    }
    std::vector<std::size_t> pick(n_, 0);
    while (true) {
        std::vector<LinearForm> rows;
        for (std::size_t r = 0; r < n_; ++r) rows.push_back(choices[r][pick[r]].second);
        if (rank_of(rows, field) != n_) {
            std::string cs;
            for (std::size_t r = 0; r < n_; ++r) cs += (r ? "," : "") + std::to_string(choices[r][pick[r]].first);
            throw PreconditionError("distraction entries at columns (" + cs + ") do not span the linear forms");
        }
        std::size_t r = 0;
        while (r < n_ && ++pick[r] == choices[r].size()) pick[r++] = 0;
        if (r == n_) break;
    }
}

Polynomial apply_distraction(const DistractionMatrix& l, const Monomial& m, const FieldConfig& field) {
    if (m.num_vars() != l.num_vars()) throw PreconditionError("monomial and distraction matrix differ in variables");
    Polynomial acc{{Monomial::one(m.num_vars()), field.from_int(1)}};
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        for (int j = 1; j <= m[i]; ++j) {
            auto form = l.entry(i, j);
            Polynomial next;
            for (const auto& [mono, c] : acc) {
                for (std::size_t v = 0; v < form.size(); ++v) {
                    auto a = field.reduce(form[v]);
                    if (a == 0) continue;
                    auto key = mono.times_var(v);
                    auto& slot = next[key];
                    slot = field.add(slot, field.mul(c, a));
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            acc = std::move(next);
        }
    }
    return acc;
}

std::vector<Monomial> ambient_piece(const MonomialIdeal& ideal, int d) {
    auto out = relation_monomials(ideal.ring(), d);
    auto own = ideal.monomials(d);
    out.insert(out.end(), own.begin(), own.end());
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

std::vector<PolySpace> distraction_ideal(const DistractionMatrix& l, const MonomialIdeal& ideal,
                                         const FieldConfig& field) {
    const auto& r = ideal.ring();
    if (l.num_vars() != r.num_vars()) throw PreconditionError("distraction matrix and ring differ in variables");
    l.check_spanning(field, r.cap());
    std::vector<PolySpace> out;
    std::vector<std::vector<Polynomial>> images;
    for (int d = 0; d <= r.cap(); ++d) {
        PolySpace v(field, TermOrder{}, d);
        std::vector<Polynomial> img;
        auto mons = ambient_piece(ideal, d);
        for (const auto& m : mons) {
            img.push_back(apply_distraction(l, m, field));
            v.insert(img.back());
        }
        if (v.dim() != mons.size()) {
            throw VerificationError("distraction lost dimension in degree " + std::to_string(d) + ": " +
                                    std::to_string(v.dim()) + " < " + std::to_string(mons.size()));
        }
        out.push_back(std::move(v));
        images.push_back(std::move(img));
    }
    if (l.special_rows().size() <= 1) {
        for (int d = 0; d < r.cap(); ++d) {
            for (const auto& f : images[static_cast<std::size_t>(d)]) {
                for (std::size_t x = 0; x < r.num_vars(); ++x) {
                    Polynomial g;
                    for (const auto& [m, c] : f) g.emplace(m.times_var(x), c);
                    if (!out[static_cast<std::size_t>(d) + 1].contains(g)) {
                        throw VerificationError("distracted ideal not closed under " + r.var_names()[x] +
                                                " in degree " + std::to_string(d));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace hilbemb
