#include "hilbemb/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hilbemb/error.hpp"

namespace hilbemb {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, int power) {
    std::vector<int> e(num_vars, 0);
    e.at(var) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (other.num_vars() != num_vars()) throw std::invalid_argument("monomial variable counts differ");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

Monomial Monomial::times_var(std::size_t var, int power) const {
    Monomial r = *this;
    r.exps_.at(var) += power;
    r.degree_ += power;
    return r;
}

std::optional<Monomial> Monomial::quotient(const Monomial& divisor) const {
    if (!divisor.divides(*this)) return std::nullopt;
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    r.degree_ -= divisor.degree_;
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::min(exps_[i], other.exps_.at(i));
    return Monomial(std::move(e));
}

std::strong_ordering cmp_grlex(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("cmp_grlex: mismatched variable lists");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // Reversed: the larger exponent vector is the smaller monomial.
    auto ea = a.exponents();
    auto eb = b.exponents();
    return std::lexicographical_compare_three_way(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

void fill_degree(std::vector<int>& exps, std::size_t var, int remaining, std::vector<Monomial>& out) {
    if (var + 1 == exps.size()) {
        exps[var] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[var] = e;
        fill_degree(exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (num_vars == 0) {
        if (d == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> exps(num_vars, 0);
    fill_degree(exps, 0, d, out);
    return out;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
    if (m.num_vars() != names.size()) throw std::invalid_argument("format_monomial: variable count mismatch");
    std::string s;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial parse_monomial(std::string_view text, std::span<const std::string> names) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> Monomial {
        throw ParseError("monomial '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
    };

    std::vector<int> exps(names.size(), 0);
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) return fail("unexpected trailing input");
        return Monomial(std::move(exps));
    }
    while (true) {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            return fail("expected variable name");
        }
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        std::string_view ident = text.substr(start, pos - start);
        auto it = std::find(names.begin(), names.end(), ident);
        if (it == names.end()) return fail("unknown variable '" + std::string(ident) + "'");
        int power = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t digits = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (digits == pos) return fail("expected exponent");
            power = std::stoi(std::string(text.substr(digits, pos - digits)));
        }
        exps[static_cast<std::size_t>(it - names.begin())] += power;
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') return fail("expected '*'");
        ++pos;
    }
    return Monomial(std::move(exps));
}

} // namespace hilbemb
