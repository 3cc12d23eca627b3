#ifndef HILBEMB_MONOMIAL_HPP
#define HILBEMB_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbemb {

/// A monomial of the ambient polynomial ring, stored as a dense exponent
/// vector with its total degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(std::size_t num_vars);
    static Monomial variable(std::size_t num_vars, std::size_t var, int power = 1);

    std::size_t num_vars() const { return exps_.size(); }
    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::span<const int> exponents() const { return exps_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial times_var(std::size_t var, int power = 1) const;
    /// `*this / divisor`, or nothing when `divisor` does not divide.
    std::optional<Monomial> quotient(const Monomial& divisor) const;
    Monomial gcd(const Monomial& other) const;

    /// Plain lexicographic comparison of exponent vectors; used for map keys.
    /// Use cmp_grlex for the graded order.
    auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded lexicographic comparison with the smallest-first convention:
/// lower degree first, and within a degree the exponent vector that is
/// lexicographically greater (reading x1 first) comes first. So in every
/// degree the multiples of x1 form an initial segment.
/// Throws std::invalid_argument when the variable counts differ.
std::strong_ordering cmp_grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_grlex(a, b) < 0; }
};

/// All monomials of degree `d` in `num_vars` variables, ascending in grlex.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d);

std::string format_monomial(const Monomial& m, std::span<const std::string> names);

/// Parses `ident("^"uint)? ("*" ident("^"uint)?)*` or the literal "1".
/// Repeated variables are multiplied together (x^1*x^2 is x^3).
Monomial parse_monomial(std::string_view text, std::span<const std::string> names);

} // namespace hilbemb

#endif
