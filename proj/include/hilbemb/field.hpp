#ifndef HILBEMB_FIELD_HPP
#define HILBEMB_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace hilbemb {

/// The coefficient field: exact rationals, or GF(p) with an optional
/// primitive t-th root of unity. Elements of GF(p) are stored as integers
/// in [0, p) inside mpq_class so both fields share one scalar type.
class FieldConfig {
public:
    static FieldConfig rationals();
    /// GF(p). When `t` is given, `zeta` must have multiplicative order t;
    /// if `zeta` is omitted the smallest such element is used.
    static FieldConfig prime(std::uint64_t p, std::optional<int> t = std::nullopt,
                             std::optional<std::uint64_t> zeta = std::nullopt);
    /// Smallest prime p = 1 (mod t) with its smallest primitive t-th root.
    static FieldConfig for_roots_of_unity(int t, std::uint64_t search_limit = 1000000);

    bool is_prime() const { return p_ != 0; }
    std::uint64_t characteristic() const { return p_; }
    std::optional<int> root_order() const { return t_; }
    /// The primitive root of unity (GF(p) with a root order only).
    const mpq_class& zeta() const;

    mpq_class from_int(long v) const { return reduce(mpq_class(v)); }
    mpq_class reduce(const mpq_class& v) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    mpq_class pow(const mpq_class& a, int e) const;

    std::string describe() const;

private:
    std::uint64_t p_ = 0;
    std::optional<int> t_;
    mpq_class zeta_;
};

bool is_prime_number(std::uint64_t n);

} // namespace hilbemb

#endif
