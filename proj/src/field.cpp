#include "hilbemb/field.hpp"

#include "hilbemb/error.hpp"

namespace hilbemb {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

namespace {

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) return 0;
    std::uint64_t k = 1;
    for (std::uint64_t x = a % p; x != 1; x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % p)) {
        ++k;
    }
    return k;
}

} // namespace

FieldConfig FieldConfig::rationals() { return FieldConfig(); }

FieldConfig FieldConfig::prime(std::uint64_t p, std::optional<int> t, std::optional<std::uint64_t> zeta) {
    if (!is_prime_number(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (p >= (1ULL << 31)) throw PreconditionError("characteristic must be below 2^31");
    FieldConfig f;
    f.p_ = p;
    if (t) {
        if (*t < 1 || (p - 1) % static_cast<std::uint64_t>(*t) != 0) {
            throw PreconditionError("GF(" + std::to_string(p) + ") has no primitive root of unity of order " +
                                    std::to_string(*t));
        }
        std::uint64_t z = 0;
        if (zeta) {
            if (multiplicative_order(*zeta, p) != static_cast<std::uint64_t>(*t)) {
                throw PreconditionError(std::to_string(*zeta) + " does not have multiplicative order " +
                                        std::to_string(*t) + " in GF(" + std::to_string(p) + ")");
            }
            z = *zeta % p;
        } else {
            for (std::uint64_t a = 1; a < p; ++a) {
                if (multiplicative_order(a, p) == static_cast<std::uint64_t>(*t)) {
                    z = a;
                    break;
                }
            }
        }
        f.t_ = t;
        f.zeta_ = mpq_class(static_cast<unsigned long>(z));
    } else if (zeta) {
        throw PreconditionError("a root of unity needs its order");
    }
    return f;
}

FieldConfig FieldConfig::for_roots_of_unity(int t, std::uint64_t search_limit) {
    if (t < 1) throw PreconditionError("root order must be positive");
    for (std::uint64_t p = 2; p <= search_limit; ++p) {
        if ((p - 1) % static_cast<std::uint64_t>(t) == 0 && is_prime_number(p)) return prime(p, t);
    }
    throw PreconditionError("no prime p = 1 mod " + std::to_string(t) + " below " + std::to_string(search_limit));
}

const mpq_class& FieldConfig::zeta() const {
    if (!t_) throw PreconditionError("field has no designated root of unity");
    return zeta_;
}

mpq_class FieldConfig::reduce(const mpq_class& v) const {
    if (!p_) return v;
    mpz_class num = v.get_num(), den = v.get_den(), p(static_cast<unsigned long>(p_));
    if (den != 1) {
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t())) {
            throw PreconditionError("denominator divisible by the characteristic");
        }
        num *= inv;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return mpq_class(r);
}

mpq_class FieldConfig::div(const mpq_class& a, const mpq_class& b) const {
    if (reduce(b) == 0) throw std::domain_error("division by zero");
    if (!p_) return a / b;
    return reduce(a / b);
}

mpq_class FieldConfig::pow(const mpq_class& a, int e) const {
    mpq_class r = from_int(1);
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

std::string FieldConfig::describe() const {
    if (!p_) return "QQ";
    std::string s = "GF(" + std::to_string(p_) + ")";
    if (t_) s += " zeta=" + zeta_.get_str() + " order " + std::to_string(*t_);
    return s;
}

} // namespace hilbemb
