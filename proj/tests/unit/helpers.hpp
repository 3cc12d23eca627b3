#ifndef HILBEMB_TEST_HELPERS_HPP
#define HILBEMB_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbemb/ideal.hpp"

namespace testing_helpers {

using namespace hilbemb;


inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

inline RingPtr ring_of(std::vector<std::string> vars, std::vector<std::string> rels, int cap,
                std::optional<int> trunc = std::nullopt) {
    std::vector<Monomial> ms;
    for (const auto& r : rels) ms.push_back(parse_monomial(r, vars));
    return make_ring(vars, ms, cap, trunc);
}

inline RingPtr tensor_ring(int cap = 3) { return ring_of({"x", "y", "z"}, {"x^3", "x^2*y", "x*y^2", "y^3", "z^2"}, cap); }

inline RingPtr wxyz_ring() { return ring_of({"w", "x", "y", "z"}, {"w*x*y", "w*x*z", "w*y*z", "x*y*z"}, 4, 3); }

// Exhaustive minimum over all r-subsets, computed from monomial products
// directly rather than through the growth graph.
inline std::size_t brute_min_growth(const QuotientRing& r, int d, std::size_t size) {
    const auto& b = r.standard_basis(d);
    std::size_t best = SIZE_MAX;
    for (unsigned long mask = 0; mask < (1UL << b.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != size) continue;
        std::set<Monomial> out;
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (!(mask >> k & 1)) continue;
            for (std::size_t v = 0; v < r.num_vars(); ++v) {
                auto p = b[k].times_var(v);
                if (!r.is_zero(p)) out.insert(p);
            }
        }
        best = std::min(best, out.size());
    }
    return best;
}

// Every family of subsets closed under multiplication, by brute force.
inline std::set<std::vector<long>> brute_series(const QuotientRing& r) {
    std::vector<std::size_t> dims;
    for (int d = 0; d <= r.cap(); ++d) dims.push_back(r.dim(d));
    std::set<std::vector<long>> out;
    std::vector<unsigned long> masks(dims.size(), 0);
    while (true) {
        bool closed = true;
        for (int d = 0; d < r.cap() && closed; ++d) {
            for (std::size_t k = 0; k < dims[d] && closed; ++k) {
                if (!(masks[d] >> k & 1)) continue;
                for (std::size_t v = 0; v < r.num_vars(); ++v) {
                    auto p = r.basis_element(d, k).times_var(v);
                    auto i = r.index_of(p);
                    if (i && !(masks[d + 1] >> *i & 1)) closed = false;
                }
            }
        }
        if (closed) {
            std::vector<long> h;
            for (auto m : masks) h.push_back(__builtin_popcountl(m));
            out.insert(h);
        }
        std::size_t d = 0;
        while (d < dims.size() && ++masks[d] == (1UL << dims[d])) masks[d++] = 0;
        if (d == dims.size()) break;
    }
    return out;
}


} // namespace testing_helpers

#endif
