#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hilbemb/enumerate.hpp"
#include "hilbemb/error.hpp"
#include "hilbemb/ideal.hpp"
#include "helpers.hpp"

using namespace hilbemb;
using namespace testing_helpers;


TEST_CASE("grlex puts x1 multiples first") {
    CHECK(cmp_grlex(mono({1, 0, 0}), mono({0, 1, 0})) < 0);
    CHECK(cmp_grlex(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
    CHECK(cmp_grlex(mono({0, 0, 1}), mono({2, 0, 0})) < 0);
    CHECK(cmp_grlex(mono({0, 1}), mono({0, 1})) == 0);
    CHECK_THROWS_AS((void)cmp_grlex(mono({1}), mono({1, 0})), std::invalid_argument);

    auto deg2 = monomials_of_degree(3, 2);
    REQUIRE(deg2.size() == 6);
    std::vector<std::string> names{"x1", "x2", "x3"};
    std::vector<std::string> got;
    for (const auto& m : deg2) got.push_back(format_monomial(m, names));
    CHECK(got == std::vector<std::string>{"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
    CHECK(std::is_sorted(deg2.begin(), deg2.end(), GrlexLess{}));
}

TEST_CASE("monomial parsing") {
    std::vector<std::string> v{"x", "y"};
    CHECK(parse_monomial("x^1*x^2", v) == mono({3, 0}));
    CHECK(parse_monomial("1", v) == mono({0, 0}));
    CHECK(parse_monomial("y*x", v) == mono({1, 1}));
    CHECK_THROWS_AS(parse_monomial("q", v), ParseError);
    CHECK_THROWS_AS(parse_monomial("x^", v), ParseError);
    CHECK_THROWS_AS(parse_monomial("x**y", v), ParseError);
    CHECK(format_monomial(mono({2, 1}), v) == "x^2*y");
}

TEST_CASE("monomial arithmetic") {
    auto a = mono({1, 2, 0});
    auto b = mono({2, 2, 1});
    CHECK(a.degree() == 3);
    CHECK(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK(*b.quotient(a) == mono({1, 0, 1}));
    CHECK_FALSE(a.quotient(b).has_value());
    CHECK(a.gcd(mono({0, 5, 5})) == mono({0, 2, 0}));
}

TEST_CASE("standard bases") {
    auto r = ring_of({"x", "y"}, {"x^2"}, 3);
    CHECK(r->standard_basis(2) == std::vector<Monomial>{mono({1, 1}), mono({0, 2})});
    CHECK_THROWS_AS((void)r->standard_basis(4), std::out_of_range);

    auto t = tensor_ring();
    CHECK(t->standard_basis(3) == std::vector<Monomial>{mono({2, 0, 1}), mono({1, 1, 1}), mono({0, 2, 1})});

    auto w = wxyz_ring();
    CHECK(w->standard_basis(4).empty());
    CHECK(w->is_exact());
    CHECK(w->dim(3) == 16);
    CHECK_FALSE(r->is_exact());
}

TEST_CASE("relations reduced to an antichain with warnings") {
    auto r = ring_of({"x", "y"}, {"x^3", "x^2", "x^2"}, 3);
    CHECK(r->generators() == std::vector<Monomial>{mono({2, 0})});
    CHECK(r->warnings().size() == 2);
    auto lin = ring_of({"x", "y"}, {"x"}, 2);
    CHECK_THROWS_AS(lin->require_no_linear_relations(), PreconditionError);
}

TEST_CASE("hilbert series of principal ideals") {
    auto t = tensor_ring();
    auto hx = MonomialIdeal::generated_by(t, {mono({1, 0, 0})}).hilbert_series();
    auto hz = MonomialIdeal::generated_by(t, {mono({0, 0, 1})}).hilbert_series();
    CHECK(hx == HilbertSeries({0, 1, 3, 2}));
    CHECK(hz == HilbertSeries({0, 1, 2, 3}));
    CHECK(MonomialIdeal::zero(t).hilbert_series() == HilbertSeries::zeros(3));
    CHECK(MonomialIdeal::unit(t).hilbert_series() == t->hilbert_series());
}

TEST_CASE("ideal closure is validated") {
    auto r = ring_of({"x", "y"}, {}, 2);
    std::vector<IndexSet> p{IndexSet(1), prefix_set(2, 1), IndexSet(3)};
    CHECK_THROWS_AS(MonomialIdeal(r, p), PreconditionError);
}

TEST_CASE("growth in the w,x,y,z ring") {
    auto w = wxyz_ring();
    CHECK(growth(*w, 2, {w->parse("w^2")}).size() == 4);
    CHECK(growth(*w, 2, {w->parse("w*x")}).size() == 2);
    CHECK(growth(*w, 2, {}).empty());
    CHECK(growth(*w, 2, w->standard_basis(2)) == w->standard_basis(3));
    CHECK_THROWS_AS(growth(*w, 4, {}), std::out_of_range);
    CHECK(min_growth_oracle(*w, 2, 1) == 2);
}

TEST_CASE("min growth matches exhaustive subsets") {
    std::vector<RingPtr> rings{
        ring_of({"x", "y"}, {"x^2", "y^2"}, 2), ring_of({"x", "y", "z"}, {}, 3), tensor_ring(),
        ring_of({"x", "y", "z"}, {"x^2", "y^3", "x*z^2"}, 4), wxyz_ring()};
    for (const auto& r : rings) {
        for (int d = 0; d < r->cap(); ++d) {
            std::size_t prev = 0;
            for (std::size_t k = 0; k <= r->dim(d); ++k) {
                auto got = min_growth_oracle(*r, d, k);
                CHECK(got == brute_min_growth(*r, d, k));
                CHECK(got >= prev);
                prev = got;
            }
            auto table = min_growth_table(r->growth_graph(), d, 3);
            for (std::size_t k = 0; k <= r->dim(d); ++k) CHECK(table[k] == min_growth_oracle(*r, d, k));
        }
    }
    CHECK(min_growth_oracle(*rings[0], 1, 1) == 1);
    CHECK_THROWS_AS(min_growth_oracle(*rings[0], 1, 3), std::out_of_range);
}

TEST_CASE("growth size does not depend on the variable order") {
    auto r = ring_of({"x", "y", "z"}, {"x^2", "y*z^2"}, 4);
    auto s = ring_of({"z", "x", "y"}, {"x^2", "y*z^2"}, 4);
    std::mt19937 rng(7);
    for (int d = 0; d < 4; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Monomial> v, w;
            for (const auto& m : r->standard_basis(d)) {
                if (rng() % 2) {
                    v.push_back(m);
                    auto e = m.exponents();
                    w.push_back(mono({e[2], e[0], e[1]}));
                }
            }
            CHECK(growth(*r, d, v).size() == growth(*s, d, w).size());
        }
    }
}

TEST_CASE("enumeration of a tiny ring") {
    auto r = ring_of({"x"}, {"x^2"}, 2);
    std::set<std::vector<long>> seen;
    auto n = enumerate_monomial_ideals(r, {}, [&](const MonomialIdeal& i) {
        seen.insert(i.hilbert_series().coeffs());
        return true;
    });
    CHECK(n == 3);
    CHECK(seen == std::set<std::vector<long>>{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}});
}

TEST_CASE("enumeration agrees with brute force and visits each ideal once") {
    std::vector<RingPtr> rings{ring_of({"x", "y"}, {"x^2", "y^2"}, 2), ring_of({"x", "y"}, {}, 2),
                               ring_of({"x", "y"}, {"x^3"}, 3), ring_of({"x", "y", "z"}, {"x^2", "y^2", "z^2"}, 2)};
    for (const auto& r : rings) {
        auto all = all_monomial_ideals(r);
        std::set<std::vector<IndexSet>> distinct;
        std::set<std::vector<long>> series;
        for (const auto& i : all) {
            distinct.insert(i.pieces());
            series.insert(i.hilbert_series().coeffs());
        }
        CHECK(distinct.size() == all.size());
        CHECK(series == brute_series(*r));
    }
}

TEST_CASE("enumeration constraints") {
    auto ss = ring_of({"x1", "x2", "x3"}, {}, 4);
    std::vector<Monomial> gens;
    auto a1 = std::vector<std::string>{"x1^2", "x1*x2", "x2^2"};
    for (const auto& q : a1) {
        for (const auto& m : monomials_of_degree(3, 2)) gens.push_back(parse_monomial(q, ss->var_names()) * m);
    }
    auto strongly = make_ring(ss->var_names(), gens, 4);
    CHECK_FALSE(find_ideal_with_series(strongly, HilbertSeries({0, 0, 3, 6, 0})).has_value());

    EnumerationConstraints unit;
    for (int d = 0; d <= strongly->cap(); ++d) unit.size_bounds.emplace_back(strongly->dim(d), strongly->dim(d));
    CHECK(all_monomial_ideals(strongly, unit).size() == 1);

    auto t = tensor_ring();
    CHECK_FALSE(find_ideal_with_series(t, HilbertSeries({0, 1, 2, 2})).has_value());
    CHECK(find_ideal_with_series(t, HilbertSeries({0, 1, 3, 2})).has_value());
}

TEST_CASE("enumeration budget") {
    auto r = ring_of({"x", "y"}, {}, 3);
    CHECK_THROWS_AS(enumerate_monomial_ideals(r, {}, [](const MonomialIdeal&) { return true; }, 5),
                    BudgetExceeded);
    std::size_t calls = 0;
    auto n = enumerate_monomial_ideals(r, {}, [&](const MonomialIdeal&) { return ++calls < 4; });
    CHECK(n == 4);
}

TEST_CASE("hilbert series is monotone under inclusion") {
    auto r = ring_of({"x", "y"}, {"x^3"}, 3);
    auto all = all_monomial_ideals(r);
    for (const auto& a : all) {
        for (const auto& b : all) {
            if (a.is_subset_of(b)) CHECK(b.hilbert_series().dominates(a.hilbert_series()));
        }
    }
}

TEST_CASE("betti1") {
    auto r = ring_of({"x", "y"}, {}, 3);
    auto i = MonomialIdeal::generated_by(r, {mono({1, 0})});
    CHECK(betti1(i, 1) == 1);
    CHECK(betti1(i, 2) == 0);

    auto s = ring_of({"x", "y"}, {"x^3"}, 4);
    auto e = MonomialIdeal::generated_by(s, {mono({1, 0}), mono({0, 3})});
    CHECK(betti1(e, 1) == 1);
    CHECK(betti1(e, 2) == 0);
    CHECK(betti1(e, 3) == 1);
    for (int j = 0; j <= 4; ++j) CHECK(betti1(MonomialIdeal::zero(s), j) == 0);

    for (const auto& id : all_monomial_ideals(s)) {
        long total = 0;
        for (int j = 0; j <= s->cap(); ++j) {
            CHECK(betti1(id, j) >= 0);
            total += betti1(id, j);
        }
        CHECK(total == static_cast<long>(id.minimal_generators().size()));
    }
}

TEST_CASE("series parsing") {
    CHECK(parse_series("0, 1,3,2") == HilbertSeries({0, 1, 3, 2}));
    CHECK_THROWS_AS(parse_series("0,,1"), ParseError);
    CHECK_THROWS_AS(parse_series("0,a"), ParseError);
    CHECK_THROWS_AS(parse_series("0,-1"), PreconditionError);
    CHECK_THROWS_AS(HilbertSeries({0, 1, 2}).padded(1), PreconditionError);
}
