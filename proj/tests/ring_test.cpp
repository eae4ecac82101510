#include <gtest/gtest.h>

#include <numeric>

#include "gabriel/catalogue.hpp"
#include "gabriel/ideal.hpp"
#include "gabriel/local.hpp"
#include "gabriel/ring.hpp"

using namespace gabriel;

namespace {

RingPtr zmod(unsigned n) { return build_ring(RingTerm::zmod(n)); }

// ideal of Z/n generated by a set: multiples of gcd(gens, n)
ElementSet zmod_oracle(unsigned n, std::vector<unsigned> gens) {
    unsigned g = n;
    for (auto x : gens) g = std::gcd(g, x);
    ElementSet s(n);
    for (unsigned k = 0; k < n; k += g) s.insert(k);
    return s;
}

std::vector<element> sorted_elements(const Ideal& i) { return i.elements().elements(); }

}  // namespace

TEST(BuildRing, Sizes) {
    EXPECT_EQ(zmod(12)->size(), 12u);
    EXPECT_EQ(build_ring(RingTerm::product({RingTerm::zmod(2), RingTerm::zmod(2)}))->size(), 4u);
    EXPECT_EQ(build_ring(RingTerm::polyquot(3, {1, 0, 1}))->size(), 9u);
    EXPECT_EQ(build_ring(RingTerm::square_zero(2, 2))->size(), 8u);
}

TEST(BuildRing, NilpotentX) {
    auto r = build_ring(RingTerm::polyquot(2, {0, 0, 1}));
    ASSERT_EQ(r->size(), 4u);
    // x has coefficient vector (0,1), index 0 + 1*2
    EXPECT_EQ(r->mul(2, 2), 0u);
    EXPECT_NE(r->mul(3, 3), 0u);
}

TEST(BuildRing, Errors) {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const error& e) {
            return e.code();
        }
        return errc::parse_error;
    };
    EXPECT_EQ(code([] { build_ring(RingTerm::zmod(1)); }), errc::invalid_modulus);
    EXPECT_EQ(code([] { build_ring(RingTerm::zmod(300)); }), errc::size_cap_exceeded);
    EXPECT_EQ(code([] { build_ring(RingTerm::polyquot(2, {1, 0, 0})); }), errc::non_monic_polynomial);
    EXPECT_EQ(code([] { build_ring(RingTerm::polyquot(4, {1, 1})); }), errc::invalid_modulus);
    EXPECT_EQ(code([] { build_ring(RingTerm::zmod(20), 16); }), errc::size_cap_exceeded);
}

TEST(BuildRing, AxiomsHold) {
    for (auto t : {RingTerm::zmod(12), RingTerm::polyquot(2, {1, 1, 1}), RingTerm::square_zero(2, 2),
                   RingTerm::product({RingTerm::zmod(4), RingTerm::polyquot(2, {0, 0, 1})})}) {
        EXPECT_EQ(check_ring_axioms(*build_ring(t)), "") << describe(t);
    }
}

TEST(Ideals, Generators) {
    auto r = zmod(12);
    EXPECT_EQ(ideal_from_generators(r, {4}).elements(), zmod_oracle(12, {4}));
    EXPECT_EQ(ideal_from_generators(r, {}).elements(), zmod_oracle(12, {}));
    EXPECT_EQ(ideal_from_generators(r, {4, 6}).elements(), zmod_oracle(12, {4, 6}));
    EXPECT_EQ(ideal_from_generators(r, {4, 6}).generators(), std::vector<element>{2});
}

TEST(Ideals, Arithmetic) {
    auto r = zmod(12);
    auto i = [&](element g) { return ideal_from_generators(r, {g}); };
    EXPECT_EQ(ideal_arith(IdealOp::sum, i(4), i(6)), i(2));
    EXPECT_EQ(ideal_arith(IdealOp::product, i(3), i(4)), i(0));
    EXPECT_EQ(ideal_arith(IdealOp::intersect, i(2), i(3)), i(6));
    EXPECT_EQ(colon(i(6), i(3)), i(2));
    EXPECT_EQ(colon(i(0), unit_ideal(r)), i(0));
    EXPECT_EQ(colon(i(0), i(4)), i(3));
    EXPECT_EQ(colon(i(6), element{3}), i(2));
    EXPECT_THROW(ideal_arith(IdealOp::sum, i(4), unit_ideal(zmod(6))), error);
}

TEST(Ideals, EnumerateZ12) {
    auto ideals = enumerate_ideals(zmod(12));
    std::vector<std::string> names;
    for (const auto& i : ideals) names.push_back(i.to_string());
    EXPECT_EQ(names, (std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"}));
}

TEST(Ideals, EnumerateMatchesDivisorOracle) {
    for (unsigned n = 2; n <= 60; ++n) {
        auto r = zmod(n);
        std::size_t divisors = 0;
        for (unsigned d = 1; d <= n; ++d) divisors += n % d == 0;
        auto ideals = enumerate_ideals(r);
        ASSERT_EQ(ideals.size(), divisors) << n;
        for (const auto& i : ideals) EXPECT_EQ(i.elements(), zmod_oracle(n, {static_cast<unsigned>(n / i.size())}));
    }
}

TEST(Ideals, SmallCounts) {
    EXPECT_EQ(enumerate_ideals(build_ring(RingTerm::product({RingTerm::zmod(2), RingTerm::zmod(2)}))).size(), 4u);
    EXPECT_EQ(enumerate_ideals(zmod(7)).size(), 2u);
    // F_2[x,y]/(x,y)^2: 0, m, and the three lines of m
    EXPECT_EQ(enumerate_ideals(build_ring(RingTerm::square_zero(2, 2))).size(), 6u);
    EXPECT_THROW(enumerate_ideals(zmod(20), 16), error);
}

TEST(Spec, Examples) {
    auto names = [](const std::vector<Ideal>& v) {
        std::vector<std::string> s;
        for (const auto& i : v) s.push_back(i.to_string());
        return s;
    };
    EXPECT_EQ(names(spec(zmod(12))), (std::vector<std::string>{"(3)", "(2)"}));
    auto dual = build_ring(RingTerm::polyquot(2, {0, 0, 1}));
    ASSERT_EQ(spec(dual).size(), 1u);
    EXPECT_EQ(sorted_elements(spec(dual).front()), (std::vector<element>{0, 2}));
    EXPECT_EQ(names(spec(zmod(5))), std::vector<std::string>{"(0)"});
}

TEST(Local, Decompositions) {
    auto sizes = [](unsigned n) {
        std::vector<std::size_t> s;
        auto r = zmod(n);
        auto f = local_decomposition(r);
        EXPECT_EQ(check_local_decomposition(r, f), "");
        for (const auto& x : f) s.push_back(x.projection.target->size());
        return s;
    };
    EXPECT_EQ(sizes(12), (std::vector<std::size_t>{3, 4}));  // idempotents 4 then 9
    EXPECT_EQ(sizes(8), std::vector<std::size_t>{8});
    EXPECT_EQ(sizes(6), (std::vector<std::size_t>{2, 3}));  // idempotents 3 then 4
    auto f12 = local_decomposition(zmod(12));
    EXPECT_EQ(f12[0].idempotent, 4u);
    EXPECT_EQ(f12[1].idempotent, 9u);
}

TEST(Local, LocalizeAtPrime) {
    auto r = zmod(12);
    auto f = localize_at_prime(ideal_from_generators(r, {2}));
    EXPECT_EQ(f.projection.target->size(), 4u);
    EXPECT_THROW(localize_at_prime(ideal_from_generators(r, {4})), error);
}

// Structural laws on every catalogue ring, checked element by element.
TEST(Catalogue, RingProperties) {
    for (const auto& t : ring_catalogue(16)) {
        const auto r = build_ring(t);
        const auto name = describe(t);
        ASSERT_EQ(check_ring_axioms(*r), "") << name;
        const auto ideals = enumerate_ideals(r);
        auto listed = [&](const Ideal& i) { return std::find(ideals.begin(), ideals.end(), i) != ideals.end(); };
        for (const auto& i : ideals) {
            EXPECT_EQ(ideal_from_generators(r, i.generators()), i) << name;
            for (const auto& j : ideals) {
                EXPECT_TRUE(listed(ideal_arith(IdealOp::sum, i, j))) << name;
                EXPECT_TRUE(listed(ideal_arith(IdealOp::product, i, j))) << name;
                EXPECT_TRUE(listed(ideal_arith(IdealOp::intersect, i, j))) << name;
                EXPECT_TRUE(listed(colon(i, j))) << name;
            }
        }
        for (const auto& p : spec(r)) {
            EXPECT_TRUE(listed(p)) << name;
            EXPECT_LT(p.elements().size(), r->size()) << name;
            for (element a = 0; a < r->size(); ++a)
                for (element b = 0; b < r->size(); ++b)
                    if (!p.elements().contains(a) && !p.elements().contains(b)) {
                        EXPECT_FALSE(p.elements().contains(r->mul(a, b))) << name;
                    }
        }
        const auto f = local_decomposition(r);
        EXPECT_EQ(check_local_decomposition(r, f), "") << name;
        std::size_t product = 1;
        for (const auto& x : f) product *= x.projection.target->size();
        EXPECT_EQ(product, r->size()) << name;
    }
}
