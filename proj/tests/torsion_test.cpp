#include <gtest/gtest.h>

#include <set>

#include "gabriel/torsion.hpp"
#include "oracle.hpp"

using namespace gabriel;

namespace {

struct Z12 : ::testing::Test {
    RingPtr r = build_ring(RingTerm::zmod(12));
    IdealLatticePtr l = make_ideal_lattice(r);
    FiniteModule m = FiniteModule::free(r, 1);

    std::size_t id(element g) const { return l->index_of(ideal_from_generators(r, {g})); }
    ElementSet set(element g) const { return ideal_from_generators(r, {g}).elements(); }
    std::vector<char> members(std::initializer_list<element> gens) const {
        std::vector<char> in(l->size(), 0);
        for (auto g : gens) in[id(g)] = 1;
        return in;
    }
    GabrielFilter filter(std::initializer_list<element> gens) const { return {l, members(gens)}; }
};

}  // namespace

TEST_F(Z12, GabrielCheckExamples) {
    EXPECT_TRUE(gabriel_check(*l, members({3, 1})).empty());
    EXPECT_TRUE(gabriel_check(*l, members({1})).empty());
    auto v = gabriel_check(*l, members({6, 2, 3, 1}));
    ASSERT_FALSE(v.empty());
    bool found = false;
    for (const auto& x : v)
        if (x.axiom == "gabriel_condition" && !found) {
            found = true;
            EXPECT_EQ(x.witnesses[0].to_string(), "(0)");
            EXPECT_EQ(x.witnesses[1].to_string(), "(6)");
        }
    EXPECT_TRUE(found);
}

TEST_F(Z12, ClosureExamples) {
    EXPECT_EQ(gabriel_closure(l, std::vector<std::size_t>{id(4)}), filter({4, 2, 1}));
    EXPECT_EQ(gabriel_closure(l, std::vector<std::size_t>{id(6)}), improper_filter(l));
    EXPECT_EQ(gabriel_closure(l, std::vector<std::size_t>{}), trivial_filter(l));
}

TEST_F(Z12, MultSetExamples) {
    EXPECT_EQ(filter_from_mult_set(l, {1, 3, 9}), filter({3, 1}));
    EXPECT_EQ(filter_from_mult_set(l, {1, 5}), filter({1}));
    EXPECT_EQ(filter_from_mult_set(l, {1}), trivial_filter(l));
    try {
        filter_from_mult_set(l, {1, 3});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_multiplicatively_closed);
    }
    EXPECT_THROW(filter_from_mult_set(l, {3, 9}), error);
}

TEST_F(Z12, MultSetMatchesClosureOfPrincipals) {
    // every multiplicatively closed subset of Z/12 generated by at most two elements
    for (element s = 0; s < 12; ++s)
        for (element t = s; t < 12; ++t) {
            std::set<element> sigma{1};
            for (bool grew = true; grew;) {
                grew = false;
                std::set<element> next = sigma;
                for (auto a : sigma) {
                    next.insert(r->mul(a, s));
                    next.insert(r->mul(a, t));
                }
                grew = next.size() != sigma.size();
                sigma = next;
            }
            std::vector<element> sv(sigma.begin(), sigma.end());
            std::vector<std::size_t> seeds;
            for (auto x : sv) seeds.push_back(l->principal(x));
            EXPECT_EQ(filter_from_mult_set(l, sv), gabriel_closure(l, seeds));
        }
}

TEST_F(Z12, LambdaAndPrimes) {
    EXPECT_EQ(lambda_filter(l), filter({1}));
    EXPECT_EQ(filter_from_prime(l, id(2)), filter({3, 1}));
    EXPECT_EQ(filter_from_prime(l, id(3)), filter({2, 4, 1}));
    EXPECT_THROW(filter_from_prime(l, id(4)), error);
    EXPECT_EQ(meet_filters({filter_from_prime(l, id(2)), filter_from_prime(l, id(3))}), filter({1}));
    auto s = filter({3, 1});
    EXPECT_EQ(meet_filters({s}), s);
    EXPECT_EQ(meet_filters({s, improper_filter(l)}), s);
    auto other = make_ideal_lattice(build_ring(RingTerm::zmod(6)));
    EXPECT_THROW(meet_filters({s, trivial_filter(other)}), error);
}

TEST_F(Z12, TorsionSubmodule) {
    EXPECT_EQ(torsion_submodule(m, filter({3, 1})), set(4));
    EXPECT_EQ(torsion_submodule(m, trivial_filter(l)), set(0));
    EXPECT_EQ(torsion_submodule(m, improper_filter(l)), set(1));
}

TEST_F(Z12, Closure) {
    auto s = filter({3, 1});
    EXPECT_EQ(closure(m, set(6), s), set(2));
    EXPECT_EQ(closure(m, set(1), s), set(1));
    EXPECT_EQ(closure(m, set(4), s), set(4));
    EXPECT_TRUE(is_closed(m, set(4), s));
    EXPECT_FALSE(is_closed(m, set(6), s));
    EXPECT_TRUE(is_dense(m, set(1), s));
    ElementSet bad(12);
    bad.insert(0);
    bad.insert(5);
    EXPECT_THROW(closure(m, bad, s), error);
}

TEST_F(Z12, TotallyTorsion) {
    auto s = filter({3, 1});
    auto sub = FiniteModule(m.ambient_ptr(), set(4), set(0));
    auto t = is_totally_torsion(sub, s);
    EXPECT_TRUE(t.holds);
    EXPECT_EQ(t.annihilator.to_string(), "(3)");
    EXPECT_FALSE(is_totally_torsion(m, s).holds);
    auto zero = FiniteModule(m.ambient_ptr(), set(0), set(0));
    EXPECT_TRUE(is_totally_torsion(zero, s).holds);
    EXPECT_TRUE(is_totally_torsion(zero, s).annihilator.is_unit());
}

TEST_F(Z12, SpecPartition) {
    auto names = [](const std::vector<Ideal>& v) {
        std::vector<std::string> s;
        for (const auto& i : v) s.push_back(i.to_string());
        return s;
    };
    auto p = spec_partition(filter({3, 1}));
    EXPECT_EQ(names(p.K), std::vector<std::string>{"(2)"});
    EXPECT_EQ(names(p.Z), std::vector<std::string>{"(3)"});
    EXPECT_EQ(names(p.C), std::vector<std::string>{"(2)"});
    auto triv = spec_partition(trivial_filter(l));
    EXPECT_EQ(triv.K.size(), 2u);
    EXPECT_TRUE(triv.Z.empty());
    auto imp = spec_partition(improper_filter(l));
    EXPECT_TRUE(imp.K.empty());
    EXPECT_EQ(imp.Z.size(), 2u);
    EXPECT_TRUE(imp.C.empty());
}

TEST_F(Z12, Jansian) {
    auto j = jansian_status(filter({4, 2, 1}));
    EXPECT_TRUE(j.is_jansian);
    EXPECT_EQ(j.basis_ideal->to_string(), "(4)");
    EXPECT_EQ(*j.idempotent, 4u);
    EXPECT_TRUE(j.is_almost_jansian);
}

TEST(Jansian, Z6) {
    auto l = make_ideal_lattice(build_ring(RingTerm::zmod(6)));
    auto j = jansian_status(filter_from_mult_set(l, {1, 3}));
    EXPECT_TRUE(j.is_jansian);
    EXPECT_EQ(j.basis_ideal->to_string(), "(3)");
    EXPECT_EQ(*j.idempotent, 3u);
    EXPECT_TRUE(j.is_almost_jansian);
}

TEST_F(Z12, InducedFilters) {
    auto s = filter({3, 1});
    auto q = quotient_map(ideal_from_generators(r, {6}));
    auto fq = induced_filter(q, s);
    EXPECT_EQ(q.target->size(), 6u);
    EXPECT_EQ(fq.count(), 2u);
    EXPECT_TRUE(fq.contains_set(q.direct_image(set(3))));
    auto loc = localize_at_prime(ideal_from_generators(r, {2}));
    auto fl = induced_filter(loc.projection, s);
    EXPECT_EQ(fl, trivial_filter(fl.lattice_ptr()));
    EXPECT_EQ(induced_filter(identity_map(r), s), s);
    RingMap broken = identity_map(r);
    broken.kind = RingMap::Kind::quotient;
    broken.image[1] = 5;
    EXPECT_THROW(induced_filter(broken, s), error);
}

TEST(Census, MatchesSubsetScanOracle) {
    for (unsigned n : {2u, 4u, 6u, 8u, 9u, 12u, 18u, 30u, 36u}) {
        auto l = make_ideal_lattice(build_ring(RingTerm::zmod(n)));
        auto ours = all_gabriel_filters(l);
        auto theirs = oracle::gabriel_filters(n);
        ASSERT_EQ(ours.size(), theirs.size()) << n;
        EXPECT_EQ(ours.size(), 1u << oracle::distinct_primes(n));
        std::set<std::set<unsigned>> got;
        for (const auto& f : ours) {
            std::set<unsigned> d;
            for (auto i : f.members()) d.insert(static_cast<unsigned>(n / l->elements(i).size()));
            got.insert(d);
        }
        EXPECT_EQ(got, std::set<std::set<unsigned>>(theirs.begin(), theirs.end())) << n;
    }
}

TEST(GabrielCheck, AgreesWithOracleOnEverySubset) {
    const unsigned n = 12;
    auto l = make_ideal_lattice(build_ring(RingTerm::zmod(n)));
    for (unsigned mask = 0; mask < (1u << l->size()); ++mask) {
        std::vector<char> in(l->size());
        std::set<unsigned> d;
        for (std::size_t i = 0; i < l->size(); ++i) {
            in[i] = mask >> i & 1;
            if (in[i]) d.insert(static_cast<unsigned>(n / l->elements(i).size()));
        }
        EXPECT_EQ(gabriel_check(*l, in).empty(), oracle::is_gabriel(n, d)) << mask;
    }
}
