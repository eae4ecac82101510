#include <gtest/gtest.h>

#include <set>

#include "gabriel/catalogue.hpp"
#include "gabriel/noether.hpp"
#include "gabriel/suite.hpp"

using namespace gabriel;

namespace {

std::vector<RingTerm> small_rings() {
    return {RingTerm::zmod(12), RingTerm::square_zero(2, 2), RingTerm::product(RingTerm::zmod(2), RingTerm::zmod(4)),
            RingTerm::polyquot(2, {0, 0, 0, 1})};
}

}  // namespace

// The tabulated search must agree with the set-based one on generators and h.
TEST(Certifier, MatchesSetBasedSearch) {
    for (const auto& term : small_rings()) {
        auto r = build_ring(term);
        auto l = make_ideal_lattice(r);
        for (unsigned rank : {1u, 2u}) {
            if (rank == 2 && r->size() > 8) continue;
            ModuleContext ctx(l, rank);
            for (const auto& sigma : all_gabriel_filters(l)) {
                FilteredContext fc(ctx, sigma);
                detail::Certifier cert(fc);
                for (std::size_t v = 0; v < ctx.size(); ++v) {
                    const auto m = FiniteModule(std::make_shared<const FreeModule>(r, rank), ctx.lattice()[ctx.top()], ctx.lattice()[v]);
                    ctx.up(v).for_each([&](element n) {
                        const auto& fast = cert.find(v, n);
                        const auto slow = tfg_certificate(m, ctx.lattice()[n], sigma);
                        EXPECT_EQ(fast.generators, slow.generators) << r->name() << " rank " << rank;
                        EXPECT_EQ(l->elements(fast.h), slow.h.elements()) << r->name() << " rank " << rank;
                        EXPECT_TRUE(cert.verify(v, n, fast));
                    });
                }
            }
        }
    }
}

TEST(Stability, MatchesSetBasedChains) {
    auto r = build_ring(RingTerm::zmod(12));
    auto l = make_ideal_lattice(r);
    ModuleContext ctx(l, 1);
    const auto m = FiniteModule::free(r, 1);
    for (const auto& sigma : all_gabriel_filters(l)) {
        FilteredContext fc(ctx, sigma);
        detail::for_each_chain(ctx, 0, [&](const std::vector<std::size_t>& chain) {
            std::vector<ElementSet> sets;
            for (auto i : chain) sets.push_back(ctx.lattice()[i]);
            const auto fast = detail::stability(fc, chain);
            const auto slow = chain_stability(m, sets, sigma);
            ASSERT_TRUE(fast.has_value());
            EXPECT_EQ(fast->first + 1, slow.stable_index);
            EXPECT_EQ(l->elements(fast->second), slow.h.elements());
        });
    }
}

TEST(Suite, PassesOnSmallRings) {
    for (const auto& term : small_rings()) {
        RingSuite suite(build_ring(term));
        for (const auto& sigma : suite.filters())
            for (const auto& res : suite.run(sigma)) {
                EXPECT_TRUE(res.ok()) << res.name << ": " << res.counterexample.value_or("");
                // under the improper filter no proper submodule is closed
                if (res.name != "prime_submodules" || sigma.count() < sigma.lattice().size()) {
                    EXPECT_GT(res.instances_checked, 0u) << res.name << " on " << describe(term);
                }
            }
    }
}

TEST(Suite, ReportOrderFollowsTheoremNames) {
    RingSuite suite(build_ring(RingTerm::zmod(6)));
    const auto res = suite.run(suite.filters().front());
    ASSERT_EQ(res.size(), theorem_names().size());
    for (std::size_t i = 0; i < res.size(); ++i) EXPECT_EQ(res[i].name, theorem_names()[i]);
}

// An upset that is not a Gabriel filter must be caught.
TEST(Suite, DetectsNonGabrielUpset) {
    auto r = build_ring(RingTerm::zmod(4));
    auto l = make_ideal_lattice(r);
    std::vector<char> in(l->size(), 0);
    for (std::size_t i = 0; i < l->size(); ++i) in[i] = l->leq(l->index_of(ideal_from_generators(r, {2}).elements()), i);
    GabrielFilter fake(l, in);
    SuiteOptions opts;
    opts.theorems = {"gabriel_axioms", "torsion_class", "closure_laws"};
    const auto res = RingSuite(r, opts).run(fake);
    EXPECT_FALSE(res[0].ok());
    EXPECT_FALSE(res[1].ok());
    ASSERT_TRUE(res[1].counterexample.has_value());
    EXPECT_NE(res[1].counterexample->find("Z/4"), std::string::npos);
    EXPECT_FALSE(res[2].ok());  // Cl is no longer idempotent
}

TEST(Suite, Errors) {
    try {
        RingSuite s(build_ring(RingTerm::zmod(17)));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::size_cap_exceeded);
    }
    RingSuite s(build_ring(RingTerm::zmod(6)));
    auto other = make_ideal_lattice(build_ring(RingTerm::zmod(4)));
    try {
        s.run(trivial_filter(other));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::ring_mismatch);
    }
}

TEST(Catalogue, SortedDistinctAndBounded) {
    const auto cat = ring_catalogue(16);
    std::set<std::string> names;
    std::size_t prev = 0;
    for (const auto& t : cat) {
        const auto size = *term_size(t, 16);
        EXPECT_LE(prev, size);
        prev = size;
        EXPECT_TRUE(names.insert(describe(t)).second) << describe(t);
    }
    EXPECT_EQ(cat.size(), 49u);
}

// Every commutative ring of order ≤ 7 is a product of the listed atoms:
// one ring of each prime order, four of order 4, one of order 6.
TEST(Catalogue, CompleteForTinyOrders) {
    std::map<std::size_t, std::size_t> count;
    for (const auto& t : ring_catalogue(7)) ++count[*term_size(t, 7)];
    EXPECT_EQ(count, (std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}, {4, 4}, {5, 1}, {6, 1}, {7, 1}}));
}
