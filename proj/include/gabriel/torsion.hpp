#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gabriel/filter.hpp"
#include "gabriel/local.hpp"
#include "gabriel/module.hpp"

namespace gabriel {

/// The subquotient U/V of A^k. Submodules of U/V are represented by their
/// preimages W with V ⊆ W ⊆ U.
class FiniteModule {
public:
    FiniteModule(std::shared_ptr<const FreeModule> ambient, ElementSet carrier, ElementSet relations)
        : ambient_(std::move(ambient)), u_(std::move(carrier)), v_(std::move(relations)) {
        if (!ambient_->is_submodule(u_)) fail(errc::not_a_submodule, "carrier is not a submodule of A^" + std::to_string(rank()));
        if (!ambient_->is_submodule(v_)) fail(errc::not_a_submodule, "relations do not form a submodule of A^" + std::to_string(rank()));
        if (!v_.subset_of(u_)) fail(errc::not_a_submodule, "relations are not contained in the carrier");
    }

    static FiniteModule free(const RingPtr& ring, unsigned rank) {
        auto a = std::make_shared<const FreeModule>(ring, rank);
        return FiniteModule(a, a->whole(), a->zero_submodule());
    }

    static FiniteModule from_generators(const RingPtr& ring, unsigned rank, const std::vector<element>& carrier_gens,
                                        const std::vector<element>& relation_gens) {
        auto a = std::make_shared<const FreeModule>(ring, rank);
        for (auto g : carrier_gens)
            if (g >= a->size()) fail(errc::validation_error, "vector index " + std::to_string(g) + " out of range");
        for (auto g : relation_gens)
            if (g >= a->size()) fail(errc::validation_error, "vector index " + std::to_string(g) + " out of range");
        return FiniteModule(a, a->span(carrier_gens), a->span(relation_gens));
    }

    const RingPtr& ring() const noexcept { return ambient_->ring(); }
    unsigned rank() const noexcept { return ambient_->rank(); }
    const FreeModule& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const FreeModule>& ambient_ptr() const noexcept { return ambient_; }
    const ElementSet& carrier() const noexcept { return u_; }
    const ElementSet& relations() const noexcept { return v_; }
    std::size_t size() const { return u_.size() / v_.size(); }

    /// Preimage of the submodule of U/V generated by the classes of gens.
    ElementSet submodule(const std::vector<element>& gens) const {
        for (auto g : gens)
            if (g >= ambient_->size() || !u_.contains(g)) fail(errc::not_a_submodule, "generator " + std::to_string(g) + " is not in the carrier");
        return ambient_->sum(ambient_->span(gens), v_);
    }

    void require_submodule(const ElementSet& w) const {
        if (w.universe() != ambient_->size() || !v_.subset_of(w) || !w.subset_of(u_) || !ambient_->is_submodule(w))
            fail(errc::not_a_submodule, "set is not a submodule between relations and carrier");
    }

    /// (W :_A x) for a submodule preimage W.
    ElementSet element_colon(const ElementSet& w, element x) const { return ambient_->element_colon(w, x); }

    /// Ann(U/V) = (V :_A U).
    ElementSet annihilator() const { return ambient_->module_colon(v_, ambient_->greedy_generators(u_)); }

private:
    std::shared_ptr<const FreeModule> ambient_;
    ElementSet u_, v_;
};

inline void require_same_ring(const FiniteModule& m, const GabrielFilter& f) { require_same_ring(m.ring(), f.ring()); }

/// Preimage of σ(U/V): {u ∈ U : (V : u) ∈ L}. Cross-checked against the sum of
/// all cyclic submodules of U/V that are σ-torsion.
inline ElementSet torsion_submodule(const FiniteModule& m, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    const auto& a = m.ambient();
    ElementSet by_annihilator(a.size());
    m.carrier().for_each([&](element u) {
        if (sigma.contains_set(m.element_colon(m.relations(), u))) by_annihilator.insert(u);
    });
    ElementSet by_sum = m.relations();
    m.carrier().for_each([&](element x) {
        if (by_sum.contains(x)) return;
        ElementSet cyc = a.sum(a.cyclic(x), m.relations());
        bool torsion = true;
        cyc.for_each([&](element y) { torsion = torsion && sigma.contains_set(m.element_colon(m.relations(), y)); });
        if (torsion) by_sum = a.sum(by_sum, cyc);
    });
    if (!(by_annihilator == by_sum))
        fail(errc::theorem_violation, "torsion submodule formulas disagree: " + std::to_string(by_annihilator.size()) + " vs " +
                                          std::to_string(by_sum.size()) + " elements");
    return by_annihilator;
}

/// Cl(N) = {u ∈ U : (N : u) ∈ L}, the preimage of σ(M/N).
inline ElementSet closure(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    m.require_submodule(n);
    ElementSet out(m.ambient().size());
    m.carrier().for_each([&](element u) {
        if (sigma.contains_set(m.element_colon(n, u))) out.insert(u);
    });
    return out;
}

inline bool is_dense(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma) { return closure(m, n, sigma) == m.carrier(); }
inline bool is_closed(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma) { return closure(m, n, sigma) == n; }

struct TotalTorsion {
    bool holds = false;
    Ideal annihilator;  // the largest h with M·h = 0; a witness when holds
};

inline TotalTorsion is_totally_torsion(const FiniteModule& m, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    Ideal ann(m.ring(), m.annihilator());
    return {sigma.contains(ann), std::move(ann)};
}

struct SpecPartition {
    std::vector<Ideal> K, Z, C;
};

inline SpecPartition spec_partition(const GabrielFilter& sigma) {
    const IdealLattice& l = sigma.lattice();
    const FreeModule ring_module(l.ring_ptr(), 1);
    SpecPartition out;
    std::vector<std::size_t> k;
    for (auto p : l.primes()) {
        if (sigma.contains(p)) {
            out.Z.push_back(l[p]);
            continue;
        }
        // A/p is torsionfree: no nonzero class has annihilator in L
        for (element a = 0; a < l.ring().size(); ++a)
            if (!l.elements(p).contains(a) && sigma.contains_set(ring_module.element_colon(l.elements(p), a)))
                fail(errc::theorem_violation, "A/p is not torsionfree for p=" + l[p].to_string() + ", witness " + std::to_string(a));
        out.K.push_back(l[p]);
        k.push_back(p);
    }
    for (auto p : k) {
        bool maximal = true;
        for (auto q : k)
            if (q != p && l.leq(p, q)) maximal = false;
        if (maximal) out.C.push_back(l[p]);
    }
    return out;
}

struct JansianStatus {
    bool is_jansian = false;
    std::optional<Ideal> basis_ideal;      // least member, when jansian
    std::optional<element> idempotent;     // e with basis_ideal = eA
    bool is_almost_jansian = false;
    std::vector<std::string> witnesses;
};

/// a^∞: iterate a^{n+1} = a·a^n until the power repeats.
inline std::size_t stable_power(const IdealLattice& l, std::size_t a) {
    std::size_t cur = a;
    for (;;) {
        std::size_t next = l.product(a, cur);
        if (next == cur) return cur;
        cur = next;
    }
}

inline JansianStatus jansian_status(const GabrielFilter& sigma) {
    const IdealLattice& l = sigma.lattice();
    const FiniteRing& r = l.ring();
    JansianStatus out;
    const std::size_t b = sigma.least();
    bool upset = sigma.contains(b);
    for (std::size_t a = 0; a < l.size() && upset; ++a) upset = sigma.contains(a) == l.leq(b, a);
    if (upset) {
        out.is_jansian = true;
        out.basis_ideal = l[b];
        if (l.product(b, b) != b) fail(errc::theorem_violation, "least member " + l[b].to_string() + " of a jansian filter is not idempotent");
        l.elements(b).for_each([&](element e) {
            if (!out.idempotent && r.mul(e, e) == e && l.principal(e) == b) out.idempotent = e;
        });
        if (!out.idempotent) fail(errc::theorem_violation, "idempotent ideal " + l[b].to_string() + " has no idempotent generator");
    } else {
        out.witnesses.push_back("least member " + l[b].to_string() + " does not generate the filter");
    }
    out.is_almost_jansian = true;
    for (auto a : sigma.members()) {
        const auto inf = stable_power(l, a);
        if (!sigma.contains(inf)) {
            out.is_almost_jansian = false;
            out.witnesses.push_back("a=" + l[a].to_string() + " has a^∞=" + l[inf].to_string() + " outside the filter");
        }
    }
    return out;
}

/// f(σ) on B for a surjective map f : A -> B: {b : f⁻¹(b) ∈ L(σ)}. Also checks
/// that these are exactly the extensions f(a)B of members a.
inline GabrielFilter induced_filter(const RingMap& f, const GabrielFilter& sigma) {
    require_same_ring(f.source, sigma.ring());
    if (auto msg = check_ring_map(f); !msg.empty()) fail(errc::unsupported_map, msg);
    if (f.kind == RingMap::Kind::identity) {
        if (!same_ring(f.source, f.target)) fail(errc::unsupported_map, "identity map between different rings");
        return sigma;
    }
    auto target = make_ideal_lattice(f.target);
    std::vector<char> in(target->size(), 0);
    for (std::size_t b = 0; b < target->size(); ++b) in[b] = sigma.contains_set(f.preimage(target->elements(b))) ? 1 : 0;
    std::vector<char> extended(target->size(), 0);
    const FreeModule target_module(f.target, 1);
    for (auto a : sigma.members()) extended[target->index_of(target_module.span(f.direct_image(sigma.lattice().elements(a)).elements()))] = 1;
    if (in != extended) fail(errc::theorem_violation, "induced filter differs from the set of extended ideals");
    GabrielFilter out(target, std::move(in));
    if (auto v = gabriel_check(out); !v.empty()) fail(errc::theorem_violation, "induced filter fails " + v.front().axiom + ": " + v.front().detail);
    return out;
}

}  // namespace gabriel
