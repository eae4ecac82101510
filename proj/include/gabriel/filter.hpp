#pragma once

#include <string>
#include <vector>

#include "gabriel/ideal.hpp"

namespace gabriel {

/// A set of ideals of a finite ring, stored extensionally over its ideal lattice.
/// Construct through the builders below; they guarantee the Gabriel axioms.
class GabrielFilter {
public:
    GabrielFilter(IdealLatticePtr ideals, std::vector<char> members) : ideals_(std::move(ideals)), member_(std::move(members)) {}

    const IdealLatticePtr& lattice_ptr() const noexcept { return ideals_; }
    const IdealLattice& lattice() const noexcept { return *ideals_; }
    const RingPtr& ring() const noexcept { return ideals_->ring_ptr(); }
    const std::vector<char>& membership() const noexcept { return member_; }

    bool contains(std::size_t ideal) const { return member_[ideal] != 0; }
    bool contains(const Ideal& i) const { return contains(ideals_->index_of(i)); }
    bool contains_set(const ElementSet& s) const { return contains(ideals_->index_of(s)); }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < member_.size(); ++i)
            if (member_[i]) out.push_back(i);
        return out;
    }

    /// Minimal members under inclusion.
    std::vector<std::size_t> basis() const {
        std::vector<std::size_t> out;
        for (auto a : members()) {
            bool minimal = true;
            for (auto b : members())
                if (b != a && ideals_->leq(b, a)) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(a);
        }
        return out;
    }

    /// Intersection of all members (a member whenever the filter is intersection closed).
    std::size_t least() const {
        std::size_t cur = ideals_->unit();
        for (auto a : members()) cur = ideals_->intersect(cur, a);
        return cur;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto m : member_) c += m ? 1 : 0;
        return c;
    }

    friend bool operator==(const GabrielFilter& a, const GabrielFilter& b) {
        return same_ring(a.ring(), b.ring()) && a.member_ == b.member_;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto a : members()) {
            s += (first ? "" : ",") + (*ideals_)[a].to_string();
            first = false;
        }
        return s + "}";
    }

private:
    IdealLatticePtr ideals_;
    std::vector<char> member_;
};

struct AxiomViolation {
    std::string axiom;  // contains_unit | upward_closed | intersection_closed | gabriel_condition | product_closed
    std::vector<Ideal> witnesses;
    std::string detail;
};

/// All violations of the Gabriel filter axioms by `members`; empty iff it is a Gabriel filter.
/// The Gabriel condition is reported once per offending b, with the first
/// witnessing a in canonical order.
inline std::vector<AxiomViolation> gabriel_check(const IdealLattice& l, const std::vector<char>& members) {
    std::vector<AxiomViolation> out;
    const std::size_t m = l.size();
    auto in = [&](std::size_t i) { return members[i] != 0; };
    if (!in(l.unit())) out.push_back({"contains_unit", {l[l.unit()]}, "A is not a member"});
    for (std::size_t a = 0; a < m; ++a) {
        if (!in(a)) continue;
        for (std::size_t b = 0; b < m; ++b)
            if (!in(b) && l.leq(a, b))
                out.push_back({"upward_closed", {l[a], l[b]}, l[a].to_string() + " is a member, " + l[b].to_string() + " contains it but is not"});
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (in(a) && in(b) && !in(l.intersect(a, b)))
                out.push_back({"intersection_closed", {l[a], l[b]},
                               l[a].to_string() + " ∩ " + l[b].to_string() + " = " + l[l.intersect(a, b)].to_string() + " is not a member"});
    const FreeModule ring_module(l.ring_ptr(), 1);
    for (std::size_t b = 0; b < m; ++b) {
        if (in(b)) continue;
        for (std::size_t a = 0; a < m; ++a) {
            if (!in(a)) continue;
            bool all = true;
            l.elements(a).for_each([&](element x) {
                if (all && !in(l.index_of(ring_module.element_colon(l.elements(b), x)))) all = false;
            });
            if (all) {
                out.push_back({"gabriel_condition", {l[b], l[a]},
                               "b=" + l[b].to_string() + " is not a member although (b:x) is for every x in a=" + l[a].to_string()});
                break;
            }
        }
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            if (in(a) && in(b) && !in(l.product(a, b)))
                out.push_back({"product_closed", {l[a], l[b]},
                               l[a].to_string() + "·" + l[b].to_string() + " = " + l[l.product(a, b)].to_string() + " is not a member"});
    return out;
}

inline std::vector<AxiomViolation> gabriel_check(const GabrielFilter& f) { return gabriel_check(f.lattice(), f.membership()); }

inline GabrielFilter trivial_filter(const IdealLatticePtr& l) {
    std::vector<char> mem(l->size(), 0);
    mem[l->unit()] = 1;
    return {l, std::move(mem)};
}

inline GabrielFilter improper_filter(const IdealLatticePtr& l) { return {l, std::vector<char>(l->size(), 1)}; }

/// Least Gabriel filter containing the seeds. Each round adds A, closes upward,
/// closes under intersection, then applies the Gabriel step.
inline GabrielFilter gabriel_closure(const IdealLatticePtr& lp, const std::vector<std::size_t>& seeds) {
    const IdealLattice& l = *lp;
    const std::size_t m = l.size();
    std::vector<char> in(m, 0);
    for (auto s : seeds) in.at(s) = 1;
    const FreeModule ring_module(l.ring_ptr(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        auto add = [&](std::size_t i) {
            if (!in[i]) {
                in[i] = 1;
                changed = true;
            }
        };
        add(l.unit());
        for (std::size_t a = 0; a < m; ++a)
            if (in[a])
                for (std::size_t b = 0; b < m; ++b)
                    if (l.leq(a, b)) add(b);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (in[a] && in[b]) add(l.intersect(a, b));
        for (std::size_t b = 0; b < m; ++b) {
            if (in[b]) continue;
            for (std::size_t a = 0; a < m; ++a) {
                if (!in[a]) continue;
                bool all = true;
                l.elements(a).for_each([&](element x) {
                    if (all && !in[l.index_of(ring_module.element_colon(l.elements(b), x))]) all = false;
                });
                if (all) {
                    add(b);
                    break;
                }
            }
        }
    }
    return {lp, std::move(in)};
}

inline GabrielFilter gabriel_closure(const IdealLatticePtr& lp, const std::vector<Ideal>& seeds) {
    std::vector<std::size_t> idx;
    for (const auto& s : seeds) idx.push_back(lp->index_of(s));
    return gabriel_closure(lp, idx);
}

/// L(σ_Σ) = {a : a ∩ Σ ≠ ∅} for a multiplicatively closed Σ containing 1.
inline GabrielFilter filter_from_mult_set(const IdealLatticePtr& lp, const std::vector<element>& sigma) {
    const IdealLattice& l = *lp;
    const FiniteRing& r = l.ring();
    ElementSet s(r.size());
    for (auto x : sigma) {
        if (x >= r.size()) fail(errc::validation_error, std::to_string(x) + " is not an element of " + r.name());
        s.insert(x);
    }
    if (!s.contains(r.one())) fail(errc::not_multiplicatively_closed, "1 is not in the set");
    s.for_each([&](element a) {
        s.for_each([&](element b) {
            if (!s.contains(r.mul(a, b)))
                fail(errc::not_multiplicatively_closed,
                     "witness pair (" + std::to_string(a) + ", " + std::to_string(b) + "): product " + std::to_string(r.mul(a, b)) + " is missing");
        });
    });
    std::vector<char> in(l.size(), 0);
    for (std::size_t i = 0; i < l.size(); ++i) in[i] = l.elements(i).intersects(s) ? 1 : 0;
    GabrielFilter f(lp, std::move(in));
    for (auto b : f.basis()) {
        bool principal = false;
        (l.elements(b) & s).for_each([&](element x) { principal = principal || l.principal(x) == b; });
        if (!principal) fail(errc::theorem_violation, "basis member " + l[b].to_string() + " is not generated by an element of the set");
    }
    return f;
}

/// λ: ideals with zero annihilator.
inline GabrielFilter lambda_filter(const IdealLatticePtr& lp) {
    const IdealLattice& l = *lp;
    std::vector<char> in(l.size(), 0);
    const FreeModule ring_module(l.ring_ptr(), 1);
    for (std::size_t i = 0; i < l.size(); ++i)
        in[i] = ring_module.module_colon(l.elements(l.zero()), l.lattice().generators(i)).size() == 1 ? 1 : 0;
    return {lp, std::move(in)};
}

/// σ_{A∖p}: ideals not contained in the prime p.
inline GabrielFilter filter_from_prime(const IdealLatticePtr& lp, std::size_t p) {
    const IdealLattice& l = *lp;
    if (std::find(l.primes().begin(), l.primes().end(), p) == l.primes().end())
        fail(errc::not_prime, l[p].to_string() + " is not a prime ideal of " + l.ring().name());
    std::vector<char> in(l.size(), 0);
    for (std::size_t i = 0; i < l.size(); ++i) in[i] = l.leq(i, p) ? 0 : 1;
    return {lp, std::move(in)};
}

inline GabrielFilter filter_from_prime(const IdealLatticePtr& lp, const Ideal& p) {
    require_same_ring(lp->ring_ptr(), p.ring());
    return filter_from_prime(lp, lp->index_of(p));
}

inline GabrielFilter meet_filters(const std::vector<GabrielFilter>& filters) {
    if (filters.empty()) fail(errc::validation_error, "meet of an empty list of filters");
    std::vector<char> in = filters.front().membership();
    for (std::size_t k = 1; k < filters.size(); ++k) {
        require_same_ring(filters.front().ring(), filters[k].ring());
        for (std::size_t i = 0; i < in.size(); ++i) in[i] = in[i] && filters[k].membership()[i];
    }
    return {filters.front().lattice_ptr(), std::move(in)};
}

/// Every Gabriel filter of a finite ring. A filter on a finite lattice is the
/// principal upset of its least member, so each ideal b yields one candidate
/// {a : a ⊇ b}, which is kept when gabriel_check accepts it.
inline std::vector<GabrielFilter> all_gabriel_filters(const IdealLatticePtr& lp) {
    const IdealLattice& l = *lp;
    std::vector<GabrielFilter> out;
    for (std::size_t b = 0; b < l.size(); ++b) {
        std::vector<char> in(l.size(), 0);
        for (std::size_t a = 0; a < l.size(); ++a) in[a] = l.leq(b, a) ? 1 : 0;
        if (gabriel_check(l, in).empty()) out.emplace_back(lp, std::move(in));
    }
    return out;
}

}  // namespace gabriel
