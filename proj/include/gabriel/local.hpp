#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gabriel/ideal.hpp"
#include "gabriel/ring.hpp"

namespace gabriel {

/// A surjective ring map A -> B given elementwise.
struct RingMap {
    enum class Kind { identity, quotient, projection };

    Kind kind = Kind::identity;
    RingPtr source;
    RingPtr target;
    std::vector<element> image;  // image[a] = f(a)

    element operator()(element a) const { return image[a]; }

    ElementSet preimage(const ElementSet& b) const {
        ElementSet out(source->size());
        for (element a = 0; a < source->size(); ++a)
            if (b.contains(image[a])) out.insert(a);
        return out;
    }

    ElementSet direct_image(const ElementSet& a) const {
        ElementSet out(target->size());
        a.for_each([&](element x) { out.insert(image[x]); });
        return out;
    }
};

inline RingMap identity_map(const RingPtr& r) {
    RingMap f{RingMap::Kind::identity, r, r, std::vector<element>(r->size())};
    for (element a = 0; a < r->size(); ++a) f.image[a] = a;
    return f;
}

/// Returns the first failing homomorphism law, or an empty string.
inline std::string check_ring_map(const RingMap& f) {
    const FiniteRing& a = *f.source;
    const FiniteRing& b = *f.target;
    if (f.image.size() != a.size()) return "map is not total";
    if (f(a.one()) != b.one()) return "1 is not sent to 1";
    ElementSet hit(b.size());
    for (element x = 0; x < a.size(); ++x) {
        if (f(x) >= b.size()) return "image outside target";
        hit.insert(f(x));
        for (element y = 0; y < a.size(); ++y) {
            if (f(a.add(x, y)) != b.add(f(x), f(y))) return "map does not preserve addition";
            if (f(a.mul(x, y)) != b.mul(f(x), f(y))) return "map does not preserve multiplication";
        }
    }
    if (hit.size() != b.size()) return "map is not surjective";
    return {};
}

/// A/I with cosets indexed in order of their smallest representative,
/// together with the canonical projection.
inline RingMap quotient_map(const Ideal& ideal) {
    const RingPtr& r = ideal.ring();
    const element n = static_cast<element>(r->size());
    std::vector<element> cls(n, n);
    std::vector<element> reps;
    const auto members = ideal.elements().elements();
    for (element x = 0; x < n; ++x) {
        if (cls[x] != n) continue;
        const element c = static_cast<element>(reps.size());
        reps.push_back(x);
        for (auto i : members) cls[r->add(x, i)] = c;
    }
    const std::size_t m = reps.size();
    std::vector<std::uint16_t> at(m * m), mt(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            at[a * m + b] = static_cast<std::uint16_t>(cls[r->add(reps[a], reps[b])]);
            mt[a * m + b] = static_cast<std::uint16_t>(cls[r->mul(reps[a], reps[b])]);
        }
    auto q = std::make_shared<const FiniteRing>(r->name() + "/" + ideal.to_string(), m, std::move(at), std::move(mt), cls[r->one()]);
    return RingMap{RingMap::Kind::quotient, r, q, std::move(cls)};
}

struct LocalFactor {
    element idempotent;  // primitive idempotent e with factor ≅ eA
    RingMap projection;  // A -> A/(1-e)A
    Ideal prime;         // pullback of the factor's maximal ideal
};

/// Decomposes A as a product of local rings along its primitive idempotents.
/// Factors are listed in increasing order of their idempotent.
inline std::vector<LocalFactor> local_decomposition(const RingPtr& ring) {
    const FiniteRing& r = *ring;
    std::vector<element> idem;
    for (element e = 1; e < r.size(); ++e)
        if (r.mul(e, e) == e) idem.push_back(e);
    std::vector<LocalFactor> out;
    for (auto e : idem) {
        bool primitive = true;
        for (auto f : idem)
            if (f != e && r.mul(f, e) == f) {
                primitive = false;
                break;
            }
        if (!primitive) continue;
        const element complement = r.sub(r.one(), e);
        RingMap pi = quotient_map(ideal_from_generators(ring, {complement}));
        IdealLattice factor_ideals(pi.target);
        if (factor_ideals.primes().size() != 1)
            fail(errc::theorem_violation, "factor " + pi.target->name() + " of " + r.name() + " is not local");
        Ideal p(ring, pi.preimage(factor_ideals.elements(factor_ideals.primes().front())));
        pi.kind = RingMap::Kind::projection;
        out.push_back(LocalFactor{e, std::move(pi), std::move(p)});
    }
    return out;
}

/// The local factor A_p of a finite ring: the factor whose maximal ideal pulls back to p.
inline LocalFactor localize_at_prime(const Ideal& p) {
    for (auto& f : local_decomposition(p.ring()))
        if (f.prime == p) return f;
    fail(errc::not_prime, p.to_string() + " is not a prime of " + p.ring()->name());
}

/// The combined map A -> ∏ A_i is a ring isomorphism; returns the first failure or "".
inline std::string check_local_decomposition(const RingPtr& ring, const std::vector<LocalFactor>& factors) {
    std::size_t total = 1;
    for (const auto& f : factors) {
        if (auto msg = check_ring_map(f.projection); !msg.empty()) return f.projection.target->name() + ": " + msg;
        total *= f.projection.target->size();
    }
    if (total != ring->size()) return "product of factor sizes differs from ring size";
    std::vector<std::vector<element>> seen;
    for (element a = 0; a < ring->size(); ++a) {
        std::vector<element> t;
        for (const auto& f : factors) t.push_back(f.projection(a));
        seen.push_back(std::move(t));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return "combined map is not injective";
    return {};
}

}  // namespace gabriel
