#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gabriel/module.hpp"
#include "gabriel/ring.hpp"

namespace gabriel {

/// An ideal given by its element set, with a greedy minimal generating list.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, ElementSet elements)
        : ring_(std::move(ring)), elements_(std::move(elements)), generators_(FreeModule(ring_, 1).greedy_generators(elements_)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const ElementSet& elements() const noexcept { return elements_; }
    const std::vector<element>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(element a) const { return elements_.contains(a); }
    bool subset_of(const Ideal& o) const { return elements_.subset_of(o.elements_); }
    bool is_zero() const { return elements_.size() == 1; }
    bool is_unit() const { return elements_.size() == ring_->size(); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements_ == b.elements_; }

    std::string to_string() const {
        std::string s = "(";
        if (generators_.empty()) s += "0";
        for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + std::to_string(generators_[i]);
        return s + ")";
    }

private:
    RingPtr ring_;
    ElementSet elements_;
    std::vector<element> generators_;
};

inline Ideal ideal_from_generators(const RingPtr& ring, const std::vector<element>& gens) {
    for (auto g : gens)
        if (g >= ring->size()) fail(errc::validation_error, std::to_string(g) + " is not an element of " + ring->name());
    return Ideal(ring, FreeModule(ring, 1).span(gens));
}

inline Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, ElementSet::full(ring->size())); }
inline Ideal zero_ideal(const RingPtr& ring) { return ideal_from_generators(ring, {}); }

enum class IdealOp { sum, product, intersect };

inline Ideal ideal_arith(IdealOp kind, const Ideal& i, const Ideal& j) {
    require_same_ring(i.ring(), j.ring());
    FreeModule a(i.ring(), 1);
    switch (kind) {
        case IdealOp::sum: return Ideal(i.ring(), a.sum(i.elements(), j.elements()));
        case IdealOp::product: return Ideal(i.ring(), a.product(i.generators(), j.generators()));
        case IdealOp::intersect: return Ideal(i.ring(), i.elements() & j.elements());
    }
    return i;
}

/// (I : J) = {a : a·J ⊆ I}
inline Ideal colon(const Ideal& i, const Ideal& j) {
    require_same_ring(i.ring(), j.ring());
    return Ideal(i.ring(), FreeModule(i.ring(), 1).module_colon(i.elements(), j.generators()));
}

/// (I : b) = {a : a·b ∈ I}
inline Ideal colon(const Ideal& i, element b) {
    return Ideal(i.ring(), FreeModule(i.ring(), 1).element_colon(i.elements(), b));
}

/// Annihilator of an ideal: (0 : I).
inline Ideal annihilator(const Ideal& i) { return colon(zero_ideal(i.ring()), i); }

/// The lattice of all ideals of a ring with its arithmetic tabulated by index.
class IdealLattice {
public:
    explicit IdealLattice(RingPtr ring) : lattice_(std::move(ring), 1) {
        const std::size_t m = lattice_.size();
        product_.resize(m * m);
        const FreeModule& a = lattice_.ambient();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                auto p = lattice_.index_of(a.product(lattice_.generators(i), lattice_.generators(j)));
                product_[i * m + j] = product_[j * m + i] = p;
            }
        ideals_.reserve(m);
        for (std::size_t i = 0; i < m; ++i) ideals_.emplace_back(ring_ptr(), lattice_[i]);
        for (std::size_t i = 0; i < m; ++i)
            if (is_prime_by_definition(i)) primes_.push_back(i);
    }

    const RingPtr& ring_ptr() const noexcept { return lattice_.ring(); }
    const FiniteRing& ring() const noexcept { return *lattice_.ring(); }
    const SubmoduleLattice& lattice() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return lattice_.size(); }
    const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
    const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
    const ElementSet& elements(std::size_t i) const { return lattice_[i]; }

    std::size_t zero() const noexcept { return lattice_.bottom(); }
    std::size_t unit() const noexcept { return lattice_.top(); }
    std::size_t index_of(const ElementSet& s) const { return lattice_.index_of(s); }
    std::size_t index_of(const Ideal& i) const { return lattice_.index_of(i.elements()); }
    bool leq(std::size_t a, std::size_t b) const { return lattice_.leq(a, b); }

    std::size_t product(std::size_t a, std::size_t b) const { return product_[a * size() + b]; }
    std::size_t intersect(std::size_t a, std::size_t b) const { return lattice_.meet(a, b); }
    std::size_t sum(std::size_t a, std::size_t b) const { return lattice_.join(a, b); }
    std::size_t principal(element x) const { return lattice_.cyclic_of(x); }

    /// Indices of the prime ideals, in canonical order.
    const std::vector<std::size_t>& primes() const noexcept { return primes_; }

    bool is_prime_by_definition(std::size_t p) const {
        if (p == unit()) return false;
        const auto& set = lattice_[p];
        const FiniteRing& r = ring();
        for (element a = 0; a < r.size(); ++a) {
            if (set.contains(a)) continue;
            for (element b = 0; b < r.size(); ++b)
                if (!set.contains(b) && set.contains(r.mul(a, b))) return false;
        }
        return true;
    }

private:
    SubmoduleLattice lattice_;
    std::vector<std::size_t> product_;
    std::vector<Ideal> ideals_;
    std::vector<std::size_t> primes_;
};

using IdealLatticePtr = std::shared_ptr<const IdealLattice>;

inline IdealLatticePtr make_ideal_lattice(RingPtr ring) { return std::make_shared<const IdealLattice>(std::move(ring)); }

/// Complete list of ideals, sorted by cardinality then lexicographically.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& ring, std::size_t cap = default_size_cap) {
    if (ring->size() > cap) fail(errc::size_cap_exceeded, ring->name() + " exceeds the size cap of " + std::to_string(cap));
    IdealLattice l(ring);
    return l.ideals();
}

/// Prime spectrum; on a finite ring every prime is maximal.
inline std::vector<Ideal> spec(const RingPtr& ring) {
    IdealLattice l(ring);
    std::vector<Ideal> out;
    for (auto p : l.primes()) out.push_back(l[p]);
    return out;
}

}  // namespace gabriel
