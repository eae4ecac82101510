#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gabriel/element_set.hpp"
#include "gabriel/error.hpp"
#include "gabriel/ring.hpp"

namespace gabriel {

/// The free module A^k. A vector (c_0, ..., c_{k-1}) has index
/// c_0 n^{k-1} + ... + c_{k-1}, so index order is the lexicographic order of
/// coordinate vectors. For k = 1 the indices are the ring elements.
class FreeModule {
public:
    static constexpr std::size_t table_limit = 1024;

    FreeModule(RingPtr ring, unsigned rank) : ring_(std::move(ring)), rank_(rank) {
        if (rank_ == 0) fail(errc::validation_error, "module rank must be positive");
        n_ = ring_->size();
        size_ = 1;
        for (unsigned i = 0; i < rank_; ++i) {
            size_ *= n_;
            if (size_ > (std::size_t{1} << 20)) fail(errc::size_cap_exceeded, "A^" + std::to_string(rank_) + " over " + ring_->name() + " is too large");
        }
        if (rank_ > 1 && size_ <= table_limit) {
            add_.resize(size_ * size_);
            for (element x = 0; x < size_; ++x)
                for (element y = 0; y < size_; ++y) add_[x * size_ + y] = static_cast<std::uint16_t>(add_slow(x, y));
            scale_.resize(size_ * n_);
            for (element x = 0; x < size_; ++x)
                for (element a = 0; a < n_; ++a) scale_[x * n_ + a] = static_cast<std::uint16_t>(scale_slow(a, x));
        }
    }

    const RingPtr& ring() const noexcept { return ring_; }
    unsigned rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return size_; }

    element add(element x, element y) const {
        if (rank_ == 1) return ring_->add(x, y);
        if (!add_.empty()) return add_[x * size_ + y];
        return add_slow(x, y);
    }

    element scale(element a, element x) const {
        if (rank_ == 1) return ring_->mul(a, x);
        if (!scale_.empty()) return scale_[x * n_ + a];
        return scale_slow(a, x);
    }

    std::vector<element> coordinates(element x) const {
        std::vector<element> c(rank_);
        for (unsigned i = rank_; i-- > 0;) {
            c[i] = x % static_cast<element>(n_);
            x /= static_cast<element>(n_);
        }
        return c;
    }

    element from_coordinates(const std::vector<element>& c) const {
        if (c.size() != rank_) fail(errc::validation_error, "vector has " + std::to_string(c.size()) + " coordinates, module rank is " + std::to_string(rank_));
        element x = 0;
        for (auto v : c) {
            if (v >= n_) fail(errc::validation_error, "coordinate " + std::to_string(v) + " is not an element of " + ring_->name());
            x = x * static_cast<element>(n_) + v;
        }
        return x;
    }

    ElementSet empty_set() const { return ElementSet(size_); }
    ElementSet zero_submodule() const {
        ElementSet s(size_);
        s.insert(0);
        return s;
    }
    ElementSet whole() const { return ElementSet::full(size_); }

    /// A·x
    ElementSet cyclic(element x) const {
        ElementSet s(size_);
        for (element a = 0; a < n_; ++a) s.insert(scale(a, x));
        return s;
    }

    /// S + T for additive subgroups S, T.
    ElementSet sum(const ElementSet& s, const ElementSet& t) const {
        ElementSet out = s;
        const auto sv = s.elements();
        t.for_each([&](element y) {
            if (out.contains(y)) return;
            for (auto x : sv) out.insert(add(x, y));
        });
        return out;
    }

    template <class Range>
    ElementSet span(const Range& gens) const {
        ElementSet s = zero_submodule();
        for (auto g : gens) {
            if (!s.contains(static_cast<element>(g))) s = sum(s, cyclic(static_cast<element>(g)));
        }
        return s;
    }

    /// Submodule generated by {a·x : a ∈ ideal_gens, x ∈ module_gens}.
    ElementSet product(const std::vector<element>& module_gens, const std::vector<element>& ideal_gens) const {
        std::vector<element> prods;
        for (auto x : module_gens)
            for (auto a : ideal_gens) prods.push_back(scale(a, x));
        return span(prods);
    }

    /// {x : a·x ∈ n for every a ∈ ideal_gens}
    ElementSet colon(const ElementSet& n, const std::vector<element>& ideal_gens) const {
        ElementSet out(size_);
        for (element x = 0; x < size_; ++x) {
            bool ok = true;
            for (auto a : ideal_gens)
                if (!n.contains(scale(a, x))) {
                    ok = false;
                    break;
                }
            if (ok) out.insert(x);
        }
        return out;
    }

    /// (n :_A x) = {a ∈ A : a·x ∈ n}, as a set of ring elements.
    ElementSet element_colon(const ElementSet& n, element x) const {
        ElementSet out(n_);
        for (element a = 0; a < n_; ++a)
            if (n.contains(scale(a, x))) out.insert(a);
        return out;
    }

    /// (v :_A u) = {a : a·u ⊆ v}, evaluated on generators of u.
    ElementSet module_colon(const ElementSet& v, const std::vector<element>& u_gens) const {
        ElementSet out = ElementSet::full(n_);
        for (auto g : u_gens) out &= element_colon(v, g);
        return out;
    }

    bool is_submodule(const ElementSet& s) const {
        if (s.universe() != size_ || !s.contains(0)) return false;
        const auto elems = s.elements();
        for (auto x : elems) {
            for (element a = 0; a < n_; ++a)
                if (!s.contains(scale(a, x))) return false;
            for (auto y : elems)
                if (!s.contains(add(x, y))) return false;
        }
        return true;
    }

    /// Greedy generating set: repeatedly adjoin the element whose cyclic
    /// submodule enlarges the current span most, smallest index on ties.
    std::vector<element> greedy_generators(const ElementSet& s) const {
        std::vector<element> gens;
        ElementSet cur = zero_submodule();
        const std::size_t target = s.size();
        while (cur.size() < target) {
            element best = 0;
            std::size_t best_size = 0;
            const std::size_t cs = cur.size();
            s.for_each([&](element x) {
                if (cur.contains(x)) return;
                ElementSet c = cyclic(x);
                const std::size_t grown = cs * c.size() / (cur & c).size();
                if (grown > best_size) {
                    best_size = grown;
                    best = x;
                }
            });
            gens.push_back(best);
            cur = sum(cur, cyclic(best));
        }
        return gens;
    }

private:
    element add_slow(element x, element y) const {
        auto a = coordinates(x), b = coordinates(y);
        for (unsigned i = 0; i < rank_; ++i) a[i] = ring_->add(a[i], b[i]);
        return pack(a);
    }
    element scale_slow(element s, element x) const {
        auto a = coordinates(x);
        for (auto& c : a) c = ring_->mul(s, c);
        return pack(a);
    }
    element pack(const std::vector<element>& c) const {
        element x = 0;
        for (auto v : c) x = x * static_cast<element>(n_) + v;
        return x;
    }

    RingPtr ring_;
    unsigned rank_;
    std::size_t n_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint16_t> add_, scale_;
};

/// Every submodule of A^k, in canonical order (cardinality, then lexicographic).
class SubmoduleLattice {
public:
    SubmoduleLattice(RingPtr ring, unsigned rank, std::size_t max_members = 200000) : ambient_(std::move(ring), rank) {
        const std::size_t total = ambient_.size();
        // distinct cyclic submodules, each with its smallest generator
        std::unordered_map<ElementSet, element, ElementSetHash> cyc;
        std::vector<element> reps;
        std::vector<ElementSet> cyc_sets;
        for (element x = 0; x < total; ++x) {
            auto c = ambient_.cyclic(x);
            if (cyc.emplace(c, x).second) {
                reps.push_back(x);
                cyc_sets.push_back(c);
            }
        }
        std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
        std::vector<ElementSet> found{ambient_.zero_submodule()};
        seen.emplace(found.front(), 0);
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (std::size_t c = 0; c < reps.size(); ++c) {
                if (found[i].contains(reps[c])) continue;
                ElementSet bigger = ambient_.sum(found[i], cyc_sets[c]);
                if (seen.emplace(bigger, found.size()).second) {
                    found.push_back(std::move(bigger));
                    if (found.size() > max_members)
                        fail(errc::size_cap_exceeded, "more than " + std::to_string(max_members) + " submodules");
                }
            }
        }
        std::sort(found.begin(), found.end(), canonical_less);
        members_ = std::move(found);
        for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
        cyclic_.resize(total);
        for (element x = 0; x < total; ++x) cyclic_[x] = index_.at(ambient_.cyclic(x));
        generators_.reserve(members_.size());
        for (const auto& m : members_) generators_.push_back(ambient_.greedy_generators(m));
    }

    const FreeModule& ambient() const noexcept { return ambient_; }
    const RingPtr& ring() const noexcept { return ambient_.ring(); }
    unsigned rank() const noexcept { return ambient_.rank(); }
    std::size_t size() const noexcept { return members_.size(); }
    const ElementSet& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<ElementSet>& members() const noexcept { return members_; }
    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return members_.size() - 1; }

    std::optional<std::size_t> find(const ElementSet& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const ElementSet& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) fail(errc::not_a_submodule, "set is not a submodule of the carrier");
        return it->second;
    }

    bool leq(std::size_t a, std::size_t b) const { return members_[a].subset_of(members_[b]); }

    /// Lattice index of A·x.
    std::size_t cyclic_of(element x) const { return cyclic_[x]; }

    const std::vector<element>& generators(std::size_t i) const { return generators_[i]; }

    std::size_t join(std::size_t a, std::size_t b) const {
        if (leq(a, b)) return b;
        if (leq(b, a)) return a;
        return index_.at(ambient_.sum(members_[a], members_[b]));
    }
    std::size_t meet(std::size_t a, std::size_t b) const { return index_.at(members_[a] & members_[b]); }

private:
    FreeModule ambient_;
    std::vector<ElementSet> members_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
    std::vector<std::size_t> cyclic_;
    std::vector<std::vector<element>> generators_;
};

}  // namespace gabriel
