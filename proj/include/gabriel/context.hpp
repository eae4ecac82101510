#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gabriel/filter.hpp"
#include "gabriel/ideal.hpp"
#include "gabriel/module.hpp"

namespace gabriel {

/// The submodule lattice of A^k with its ring action tabulated by index.
/// Lazily filled caches make this type unsuitable for sharing across threads.
class ModuleContext {
public:
    ModuleContext(IdealLatticePtr ideals, unsigned rank, std::size_t max_members = 200000)
        : ideals_(std::move(ideals)), lattice_(ideals_->ring_ptr(), rank, max_members) {
        const auto& a = lattice_.ambient();
        const std::size_t s = lattice_.size(), m = ideals_->size(), e = a.size();
        elem_colon_.resize(s * e);
        for (std::size_t n = 0; n < s; ++n)
            for (element x = 0; x < e; ++x)
                elem_colon_[n * e + x] = static_cast<std::uint32_t>(ideals_->index_of(a.element_colon(lattice_[n], x)));
        times_.resize(s * m);
        colon_.resize(s * m);
        for (std::size_t n = 0; n < s; ++n)
            for (std::size_t h = 0; h < m; ++h) {
                const auto& hg = ideals_->lattice().generators(h);
                times_[n * m + h] = static_cast<std::uint32_t>(lattice_.index_of(a.product(lattice_.generators(n), hg)));
                colon_[n * m + h] = static_cast<std::uint32_t>(lattice_.index_of(a.colon(lattice_[n], hg)));
            }
        down_.assign(s, ElementSet(s));
        up_.assign(s, ElementSet(s));
        for (std::size_t x = 0; x < s; ++x)
            for (std::size_t y = 0; y < s; ++y)
                if (lattice_.leq(x, y)) {
                    down_[y].insert(static_cast<element>(x));
                    up_[x].insert(static_cast<element>(y));
                }
    }

    const IdealLatticePtr& ideals_ptr() const noexcept { return ideals_; }
    const IdealLattice& ideals() const noexcept { return *ideals_; }
    const SubmoduleLattice& lattice() const noexcept { return lattice_; }
    const FreeModule& ambient() const noexcept { return lattice_.ambient(); }
    unsigned rank() const noexcept { return lattice_.rank(); }
    std::size_t size() const noexcept { return lattice_.size(); }
    std::size_t bottom() const noexcept { return lattice_.bottom(); }
    std::size_t top() const noexcept { return lattice_.top(); }

    bool leq(std::size_t a, std::size_t b) const { return down_[b].contains(static_cast<element>(a)); }
    /// Submodules contained in b, as a set of lattice indices.
    const ElementSet& down(std::size_t b) const { return down_[b]; }
    /// Submodules containing a, as a set of lattice indices.
    const ElementSet& up(std::size_t a) const { return up_[a]; }

    /// (N :_A x) as an ideal index.
    std::size_t elem_colon(std::size_t n, element x) const { return elem_colon_[n * ambient().size() + x]; }
    /// N·h
    std::size_t times(std::size_t n, std::size_t h) const { return times_[n * ideals_->size() + h]; }
    /// (N :_M h)
    std::size_t colon(std::size_t n, std::size_t h) const { return colon_[n * ideals_->size() + h]; }

    /// (V :_A U) = {a : U·a ⊆ V}
    std::size_t ann(std::size_t v, std::size_t u) const {
        const std::uint64_t key = static_cast<std::uint64_t>(v) * size() + u;
        if (auto it = ann_.find(key); it != ann_.end()) return it->second;
        std::size_t cur = ideals_->unit();
        for (auto g : lattice_.generators(u)) cur = ideals_->intersect(cur, elem_colon(v, g));
        ann_.emplace(key, static_cast<std::uint32_t>(cur));
        return cur;
    }

    std::size_t join(std::size_t a, std::size_t b) const {
        if (leq(a, b)) return b;
        if (leq(b, a)) return a;
        if (a > b) std::swap(a, b);
        const std::uint64_t key = static_cast<std::uint64_t>(a) * size() + b;
        if (auto it = join_.find(key); it != join_.end()) return it->second;
        const auto j = lattice_.join(a, b);
        join_.emplace(key, static_cast<std::uint32_t>(j));
        return j;
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
        if (leq(a, b)) return a;
        if (leq(b, a)) return b;
        return lattice_.meet(a, b);
    }

    /// Lattice index of A·x.
    std::size_t cyclic(element x) const { return lattice_.cyclic_of(x); }

private:
    IdealLatticePtr ideals_;
    SubmoduleLattice lattice_;
    std::vector<std::uint32_t> elem_colon_, times_, colon_;
    std::vector<ElementSet> down_, up_;
    mutable std::unordered_map<std::uint64_t, std::uint32_t> ann_, join_;
};

/// A Gabriel filter seen through a module context: closures of every submodule
/// and the filter members in search order (largest first).
class FilteredContext {
public:
    FilteredContext(const ModuleContext& ctx, const GabrielFilter& sigma) : ctx_(ctx), sigma_(sigma) {
        require_same_ring(ctx.ideals().ring_ptr(), sigma.ring());
        const auto& a = ctx.ambient();
        closure_.resize(ctx.size());
        for (std::size_t n = 0; n < ctx.size(); ++n) {
            ElementSet cl(a.size());
            for (element x = 0; x < a.size(); ++x)
                if (sigma.contains(ctx.elem_colon(n, x))) cl.insert(x);
            closure_[n] = ctx.lattice().index_of(cl);
        }
        members_ = sigma.members();
        const auto& l = ctx.ideals();
        std::stable_sort(members_.begin(), members_.end(), [&](std::size_t x, std::size_t y) { return l.elements(x).size() > l.elements(y).size(); });
    }

    const ModuleContext& ctx() const noexcept { return ctx_; }
    const GabrielFilter& sigma() const noexcept { return sigma_; }
    bool in_filter(std::size_t ideal) const { return sigma_.contains(ideal); }
    /// Cl(N) as a lattice index.
    std::size_t closure(std::size_t n) const { return closure_[n]; }
    /// Members of L(σ), by decreasing cardinality then canonical order.
    const std::vector<std::size_t>& members() const noexcept { return members_; }

private:
    const ModuleContext& ctx_;
    const GabrielFilter& sigma_;
    std::vector<std::size_t> closure_;
    std::vector<std::size_t> members_;
};

}  // namespace gabriel
