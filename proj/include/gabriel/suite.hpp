#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gabriel/context.hpp"
#include "gabriel/local.hpp"
#include "gabriel/torsion.hpp"

namespace gabriel {

inline constexpr std::size_t suite_size_cap = 16;

struct TheoremResult {
    std::string name;
    std::size_t instances_checked = 0;
    std::size_t passed = 0;
    std::optional<std::string> counterexample;  // first failing instance

    bool ok() const { return passed == instances_checked; }
};

/// Names of every theorem the suite knows, in report order.
inline const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names{
        "gabriel_axioms",   "torsion_class",      "torsionfree_class", "torsion_radical",   "closure_laws",
        "spec_partition",   "meet_decomposition", "almost_jansian",    "finite_type",       "module_stability",
        "closure_colon",    "sigma_max_triangle", "unique_maximal",    "quotient_transfer", "prime_submodules",
        "cohen",            "kaplansky",          "local_property",    "induced_filters",
    };
    return names;
}

struct SuiteOptions {
    std::vector<std::string> theorems;    // empty runs all
    std::size_t rank1_chain_length = 0;   // 0: unbounded
    std::size_t rank2_chain_length = 3;
    bool include_rank2 = true;

    bool wants(const std::string& name) const { return theorems.empty() || std::find(theorems.begin(), theorems.end(), name) != theorems.end(); }
};

namespace detail {

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++r_.instances_checked;
        if (ok) ++r_.passed;
        else if (!r_.counterexample) r_.counterexample = describe();
    }

    void merge(const Tally& o) {
        r_.instances_checked += o.r_.instances_checked;
        r_.passed += o.r_.passed;
        if (!r_.counterexample) r_.counterexample = o.r_.counterexample;
    }

    const TheoremResult& result() const { return r_; }

private:
    TheoremResult r_;
};

inline std::string vector_string(const FreeModule& a, element x) {
    if (a.rank() == 1) return std::to_string(x);
    std::string s = "(";
    auto c = a.coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

/// A submodule written by its generators: (2) for ideals, <(1,0),(0,2)> in rank 2.
inline std::string submodule_string(const ModuleContext& ctx, std::size_t n) {
    const auto& g = ctx.lattice().generators(n);
    const bool ideal = ctx.rank() == 1;
    std::string s = ideal ? "(" : "<";
    if (g.empty()) s += ideal ? "0" : "0";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + vector_string(ctx.ambient(), g[i]);
    return s + (ideal ? ")" : ">");
}

struct IndexCertificate {
    std::vector<element> generators;
    std::size_t h = 0;
};

/// Certificate search on a tabulated carrier: the index-based twin of tfg_certificate.
class Certifier {
public:
    explicit Certifier(const FilteredContext& fc) : fc_(fc) {}

    std::size_t span(std::size_t v, const std::vector<element>& gens) const {
        std::size_t h = v;
        for (auto g : gens) h = fc_.ctx().join(h, fc_.ctx().cyclic(g));
        return h;
    }

    /// Certificate for N/V with the fewest generators, then largest h, then lexicographic.
    const IndexCertificate& find(std::size_t v, std::size_t n) const {
        const auto& ctx = fc_.ctx();
        const std::uint64_t key = static_cast<std::uint64_t>(v) * ctx.size() + n;
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::vector<element> reps;
        std::vector<std::size_t> cands;
        std::vector<char> seen(ctx.size(), 0);
        seen[v] = 1;
        ctx.lattice()[n].for_each([&](element x) {
            const auto c = ctx.join(v, ctx.cyclic(x));
            if (!seen[c]) {
                seen[c] = 1;
                reps.push_back(x);
                cands.push_back(c);
            }
        });
        const std::size_t full = ctx.ideals().ring().size();
        std::optional<IndexCertificate> best;
        std::size_t best_size = 0;
        std::vector<element> chosen;
        std::function<bool(std::size_t, std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t left, std::size_t hsub) -> bool {
            if (left == 0) {
                const auto h = ctx.ann(hsub, n);
                const auto sz = ctx.ideals().elements(h).size();
                if (fc_.in_filter(h) && sz > best_size) {
                    best_size = sz;
                    best = IndexCertificate{chosen, h};
                }
                return best_size == full;
            }
            for (std::size_t i = start; i + left <= cands.size(); ++i) {
                if (ctx.leq(cands[i], hsub)) continue;
                chosen.push_back(reps[i]);
                const bool done = search(i + 1, left - 1, ctx.join(hsub, cands[i]));
                chosen.pop_back();
                if (done) return true;
            }
            return false;
        };
        for (std::size_t r = 0; r <= cands.size() && !best; ++r) search(0, r, v);
        if (!best) fail(errc::theorem_violation, "certificate search failed on a finite carrier");
        return cache_.emplace(key, std::move(*best)).first->second;
    }

    bool verify(std::size_t v, std::size_t n, const IndexCertificate& c) const {
        const auto& ctx = fc_.ctx();
        if (!fc_.in_filter(c.h)) return false;
        for (auto g : c.generators)
            if (!ctx.lattice()[n].contains(g)) return false;
        return ctx.leq(ctx.join(ctx.times(n, c.h), v), span(v, c.generators));
    }

    bool totally_fg(std::size_t v, std::size_t n) const { return verify(v, n, find(v, n)); }

    /// Every submodule of U/V has a verified certificate.
    bool totally_noetherian(std::size_t v, std::size_t u) const {
        const std::uint64_t key = static_cast<std::uint64_t>(v) * fc_.ctx().size() + u;
        if (auto it = tn_.find(key); it != tn_.end()) return it->second;
        bool ok = true;
        (fc_.ctx().up(v) & fc_.ctx().down(u)).for_each([&](element w) { ok = ok && totally_fg(v, w); });
        tn_.emplace(key, ok);
        return ok;
    }

private:
    const FilteredContext& fc_;
    mutable std::unordered_map<std::uint64_t, IndexCertificate> cache_;
    mutable std::unordered_map<std::uint64_t, bool> tn_;
};

/// Strictly ascending chains of lattice indices with at most max_length members (0: unbounded).
inline void for_each_chain(const ModuleContext& ctx, std::size_t max_length, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur;
    std::function<void()> grow = [&]() {
        fn(cur);
        if (max_length && cur.size() >= max_length) return;
        const auto last = cur.back();
        ctx.up(last).for_each([&](element j) {
            if (j == last) return;
            cur.push_back(j);
            grow();
            cur.pop_back();
        });
    };
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        cur = {i};
        grow();
    }
}

/// Smallest m and largest h with N_s·h ⊆ N_m for s ≥ m (0-based m).
inline std::optional<std::pair<std::size_t, std::size_t>> stability(const FilteredContext& fc, const std::vector<std::size_t>& chain) {
    const auto& ctx = fc.ctx();
    const auto& l = ctx.ideals();
    for (std::size_t m = 0; m < chain.size(); ++m) {
        std::size_t h = l.unit();
        for (std::size_t s = m; s < chain.size(); ++s) h = l.intersect(h, ctx.ann(chain[m], chain[s]));
        if (fc.in_filter(h)) return std::make_pair(m, h);
    }
    return std::nullopt;
}

/// {H : H·h ⊆ N for some N in the family, h ∈ L}, as a set of lattice indices.
inline ElementSet upper_closure(const FilteredContext& fc, const std::vector<std::size_t>& family) {
    const auto& ctx = fc.ctx();
    ElementSet out(ctx.size());
    for (std::size_t hsub = 0; hsub < ctx.size(); ++hsub)
        for (auto n : family) {
            bool in = false;
            for (auto h : fc.members())
                if (ctx.leq(ctx.times(hsub, h), n)) {
                    in = true;
                    break;
                }
            if (in) {
                out.insert(static_cast<element>(hsub));
                break;
            }
        }
    return out;
}

inline std::vector<std::size_t> maximal_elements(const ModuleContext& ctx, const ElementSet& fam) {
    std::vector<std::size_t> out;
    fam.for_each([&](element x) {
        if ((ctx.up(x) & fam).size() == 1) out.push_back(x);
    });
    return out;
}

/// Ideal indices occurring as (V : u) for u ∈ U, split by whether u ∈ V.
struct Profile {
    std::uint64_t all = 0, nonzero = 0;
};

}  // namespace detail

/// Runs the exhaustive theorem checks for one ring against any of its Gabriel
/// filters. Module carriers are A and, unless disabled, A².
class RingSuite {
public:
    explicit RingSuite(RingPtr ring, SuiteOptions opts = {}) : opts_(std::move(opts)) {
        if (ring->size() > suite_size_cap)
            fail(errc::size_cap_exceeded, ring->name() + " exceeds the theorem-suite cap of " + std::to_string(suite_size_cap));
        ideals_ = make_ideal_lattice(std::move(ring));
        if (ideals_->size() > 64) fail(errc::size_cap_exceeded, "too many ideals for the suite");
        ctx_.push_back(std::make_unique<ModuleContext>(ideals_, 1));
        if (opts_.include_rank2) ctx_.push_back(std::make_unique<ModuleContext>(ideals_, 2));
    }

    const IdealLatticePtr& ideals() const noexcept { return ideals_; }
    const RingPtr& ring() const noexcept { return ideals_->ring_ptr(); }
    std::vector<GabrielFilter> filters() const { return all_gabriel_filters(ideals_); }

    std::vector<TheoremResult> run(const GabrielFilter& sigma) const {
        require_same_ring(ring(), sigma.ring());
        Run r(*this, sigma);
        std::vector<TheoremResult> out;
        for (const auto& name : theorem_names())
            if (opts_.wants(name)) out.push_back(r.run(name));
        return out;
    }

private:
    struct Run {
        const RingSuite& s;
        const GabrielFilter& sigma;
        const IdealLattice& l;
        std::vector<std::unique_ptr<FilteredContext>> fcs;
        std::vector<std::unique_ptr<detail::Certifier>> certs;

        Run(const RingSuite& suite, const GabrielFilter& f) : s(suite), sigma(f), l(*suite.ideals_) {
            for (const auto& c : s.ctx_) {
                fcs.push_back(std::make_unique<FilteredContext>(*c, sigma));
                certs.push_back(std::make_unique<detail::Certifier>(*fcs.back()));
            }
        }

        std::string where(std::size_t k) const { return l.ring().name() + ", σ=" + sigma.to_string() + ", M=A^" + std::to_string(k + 1) + ": "; }
        std::string sub(std::size_t k, std::size_t n) const { return detail::submodule_string(*s.ctx_[k], n); }
        std::size_t chain_cap(std::size_t k) const { return k == 0 ? s.opts_.rank1_chain_length : s.opts_.rank2_chain_length; }

        TheoremResult run(const std::string& name) {
            if (name == "gabriel_axioms") return gabriel_axioms();
            if (name == "torsion_class") return per_rank(name, [&](auto& t, std::size_t k) { torsion_class(t, k); }, [&](auto& t) { direct_sums(t, false); });
            if (name == "torsionfree_class") return per_rank(name, [&](auto& t, std::size_t k) { torsionfree_class(t, k); }, [&](auto& t) { direct_sums(t, true); });
            if (name == "torsion_radical") return per_rank(name, [&](auto& t, std::size_t k) { torsion_radical(t, k); });
            if (name == "closure_laws") return per_rank(name, [&](auto& t, std::size_t k) { closure_laws(t, k); });
            if (name == "spec_partition") return spec_partition_check();
            if (name == "meet_decomposition") return meet_decomposition();
            if (name == "almost_jansian") return almost_jansian();
            if (name == "finite_type") return finite_type();
            if (name == "module_stability") return per_rank(name, [&](auto& t, std::size_t k) { module_stability(t, k); }, [&](auto& t) { direct_sum_noetherian(t); });
            if (name == "closure_colon") return per_rank(name, [&](auto& t, std::size_t k) { closure_colon(t, k); });
            if (name == "sigma_max_triangle") return per_rank(name, [&](auto& t, std::size_t k) { triangle(t, k); });
            if (name == "unique_maximal") return per_rank(name, [&](auto& t, std::size_t k) { unique_maximal(t, k); });
            if (name == "quotient_transfer") return per_rank(name, [&](auto& t, std::size_t k) { quotient_transfer(t, k); });
            if (name == "prime_submodules") return per_rank(name, [&](auto& t, std::size_t k) { prime_submodules(t, k); });
            if (name == "cohen") return per_rank(name, [&](auto& t, std::size_t k) { cohen(t, k); });
            if (name == "kaplansky") return kaplansky();
            if (name == "local_property") return per_rank(name, [&](auto& t, std::size_t k) { local_property(t, k); });
            if (name == "induced_filters") return induced_filters();
            fail(errc::validation_error, "unknown theorem " + name);
        }

        template <class PerRank, class After = std::nullptr_t>
        TheoremResult per_rank(const std::string& name, PerRank&& fn, After&& after = nullptr) {
            detail::Tally t(name);
            for (std::size_t k = 0; k < fcs.size(); ++k) fn(t, k);
            if constexpr (!std::is_same_v<std::decay_t<After>, std::nullptr_t>) after(t);
            return t.result();
        }

        TheoremResult gabriel_axioms() {
            detail::Tally t("gabriel_axioms");
            auto v = gabriel_check(sigma);
            t.check(v.empty(), [&] { return where(0) + v.front().axiom + ": " + v.front().detail; });
            return t.result();
        }

        bool torsion(std::size_t k, std::size_t v, std::size_t u) const { return fcs[k]->ctx().leq(u, fcs[k]->closure(v)); }

        // V ⊆ W ⊆ U: submodules and quotients of torsion modules are torsion;
        // extensions of torsion by torsion are torsion.
        void torsion_class(detail::Tally& t, std::size_t k) {
            const auto& ctx = fcs[k]->ctx();
            for (std::size_t v = 0; v < ctx.size(); ++v) {
                const ElementSet& above = ctx.up(v);
                above.for_each([&](element u) {
                    if (!torsion(k, v, u)) return;
                    (above & ctx.down(u)).for_each([&](element w) {
                        t.check(torsion(k, v, w) && torsion(k, w, u), [&] {
                            return where(k) + sub(k, u) + "/" + sub(k, v) + " is torsion but " + sub(k, w) + " breaks sub or quotient closure";
                        });
                    });
                });
                above.for_each([&](element w) {
                    if (!torsion(k, v, w)) return;
                    ctx.up(w).for_each([&](element u) {
                        if (!torsion(k, w, u)) return;
                        t.check(torsion(k, v, u), [&] { return where(k) + "extension " + sub(k, v) + "⊆" + sub(k, w) + "⊆" + sub(k, u) + " is not torsion"; });
                    });
                });
            }
        }

        std::vector<detail::Profile> profiles(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>>* where_from = nullptr) const {
            const auto& ctx = fcs[k]->ctx();
            std::vector<detail::Profile> out;
            std::unordered_map<std::uint64_t, std::size_t> seen;
            for (std::size_t v = 0; v < ctx.size(); ++v)
                ctx.up(v).for_each([&](element u) {
                    detail::Profile p;
                    ctx.lattice()[u].for_each([&](element x) {
                        const auto bit = std::uint64_t{1} << ctx.elem_colon(v, x);
                        p.all |= bit;
                        if (!ctx.lattice()[v].contains(x)) p.nonzero |= bit;
                    });
                    const std::uint64_t key = p.all * 1000003u ^ p.nonzero;
                    if (seen.emplace(key, out.size()).second) {
                        out.push_back(p);
                        if (where_from) where_from->push_back({v, u});
                    }
                });
            return out;
        }

        bool mask_in_filter(std::uint64_t mask, bool all) const {
            for (std::size_t i = 0; i < l.size(); ++i)
                if (mask >> i & 1) {
                    if (all && !sigma.contains(i)) return false;
                    if (!all && sigma.contains(i)) return false;
                }
            return true;
        }

        // M1 ⊕ M2 for subquotients M1, M2 of A or A², judged from element annihilators:
        // Ann(m1, m2) = Ann(m1) ∩ Ann(m2).
        void direct_sums(detail::Tally& t, bool torsionfree) {
            std::vector<detail::Profile> ps;
            for (std::size_t k = 0; k < fcs.size(); ++k)
                for (const auto& p : profiles(k)) ps.push_back(p);
            auto bits = [&](std::uint64_t m) {
                std::vector<std::size_t> out;
                for (std::size_t i = 0; i < l.size(); ++i)
                    if (m >> i & 1) out.push_back(i);
                return out;
            };
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i; j < ps.size(); ++j) {
                    if (!torsionfree) {
                        if (!mask_in_filter(ps[i].all, true) || !mask_in_filter(ps[j].all, true)) continue;
                        bool ok = true;
                        for (auto a : bits(ps[i].all))
                            for (auto b : bits(ps[j].all)) ok = ok && sigma.contains(l.intersect(a, b));
                        t.check(ok, [&] { return where(0) + "direct sum of torsion modules is not torsion"; });
                    } else {
                        if (!mask_in_filter(ps[i].nonzero, false) || !mask_in_filter(ps[j].nonzero, false)) continue;
                        // (m1,m2) is zero only when both annihilators are A
                        bool ok = true;
                        for (auto a : bits(ps[i].all))
                            for (auto b : bits(ps[j].all))
                                if (a != l.unit() || b != l.unit()) ok = ok && !sigma.contains(l.intersect(a, b));
                        t.check(ok, [&] { return where(0) + "product of torsionfree modules is not torsionfree"; });
                    }
                }
        }

        bool torsionfree(std::size_t k, std::size_t v, std::size_t u) const {
            const auto& ctx = fcs[k]->ctx();
            bool ok = true;
            (ctx.lattice()[u] - ctx.lattice()[v]).for_each([&](element x) { ok = ok && !sigma.contains(ctx.elem_colon(v, x)); });
            return ok;
        }

        void torsionfree_class(detail::Tally& t, std::size_t k) {
            const auto& ctx = fcs[k]->ctx();
            std::vector<ElementSet> tf(ctx.size(), ElementSet(ctx.size()));
            for (std::size_t v = 0; v < ctx.size(); ++v)
                ctx.up(v).for_each([&](element u) {
                    if (torsionfree(k, v, u)) tf[v].insert(u);
                });
            for (std::size_t v = 0; v < ctx.size(); ++v) {
                ctx.up(v).for_each([&](element w) {
                    ctx.up(w).for_each([&](element u) {
                        if (tf[v].contains(u))
                            t.check(tf[v].contains(w), [&] { return where(k) + sub(k, w) + "/" + sub(k, v) + " is a non-torsionfree submodule of a torsionfree module"; });
                        if (tf[v].contains(w) && tf[w].contains(u))
                            t.check(tf[v].contains(u), [&] { return where(k) + "extension " + sub(k, v) + "⊆" + sub(k, w) + "⊆" + sub(k, u) + " is not torsionfree"; });
                    });
                });
                // σM = 0 for torsionfree M
                ctx.up(v).for_each([&](element u) {
                    if (tf[v].contains(u)) t.check(ctx.meet(fcs[k]->closure(v), u) == v, [&] { return where(k) + "torsionfree module with nonzero torsion"; });
                });
            }
        }

        // {u : (V:u) ∈ L} against the sum of torsion cyclic submodules; M/σM torsionfree.
        void torsion_radical(detail::Tally& t, std::size_t k) {
            const auto& ctx = fcs[k]->ctx();
            for (std::size_t v = 0; v < ctx.size(); ++v) {
                ctx.up(v).for_each([&](element u) {
                    ElementSet by_element(ctx.ambient().size());
                    std::size_t by_sum = v;
                    ctx.lattice()[u].for_each([&](element x) {
                        if (sigma.contains(ctx.elem_colon(v, x))) by_element.insert(x);
                        const auto c = ctx.join(v, ctx.cyclic(x));
                        bool cyclic_torsion = true;
                        ctx.lattice()[c].for_each([&](element y) { cyclic_torsion = cyclic_torsion && sigma.contains(ctx.elem_colon(v, y)); });
                        if (cyclic_torsion) by_sum = ctx.join(by_sum, c);
                    });
                    const bool agree = by_element == ctx.lattice()[by_sum];
                    t.check(agree && torsionfree(k, by_sum, u), [&] {
                        return where(k) + "σ(" + sub(k, u) + "/" + sub(k, v) + ") " + (agree ? "leaves a torsion quotient" : "formulas disagree");
                    });
                });
            }
        }

        void closure_laws(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            std::vector<std::size_t> closed;
            for (std::size_t n = 0; n < ctx.size(); ++n) {
                const auto c = fc.closure(n);
                t.check(ctx.leq(n, c) && fc.closure(c) == c, [&] { return where(k) + "Cl(" + sub(k, n) + ") is not extensive and idempotent"; });
                ctx.up(n).for_each([&](element m) {
                    t.check(ctx.leq(c, fc.closure(m)), [&] { return where(k) + "Cl is not monotone on " + sub(k, n) + "⊆" + sub(k, m); });
                });
                if (c == n) closed.push_back(n);
            }
            for (auto a : closed)
                for (auto b : closed) {
                    if (b < a) continue;
                    const auto meet = ctx.meet(a, b);
                    const auto join = fc.closure(ctx.join(a, b));
                    bool least = true;
                    for (auto c : closed)
                        if (ctx.leq(a, c) && ctx.leq(b, c)) least = least && ctx.leq(join, c);
                    t.check(fc.closure(meet) == meet && fc.closure(join) == join && least,
                            [&] { return where(k) + "C(M,σ) lattice laws fail on " + sub(k, a) + ", " + sub(k, b); });
                }
        }

        TheoremResult spec_partition_check() {
            detail::Tally t("spec_partition");
            const auto part = spec_partition(sigma);
            const FreeModule ring_module(l.ring_ptr(), 1);
            auto in = [](const std::vector<Ideal>& v, const Ideal& i) { return std::find(v.begin(), v.end(), i) != v.end(); };
            for (auto p : l.primes()) {
                const bool z = in(part.Z, l[p]), k = in(part.K, l[p]);
                // A/p is torsion iff p ∈ L; torsionfree otherwise
                bool quotient_torsion = true, quotient_free = true;
                for (element a = 0; a < l.ring().size(); ++a) {
                    const bool member = sigma.contains_set(ring_module.element_colon(l.elements(p), a));
                    quotient_torsion = quotient_torsion && member;
                    if (!l.elements(p).contains(a)) quotient_free = quotient_free && !member;
                }
                t.check(z != k && z == sigma.contains(p) && z == quotient_torsion && k == quotient_free,
                        [&] { return where(0) + "prime " + l[p].to_string() + " is misclassified"; });
                for (auto q : l.primes())
                    if (l.leq(p, q)) {
                        t.check(!z || in(part.Z, l[q]), [&] { return where(0) + "Z is not upward closed at " + l[p].to_string() + "⊆" + l[q].to_string(); });
                        t.check(k || !in(part.K, l[q]), [&] { return where(0) + "K is not downward closed at " + l[p].to_string() + "⊆" + l[q].to_string(); });
                    }
            }
            for (const auto& c : part.C) {
                bool maximal = in(part.K, c);
                for (const auto& q : part.K) maximal = maximal && (q == c || !c.subset_of(q));
                t.check(maximal, [&] { return where(0) + c.to_string() + " is in C but not maximal in K"; });
            }
            for (const auto& p : part.K) {
                bool covered = false;
                for (const auto& c : part.C) covered = covered || p.subset_of(c);
                t.check(covered, [&] { return where(0) + p.to_string() + " lies under no element of C"; });
            }
            return t.result();
        }

        TheoremResult meet_decomposition() {
            detail::Tally t("meet_decomposition");
            const auto part = spec_partition(sigma);
            std::vector<GabrielFilter> fs;
            for (const auto& p : part.K) fs.push_back(filter_from_prime(s.ideals_, p));
            const GabrielFilter met = fs.empty() ? improper_filter(s.ideals_) : meet_filters(fs);
            for (std::size_t a = 0; a < l.size(); ++a)
                t.check(met.contains(a) == sigma.contains(a), [&] { return where(0) + l[a].to_string() + " separates σ from the meet over K"; });
            return t.result();
        }

        TheoremResult almost_jansian() {
            detail::Tally t("almost_jansian");
            const auto j = jansian_status(sigma);
            t.check(j.is_almost_jansian, [&] { return where(0) + (j.witnesses.empty() ? std::string("not almost jansian") : j.witnesses.back()); });
            // every filter on a finite ring is the upset of an idempotent ideal
            t.check(j.is_jansian && j.idempotent.has_value(), [&] { return where(0) + "not jansian"; });
            return t.result();
        }

        // A totally σ-noetherian forces σ of finite type: each a ∈ L has a
        // finitely generated a' ⊆ a with a·h ⊆ a', and then a' ∈ L.
        TheoremResult finite_type() {
            detail::Tally t("finite_type");
            const auto& ctx = fcs[0]->ctx();
            for (auto a : sigma.members()) {
                const auto& c = certs[0]->find(ctx.bottom(), a);
                const auto a_prime = certs[0]->span(ctx.bottom(), c.generators);
                t.check(certs[0]->verify(ctx.bottom(), a, c) && sigma.contains(a_prime) && sigma.contains(l.product(a, c.h)),
                        [&] { return where(0) + "member " + l[a].to_string() + " has no finitely generated member below it"; });
            }
            return t.result();
        }

        // Images, submodule/quotient splitting and direct sums of totally σ-noetherian modules.
        void module_stability(detail::Tally& t, std::size_t k) {
            const auto& ctx = fcs[k]->ctx();
            const auto& cert = *certs[k];
            for (std::size_t v = 0; v < ctx.size(); ++v)
                ctx.up(v).for_each([&](element w) {
                    const auto& c = cert.find(v, w);
                    t.check(cert.verify(v, w, c), [&] { return where(k) + "certificate for " + sub(k, w) + "/" + sub(k, v) + " does not verify"; });
                    // the same (H, h) serves every image W/V'
                    (ctx.up(v) & ctx.down(w)).for_each([&](element v2) {
                        const auto h2 = cert.span(v2, c.generators);
                        t.check(ctx.leq(ctx.join(ctx.times(w, c.h), v2), h2), [&] { return where(k) + "certificate does not pass to " + sub(k, w) + "/" + sub(k, v2); });
                    });
                });
            const auto top = ctx.top(), bot = ctx.bottom();
            const bool whole = cert.totally_noetherian(bot, top);
            for (std::size_t n = 0; n < ctx.size(); ++n) {
                const bool parts = cert.totally_noetherian(bot, n) && cert.totally_noetherian(n, top);
                t.check(whole == parts, [&] { return where(k) + "M vs N, M/N disagree at N=" + sub(k, n); });
            }
        }

        void direct_sum_noetherian(detail::Tally& t) {
            if (certs.size() < 2) return;
            const bool a = certs[0]->totally_noetherian(fcs[0]->ctx().bottom(), fcs[0]->ctx().top());
            const bool a2 = certs[1]->totally_noetherian(fcs[1]->ctx().bottom(), fcs[1]->ctx().top());
            t.check(a == a2 && a, [&] { return where(1) + "A ⊕ A and A disagree on being totally σ-noetherian"; });
        }

        void closure_colon(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            bool all = true;
            for (std::size_t n = 0; n < ctx.size(); ++n) {
                bool found = false;
                for (auto h : fc.members())
                    if (ctx.colon(n, h) == fc.closure(n)) {
                        found = true;
                        break;
                    }
                all = all && found;
                t.check(found, [&] { return where(k) + "no h ∈ L with (H:h) = Cl(H) for H=" + sub(k, n); });
            }
            // (a) ⇔ (b): σ-noetherian holds on finite carriers
            const bool tn = certs[k]->totally_noetherian(ctx.bottom(), ctx.top());
            t.check(tn == all, [&] { return where(k) + "equivalence fails"; });
        }

        // chain stability ⇔ σ-upper-closed families have maximal elements ⇔ σ-MAX
        void triangle(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            bool chains_ok = true, upper_ok = true, max_ok = true;
            std::vector<std::vector<std::size_t>> families;
            detail::for_each_chain(ctx, chain_cap(k), [&](const std::vector<std::size_t>& chain) {
                const auto st = detail::stability(fc, chain);
                bool ok = st.has_value();
                if (ok)
                    for (std::size_t s2 = st->first; s2 < chain.size(); ++s2) ok = ok && ctx.leq(ctx.times(chain[s2], st->second), chain[st->first]);
                chains_ok = chains_ok && ok;
                t.check(ok, [&] { return where(k) + "chain from " + sub(k, chain.front()) + " to " + sub(k, chain.back()) + " is not totally σ-stable"; });
                families.push_back(chain);
            });
            for (std::size_t n = 0; n < ctx.size(); ++n) {
                std::vector<std::size_t> down, up;
                ctx.down(n).for_each([&](element x) { down.push_back(x); });
                ctx.up(n).for_each([&](element x) { up.push_back(x); });
                families.push_back(std::move(down));
                families.push_back(std::move(up));
            }
            if (k == 0)
                for (std::size_t a = 0; a < ctx.size(); ++a)
                    for (std::size_t b = a + 1; b < ctx.size(); ++b) families.push_back({a, b});
            for (const auto& fam : families) {
                ElementSet f(ctx.size());
                for (auto n : fam) f.insert(static_cast<element>(n));
                // σ-maximal elements, from the definition
                bool has_sigma_max = false;
                for (auto n : fam) {
                    std::size_t h = l.unit();
                    for (auto big : fam)
                        if (ctx.leq(n, big)) h = l.intersect(h, ctx.ann(n, big));
                    if (fc.in_filter(h)) {
                        has_sigma_max = true;
                        break;
                    }
                }
                max_ok = max_ok && has_sigma_max;
                // the σ-upper closure is σ-upper closed and has maximal elements
                const auto closure = detail::upper_closure(fc, fam);
                std::vector<std::size_t> cv;
                closure.for_each([&](element x) { cv.push_back(x); });
                const bool closed = detail::upper_closure(fc, cv) == closure && f.subset_of(closure);
                const bool has_max = closed && !detail::maximal_elements(ctx, closure).empty();
                upper_ok = upper_ok && has_max;
                t.check(has_sigma_max && has_max, [&] { return where(k) + "family starting at " + sub(k, fam.front()) + " lacks maximal elements"; });
            }
            const bool tn = certs[k]->totally_noetherian(ctx.bottom(), ctx.top());
            t.check(chains_ok == upper_ok && upper_ok == max_ok && max_ok == tn && tn, [&] {
                return where(k) + "chains " + (chains_ok ? "stable" : "unstable") + ", upper-closed maximality " + (upper_ok ? "holds" : "fails") + ", σ-MAX " +
                       (max_ok ? "holds" : "fails");
            });
        }

        void unique_maximal(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            for (std::size_t n = 0; n < ctx.size(); ++n) {
                const auto fam = detail::upper_closure(fc, {n});
                const auto maxes = detail::maximal_elements(ctx, fam);
                const bool cl_in = fam.contains(static_cast<element>(fc.closure(n)));
                // every member lies between N and Cl(N)
                bool bounded = true;
                fam.for_each([&](element h) { bounded = bounded && ctx.leq(h, fc.closure(n)); });
                t.check(((maxes.size() == 1) == cl_in) && bounded,
                        [&] { return where(k) + "N=" + sub(k, n) + ": " + std::to_string(maxes.size()) + " maximal elements, Cl(N) " + (cl_in ? "inside" : "outside"); });
            }
        }

        void quotient_transfer(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            std::vector<std::vector<std::size_t>> chains;
            detail::for_each_chain(ctx, chain_cap(k), [&](const std::vector<std::size_t>& c) { chains.push_back(c); });
            for (std::size_t tt = 0; tt < ctx.size(); ++tt) {
                const auto ann_t = ctx.ann(ctx.bottom(), tt);
                if (!sigma.contains(ann_t)) continue;
                for (const auto& chain : chains) {
                    bool ok = true;
                    if (ctx.leq(tt, chain.front())) {
                        const auto st = detail::stability(fc, chain);
                        ok = st.has_value();
                        for (std::size_t i = ok ? st->first : chain.size(); i < chain.size(); ++i)
                            ok = ok && ctx.leq(ctx.join(ctx.times(chain[i], st->second), tt), chain[st->first]);
                    }
                    std::vector<std::size_t> image;
                    for (auto n : chain) image.push_back(ctx.join(n, tt));
                    const auto st = detail::stability(fc, image);
                    ok = ok && st.has_value();
                    if (st) {
                        const auto hh = l.product(st->second, ann_t);
                        ok = ok && sigma.contains(hh);
                        for (std::size_t i = st->first; i < chain.size(); ++i) ok = ok && ctx.leq(ctx.times(chain[i], hh), chain[st->first]);
                    }
                    t.check(ok, [&] { return where(k) + "transfer fails for T=" + sub(k, tt) + " on a chain starting at " + sub(k, chain.front()); });
                }
            }
        }

        // Maximal proper closed submodules above a closed L are prime submodules.
        void prime_submodules(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            const auto top = ctx.top();
            for (std::size_t low = 0; low < ctx.size(); ++low) {
                if (low == top || fc.closure(low) != low) continue;
                ElementSet gamma(ctx.size());
                ctx.up(low).for_each([&](element n) {
                    if (n != top && fc.closure(n) == n) gamma.insert(n);
                });
                for (auto n : detail::maximal_elements(ctx, gamma)) {
                    const auto nm = ctx.ann(n, top);
                    bool prime = true;
                    (ctx.lattice()[top] - ctx.lattice()[n]).for_each([&](element x) { prime = prime && l.leq(ctx.elem_colon(n, x), nm); });
                    t.check(prime, [&] { return where(k) + sub(k, n) + " is maximal closed above " + sub(k, low) + " but not prime"; });
                }
            }
        }

        // M totally σ-noetherian ⇔ M·p totally σ-fg for every p ∈ K(σ).
        void cohen(detail::Tally& t, std::size_t k) {
            const auto& fc = *fcs[k];
            const auto& ctx = fc.ctx();
            const auto& cert = *certs[k];
            const bool lhs = cert.totally_noetherian(ctx.bottom(), ctx.top());
            bool rhs = true;
            for (auto p : l.primes()) {
                const auto mp = ctx.times(ctx.top(), p);
                if (sigma.contains(p)) {
                    // for p ∈ Z, M·p is dense
                    t.check(fc.closure(mp) == ctx.top(), [&] { return where(k) + "M·" + l[p].to_string() + " is not dense"; });
                    continue;
                }
                rhs = rhs && cert.totally_fg(ctx.bottom(), mp);
            }
            t.check(lhs == rhs, [&] { return where(k) + "totally σ-noetherian and the K(σ) criterion disagree"; });
        }

        TheoremResult kaplansky() {
            detail::Tally t("kaplansky");
            const auto& fc = *fcs[0];
            const auto& ctx = fc.ctx();
            auto totally_principal = [&](std::size_t i) {
                bool ok = false;
                l.elements(i).for_each([&](element a) { ok = ok || sigma.contains(ctx.ann(ctx.cyclic(a), i)); });
                return ok;
            };
            auto sigma_principal = [&](std::size_t i) {
                bool ok = false;
                l.elements(i).for_each([&](element a) { ok = ok || fc.closure(ctx.cyclic(a)) == fc.closure(i); });
                return ok;
            };
            bool pir = true, sigma_pir = true, k_principal = true, primes_fg = true;
            for (std::size_t i = 0; i < l.size(); ++i) {
                pir = pir && totally_principal(i);
                sigma_pir = sigma_pir && sigma_principal(i);
            }
            for (auto p : l.primes()) {
                if (!sigma.contains(p)) k_principal = k_principal && totally_principal(p);
                primes_fg = primes_fg && certs[0]->totally_fg(ctx.bottom(), p);
            }
            t.check(pir == k_principal, [&] { return where(0) + "totally σ-PIR is " + (pir ? "true" : "false") + " but K(σ) principality is " + (k_principal ? "true" : "false"); });
            t.check(pir == (sigma_pir && primes_fg), [&] { return where(0) + "totally σ-PIR disagrees with σ-PIR plus finitely generated primes"; });
            return t.result();
        }

        // M totally σ-noetherian ⇔ totally σ_{A∖p}-noetherian for every p ∈ C(σ).
        void local_property(detail::Tally& t, std::size_t k) {
            const auto& ctx = fcs[k]->ctx();
            const bool lhs = certs[k]->totally_noetherian(ctx.bottom(), ctx.top());
            bool rhs = true;
            for (const auto& p : spec_partition(sigma).C) {
                const auto fp = filter_from_prime(s.ideals_, p);
                FilteredContext fcp(ctx, fp);
                detail::Certifier cp(fcp);
                rhs = rhs && cp.totally_noetherian(ctx.bottom(), ctx.top());
            }
            t.check(lhs == rhs, [&] { return where(k) + "local criterion disagrees"; });
        }

        // Induced filters along every quotient and local projection; the targets stay
        // totally noetherian, and a local factor is also so for the complement of its maximal ideal.
        TheoremResult induced_filters() {
            detail::Tally t("induced_filters");
            const auto& ring = l.ring_ptr();
            auto check_target = [&](const RingMap& f, bool local) {
                try {
                    const auto g = induced_filter(f, sigma);
                    ModuleContext bctx(g.lattice_ptr(), 1);
                    FilteredContext bfc(bctx, g);
                    detail::Certifier bc(bfc);
                    bool ok = bc.totally_noetherian(bctx.bottom(), bctx.top());
                    if (local) {
                        const auto& bl = *g.lattice_ptr();
                        const auto fm = filter_from_prime(g.lattice_ptr(), bl.primes().front());
                        FilteredContext mfc(bctx, fm);
                        detail::Certifier mc(mfc);
                        ok = ok && mc.totally_noetherian(bctx.bottom(), bctx.top());
                    }
                    t.check(ok, [&] { return where(0) + f.target->name() + " is not totally noetherian for the induced filter"; });
                } catch (const error& e) {
                    t.check(false, [&] { return where(0) + f.target->name() + ": " + e.what(); });
                }
            };
            for (std::size_t a = 0; a < l.size(); ++a)
                if (a != l.unit()) check_target(quotient_map(l[a]), false);
            for (const auto& f : local_decomposition(ring)) check_target(f.projection, true);
            return t.result();
        }
    };

    SuiteOptions opts_;
    IdealLatticePtr ideals_;
    std::vector<std::unique_ptr<ModuleContext>> ctx_;
};

inline std::vector<TheoremResult> theorem_suite(const RingPtr& ring, const GabrielFilter& sigma, const SuiteOptions& opts = {}) {
    return RingSuite(ring, opts).run(sigma);
}

}  // namespace gabriel
