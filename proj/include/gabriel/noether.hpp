#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gabriel/torsion.hpp"

namespace gabriel {

enum class CertificateKind { totally_fg, totally_principal, totally_torsion };

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::totally_fg: return "totally_fg";
        case CertificateKind::totally_principal: return "totally_principal";
        case CertificateKind::totally_torsion: return "totally_torsion";
    }
    return "?";
}

/// (H, h) with N·h ⊆ H ⊆ N and h ∈ L(σ); H is spanned by `generators` over the relations.
struct Certificate {
    CertificateKind kind = CertificateKind::totally_fg;
    std::vector<element> generators;
    Ideal h;
};

struct Verdict {
    bool ok = true;
    std::string reason;  // first failing condition
};

namespace detail {

inline ElementSet span_over(const FiniteModule& m, const std::vector<element>& gens) {
    return m.ambient().sum(m.ambient().span(gens), m.relations());
}

/// (H :_A N) for submodule preimages.
inline ElementSet colon_of(const FiniteModule& m, const ElementSet& h, const ElementSet& n) {
    return m.ambient().module_colon(h, m.ambient().greedy_generators(n));
}

inline bool product_within(const FiniteModule& m, const ElementSet& n, const Ideal& h, const ElementSet& target) {
    const auto& a = m.ambient();
    return a.product(a.greedy_generators(n), h.generators()).subset_of(target);
}

}  // namespace detail

/// Minimal-size generating set H of a submodule of N with N·h ⊆ H for some
/// h ∈ L(σ). Among minimal sizes the largest h (by cardinality) wins, then the
/// lexicographically first generator list.
inline Certificate tfg_certificate(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    m.require_submodule(n);
    const auto& a = m.ambient();
    const IdealLattice& l = sigma.lattice();
    const auto n_gens = a.greedy_generators(n);

    std::vector<element> reps;
    std::vector<ElementSet> cands;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    n.for_each([&](element x) {
        if (m.relations().contains(x)) return;
        ElementSet c = a.sum(a.cyclic(x), m.relations());
        if (seen.emplace(c, reps.size()).second) {
            reps.push_back(x);
            cands.push_back(std::move(c));
        }
    });

    std::optional<Certificate> best;
    std::size_t best_size = 0;
    std::vector<element> chosen;
    std::function<bool(std::size_t, std::size_t, const ElementSet&)> search = [&](std::size_t start, std::size_t left, const ElementSet& h_set) -> bool {
        if (left == 0) {
            const auto idx = l.index_of(a.module_colon(h_set, n_gens));
            if (sigma.contains(idx) && l.elements(idx).size() > best_size) {
                best_size = l.elements(idx).size();
                best = Certificate{CertificateKind::totally_fg, chosen, l[idx]};
            }
            return best_size == l.ring().size();
        }
        for (std::size_t i = start; i + left <= cands.size(); ++i) {
            if (cands[i].subset_of(h_set)) continue;  // a shorter list spans the same H
            chosen.push_back(reps[i]);
            const bool done = search(i + 1, left - 1, a.sum(h_set, cands[i]));
            chosen.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (std::size_t r = 0; r <= cands.size() && !best; ++r) search(0, r, m.relations());
    if (!best) fail(errc::theorem_violation, "no certificate found for a submodule of a finite module");
    return *best;
}

inline Verdict verify_certificate(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma, const Certificate& c) {
    require_same_ring(m, sigma);
    m.require_submodule(n);
    if (!sigma.contains(c.h)) return {false, "h ∉ L(σ)"};
    for (auto g : c.generators)
        if (g >= m.ambient().size() || !n.contains(g)) return {false, "H ⊄ N"};
    if (c.kind == CertificateKind::totally_principal && c.generators.size() != 1) return {false, "H is not cyclic"};
    if (c.kind == CertificateKind::totally_torsion && !c.generators.empty()) return {false, "H is not zero"};
    const ElementSet h_set = detail::span_over(m, c.generators);
    if (!detail::product_within(m, n, c.h, h_set)) return {false, "N·h ⊄ H"};
    return {};
}

/// Some h ∈ L(σ) with (H :_M h) = Cl(H); members are tried by decreasing size.
inline Ideal closure_colon_witness(const FiniteModule& m, const ElementSet& h_sub, const GabrielFilter& sigma) {
    const ElementSet cl = closure(m, h_sub, sigma);
    const IdealLattice& l = sigma.lattice();
    auto members = sigma.members();
    std::stable_sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) { return l.elements(x).size() > l.elements(y).size(); });
    for (auto h : members)
        if ((m.ambient().colon(h_sub, l.lattice().generators(h)) & m.carrier()) == cl) return l[h];
    std::string dump = "no h in " + sigma.to_string() + " has (H:h) = Cl(H); |H|=" + std::to_string(h_sub.size()) + ", |Cl(H)|=" + std::to_string(cl.size());
    fail(errc::theorem_violation, dump);
}

/// All submodules of U/V as preimages, in canonical order.
inline std::vector<ElementSet> submodules(const FiniteModule& m) {
    SubmoduleLattice lat(m.ring(), m.rank());
    std::vector<ElementSet> out;
    for (const auto& s : lat.members())
        if (m.relations().subset_of(s) && s.subset_of(m.carrier())) out.push_back(s);
    return out;
}

struct SigmaMaximal {
    ElementSet n;
    Ideal h;  // largest h with H·h ⊆ N for every H ⊇ N in the family
};

inline std::vector<SigmaMaximal> sigma_maximal(const FiniteModule& m, const std::vector<ElementSet>& family, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    if (family.empty()) fail(errc::validation_error, "family must be nonempty");
    for (const auto& f : family) m.require_submodule(f);
    const IdealLattice& l = sigma.lattice();
    std::vector<SigmaMaximal> out;
    for (const auto& n : family) {
        ElementSet h = ElementSet::full(l.ring().size());
        for (const auto& big : family)
            if (n.subset_of(big)) h &= detail::colon_of(m, n, big);
        const auto idx = l.index_of(h);
        if (sigma.contains(idx)) out.push_back({n, l[idx]});
    }
    return out;
}

/// {H ⊆ M : H·h ⊆ N for some N in the family and h ∈ L(σ)}, in canonical order.
inline std::vector<ElementSet> upper_closure(const FiniteModule& m, const std::vector<ElementSet>& family, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    for (const auto& f : family) m.require_submodule(f);
    const IdealLattice& l = sigma.lattice();
    std::vector<ElementSet> out;
    for (const auto& h_sub : submodules(m)) {
        bool in = false;
        for (std::size_t k = 0; k < family.size() && !in; ++k)
            for (auto h : sigma.members())
                if (detail::product_within(m, h_sub, l[h], family[k])) {
                    in = true;
                    break;
                }
        if (in) out.push_back(h_sub);
    }
    return out;
}

inline bool is_upper_closed(const FiniteModule& m, const std::vector<ElementSet>& family, const GabrielFilter& sigma) {
    for (const auto& h : upper_closure(m, family, sigma))
        if (std::find(family.begin(), family.end(), h) == family.end()) return false;
    return true;
}

struct UniqueMaximal {
    std::vector<ElementSet> maximal;  // maximal elements of the upper closure of {N}
    bool closure_in_family = false;   // Cl(N) lies in that upper closure
};

/// Evaluates both sides of: the upper closure of {N} has one maximal element
/// iff Cl(N) belongs to it. Throws TheoremViolation when they disagree.
inline UniqueMaximal unique_maximal_check(const FiniteModule& m, const ElementSet& n, const GabrielFilter& sigma) {
    const auto fam = upper_closure(m, {n}, sigma);
    UniqueMaximal out;
    for (const auto& x : fam) {
        bool maximal = true;
        for (const auto& y : fam)
            if (!(x == y) && x.subset_of(y)) maximal = false;
        if (maximal) out.maximal.push_back(x);
    }
    const auto cl = closure(m, n, sigma);
    out.closure_in_family = std::find(fam.begin(), fam.end(), cl) != fam.end();
    if ((out.maximal.size() == 1) != out.closure_in_family)
        fail(errc::theorem_violation, std::to_string(out.maximal.size()) + " maximal elements but Cl(N) " +
                                          (out.closure_in_family ? "is" : "is not") + " in the upper closure");
    return out;
}

struct ChainStability {
    std::size_t stable_index = 1;  // 1-based m
    Ideal h;                       // largest h with N_s·h ⊆ N_m for all s ≥ m
};

inline void require_ascending(const FiniteModule& m, const std::vector<ElementSet>& chain) {
    if (chain.empty()) fail(errc::validation_error, "chain must be nonempty");
    for (const auto& c : chain) m.require_submodule(c);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i].subset_of(chain[i + 1])) fail(errc::not_ascending, "chain member " + std::to_string(i + 1) + " is not contained in the next");
}

inline ChainStability chain_stability(const FiniteModule& m, const std::vector<ElementSet>& chain, const GabrielFilter& sigma) {
    require_same_ring(m, sigma);
    require_ascending(m, chain);
    const IdealLattice& l = sigma.lattice();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        ElementSet h = ElementSet::full(l.ring().size());
        for (std::size_t s = i; s < chain.size(); ++s) h &= detail::colon_of(m, chain[i], chain[s]);
        const auto idx = l.index_of(h);
        if (sigma.contains(idx)) return {i + 1, l[idx]};
    }
    fail(errc::theorem_violation, "finite chain is not stable");
}

struct TransferReport {
    bool ok = true;
    std::size_t chains_checked = 0;
    std::string first_failure;
};

/// Every strictly ascending chain of submodules, in lexicographic order of
/// canonical indices; chains are capped at max_length members.
inline void for_each_chain(const std::vector<ElementSet>& subs, std::size_t max_length, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur;
    std::function<void()> grow = [&]() {
        fn(cur);
        if (cur.size() >= max_length) return;
        for (std::size_t j = cur.back() + 1; j < subs.size(); ++j)
            if (subs[cur.back()].subset_of(subs[j]) && subs[cur.back()].size() < subs[j].size()) {
                cur.push_back(j);
                grow();
                cur.pop_back();
            }
    };
    for (std::size_t i = 0; i < subs.size(); ++i) {
        cur = {i};
        grow();
    }
}

/// Chains in M and in M/T exchange stability certificates: a chain over T keeps
/// its (m, h) in M/T, and a chain in M inherits (m, h·Ann(T)) from its image.
inline TransferReport quotient_transfer_check(const FiniteModule& m, const ElementSet& t, const GabrielFilter& sigma, std::size_t max_chain_length = 0) {
    require_same_ring(m, sigma);
    m.require_submodule(t);
    const FiniteModule tm(m.ambient_ptr(), t, m.relations());
    const auto tt = is_totally_torsion(tm, sigma);
    if (!tt.holds) fail(errc::precondition_failed, "T is not totally σ-torsion: Ann(T)=" + tt.annihilator.to_string() + " ∉ L(σ)");
    const FiniteModule quotient(m.ambient_ptr(), m.carrier(), t);
    const auto subs = submodules(m);
    if (max_chain_length == 0) max_chain_length = subs.size() <= 32 ? subs.size() : 3;
    const IdealLattice& l = sigma.lattice();
    const auto& a = m.ambient();
    TransferReport rep;
    auto note = [&](const std::string& why) {
        if (rep.ok) rep.first_failure = why;
        rep.ok = false;
    };
    for_each_chain(subs, max_chain_length, [&](const std::vector<std::size_t>& idx) {
        ++rep.chains_checked;
        std::vector<ElementSet> chain;
        for (auto i : idx) chain.push_back(subs[i]);
        if (t.subset_of(chain.front())) {
            const auto st = chain_stability(m, chain, sigma);
            for (std::size_t s = st.stable_index - 1; s < chain.size(); ++s)
                if (!a.sum(a.product(a.greedy_generators(chain[s]), st.h.generators()), t).subset_of(chain[st.stable_index - 1]))
                    note("certificate does not pass to M/T");
        }
        std::vector<ElementSet> image;
        for (const auto& c : chain) image.push_back(a.sum(c, t));
        const auto st = chain_stability(quotient, image, sigma);
        const auto hh = l[l.product(l.index_of(st.h), l.index_of(tt.annihilator))];
        if (!sigma.contains(hh)) note("h·h' left the filter");
        for (std::size_t s = st.stable_index - 1; s < chain.size(); ++s)
            if (!detail::product_within(m, chain[s], hh, chain[st.stable_index - 1])) note("composed certificate h·h' fails in M");
    });
    return rep;
}

struct PrincipalStatus {
    bool sigma_principal = false;
    std::optional<element> witness;           // a with Cl(aA) = Cl(I)
    std::optional<Certificate> totally_principal;  // I·h ⊆ aA ⊆ I
};

inline PrincipalStatus sigma_principal_status(const Ideal& ideal, const GabrielFilter& sigma) {
    require_same_ring(ideal.ring(), sigma.ring());
    const auto m = FiniteModule::free(ideal.ring(), 1);
    const IdealLattice& l = sigma.lattice();
    const auto& a = m.ambient();
    const ElementSet target = closure(m, ideal.elements(), sigma);
    PrincipalStatus out;
    std::size_t best = 0;
    ideal.elements().for_each([&](element x) {
        const ElementSet ax = a.cyclic(x);
        if (!out.witness && closure(m, ax, sigma) == target) {
            out.witness = x;
            out.sigma_principal = true;
        }
        const auto h = l.index_of(a.module_colon(ax, ideal.generators()));
        if (sigma.contains(h) && l.elements(h).size() > best) {
            best = l.elements(h).size();
            out.totally_principal = Certificate{CertificateKind::totally_principal, {x}, l[h]};
        }
    });
    return out;
}

}  // namespace gabriel
