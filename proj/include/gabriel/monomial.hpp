#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gabriel/error.hpp"

namespace gabriel::monomial {

using var = std::uint64_t;
using exponent = std::uint32_t;

/// x_1^{a_1} x_2^{a_2} ... with finitely many nonzero exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<var, exponent> exps) : exps_(std::move(exps)) {
        for (auto it = exps_.begin(); it != exps_.end();) {
            if (it->first == 0) fail(errc::validation_error, "variable indices start at 1");
            it = it->second == 0 ? exps_.erase(it) : std::next(it);
        }
    }

    static Monomial one() { return {}; }
    static Monomial variable(var v, exponent e = 1) { return Monomial({{v, e}}); }

    const std::map<var, exponent>& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return exps_.empty(); }
    exponent operator[](var v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto [v, e] : exps_) d += e;
        return d;
    }
    /// Largest variable index, 0 for the unit monomial.
    var max_var() const noexcept { return exps_.empty() ? 0 : exps_.rbegin()->first; }

    bool divides(const Monomial& m) const {
        for (auto [v, e] : exps_)
            if (m[v] < e) return false;
        return true;
    }

    bool support_within(const Monomial& m) const {
        for (auto [v, e] : exps_)
            if (m[v] == 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (auto [v, e] : b.exps_) out.exps_[v] += e;
        return out;
    }

    Monomial pow(std::uint64_t n) const {
        Monomial out;
        if (n == 0) return out;
        for (auto [v, e] : exps_) out.exps_[v] = static_cast<exponent>(e * n);
        return out;
    }

    /// The monomial with every variable of s removed.
    Monomial without_support_of(const Monomial& s) const {
        Monomial out;
        for (auto [v, e] : exps_)
            if (s[v] == 0) out.exps_[v] = e;
        return out;
    }

    std::string to_string() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (auto [v, e] : exps_) {
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Degree first, then lexicographic on the exponent map.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exps_ < b.exps_;
    }

private:
    std::map<var, exponent> exps_;
};

/// base · x_{start + i·step}^e for all i ≥ 0.
struct TailFamily {
    Monomial base;
    var start = 1;
    var step = 1;
    exponent e = 1;

    var variable(std::uint64_t i) const { return start + i * step; }
    Monomial instance_at(var v) const { return base * Monomial::variable(v, e); }
    bool hits(var v) const { return v >= start && (v - start) % step == 0; }

    std::string to_string() const {
        std::string idx = std::to_string(start) + "+" + (step == 1 ? std::string() : std::to_string(step)) + "i";
        std::string out = base.is_one() ? "" : base.to_string() + "*";
        out += "x_{" + idx + "}";
        if (e > 1) out += "^" + std::to_string(e);
        return out;
    }

    friend bool operator==(const TailFamily&, const TailFamily&) = default;
    friend bool operator<(const TailFamily& a, const TailFamily& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return std::tie(a.start, a.step, a.e) < std::tie(b.start, b.step, b.e);
    }
};

class MonomialIdeal;
inline void check_tail_discipline(const MonomialIdeal&);

/// A monomial ideal given by finitely many generators and tail families.
/// Tail discipline: each family's variables exceed every variable of its
/// base and of the finite generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<Monomial> gens, std::vector<TailFamily> families = {}) : gens_(std::move(gens)), families_(std::move(families)) {
        for (const auto& f : families_)
            if (f.start == 0 || f.step == 0 || f.e == 0) fail(errc::validation_error, "family start, step and exponent must be positive");
        check_tail_discipline(*this);
    }

    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    const std::vector<TailFamily>& families() const noexcept { return families_; }
    bool finitely_generated() const noexcept { return families_.empty(); }

    /// Largest variable index among finite generators and family bases.
    var finite_horizon() const {
        var h = 0;
        for (const auto& g : gens_) h = std::max(h, g.max_var());
        for (const auto& f : families_) h = std::max(h, f.base.max_var());
        return h;
    }

    std::string to_string() const {
        std::string out = "<";
        bool first = true;
        for (const auto& g : gens_) {
            out += (first ? "" : ", ") + g.to_string();
            first = false;
        }
        for (const auto& f : families_) {
            out += (first ? "" : ", ") + f.to_string();
            first = false;
        }
        return out + ">";
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<Monomial> gens_;
    std::vector<TailFamily> families_;
};

inline void check_tail_discipline(const MonomialIdeal& ideal) {
    var finite = 0;
    for (const auto& g : ideal.generators()) finite = std::max(finite, g.max_var());
    for (const auto& f : ideal.families()) {
        const var bound = std::max(finite, f.base.max_var());
        if (f.start <= bound)
            fail(errc::tail_discipline_violation, "family " + f.to_string() + " starts at x" + std::to_string(f.start) + " but finite data reaches x" + std::to_string(bound));
    }
}

inline bool member(const MonomialIdeal& ideal, const Monomial& m) {
    for (const auto& g : ideal.generators())
        if (g.divides(m)) return true;
    // an instance divides m only through a variable of m
    for (const auto& f : ideal.families()) {
        if (!f.base.divides(m)) continue;
        for (auto [v, e] : m.exponents())
            if (f.hits(v) && e >= f.e && f.base[v] == 0) return true;
    }
    return false;
}

namespace detail {

inline var checked_lcm(var a, var b) {
    const var l = std::lcm(a, b);
    if (l > (var{1} << 24)) fail(errc::validation_error, "family steps are too large to compare exactly");
    return l;
}

/// Every instance of f with variable ≤ limit.
template <class Fn>
void for_each_instance(const TailFamily& f, var limit, Fn&& fn) {
    for (var v = f.start; v <= limit; v += f.step)
        if (!fn(f.instance_at(v))) return;
}

/// Move the finitely many instances of each family at or below `bound`
/// into the finite generators so the tail discipline holds again.
inline MonomialIdeal repair_tails(std::vector<Monomial> gens, std::vector<TailFamily> families) {
    var bound = 0;
    for (const auto& g : gens) bound = std::max(bound, g.max_var());
    for (const auto& f : families) bound = std::max(bound, f.base.max_var());
    for (auto& f : families)
        for (; f.start <= bound; f.start += f.step) gens.push_back(f.instance_at(f.start));
    return MonomialIdeal(std::move(gens), std::move(families));
}

}  // namespace detail

/// I ⊇ J, exactly. Instances of a J-family up to a horizon are checked one by one;
/// beyond it membership of base·x_v^e is periodic in v with the lcm of the steps
/// involved, so one further period decides the rest.
inline bool contains(const MonomialIdeal& i, const MonomialIdeal& j) {
    check_tail_discipline(i);
    check_tail_discipline(j);
    for (const auto& g : j.generators())
        if (!member(i, g)) return false;
    var horizon = i.finite_horizon();
    var period = 1;
    for (const auto& f : i.families()) {
        horizon = std::max(horizon, f.start);
        period = detail::checked_lcm(period, f.step);
    }
    for (const auto& f : j.families()) {
        const var h = std::max({horizon, f.start, f.base.max_var()});
        const var limit = h + detail::checked_lcm(period, f.step);
        bool ok = true;
        detail::for_each_instance(f, limit, [&](const Monomial& m) { return ok = member(i, m); });
        if (!ok) return false;
    }
    return true;
}

inline bool equivalent(const MonomialIdeal& a, const MonomialIdeal& b) { return contains(a, b) && contains(b, a); }

/// Minimal finite generators, no absorbed families, canonical order.
inline MonomialIdeal normalize(const MonomialIdeal& ideal) {
    auto gens = ideal.generators();
    auto fams = ideal.families();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::sort(fams.begin(), fams.end());
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    for (std::size_t k = 0; k < fams.size();) {
        auto rest = fams;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (contains(MonomialIdeal(gens, rest), MonomialIdeal({}, {fams[k]}))) fams = std::move(rest);
        else ++k;
    }
    std::vector<Monomial> minimal;
    const MonomialIdeal fam_only({}, fams);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        bool redundant = member(fam_only, gens[k]);
        for (std::size_t o = 0; o < gens.size() && !redundant; ++o)
            redundant = o != k && gens[o].divides(gens[k]) && (!(gens[o] == gens[k]) || o < k);
        if (!redundant) minimal.push_back(gens[k]);
    }
    return MonomialIdeal(std::move(minimal), std::move(fams));
}

/// m·I
inline MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g * m);
    auto fams = ideal.families();
    for (auto& f : fams) f.base = f.base * m;
    return detail::repair_tails(std::move(gens), std::move(fams));
}

/// S = {s^n : n ≥ 0}
struct PrincipalMultSet {
    Monomial s;
};

/// Smallest n with some element of I dividing s^n, if any.
inline std::optional<std::uint64_t> in_filter(const MonomialIdeal& ideal, const PrincipalMultSet& mult) {
    std::optional<std::uint64_t> best;
    auto consider = [&](const Monomial& g) {
        if (!g.support_within(mult.s)) return;
        std::uint64_t n = 0;
        for (auto [v, e] : g.exponents()) n = std::max<std::uint64_t>(n, (e + mult.s[v] - 1) / mult.s[v]);
        if (!best || n < *best) best = n;
    };
    for (const auto& g : ideal.generators()) consider(g);
    for (const auto& f : ideal.families())
        for (auto [v, e] : mult.s.exponents())
            if (f.hits(v)) consider(f.instance_at(v));
    return best;
}

/// I : s^∞. Exponents on supp(s) are dropped; a family whose progression meets
/// supp(s) contributes its bare base, which divides all its other instances.
inline MonomialIdeal saturation(const MonomialIdeal& ideal, const PrincipalMultSet& mult) {
    check_tail_discipline(ideal);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.without_support_of(mult.s));
    std::vector<TailFamily> fams;
    for (auto f : ideal.families()) {
        f.base = f.base.without_support_of(mult.s);
        bool collapses = false;
        for (auto [v, e] : mult.s.exponents()) collapses = collapses || f.hits(v);
        if (collapses) gens.push_back(f.base);
        else fams.push_back(f);
    }
    return normalize(MonomialIdeal(std::move(gens), std::move(fams)));
}

struct Decision {
    enum class Verdict { certified, refuted, exhausted };
    Verdict verdict = Verdict::exhausted;
    std::uint64_t n = 0;                  // certified: I·s^n ⊆ <prefix> ⊆ I
    std::vector<Monomial> prefix;
    std::string reason;
    // refuted: for n = 0..5, an instance m of the offending family with m·s^n outside <prefix>
    std::vector<std::pair<std::uint64_t, Monomial>> witnesses;
    std::uint64_t budget = 0;
};

inline std::string to_string(Decision::Verdict v) {
    switch (v) {
        case Decision::Verdict::certified: return "certified";
        case Decision::Verdict::refuted: return "refuted";
        case Decision::Verdict::exhausted: return "exhausted";
    }
    return "?";
}

inline constexpr std::uint64_t default_budget = 8;
inline constexpr std::size_t max_prefix_length = 32;
inline constexpr std::uint64_t refutation_depth = 5;

namespace detail {

/// The first generator of I (finite ones first, then family instances by variable) dividing m.
inline std::optional<Monomial> divisor_in(const MonomialIdeal& ideal, const Monomial& m) {
    for (const auto& g : ideal.generators())
        if (g.divides(m)) return g;
    for (const auto& f : ideal.families()) {
        if (!f.base.divides(m)) continue;
        for (auto [v, e] : m.exponents())
            if (f.hits(v) && e >= f.e && f.base[v] == 0) return f.instance_at(v);
    }
    return std::nullopt;
}

inline bool divisible_by_any(const std::vector<Monomial>& gens, const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

}  // namespace detail

/// Is I S-finite, i.e. I·s^n ⊆ J ⊆ I for some n and finitely generated J?
/// A family base·x_v^e can be absorbed iff base lies in I : s^∞; that decides
/// the question exactly, and budget only bounds the size of the certificate.
inline Decision s_finite_decide(const MonomialIdeal& input, const PrincipalMultSet& mult, std::uint64_t budget = default_budget) {
    check_tail_discipline(input);
    const auto ideal = normalize(input);
    const auto sat = saturation(ideal, mult);
    Decision d;
    d.budget = budget;
    std::vector<Monomial> prefix = ideal.generators();
    std::uint64_t n = 0;
    std::optional<std::size_t> bad;
    for (std::size_t k = 0; k < ideal.families().size(); ++k) {
        const auto& f = ideal.families()[k];
        if (!member(sat, f.base)) {
            if (!bad) bad = k;
            continue;
        }
        std::uint64_t nf = 0;
        while (!member(ideal, f.base * mult.s.pow(nf))) {
            if (++nf > budget) break;
        }
        n = std::max(n, nf);
        if (nf <= budget) {
            auto g = *detail::divisor_in(ideal, f.base * mult.s.pow(nf));
            if (std::find(prefix.begin(), prefix.end(), g) == prefix.end()) prefix.push_back(g);
        }
    }
    if (bad) {
        const auto& f = ideal.families()[*bad];
        d.verdict = Decision::Verdict::refuted;
        d.reason = "family " + f.to_string() + ": no element of the ideal divides " + f.base.to_string() + "·s^n for any n";
        d.prefix = prefix;
        var fresh = std::max(mult.s.max_var(), f.start);
        for (const auto& g : prefix) fresh = std::max(fresh, g.max_var());
        var v = f.start;
        while (v <= fresh) v += f.step;
        for (std::uint64_t k = 0; k <= refutation_depth; ++k) {
            const auto m = f.instance_at(v);
            if (detail::divisible_by_any(prefix, m * mult.s.pow(k))) fail(errc::theorem_violation, "refutation witness is covered by the prefix");
            d.witnesses.push_back({k, m});
        }
        return d;
    }
    if (n > budget || prefix.size() > max_prefix_length) {
        d.verdict = Decision::Verdict::exhausted;
        d.n = n;
        d.reason = n > budget ? "needs s^n with n > " + std::to_string(budget) : "prefix longer than " + std::to_string(max_prefix_length);
        return d;
    }
    const MonomialIdeal j(prefix);
    if (!contains(j, scale(ideal, mult.s.pow(n))) || !contains(ideal, j)) fail(errc::theorem_violation, "S-finite certificate does not verify");
    d.verdict = Decision::Verdict::certified;
    d.n = n;
    d.prefix = std::move(prefix);
    return d;
}

/// T = finite set ∪ {tail_start + i·tail_step}, naming the prime p_T = <x_i : i ∈ T>.
struct VariablePattern {
    std::vector<var> finite;
    std::optional<var> tail_start;
    var tail_step = 1;

    bool contains(var v) const {
        if (std::find(finite.begin(), finite.end(), v) != finite.end()) return true;
        return tail_start && v >= *tail_start && (v - *tail_start) % tail_step == 0;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < finite.size(); ++i) out += (i ? "," : "") + std::to_string(finite[i]);
        if (tail_start) out += std::string(finite.empty() ? "" : ",") + "tail(" + std::to_string(*tail_start) + (tail_step == 1 ? "" : "," + std::to_string(tail_step)) + ")";
        return out + "}";
    }
};

inline MonomialIdeal prime_ideal(const VariablePattern& t) {
    if (t.finite.empty() && !t.tail_start) fail(errc::validation_error, "variable pattern is empty");
    if (t.tail_step == 0 || (t.tail_start && *t.tail_start == 0)) fail(errc::validation_error, "tail start and step must be positive");
    std::vector<Monomial> gens;
    for (auto v : t.finite) {
        if (v == 0) fail(errc::validation_error, "variable indices start at 1");
        gens.push_back(Monomial::variable(v));
    }
    std::vector<TailFamily> fams;
    if (t.tail_start) fams.push_back({Monomial::one(), *t.tail_start, t.tail_step, 1});
    return normalize(detail::repair_tails(std::move(gens), std::move(fams)));
}

enum class PrimeClass { K, Z };

inline std::string to_string(PrimeClass c) { return c == PrimeClass::K ? "K" : "Z"; }

/// p_T ∈ L(σ_S) iff some power of s lies in p_T iff supp(s) meets T.
inline PrimeClass classify_prime(const VariablePattern& t, const PrincipalMultSet& mult) {
    for (auto [v, e] : mult.s.exponents())
        if (t.contains(v)) return PrimeClass::Z;
    return PrimeClass::K;
}

struct CohenEntry {
    VariablePattern pattern;
    PrimeClass cls = PrimeClass::K;
    std::optional<Decision> decision;  // K-primes only
};

struct CohenReport {
    std::vector<CohenEntry> entries;
    std::vector<std::string> uncertified;  // K-primes lacking certificates
    bool refuted = false;                  // some K-prime refuted: not totally σ_S-noetherian
    // a non-prime ideal refuted independently, with x_v·x_v ∈ I, x_v ∉ I
    std::optional<MonomialIdeal> cross_check_ideal;
    std::optional<Decision> cross_check;
    std::optional<Monomial> non_prime_factor;
    std::string verdict;
};

inline CohenReport cohen_scan(const PrincipalMultSet& mult, const std::vector<VariablePattern>& primes, std::uint64_t budget = default_budget) {
    CohenReport r;
    std::optional<TailFamily> refuted_tail;
    for (const auto& t : primes) {
        CohenEntry e{t, classify_prime(t, mult), std::nullopt};
        if (e.cls == PrimeClass::K) {
            const auto p = prime_ideal(t);
            e.decision = s_finite_decide(p, mult, budget);
            if (e.decision->verdict != Decision::Verdict::certified) r.uncertified.push_back(t.to_string());
            if (e.decision->verdict == Decision::Verdict::refuted) {
                r.refuted = true;
                if (!refuted_tail) refuted_tail = p.families().front();
            }
        }
        r.entries.push_back(std::move(e));
    }
    if (refuted_tail) {
        // <x_v^2 : v in the same progression> is not prime and not S-finite either
        TailFamily sq{Monomial::one(), refuted_tail->start, refuted_tail->step, 2};
        r.cross_check_ideal = MonomialIdeal({}, {sq});
        r.cross_check = s_finite_decide(*r.cross_check_ideal, mult, budget);
        r.non_prime_factor = Monomial::variable(sq.start);
        r.verdict = r.cross_check->verdict == Decision::Verdict::refuted ? "not totally σ_S-noetherian" : "inconsistent";
    } else {
        r.verdict = r.uncertified.empty() ? "no refuted K-prime" : "undecided";
    }
    return r;
}

struct AlmostJansian {
    bool holds = false;
    std::optional<MonomialIdeal> witness;  // <s>, whose powers meet in 0
};

/// σ_S is almost jansian iff ∩ <s^n> ∈ L(σ_S); for s ≠ 1 that intersection is 0.
inline AlmostJansian almost_jansian_principal(const PrincipalMultSet& mult) {
    if (mult.s.is_one()) return {true, std::nullopt};
    return {false, MonomialIdeal({mult.s})};
}

}  // namespace gabriel::monomial
