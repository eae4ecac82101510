#pragma once

#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gabriel/catalogue.hpp"
#include "gabriel/monomial.hpp"
#include "gabriel/noether.hpp"
#include "gabriel/suite.hpp"

namespace gabriel::workbench {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_name = "gabriel";
inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* report_schema = "gabriel-report/1";
inline constexpr const char* spec_schema = "gabriel-spec/1";

enum class Task { enumerate, partition, closure, certify, suite, census, monomial_decide };

inline std::string to_string(Task t) {
    switch (t) {
        case Task::enumerate: return "enumerate";
        case Task::partition: return "partition";
        case Task::closure: return "closure";
        case Task::certify: return "certify";
        case Task::suite: return "suite";
        case Task::census: return "census";
        case Task::monomial_decide: return "monomial-decide";
    }
    return "?";
}

/// CLI subcommand name to task.
inline Task task_for_command(const std::string& cmd) {
    if (cmd == "inspect") return Task::enumerate;
    if (cmd == "monomial") return Task::monomial_decide;
    for (auto t : {Task::partition, Task::closure, Task::certify, Task::suite, Task::census})
        if (to_string(t) == cmd) return t;
    fail(errc::validation_error, "unknown command " + cmd);
}

struct Options {
    std::size_t cap = default_size_cap;
    std::uint64_t budget = monomial::default_budget;
    bool expect_pass = false;
    bool timing = false;
};

/// Parses a spec document; syntax errors carry line and column.
inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto p = msg.find("; "); p != std::string::npos) msg = msg.substr(p + 2);
        fail(errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
}

namespace detail {

[[noreturn]] inline void invalid(const std::string& path, const std::string& what) { fail(errc::validation_error, (path.empty() ? "/" : path) + ": " + what); }

inline void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed, std::initializer_list<const char*> required = {}) {
    if (!j.is_object()) invalid(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) invalid(path, "unknown key \"" + k + "\"");
    }
    for (const char* r : required)
        if (!j.contains(r)) invalid(path, "missing key \"" + std::string(r) + "\"");
}

inline std::int64_t integer(const json& j, const std::string& path, std::int64_t lo = 0) {
    if (!j.is_number_integer()) invalid(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < lo) invalid(path, "expected an integer ≥ " + std::to_string(lo));
    return v;
}

inline const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) invalid(path, "expected an array");
    return j;
}

inline std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

}  // namespace detail

// ---- input grammar ----------------------------------------------------------

inline RingTerm parse_ring(const json& j, const std::string& path = "/ring") {
    using namespace detail;
    if (!j.is_object() || j.size() != 1) invalid(path, "a ring term is an object with exactly one of zmod, product, polyquot, square_zero");
    const auto& [kind, body] = *j.items().begin();
    const auto p = at(path, kind);
    if (kind == "zmod") return RingTerm::zmod(integer(body, p, 2));
    if (kind == "product") {
        std::vector<RingTerm> fs;
        for (std::size_t i = 0; i < array(body, p).size(); ++i) fs.push_back(parse_ring(body[i], at(p, i)));
        if (fs.size() < 2) invalid(p, "a product needs at least two factors");
        return RingTerm::product(std::move(fs));
    }
    if (kind == "polyquot") {
        require_keys(body, p, {"p", "f"}, {"p", "f"});
        std::vector<std::int64_t> f;
        for (std::size_t i = 0; i < array(body["f"], at(p, "f")).size(); ++i) f.push_back(integer(body["f"][i], at(at(p, "f"), i)));
        return RingTerm::polyquot(integer(body["p"], at(p, "p"), 2), std::move(f));
    }
    if (kind == "square_zero") {
        require_keys(body, p, {"p", "vars"}, {"p", "vars"});
        return RingTerm::square_zero(integer(body["p"], at(p, "p"), 2), integer(body["vars"], at(p, "vars"), 1));
    }
    invalid(path, "unknown ring constructor \"" + kind + "\"");
}

inline element parse_element(const json& j, const FiniteRing& r, const std::string& path) {
    const auto v = detail::integer(j, path);
    if (static_cast<std::size_t>(v) >= r.size()) detail::invalid(path, std::to_string(v) + " is not an element of " + r.name());
    return static_cast<element>(v);
}

inline std::vector<element> parse_elements(const json& j, const FiniteRing& r, const std::string& path) {
    std::vector<element> out;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) out.push_back(parse_element(j[i], r, detail::at(path, i)));
    return out;
}

inline Ideal parse_ideal_gens(const json& j, const RingPtr& r, const std::string& path) { return ideal_from_generators(r, parse_elements(j, *r, path)); }

inline GabrielFilter parse_filter(const json& j, const IdealLatticePtr& lp, const std::string& path = "/filter") {
    using namespace detail;
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "lambda") return lambda_filter(lp);
        if (s == "trivial") return trivial_filter(lp);
        if (s == "improper") return improper_filter(lp);
        invalid(path, "unknown filter \"" + s + "\"");
    }
    if (!j.is_object() || j.size() != 1) invalid(path, "a filter is \"lambda\", \"trivial\", \"improper\" or an object with one of mult_set, prime_complement, seeds");
    const auto& [kind, body] = *j.items().begin();
    const auto p = at(path, kind);
    const auto& ring = lp->ring_ptr();
    if (kind == "mult_set") return filter_from_mult_set(lp, parse_elements(body, *ring, p));
    if (kind == "prime_complement") {
        require_keys(body, p, {"ideal_gens"}, {"ideal_gens"});
        return filter_from_prime(lp, parse_ideal_gens(body["ideal_gens"], ring, at(p, "ideal_gens")));
    }
    if (kind == "seeds") {
        std::vector<Ideal> seeds;
        for (std::size_t i = 0; i < array(body, p).size(); ++i) seeds.push_back(parse_ideal_gens(body[i], ring, at(p, i)));
        return gabriel_closure(lp, seeds);
    }
    invalid(path, "unknown filter kind \"" + kind + "\"");
}

/// A vector of A^k: an integer when k = 1, otherwise an array of k coordinates.
inline element parse_vector(const json& j, const FreeModule& a, const std::string& path) {
    if (a.rank() == 1 && j.is_number_integer()) return parse_element(j, *a.ring(), path);
    std::vector<element> c;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) c.push_back(parse_element(j[i], *a.ring(), detail::at(path, i)));
    if (c.size() != a.rank()) detail::invalid(path, "expected " + std::to_string(a.rank()) + " coordinates");
    return a.from_coordinates(c);
}

inline std::vector<element> parse_vectors(const json& j, const FreeModule& a, const std::string& path) {
    std::vector<element> out;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) out.push_back(parse_vector(j[i], a, detail::at(path, i)));
    return out;
}

/// {"rank": k, "carrier": [...], "relations": [...]}; defaults A^1, whole, zero.
inline FiniteModule parse_module(const json* j, const RingPtr& ring, const std::string& path) {
    if (!j) return FiniteModule::free(ring, 1);
    detail::require_keys(*j, path, {"rank", "carrier", "relations"});
    const auto rank = j->contains("rank") ? detail::integer((*j)["rank"], detail::at(path, "rank"), 1) : 1;
    if (rank > 4) detail::invalid(detail::at(path, "rank"), "rank above 4 is not supported");
    auto a = std::make_shared<const FreeModule>(ring, static_cast<unsigned>(rank));
    const auto carrier = j->contains("carrier") ? a->span(parse_vectors((*j)["carrier"], *a, detail::at(path, "carrier"))) : a->whole();
    const auto relations = j->contains("relations") ? a->span(parse_vectors((*j)["relations"], *a, detail::at(path, "relations"))) : a->zero_submodule();
    return FiniteModule(a, carrier, relations);
}

inline monomial::Monomial parse_monomial(const json& j, const std::string& path) {
    detail::require_keys(j, path, {"vars"}, {"vars"});
    const auto& vars = j["vars"];
    if (!vars.is_object()) detail::invalid(detail::at(path, "vars"), "expected an object mapping variable index to exponent");
    std::map<monomial::var, monomial::exponent> exps;
    for (const auto& [k, v] : vars.items()) {
        const auto p = detail::at(detail::at(path, "vars"), k);
        monomial::var idx = 0;
        std::size_t used = 0;
        try {
            idx = std::stoull(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != k.size() || k.empty() || k[0] == '0' || idx == 0) detail::invalid(p, "variable index must be a positive integer");
        exps[idx] = static_cast<monomial::exponent>(detail::integer(v, p, 1));
    }
    return monomial::Monomial(std::move(exps));
}

inline monomial::MonomialIdeal parse_monomial_ideal(const json& j, const std::string& path) {
    using namespace detail;
    require_keys(j, path, {"gens", "families"});
    std::vector<monomial::Monomial> gens;
    if (j.contains("gens"))
        for (std::size_t i = 0; i < array(j["gens"], at(path, "gens")).size(); ++i) gens.push_back(parse_monomial(j["gens"][i], at(at(path, "gens"), i)));
    std::vector<monomial::TailFamily> fams;
    if (j.contains("families"))
        for (std::size_t i = 0; i < array(j["families"], at(path, "families")).size(); ++i) {
            const auto& f = j["families"][i];
            const auto p = at(at(path, "families"), i);
            require_keys(f, p, {"base", "start", "step", "e"}, {"start"});
            fams.push_back({f.contains("base") ? parse_monomial(f["base"], at(p, "base")) : monomial::Monomial(),
                            static_cast<monomial::var>(integer(f["start"], at(p, "start"), 1)),
                            f.contains("step") ? static_cast<monomial::var>(integer(f["step"], at(p, "step"), 1)) : 1,
                            f.contains("e") ? static_cast<monomial::exponent>(integer(f["e"], at(p, "e"), 1)) : 1});
        }
    return monomial::MonomialIdeal(std::move(gens), std::move(fams));
}

inline monomial::PrincipalMultSet parse_mult_set(const json& j, const std::string& path) {
    detail::require_keys(j, path, {"s"}, {"s"});
    return {parse_monomial(j["s"], detail::at(path, "s"))};
}

/// {"vars": [1, 3], "tail": {"start": 2, "step": 1}}
inline monomial::VariablePattern parse_pattern(const json& j, const std::string& path) {
    using namespace detail;
    require_keys(j, path, {"vars", "tail"});
    monomial::VariablePattern t;
    if (j.contains("vars"))
        for (std::size_t i = 0; i < array(j["vars"], at(path, "vars")).size(); ++i)
            t.finite.push_back(static_cast<monomial::var>(integer(j["vars"][i], at(at(path, "vars"), i), 1)));
    if (j.contains("tail")) {
        const auto p = at(path, "tail");
        require_keys(j["tail"], p, {"start", "step"}, {"start"});
        t.tail_start = static_cast<monomial::var>(integer(j["tail"]["start"], at(p, "start"), 1));
        if (j["tail"].contains("step")) t.tail_step = static_cast<monomial::var>(integer(j["tail"]["step"], at(p, "step"), 1));
    }
    if (t.finite.empty() && !t.tail_start) invalid(path, "pattern names no variables");
    return t;
}

// ---- output helpers ---------------------------------------------------------

inline json vector_json(const FreeModule& a, element x) {
    if (a.rank() == 1) return x;
    json out = json::array();
    for (auto c : a.coordinates(x)) out.push_back(c);
    return out;
}

inline json generators_json(const FreeModule& a, const std::vector<element>& gens) {
    json out = json::array();
    for (auto g : gens) out.push_back(vector_json(a, g));
    return out;
}

inline json submodule_json(const FreeModule& a, const ElementSet& s) {
    return {{"generators", generators_json(a, a.greedy_generators(s))}, {"size", s.size()}};
}

inline json ideals_json(const std::vector<Ideal>& v) {
    json out = json::array();
    for (const auto& i : v) out.push_back(i.to_string());
    return out;
}

inline json filter_json(const GabrielFilter& f) {
    const auto& l = f.lattice();
    json members = json::array(), basis = json::array();
    for (auto m : f.members()) members.push_back(l[m].to_string());
    for (auto b : f.basis()) basis.push_back(l[b].to_string());
    return {{"members", members}, {"basis", basis}};
}

inline json monomials_json(const std::vector<monomial::Monomial>& v) {
    json out = json::array();
    for (const auto& m : v) out.push_back(m.to_string());
    return out;
}

inline json decision_json(const monomial::Decision& d) {
    json out{{"verdict", monomial::to_string(d.verdict)}, {"budget", d.budget}};
    if (d.verdict == monomial::Decision::Verdict::certified) {
        out["n"] = d.n;
        out["prefix"] = monomials_json(d.prefix);
    } else {
        out["reason"] = d.reason;
        if (d.verdict == monomial::Decision::Verdict::refuted) {
            out["prefix"] = monomials_json(d.prefix);
            json w = json::array();
            for (const auto& [n, m] : d.witnesses) w.push_back({{"n", n}, {"instance", m.to_string()}});
            out["witnesses"] = w;
        }
    }
    return out;
}

// ---- execution --------------------------------------------------------------

struct Outcome {
    json report;
    int exit_code = 0;
};

namespace detail {

struct Context {
    const json& spec;
    const Options& opts;
    json results = json::object();
    json counterexamples = json::array();
    bool failed = false;  // counterexample, or refuted/exhausted under --expect-pass

    const json* find(const char* key) const { return spec.contains(key) ? &spec[key] : nullptr; }
    const json& params() const {
        static const json empty = json::object();
        return spec.contains("params") ? spec["params"] : empty;
    }
    const json* param(const char* key) const { return params().contains(key) ? &params()[key] : nullptr; }
    std::string string_param(const char* key, const char* fallback) const {
        const auto* p = param(key);
        if (!p) return fallback;
        if (!p->is_string()) invalid(std::string("/params/") + key, "expected a string");
        return p->get<std::string>();
    }

    RingPtr ring() const {
        if (!find("ring")) invalid("", "missing key \"ring\"");
        return build_ring(parse_ring(spec["ring"]), opts.cap);
    }
    GabrielFilter filter(const IdealLatticePtr& lp) const {
        if (!find("filter")) invalid("", "missing key \"filter\"");
        return parse_filter(spec["filter"], lp);
    }
};

inline void run_enumerate(Context& c) {
    require_keys(c.params(), "/params", {});
    const auto r = c.ring();
    const auto lp = make_ideal_lattice(r);
    std::size_t units = 0;
    for (element a = 0; a < r->size(); ++a) units += r->is_unit(a) ? 1 : 0;
    std::vector<Ideal> primes;
    for (auto p : lp->primes()) primes.push_back((*lp)[p]);
    json factors = json::array();
    for (const auto& f : local_decomposition(r))
        factors.push_back({{"ring", f.projection.target->name()}, {"size", f.projection.target->size()}, {"idempotent", f.idempotent}, {"prime", f.prime.to_string()}});
    const auto axioms = check_ring_axioms(*r);
    c.results = {{"ring", r->name()},       {"size", r->size()},          {"units", units},
                 {"ideals", ideals_json(lp->ideals())}, {"primes", ideals_json(primes)}, {"local_factors", factors},
                 {"axioms", axioms.empty() ? "ok" : axioms}};
    if (!axioms.empty()) c.failed = true;
    if (c.find("filter")) {
        const auto f = c.filter(lp);
        json fj = filter_json(f);
        const auto j = jansian_status(f);
        fj["jansian"] = j.is_jansian;
        if (j.idempotent) fj["idempotent"] = *j.idempotent;
        fj["almost_jansian"] = j.is_almost_jansian;
        c.results["filter"] = fj;
    }
}

inline void run_partition(Context& c) {
    require_keys(c.params(), "/params", {});
    const auto lp = make_ideal_lattice(c.ring());
    const auto f = c.filter(lp);
    const auto part = spec_partition(f);
    std::vector<GabrielFilter> fs;
    for (const auto& p : part.K) fs.push_back(filter_from_prime(lp, p));
    const bool meet = (fs.empty() ? improper_filter(lp) : meet_filters(fs)) == f;
    c.results = {{"ring", lp->ring().name()}, {"filter", filter_json(f)}, {"K", ideals_json(part.K)},
                 {"Z", ideals_json(part.Z)},  {"C", ideals_json(part.C)}, {"meet_decomposition", meet}};
    if (!meet) {
        c.failed = true;
        c.counterexamples.push_back({{"theorem", "meet_decomposition"}, {"instance", f.to_string()}});
    }
}

inline void run_closure(Context& c) {
    require_keys(c.params(), "/params", {"module", "submodule"}, {"submodule"});
    const auto r = c.ring();
    const auto lp = make_ideal_lattice(r);
    const auto f = c.filter(lp);
    const auto m = parse_module(c.param("module"), r, "/params/module");
    const auto n = m.submodule(parse_vectors(c.params()["submodule"], m.ambient(), "/params/submodule"));
    const auto& a = m.ambient();
    const auto tt = is_totally_torsion(m, f);
    c.results = {{"ring", r->name()},
                 {"filter", filter_json(f)},
                 {"module", {{"rank", m.rank()}, {"size", m.size()}}},
                 {"submodule", submodule_json(a, n)},
                 {"closure", submodule_json(a, closure(m, n, f))},
                 {"torsion", submodule_json(a, torsion_submodule(m, f))},
                 {"dense", is_dense(m, n, f)},
                 {"closed", is_closed(m, n, f)},
                 {"totally_torsion", {{"holds", tt.holds}, {"annihilator", tt.annihilator.to_string()}}}};
}

inline void run_certify(Context& c) {
    require_keys(c.params(), "/params", {"check", "module", "submodule", "chain", "family"});
    const auto r = c.ring();
    const auto lp = make_ideal_lattice(r);
    const auto f = c.filter(lp);
    const auto m = parse_module(c.param("module"), r, "/params/module");
    const auto& a = m.ambient();
    const std::string check = c.string_param("check", "tfg");
    auto sub = [&](const json& j, const std::string& path) { return m.submodule(parse_vectors(j, a, path)); };
    auto need = [&](const char* key) -> const json& {
        if (!c.param(key)) invalid("/params", "check \"" + check + "\" needs \"" + key + "\"");
        return c.params()[key];
    };
    c.results = {{"ring", r->name()}, {"filter", filter_json(f)}, {"check", check}};
    if (check == "tfg") {
        const auto n = sub(need("submodule"), "/params/submodule");
        const auto cert = tfg_certificate(m, n, f);
        const auto v = verify_certificate(m, n, f, cert);
        c.results["certificate"] = {{"kind", to_string(cert.kind)}, {"generators", generators_json(a, cert.generators)}, {"h", cert.h.to_string()}, {"verified", v.ok}};
        if (!v.ok) {
            c.failed = true;
            c.counterexamples.push_back({{"theorem", "tfg"}, {"instance", v.reason}});
        }
    } else if (check == "closure_colon") {
        const auto n = sub(need("submodule"), "/params/submodule");
        c.results["h"] = closure_colon_witness(m, n, f).to_string();
        c.results["closure"] = submodule_json(a, closure(m, n, f));
    } else if (check == "sigma_principal") {
        if (m.rank() != 1) invalid("/params/module", "sigma_principal applies to ideals");
        const auto n = sub(need("submodule"), "/params/submodule");
        const auto st = sigma_principal_status(Ideal(r, n), f);
        c.results["sigma_principal"] = st.sigma_principal;
        if (st.witness) c.results["witness"] = *st.witness;
        c.results["totally_principal"] = st.totally_principal.has_value();
        if (st.totally_principal)
            c.results["certificate"] = {{"kind", to_string(st.totally_principal->kind)},
                                        {"generators", generators_json(a, st.totally_principal->generators)},
                                        {"h", st.totally_principal->h.to_string()}};
    } else if (check == "chain_stability") {
        const auto& j = array(need("chain"), "/params/chain");
        std::vector<ElementSet> chain;
        for (std::size_t i = 0; i < j.size(); ++i) chain.push_back(sub(j[i], at("/params/chain", i)));
        const auto st = chain_stability(m, chain, f);
        c.results["stable_index"] = st.stable_index;
        c.results["h"] = st.h.to_string();
    } else if (check == "sigma_maximal") {
        const auto& j = array(need("family"), "/params/family");
        std::vector<ElementSet> fam;
        for (std::size_t i = 0; i < j.size(); ++i) fam.push_back(sub(j[i], at("/params/family", i)));
        json out = json::array();
        for (const auto& s : sigma_maximal(m, fam, f)) out.push_back({{"submodule", submodule_json(a, s.n)}, {"h", s.h.to_string()}});
        c.results["sigma_maximal"] = out;
    } else {
        invalid("/params/check", "unknown check \"" + check + "\"");
    }
}

inline json theorem_json(const TheoremResult& t) {
    json out{{"name", t.name}, {"instances_checked", t.instances_checked}, {"passed", t.passed}};
    if (t.counterexample) out["counterexample"] = *t.counterexample;
    return out;
}

inline void run_suite(Context& c) {
    require_keys(c.params(), "/params", {"sweep", "theorems", "rank2_chain_length", "include_rank2"});
    SuiteOptions so;
    if (const auto* t = c.param("theorems"))
        for (std::size_t i = 0; i < array(*t, "/params/theorems").size(); ++i) {
            const auto p = at("/params/theorems", i);
            if (!(*t)[i].is_string()) invalid(p, "expected a theorem name");
            const auto name = (*t)[i].get<std::string>();
            if (std::find(theorem_names().begin(), theorem_names().end(), name) == theorem_names().end()) invalid(p, "unknown theorem \"" + name + "\"");
            so.theorems.push_back(name);
        }
    if (const auto* l = c.param("rank2_chain_length")) so.rank2_chain_length = static_cast<std::size_t>(integer(*l, "/params/rank2_chain_length", 1));
    if (const auto* b = c.param("include_rank2")) {
        if (!b->is_boolean()) invalid("/params/include_rank2", "expected a boolean");
        so.include_rank2 = b->get<bool>();
    }
    std::vector<RingPtr> rings;
    if (const auto* sw = c.param("sweep")) {
        require_keys(*sw, "/params/sweep", {"max_size"}, {"max_size"});
        if (c.find("ring") || c.find("filter")) invalid("/params/sweep", "a sweep replaces \"ring\" and \"filter\"");
        const auto max = static_cast<std::size_t>(integer((*sw)["max_size"], "/params/sweep/max_size", 2));
        if (max > suite_size_cap) fail(errc::size_cap_exceeded, "sweep size " + std::to_string(max) + " exceeds the theorem-suite cap of " + std::to_string(suite_size_cap));
        for (const auto& t : ring_catalogue(std::min(max, c.opts.cap))) rings.push_back(build_ring(t, c.opts.cap));
    } else {
        rings.push_back(c.ring());
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> totals;
    json rj = json::array();
    for (const auto& r : rings) {
        RingSuite suite(r, so);
        std::vector<GabrielFilter> filters;
        if (c.find("filter")) filters.push_back(c.filter(suite.ideals()));
        else filters = suite.filters();
        json fj = json::array();
        for (const auto& f : filters) {
            json th = json::array();
            for (const auto& t : suite.run(f)) {
                th.push_back(theorem_json(t));
                totals[t.name].first += t.instances_checked;
                totals[t.name].second += t.passed;
                if (!t.ok()) {
                    c.failed = true;
                    c.counterexamples.push_back({{"ring", r->name()}, {"filter", f.to_string()}, {"theorem", t.name}, {"instance", t.counterexample.value_or("")}});
                }
            }
            fj.push_back({{"filter", f.to_string()}, {"theorems", th}});
        }
        rj.push_back({{"ring", r->name()}, {"filters", fj}});
    }
    json summary = json::array();
    for (const auto& name : theorem_names())
        if (auto it = totals.find(name); it != totals.end()) summary.push_back({{"name", name}, {"instances_checked", it->second.first}, {"passed", it->second.second}});
    c.results = {{"rings", rj}, {"summary", summary}};
}

inline void run_census(Context& c) {
    require_keys(c.params(), "/params", {});
    const auto lp = make_ideal_lattice(c.ring());
    const auto filters = all_gabriel_filters(lp);
    json fj = json::array();
    for (const auto& f : filters) {
        json j = filter_json(f);
        const auto js = jansian_status(f);
        if (js.idempotent) j["idempotent"] = *js.idempotent;
        fj.push_back(j);
    }
    std::size_t primes = lp->primes().size();
    c.results = {{"ring", lp->ring().name()}, {"ideals", lp->size()}, {"primes", primes}, {"gabriel_filters", filters.size()}, {"filters", fj}};
}

inline void run_monomial(Context& c) {
    if (c.find("ring") || c.find("filter")) invalid("", "monomial tasks take no \"ring\" or \"filter\"");
    require_keys(c.params(), "/params", {"op", "ideal", "other", "mult_set", "monomial", "pattern", "primes"});
    const std::string op = c.string_param("op", "decide");
    auto need = [&](const char* key) -> const json& {
        if (!c.param(key)) invalid("/params", "op \"" + op + "\" needs \"" + key + "\"");
        return c.params()[key];
    };
    auto ideal = [&]() { return monomial::normalize(parse_monomial_ideal(need("ideal"), "/params/ideal")); };
    auto mult = [&]() { return parse_mult_set(need("mult_set"), "/params/mult_set"); };
    c.results = {{"op", op}};
    if (op == "decide") {
        const auto i = ideal();
        const auto d = monomial::s_finite_decide(i, mult(), c.opts.budget);
        c.results["ideal"] = i.to_string();
        c.results["decision"] = decision_json(d);
        if (d.verdict != monomial::Decision::Verdict::certified && c.opts.expect_pass) c.failed = true;
    } else if (op == "saturation") {
        const auto i = ideal();
        c.results["ideal"] = i.to_string();
        c.results["saturation"] = monomial::saturation(i, mult()).to_string();
    } else if (op == "member") {
        const auto i = ideal();
        const auto m = parse_monomial(need("monomial"), "/params/monomial");
        c.results["ideal"] = i.to_string();
        c.results["monomial"] = m.to_string();
        c.results["member"] = monomial::member(i, m);
    } else if (op == "contains") {
        const auto i = ideal();
        const auto j = parse_monomial_ideal(need("other"), "/params/other");
        c.results["ideal"] = i.to_string();
        c.results["other"] = j.to_string();
        c.results["contains"] = monomial::contains(i, j);
    } else if (op == "in_filter") {
        const auto i = ideal();
        const auto n = monomial::in_filter(i, mult());
        c.results["ideal"] = i.to_string();
        c.results["in_filter"] = n.has_value();
        if (n) c.results["n"] = *n;
    } else if (op == "classify") {
        const auto t = parse_pattern(need("pattern"), "/params/pattern");
        const auto s = mult();
        c.results["pattern"] = t.to_string();
        c.results["prime"] = monomial::prime_ideal(t).to_string();
        c.results["class"] = monomial::to_string(monomial::classify_prime(t, s));
    } else if (op == "cohen") {
        const auto& pj = array(need("primes"), "/params/primes");
        std::vector<monomial::VariablePattern> ps;
        for (std::size_t i = 0; i < pj.size(); ++i) ps.push_back(parse_pattern(pj[i], at("/params/primes", i)));
        const auto rep = monomial::cohen_scan(mult(), ps, c.opts.budget);
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json ej{{"pattern", e.pattern.to_string()}, {"class", monomial::to_string(e.cls)}};
            if (e.decision) ej["decision"] = decision_json(*e.decision);
            entries.push_back(ej);
        }
        c.results["primes"] = entries;
        c.results["uncertified"] = rep.uncertified;
        if (rep.cross_check) {
            c.results["cross_check"] = {{"ideal", rep.cross_check_ideal->to_string()},
                                        {"non_prime_witness", rep.non_prime_factor->to_string() + "*" + rep.non_prime_factor->to_string()},
                                        {"decision", decision_json(*rep.cross_check)}};
        }
        c.results["verdict"] = rep.verdict;
        if (rep.verdict == "inconsistent") {
            c.failed = true;
            c.counterexamples.push_back({{"theorem", "cohen"}, {"instance", "cross-check ideal was not refuted"}});
        } else if (!rep.uncertified.empty() && c.opts.expect_pass) {
            c.failed = true;
        }
    } else if (op == "almost_jansian") {
        const auto a = monomial::almost_jansian_principal(mult());
        c.results["almost_jansian"] = a.holds;
        if (a.witness) c.results["witness"] = a.witness->to_string();
    } else {
        invalid("/params/op", "unknown op \"" + op + "\"");
    }
}

}  // namespace detail

/// Validates the spec against the task and runs it. Input errors propagate as
/// gabriel::error; the caller maps them to exit code 2.
inline Outcome execute(const json& spec, Task task, const Options& opts) {
    detail::require_keys(spec, "", {"schema", "ring", "filter", "task", "params", "format"});
    if (spec.contains("schema") && spec["schema"] != spec_schema) detail::invalid("/schema", std::string("expected \"") + spec_schema + "\"");
    if (spec.contains("task")) {
        if (!spec["task"].is_string() || spec["task"].get<std::string>() != to_string(task))
            detail::invalid("/task", "spec names a different task than the command (" + to_string(task) + ")");
    }
    if (spec.contains("format") && !(spec["format"] == "text" || spec["format"] == "json")) detail::invalid("/format", "expected \"text\" or \"json\"");
    if (spec.contains("params") && !spec["params"].is_object()) detail::invalid("/params", "expected an object");
    const auto t0 = std::chrono::steady_clock::now();
    detail::Context c{spec, opts};
    try {
        switch (task) {
            case Task::enumerate: detail::run_enumerate(c); break;
            case Task::partition: detail::run_partition(c); break;
            case Task::closure: detail::run_closure(c); break;
            case Task::certify: detail::run_certify(c); break;
            case Task::suite: detail::run_suite(c); break;
            case Task::census: detail::run_census(c); break;
            case Task::monomial_decide: detail::run_monomial(c); break;
        }
    } catch (const json::exception& e) {
        // a value of the wrong JSON type somewhere the parsers read it directly
        fail(errc::validation_error, e.what());
    }
    Outcome out;
    out.report = {{"tool", tool_name}, {"version", tool_version}, {"schema", report_schema}, {"task", to_string(task)}, {"spec", spec},
                  {"status", c.failed ? "fail" : "pass"}, {"results", std::move(c.results)}, {"counterexamples", std::move(c.counterexamples)}};
    if (opts.timing) out.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    out.exit_code = c.failed ? 1 : 0;
    return out;
}

/// Report for an input or runtime error.
inline json error_report(const error& e, const std::string& task) {
    return {{"tool", tool_name}, {"version", tool_version}, {"schema", report_schema}, {"task", task}, {"status", "error"},
            {"error", {{"kind", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

inline int exit_code_for(const error& e) { return e.code() == errc::theorem_violation ? 1 : 2; }

namespace detail {

inline void render(std::ostringstream& out, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        for (const auto& x : v)
            if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); }))) return false;
        return true;
    };
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            out << pad << k << ":\n";
            render(out, v, indent + 1);
        } else if (v.is_array() && v.empty()) {
            out << pad << k << ": none\n";
        } else if (v.is_array() && flat(v)) {
            out << pad << k << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
            out << "\n";
        } else if (v.is_array()) {
            out << pad << k << ":\n";
            for (const auto& x : v) {
                if (x.is_object() && flat(x)) {
                    out << pad << "  -";
                    bool first = true;
                    for (const auto& [xk, xv] : x.items()) {
                        out << (first ? " " : ", ") << xk << ": ";
                        if (xv.is_array()) {
                            for (std::size_t i = 0; i < xv.size(); ++i) out << (i ? " " : "") << scalar(xv[i]);
                        } else {
                            out << scalar(xv);
                        }
                        first = false;
                    }
                    out << "\n";
                } else if (x.is_object()) {
                    out << pad << "  -\n";
                    render(out, x, indent + 2);
                } else {
                    out << pad << "  - " << scalar(x) << "\n";
                }
            }
        } else {
            out << pad << k << ": " << scalar(v) << "\n";
        }
    }
}

}  // namespace detail

/// Indented plain-text rendering of a report, without the spec echo.
inline std::string render_text(const json& report) {
    std::ostringstream out;
    json body = report;
    body.erase("spec");
    detail::render(out, body, 0);
    return out.str();
}

}  // namespace gabriel::workbench
