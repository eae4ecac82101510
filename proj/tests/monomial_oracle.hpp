#pragma once

// Brute-force reference for monomial ideals, truncated at variable index 30.
// Families are expanded into explicit generator lists and membership is plain
// componentwise comparison of dense exponent vectors.

#include <array>
#include <cstdint>
#include <vector>

#include "gabriel/monomial.hpp"

namespace oracle {

inline constexpr unsigned max_var = 30;
inline constexpr unsigned max_degree = 10;

using dense = std::array<unsigned, max_var + 1>;  // index 0 unused

inline dense to_dense(const gabriel::monomial::Monomial& m) {
    dense d{};
    for (auto [v, e] : m.exponents())
        if (v <= max_var) d[v] = e;
    return d;
}

inline bool fits(const gabriel::monomial::Monomial& m) { return m.max_var() <= max_var; }

inline bool divides(const dense& a, const dense& b) {
    for (unsigned v = 1; v <= max_var; ++v)
        if (a[v] > b[v]) return false;
    return true;
}

inline dense times(dense a, const dense& b) {
    for (unsigned v = 1; v <= max_var; ++v) a[v] += b[v];
    return a;
}

inline dense power(const dense& a, unsigned n) {
    dense out{};
    for (unsigned v = 1; v <= max_var; ++v) out[v] = a[v] * n;
    return out;
}

/// Generators of I whose variables all lie in 1..30.
inline std::vector<dense> expand(const gabriel::monomial::MonomialIdeal& ideal) {
    std::vector<dense> out;
    for (const auto& g : ideal.generators())
        if (fits(g)) out.push_back(to_dense(g));
    for (const auto& f : ideal.families()) {
        if (!fits(f.base)) continue;
        for (std::uint64_t v = f.start; v <= max_var; v += f.step) {
            dense d = to_dense(f.base);
            d[v] += f.e;
            out.push_back(d);
        }
    }
    return out;
}

inline bool member(const std::vector<dense>& gens, const dense& m) {
    for (const auto& g : gens)
        if (divides(g, m)) return true;
    return false;
}

inline bool contains(const std::vector<dense>& big, const std::vector<dense>& small) {
    for (const auto& g : small)
        if (!member(big, g)) return false;
    return true;
}

inline bool in_saturation(const std::vector<dense>& gens, const dense& m, const dense& s) {
    for (unsigned n = 0; n <= max_degree; ++n)
        if (member(gens, times(m, power(s, n)))) return true;
    return false;
}

}  // namespace oracle
