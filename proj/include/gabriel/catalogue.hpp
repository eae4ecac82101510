#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gabriel/ring.hpp"

namespace gabriel {

namespace detail {

using poly = std::vector<std::int64_t>;  // low-to-high coefficients over F_p

inline poly poly_mul(const poly& a, const poly& b, std::int64_t p) {
    poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

/// Remainder of a modulo a monic b.
inline poly poly_mod(poly a, const poly& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
        a.pop_back();
    }
    return a;
}

inline std::vector<poly> monic_polys(std::int64_t p, std::size_t degree) {
    std::vector<poly> out;
    std::size_t count = 1;
    for (std::size_t i = 0; i < degree; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t k = 0; k < count; ++k) {
        poly f(degree + 1, 0);
        std::size_t x = k;
        for (std::size_t i = 0; i < degree; ++i, x /= static_cast<std::size_t>(p)) f[i] = static_cast<std::int64_t>(x % static_cast<std::size_t>(p));
        f[degree] = 1;
        out.push_back(f);
    }
    return out;
}

inline bool irreducible(const poly& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t e = 1; 2 * e <= d; ++e)
        for (const auto& g : monic_polys(p, e)) {
            auto r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
        }
    return true;
}

}  // namespace detail

/// Local rings expressible in the term grammar with at most max_size elements,
/// one per isomorphism type: Z/p^k, F_p[x]/(g^k) with g the first monic
/// irreducible of its degree, and F_p[x1..xd]/(x)^2 for d ≥ 2.
inline std::vector<RingTerm> local_atoms(std::size_t max_size) {
    std::vector<std::pair<std::size_t, RingTerm>> out;
    for (std::int64_t p = 2; static_cast<std::size_t>(p) <= max_size; ++p) {
        if (!is_prime_number(p)) continue;
        for (std::size_t q = static_cast<std::size_t>(p); q <= max_size; q *= static_cast<std::size_t>(p)) out.push_back({q, RingTerm::zmod(static_cast<std::int64_t>(q))});
        for (std::size_t d = 1; ; ++d) {
            std::size_t field = 1;
            for (std::size_t i = 0; i < d; ++i) field *= static_cast<std::size_t>(p);
            if (field > max_size) break;
            detail::poly g;
            for (const auto& f : detail::monic_polys(p, d))
                if (detail::irreducible(f, p)) {
                    g = f;
                    break;
                }
            detail::poly f = g;
            for (std::size_t k = 1, size = field; size <= max_size; ++k, size *= field) {
                if (d > 1 || k > 1) out.push_back({size, RingTerm::polyquot(p, f)});
                f = detail::poly_mul(f, g, p);
            }
        }
        for (std::int64_t vars = 2;; ++vars) {
            std::size_t size = 1;
            for (std::int64_t i = 0; i <= vars; ++i) size *= static_cast<std::size_t>(p);
            if (size > max_size) break;
            out.push_back({size, RingTerm::square_zero(p, vars)});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RingTerm> terms;
    for (auto& [s, t] : out) terms.push_back(std::move(t));
    return terms;
}

/// Every product of local atoms with at most max_size elements, sorted by size
/// then by name. A product of cyclic rings of coprime orders is written as one Z/n.
inline std::vector<RingTerm> ring_catalogue(std::size_t max_size) {
    const auto atoms = local_atoms(max_size);
    std::vector<std::size_t> sizes;
    for (const auto& a : atoms) sizes.push_back(*term_size(a, max_size));
    std::vector<std::pair<std::size_t, RingTerm>> out;
    std::vector<std::size_t> pick;
    auto emit = [&](std::size_t size) {
        std::vector<RingTerm> fs;
        bool cyclic = true;
        std::int64_t n = 1;
        for (auto i : pick) {
            fs.push_back(atoms[i]);
            if (const auto* z = std::get_if<ZModTerm>(&atoms[i].node)) {
                cyclic = cyclic && std::gcd(n, z->n) == 1;
                n *= z->n;
            } else {
                cyclic = false;
            }
        }
        if (fs.size() == 1) out.push_back({size, fs.front()});
        else if (cyclic) out.push_back({size, RingTerm::zmod(n)});
        else out.push_back({size, RingTerm::product(std::move(fs))});
    };
    // multisets as non-decreasing index sequences
    auto rec = [&](auto&& self, std::size_t start, std::size_t size) -> void {
        for (std::size_t i = start; i < atoms.size(); ++i) {
            if (size * sizes[i] > max_size) continue;
            pick.push_back(i);
            emit(size * sizes[i]);
            self(self, i, size * sizes[i]);
            pick.pop_back();
        }
    };
    rec(rec, 0, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return describe(a.second) < describe(b.second);
    });
    std::vector<RingTerm> terms;
    for (auto& [s, t] : out) terms.push_back(std::move(t));
    return terms;
}

}  // namespace gabriel
