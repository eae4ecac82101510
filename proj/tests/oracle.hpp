#pragma once

// Independent reference arithmetic for Z/n, where the ideals are dZ/n for the
// divisors d of n. Nothing here touches the library's tables.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

inline unsigned distinct_primes(unsigned n) {
    unsigned c = 0;
    for (unsigned p = 2; p <= n; ++p)
        if (n % p == 0) {
            ++c;
            while (n % p == 0) n /= p;
        }
    return c;
}

// (d) ⊆ (e) iff e | d
inline bool contained(unsigned d, unsigned e) { return d % e == 0; }

// ((b) : x) = (b / gcd(b, x)) for an element x of Z/n
inline unsigned colon(unsigned n, unsigned b, unsigned x) { return b / std::gcd(b, x % n == 0 ? n : x); }

inline bool is_gabriel(unsigned n, const std::set<unsigned>& L) {
    const auto ds = divisors(n);
    if (!L.count(1)) return false;
    for (auto d : L)
        for (auto e : ds)
            if (contained(d, e) && !L.count(e)) return false;
    for (auto d : L)
        for (auto e : L)
            if (!L.count(std::lcm(d, e))) return false;
    for (auto b : ds) {
        if (L.count(b)) continue;
        for (auto a : L) {
            bool all = true;
            for (unsigned x = 0; x < n; x += a) all = all && L.count(colon(n, b, x));
            if (all) return false;
        }
    }
    return true;
}

// Gabriel filters of Z/n by scanning every subset of the divisor lattice.
inline std::vector<std::set<unsigned>> gabriel_filters(unsigned n) {
    const auto ds = divisors(n);
    std::vector<std::set<unsigned>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ds.size()); ++mask) {
        std::set<unsigned> L;
        for (std::size_t i = 0; i < ds.size(); ++i)
            if (mask >> i & 1) L.insert(ds[i]);
        if (is_gabriel(n, L)) out.push_back(std::move(L));
    }
    return out;
}

}  // namespace oracle
