#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gabriel/element_set.hpp"
#include "gabriel/error.hpp"

namespace gabriel {

inline constexpr std::size_t default_size_cap = 256;
inline constexpr std::size_t hard_size_cap = 1024;

// ---------------------------------------------------------------------------
// Construction terms
// ---------------------------------------------------------------------------

struct RingTerm;

struct ZModTerm {
    std::int64_t n = 0;
};

struct ProductTerm {
    std::vector<RingTerm> factors;  // two or more, folded left
};

/// F_p[x]/(f), coefficients of f listed low-to-high.
struct PolyQuotTerm {
    std::int64_t p = 0;
    std::vector<std::int64_t> f;
};

/// F_p[x_1..x_d]/(x_1..x_d)^2: the local ring F_p + F_p^d with square-zero maximal ideal.
struct SquareZeroTerm {
    std::int64_t p = 0;
    std::int64_t vars = 0;
};

struct RingTerm {
    std::variant<ZModTerm, ProductTerm, PolyQuotTerm, SquareZeroTerm> node;

    static RingTerm zmod(std::int64_t n) { return {ZModTerm{n}}; }
    static RingTerm product(std::vector<RingTerm> factors) { return {ProductTerm{std::move(factors)}}; }
    static RingTerm product(RingTerm a, RingTerm b) { return product(std::vector<RingTerm>{std::move(a), std::move(b)}); }
    static RingTerm polyquot(std::int64_t p, std::vector<std::int64_t> f) { return {PolyQuotTerm{p, std::move(f)}}; }
    static RingTerm square_zero(std::int64_t p, std::int64_t vars) { return {SquareZeroTerm{p, vars}}; }
};

inline bool is_prime_number(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace detail {

inline std::string poly_to_string(const std::vector<std::int64_t>& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace detail

inline std::string describe(const RingTerm& t) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ZModTerm>) {
                return "Z/" + std::to_string(n.n);
            } else if constexpr (std::is_same_v<T, ProductTerm>) {
                std::string s;
                for (std::size_t i = 0; i < n.factors.size(); ++i) {
                    if (i) s += " x ";
                    bool paren = std::holds_alternative<ProductTerm>(n.factors[i].node);
                    s += paren ? "(" + describe(n.factors[i]) + ")" : describe(n.factors[i]);
                }
                return s;
            } else if constexpr (std::is_same_v<T, PolyQuotTerm>) {
                return "F_" + std::to_string(n.p) + "[x]/(" + detail::poly_to_string(n.f) + ")";
            } else {
                std::string v;
                for (std::int64_t i = 1; i <= n.vars; ++i) v += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
                return "F_" + std::to_string(n.p) + "[" + v + "]/(" + v + ")^2";
            }
        },
        t.node);
}

/// Number of elements of the ring a term denotes, or nullopt when it exceeds `limit`.
inline std::optional<std::size_t> term_size(const RingTerm& t, std::size_t limit) {
    return std::visit(
        [limit](const auto& n) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(n)>;
            auto pow = [limit](std::int64_t base, std::int64_t exp) -> std::optional<std::size_t> {
                std::size_t r = 1;
                for (std::int64_t i = 0; i < exp; ++i) {
                    r *= static_cast<std::size_t>(base);
                    if (r > limit) return std::nullopt;
                }
                return r;
            };
            if constexpr (std::is_same_v<T, ZModTerm>) {
                if (n.n < 0 || static_cast<std::size_t>(n.n) > limit) return std::nullopt;
                return static_cast<std::size_t>(n.n);
            } else if constexpr (std::is_same_v<T, ProductTerm>) {
                std::size_t r = 1;
                for (const auto& f : n.factors) {
                    auto s = term_size(f, limit);
                    if (!s || *s == 0) return s;
                    r *= *s;
                    if (r > limit) return std::nullopt;
                }
                return r;
            } else if constexpr (std::is_same_v<T, PolyQuotTerm>) {
                if (n.p < 2 || n.f.empty()) return std::size_t{0};
                return pow(n.p, static_cast<std::int64_t>(n.f.size()) - 1);
            } else {
                if (n.p < 2 || n.vars < 0) return std::size_t{0};
                return pow(n.p, n.vars + 1);
            }
        },
        t.node);
}

// ---------------------------------------------------------------------------
// FiniteRing
// ---------------------------------------------------------------------------

/// A finite commutative unital ring with elements 0..size-1.
/// Element 0 is always the zero of the ring.
class FiniteRing {
public:
    FiniteRing(std::string name, std::size_t n, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul, element one)
        : name_(std::move(name)), n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(n), one_(one) {
        for (element a = 0; a < n_; ++a)
            for (element b = 0; b < n_; ++b)
                if (add_[a * n_ + b] == 0) {
                    neg_[a] = static_cast<std::uint16_t>(b);
                    break;
                }
    }

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return n_; }
    element zero() const noexcept { return 0; }
    element one() const noexcept { return one_; }

    element add(element a, element b) const { return add_[a * n_ + b]; }
    element mul(element a, element b) const { return mul_[a * n_ + b]; }
    element neg(element a) const { return neg_[a]; }
    element sub(element a, element b) const { return add(a, neg(b)); }

    bool is_unit(element a) const {
        for (element b = 0; b < n_; ++b)
            if (mul(a, b) == one_) return true;
        return false;
    }

    friend bool operator==(const FiniteRing& x, const FiniteRing& y) {
        return x.n_ == y.n_ && x.one_ == y.one_ && x.add_ == y.add_ && x.mul_ == y.mul_;
    }

private:
    std::string name_;
    std::size_t n_;
    std::vector<std::uint16_t> add_, mul_, neg_;
    element one_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) fail(errc::ring_mismatch, "operands live over " + a->name() + " and " + b->name());
}

namespace detail {

template <class Add, class Mul>
RingPtr tabulate(std::string name, std::size_t n, element one, Add add, Mul mul) {
    std::vector<std::uint16_t> at(n * n), mt(n * n);
    for (element a = 0; a < n; ++a)
        for (element b = 0; b < n; ++b) {
            at[a * n + b] = static_cast<std::uint16_t>(add(a, b));
            mt[a * n + b] = static_cast<std::uint16_t>(mul(a, b));
        }
    return std::make_shared<const FiniteRing>(std::move(name), n, std::move(at), std::move(mt), one);
}

inline RingPtr build(const RingTerm& t) {
    return std::visit(
        [&t](const auto& node) -> RingPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZModTerm>) {
                const auto n = static_cast<std::size_t>(node.n);
                return tabulate(describe(t), n, 1 % n, [n](element a, element b) { return (a + b) % n; },
                                [n](element a, element b) { return static_cast<element>((std::uint64_t{a} * b) % n); });
            } else if constexpr (std::is_same_v<T, ProductTerm>) {
                // mixed radix: the first factor is the most significant digit
                std::vector<RingPtr> fs;
                std::size_t n = 1;
                for (const auto& f : node.factors) {
                    fs.push_back(build(f));
                    n *= fs.back()->size();
                }
                auto split = [&fs](element a) {
                    std::vector<element> d(fs.size());
                    for (std::size_t i = fs.size(); i-- > 0;) {
                        d[i] = a % static_cast<element>(fs[i]->size());
                        a /= static_cast<element>(fs[i]->size());
                    }
                    return d;
                };
                auto join = [&fs](const std::vector<element>& d) {
                    element a = 0;
                    for (std::size_t i = 0; i < fs.size(); ++i) a = a * static_cast<element>(fs[i]->size()) + d[i];
                    return a;
                };
                auto lift = [&](auto op) {
                    return [&, op](element a, element b) {
                        auto x = split(a), y = split(b);
                        for (std::size_t i = 0; i < fs.size(); ++i) x[i] = op(*fs[i], x[i], y[i]);
                        return join(x);
                    };
                };
                std::vector<element> ones;
                for (const auto& f : fs) ones.push_back(f->one());
                return tabulate(describe(t), n, join(ones),
                                lift([](const FiniteRing& r, element a, element b) { return r.add(a, b); }),
                                lift([](const FiniteRing& r, element a, element b) { return r.mul(a, b); }));
            } else if constexpr (std::is_same_v<T, PolyQuotTerm>) {
                const std::int64_t p = node.p;
                const std::size_t d = node.f.size() - 1;
                std::size_t n = 1;
                for (std::size_t i = 0; i < d; ++i) n *= static_cast<std::size_t>(p);
                auto digits = [p, d](element a) {
                    std::vector<std::int64_t> c(d);
                    for (std::size_t i = 0; i < d; ++i, a /= static_cast<element>(p)) c[i] = a % p;
                    return c;
                };
                auto pack = [p](const std::vector<std::int64_t>& c) {
                    element a = 0;
                    for (std::size_t i = c.size(); i-- > 0;) a = static_cast<element>(a * p + c[i]);
                    return a;
                };
                auto add = [&](element a, element b) {
                    auto x = digits(a), y = digits(b);
                    for (std::size_t i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % p;
                    return pack(x);
                };
                auto mul = [&](element a, element b) {
                    auto x = digits(a), y = digits(b);
                    std::vector<std::int64_t> prod(2 * d, 0);
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
                    // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
                    for (std::size_t k = prod.size(); k-- > d;) {
                        const std::int64_t c = prod[k];
                        if (c == 0) continue;
                        prod[k] = 0;
                        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = ((prod[k - d + i] - c * node.f[i]) % p + p) % p;
                    }
                    prod.resize(d);
                    return pack(prod);
                };
                return tabulate(describe(t), n, d == 0 ? 0 : 1, add, mul);
            } else {
                const std::int64_t p = node.p;
                const std::size_t d = static_cast<std::size_t>(node.vars) + 1;
                std::size_t n = 1;
                for (std::size_t i = 0; i < d; ++i) n *= static_cast<std::size_t>(p);
                auto digits = [p, d](element a) {
                    std::vector<std::int64_t> c(d);
                    for (std::size_t i = 0; i < d; ++i, a /= static_cast<element>(p)) c[i] = a % p;
                    return c;
                };
                auto pack = [p](const std::vector<std::int64_t>& c) {
                    element a = 0;
                    for (std::size_t i = c.size(); i-- > 0;) a = static_cast<element>(a * p + c[i]);
                    return a;
                };
                auto add = [&](element a, element b) {
                    auto x = digits(a), y = digits(b);
                    for (std::size_t i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % p;
                    return pack(x);
                };
                auto mul = [&](element a, element b) {
                    auto x = digits(a), y = digits(b);
                    std::vector<std::int64_t> z(d);
                    z[0] = x[0] * y[0] % p;
                    for (std::size_t i = 1; i < d; ++i) z[i] = (x[0] * y[i] + y[0] * x[i]) % p;
                    return pack(z);
                };
                return tabulate(describe(t), n, 1, add, mul);
            }
        },
        t.node);
}

inline void validate(const RingTerm& t) {
    std::visit(
        [](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZModTerm>) {
                if (node.n < 2) fail(errc::invalid_modulus, "zmod modulus must be at least 2, got " + std::to_string(node.n));
            } else if constexpr (std::is_same_v<T, ProductTerm>) {
                if (node.factors.size() < 2) fail(errc::validation_error, "product needs at least two factors");
                for (const auto& f : node.factors) validate(f);
            } else if constexpr (std::is_same_v<T, PolyQuotTerm>) {
                if (!is_prime_number(node.p)) fail(errc::invalid_modulus, "polyquot characteristic must be prime, got " + std::to_string(node.p));
                if (node.f.size() < 2) fail(errc::non_monic_polynomial, "polynomial must have degree at least 1");
                for (auto c : node.f)
                    if (c < 0 || c >= node.p) fail(errc::non_monic_polynomial, "coefficients must lie in 0..p-1");
                if (node.f.back() != 1) fail(errc::non_monic_polynomial, "leading coefficient must be 1");
            } else {
                if (!is_prime_number(node.p)) fail(errc::invalid_modulus, "square_zero characteristic must be prime, got " + std::to_string(node.p));
                if (node.vars < 1) fail(errc::validation_error, "square_zero needs at least one variable");
            }
        },
        t.node);
}

}  // namespace detail

/// Builds the ring denoted by `term`; the result is checked against `cap`
/// before any table is allocated.
inline RingPtr build_ring(const RingTerm& term, std::size_t cap = default_size_cap) {
    detail::validate(term);
    const std::size_t limit = std::min(cap, hard_size_cap);
    auto n = term_size(term, limit);
    if (!n) fail(errc::size_cap_exceeded, describe(term) + " exceeds the size cap of " + std::to_string(limit));
    return detail::build(term);
}

/// Exhaustive check of the commutative unital ring axioms; returns the
/// first violated law, or an empty string.
inline std::string check_ring_axioms(const FiniteRing& r) {
    const element n = static_cast<element>(r.size());
    for (element a = 0; a < n; ++a) {
        if (r.add(a, 0) != a) return "additive identity fails at " + std::to_string(a);
        if (r.mul(a, r.one()) != a) return "multiplicative identity fails at " + std::to_string(a);
        if (r.add(a, r.neg(a)) != 0) return "additive inverse fails at " + std::to_string(a);
        for (element b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
            if (r.mul(a, b) != r.mul(b, a)) return "multiplication not commutative";
            for (element c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative";
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication not associative";
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "distributivity fails";
            }
        }
    }
    return {};
}

}  // namespace gabriel
