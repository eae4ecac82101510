#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/iterator/function_output_iterator.hpp>

namespace gabriel {

/// Canonical index of a ring element or of a vector in A^k.
using element = std::uint32_t;

/// A subset of a finite carrier, stored as a bitset over element indices.
class ElementSet {
public:
    using bits = boost::dynamic_bitset<std::uint64_t>;

    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe) {}

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        s.bits_.set();
        return s;
    }

    template <class Range>
    static ElementSet of(std::size_t universe, const Range& elems) {
        ElementSet s(universe);
        for (auto e : elems) s.insert(static_cast<element>(e));
        return s;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    bool contains(element e) const { return e < bits_.size() && bits_.test(e); }
    void insert(element e) { bits_.set(e); }
    void erase(element e) { bits_.reset(e); }

    bool subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }

    ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
    ElementSet& operator-=(const ElementSet& o) { bits_ -= o.bits_; return *this; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

    /// Smallest element, or universe() when empty.
    element first() const { return static_cast<element>(bits_.find_first()); }
    element next(element e) const { return static_cast<element>(bits_.find_next(e)); }

    template <class F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != bits::npos; i = bits_.find_next(i)) f(static_cast<element>(i));
    }

    std::vector<element> elements() const {
        std::vector<element> out;
        out.reserve(size());
        for_each([&](element e) { out.push_back(e); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = bits_.size();
        boost::to_block_range(bits_, boost::make_function_output_iterator([&h](std::uint64_t block) {
            h = (h * 0x9E3779B97F4A7C15ull) ^ (block + (h >> 7));
        }));
        return h;
    }

    /// Lexicographic comparison of the sorted element lists.
    friend bool lex_less(const ElementSet& a, const ElementSet& b) {
        auto x = a.bits_.find_first();
        auto y = b.bits_.find_first();
        while (x != bits::npos && y != bits::npos) {
            if (x != y) return x < y;
            x = a.bits_.find_next(x);
            y = b.bits_.find_next(y);
        }
        return x == bits::npos && y != bits::npos;
    }

private:
    bits bits_;
};

/// Ordering used for every reported list of ideals and submodules:
/// cardinality first, then the lexicographic order of the element lists.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
}

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace gabriel
