#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mobius {

inline constexpr int kMaxElements = 64;

// Fixed-width subset of a ground set with at most 64 elements.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
    ElementSet(std::initializer_list<int> elems) {
        for (int e : elems) bits_ |= std::uint64_t{1} << e;
    }

    static constexpr ElementSet full(int n) {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElementSet single(int e) { return ElementSet(std::uint64_t{1} << e); }
    static ElementSet from(const std::vector<int>& elems) {
        ElementSet s;
        for (int e : elems) s.insert(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
    // Smallest element id, or -1 when empty.
    constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
    constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const ElementSet&) const = default;

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    // Iterates element ids in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

struct ElementSetHash {
    std::size_t operator()(ElementSet s) const noexcept {
        std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

}  // namespace mobius
