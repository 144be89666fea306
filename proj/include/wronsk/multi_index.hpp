#pragma once

#include <cstdint>
#include <vector>

namespace wronsk {

// A d-tuple of non-negative integers (s1,...,sd) naming the mixed partial
// derivative d^|s| / dx1^s1 ... dxd^sd. Doubles as a monomial exponent
// vector. The ambient dimension d is the tuple length; d >= 1 always.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<std::uint32_t> entries);
    static MultiIndex zero(int dimension);
    static MultiIndex unit(int dimension, int axis);

    int dimension() const { return static_cast<int>(entries_.size()); }
    std::uint32_t operator[](int axis) const { return entries_[static_cast<std::size_t>(axis)]; }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    // |s| = s1 + ... + sd, the differential order / total degree.
    std::uint32_t order() const;
    bool is_zero() const { return order() == 0; }

    // Componentwise comparison and arithmetic.
    bool leq(const MultiIndex& o) const;
    MultiIndex plus(const MultiIndex& o) const;
    MultiIndex minus(const MultiIndex& o) const;  // requires leq(o) reversed

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
        return !(a == b);
    }

private:
    std::vector<std::uint32_t> entries_;
};

// Graded lexicographic term order with x1 > x2 > ... > xd: compare by total
// order first, then lexicographically on the exponent tuple.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

// Canonical listing order for jet-fibre enumerations and Wronskian rows:
// ascending total order; within an order, the x1-heaviest index first.
// Over d = 2 this yields 0, x, y, xx, xy, yy, ...
bool enum_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(b, a); }
};

struct EnumLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return enum_less(a, b); }
};

}  // namespace wronsk
