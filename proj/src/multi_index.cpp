#include "wronsk/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace wronsk {

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("multi-index over dimension 0");
}

MultiIndex MultiIndex::zero(int dimension) {
    if (dimension < 1) throw std::invalid_argument("multi-index over dimension < 1");
    return MultiIndex(std::vector<std::uint32_t>(static_cast<std::size_t>(dimension), 0));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
    MultiIndex m = zero(dimension);
    if (axis < 0 || axis >= dimension) throw std::invalid_argument("axis out of range");
    m.entries_[static_cast<std::size_t>(axis)] = 1;
    return m;
}

std::uint32_t MultiIndex::order() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint32_t{0});
}

bool MultiIndex::leq(const MultiIndex& o) const {
    if (dimension() != o.dimension()) throw std::invalid_argument("multi-index dimension mismatch");
    for (int a = 0; a < dimension(); ++a)
        if (entries_[static_cast<std::size_t>(a)] > o.entries_[static_cast<std::size_t>(a)]) return false;
    return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    if (dimension() != o.dimension()) throw std::invalid_argument("multi-index dimension mismatch");
    std::vector<std::uint32_t> e = entries_;
    for (std::size_t a = 0; a < e.size(); ++a) e[a] += o.entries_[a];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
    if (!o.leq(*this)) throw std::invalid_argument("multi-index subtraction would go negative");
    std::vector<std::uint32_t> e = entries_;
    for (std::size_t a = 0; a < e.size(); ++a) e[a] -= o.entries_[a];
    return MultiIndex(std::move(e));
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    const std::uint32_t oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.entries() < b.entries();
}

bool enum_less(const MultiIndex& a, const MultiIndex& b) {
    const std::uint32_t oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.entries() > b.entries();
}

}  // namespace wronsk
