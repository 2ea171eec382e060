#ifndef SNC_VERTEX_SET_HPP
#define SNC_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace snc {

using vertex = std::uint32_t;

/// Largest vertex count a digraph may have.
inline constexpr std::size_t max_vertices = 64;

/**
 * @brief set of vertex ids in [0, 64), iterated in ascending order
 *
 * Backed by a single 64-bit mask, so every set operation is a word
 * operation. Equality is set equality.
 */
class vertex_set {
   public:
    class iterator {
       public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const vertex*;
        using reference = vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        vertex operator*() const { return static_cast<vertex>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

       private:
        std::uint64_t rest_ = 0;
    };

    constexpr vertex_set() = default;
    constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}
    vertex_set(std::initializer_list<vertex> vs) {
        for (vertex v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static vertex_set range(std::size_t n) {
        return vertex_set(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static vertex_set single(vertex v) { return vertex_set(bit(v)); }

    template <typename Range>
    static vertex_set from(const Range& r) {
        vertex_set s;
        for (auto v : r) s.insert(static_cast<vertex>(v));
        return s;
    }

    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(vertex v) const noexcept { return v < 64 && (bits_ >> v) & 1U; }
    /// smallest element; set must be nonempty
    vertex front() const { return static_cast<vertex>(std::countr_zero(bits_)); }

    void insert(vertex v) { bits_ |= bit(v); }
    void erase(vertex v) {
        if (v < 64) bits_ &= ~(std::uint64_t{1} << v);
    }

    bool subset_of(vertex_set o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    bool intersects(vertex_set o) const noexcept { return (bits_ & o.bits_) != 0; }

    vertex_set operator|(vertex_set o) const noexcept { return vertex_set(bits_ | o.bits_); }
    vertex_set operator&(vertex_set o) const noexcept { return vertex_set(bits_ & o.bits_); }
    /// set difference
    vertex_set operator-(vertex_set o) const noexcept { return vertex_set(bits_ & ~o.bits_); }
    vertex_set& operator|=(vertex_set o) noexcept {
        bits_ |= o.bits_;
        return *this;
    }
    vertex_set& operator&=(vertex_set o) noexcept {
        bits_ &= o.bits_;
        return *this;
    }
    vertex_set& operator-=(vertex_set o) noexcept {
        bits_ &= ~o.bits_;
        return *this;
    }
    bool operator==(const vertex_set&) const = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<vertex> to_vector() const { return {begin(), end()}; }

   private:
    static std::uint64_t bit(vertex v) {
        if (v >= 64) throw invalid_argument("vertex id " + std::to_string(v) + " exceeds 63");
        return std::uint64_t{1} << v;
    }

    std::uint64_t bits_ = 0;
};

inline std::string to_string(vertex_set s) {
    std::string out = "{";
    bool first = true;
    for (vertex v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, vertex_set s) { return os << to_string(s); }

}  // namespace snc

#endif
