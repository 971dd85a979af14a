#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace turan {

constexpr std::int64_t binom2(std::int64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

constexpr std::int64_t binom3(std::int64_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

// Largest vertex count the pattern/search machinery supports. Edge ranks and
// vertex masks are sized for this bound; plain storage (Hypergraph3) has no
// such limit.
inline constexpr int kMaxVertices = 32;

// A 3-element edge with vertices in ascending order.
struct Triple {
    std::uint8_t a = 0, b = 0, c = 0;

    constexpr Triple() = default;
    constexpr Triple(int x, int y, int z)
        : a(static_cast<std::uint8_t>(x)),
          b(static_cast<std::uint8_t>(y)),
          c(static_cast<std::uint8_t>(z)) {}

    constexpr bool operator==(const Triple&) const = default;
    constexpr auto operator<=>(const Triple& o) const {
        // colex order: compare (c, b, a)
        if (c != o.c) return c <=> o.c;
        if (b != o.b) return b <=> o.b;
        return a <=> o.a;
    }

    constexpr std::uint32_t vertex_mask() const {
        return (1u << a) | (1u << b) | (1u << c);
    }
    constexpr bool contains(int v) const { return v == a || v == b || v == c; }
    constexpr bool intersects(const Triple& o) const {
        return (vertex_mask() & o.vertex_mask()) != 0;
    }
};

// colex rank of a sorted triple a<b<c: C(c,3)+C(b,2)+C(a,1)
constexpr std::int64_t triple_rank(const Triple& t) {
    return binom3(t.c) + binom2(t.b) + t.a;
}

inline Triple sorted_triple(int x, int y, int z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return Triple(x, y, z);
}

inline Triple triple_unrank(std::int64_t rank) {
    int c = 2;
    while (binom3(c + 1) <= rank) ++c;
    rank -= binom3(c);
    int b = 1;
    while (binom2(b + 1) <= rank) ++b;
    rank -= binom2(b);
    return Triple(static_cast<int>(rank), b, c);
}

// colex rank of a sorted pair a<b: C(b,2)+a
constexpr std::int64_t pair_rank(int a, int b) { return binom2(b) + a; }

inline std::pair<int, int> pair_unrank(std::int64_t rank) {
    int b = 1;
    while (binom2(b + 1) <= rank) ++b;
    return {static_cast<int>(rank - binom2(b)), b};
}

}  // namespace turan
