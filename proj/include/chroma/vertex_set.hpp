#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace chroma {

// Hard cap on vertex count.  Everything in this library is desk-scale and
// value-typed; two machine words cover every graph we care about.
inline constexpr int kMaxVertices = 128;

// Fixed-capacity bit set over vertex indices 0..127.
struct VertexSet {
    std::array<std::uint64_t, 2> w{0, 0};

    static VertexSet all(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    void add(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool empty() const { return (w[0] | w[1]) == 0; }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

    // lowest set index, or -1
    int first() const {
        if (w[0]) return std::countr_zero(w[0]);
        if (w[1]) return 64 + std::countr_zero(w[1]);
        return -1;
    }
    // lowest set index > v, or -1
    int next(int v) const {
        ++v;
        if (v < 64) {
            std::uint64_t m = w[0] >> v;
            if (m) return v + std::countr_zero(m);
            v = 64;
        }
        if (v < 128) {
            std::uint64_t m = w[1] >> (v - 64);
            if (m) return v + std::countr_zero(m);
        }
        return -1;
    }

    VertexSet operator|(const VertexSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    VertexSet operator&(const VertexSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    VertexSet operator-(const VertexSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
    VertexSet& operator|=(const VertexSet& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
    VertexSet& operator&=(const VertexSet& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
    VertexSet& operator-=(const VertexSet& o) { w[0] &= ~o.w[0]; w[1] &= ~o.w[1]; return *this; }
    bool operator==(const VertexSet& o) const { return w == o.w; }
    bool operator!=(const VertexSet& o) const { return w != o.w; }
    bool operator<(const VertexSet& o) const {  // arbitrary total order for maps
        return w[1] != o.w[1] ? w[1] < o.w[1] : w[0] < o.w[0];
    }
    bool subset_of(const VertexSet& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
    }
    bool intersects(const VertexSet& o) const {
        return (w[0] & o.w[0]) | (w[1] & o.w[1]);
    }
};

// for (int v : iterate(set)) ...
struct VertexSetRange {
    VertexSet s;
    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() { v = s->next(v); return *this; }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {&s, s.first()}; }
    iterator end() const { return {&s, -1}; }
};
inline VertexSetRange iterate(VertexSet s) { return {s}; }

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.w[0] * 0x9e3779b97f4a7c15ull;
        h ^= s.w[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace chroma
