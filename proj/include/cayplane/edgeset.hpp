#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cayplane {

// Edge subset of a fixed-size edge universe as a GF(2) vector.
struct EdgeSet {
    int universe = 0;
    std::vector<std::uint64_t> bits;

    EdgeSet() = default;
    explicit EdgeSet(int m) : universe(m), bits(static_cast<std::size_t>((m + 63) / 64), 0) {}

    void toggle(int e) { bits[static_cast<std::size_t>(e) >> 6] ^= (1ULL << (e & 63)); }
    void set(int e) { bits[static_cast<std::size_t>(e) >> 6] |= (1ULL << (e & 63)); }
    bool test(int e) const { return (bits[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1ULL; }

    EdgeSet& operator^=(const EdgeSet& o) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= o.bits[i];
        return *this;
    }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }

    bool empty() const {
        for (std::uint64_t w : bits)
            if (w) return false;
        return true;
    }
    int count() const;
    int lowest() const;  // lowest set bit, -1 when empty
    std::vector<int> indices() const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.bits <=> b.bits; }
};

// Incremental GF(2) elimination with deterministic lowest-index-first
// pivoting; rows are reduced against existing pivots on insert.
struct Gf2Eliminator {
    std::vector<EdgeSet> rows;    // echelon rows, sorted by pivot
    std::vector<int> pivots;      // pivot bit of each row

    // Reduces v; returns true (and keeps it) if independent.
    bool insert(EdgeSet v);
    EdgeSet reduce(EdgeSet v) const;
    bool in_span(const EdgeSet& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows.size()); }
};

// Rank of a list of GF(2) vectors. The parallel variant eliminates each
// pivot from all remaining rows in one OpenMP sweep; rank is identical
// to the serial reference.
int gf2_rank(const std::vector<EdgeSet>& vecs);

}  // namespace cayplane
