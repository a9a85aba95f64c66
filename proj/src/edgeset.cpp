#include "cayplane/edgeset.hpp"

#include <algorithm>
#include <bit>

namespace cayplane {

int EdgeSet::count() const {
    int c = 0;
    for (std::uint64_t w : bits) c += std::popcount(w);
    return c;
}

int EdgeSet::lowest() const {
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) return static_cast<int>(i * 64) + std::countr_zero(bits[i]);
    return -1;
}

std::vector<int> EdgeSet::indices() const {
    std::vector<int> out;
    for (int e = 0; e < universe; ++e)
        if (test(e)) out.push_back(e);
    return out;
}

EdgeSet Gf2Eliminator::reduce(EdgeSet v) const {
    while (true) {
        const int lo = v.lowest();
        if (lo < 0) return v;
        const auto it = std::lower_bound(pivots.begin(), pivots.end(), lo);
        if (it == pivots.end() || *it != lo) return v;
        v ^= rows[static_cast<std::size_t>(it - pivots.begin())];
    }
}

bool Gf2Eliminator::insert(EdgeSet v) {
    v = reduce(v);
    const int lo = v.lowest();
    if (lo < 0) return false;
    const auto it = std::lower_bound(pivots.begin(), pivots.end(), lo);
    const auto pos = it - pivots.begin();
    pivots.insert(it, lo);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
}

int gf2_rank(const std::vector<EdgeSet>& vecs) {
    if (vecs.empty()) return 0;
    std::vector<EdgeSet> work = vecs;
    const int nrows = static_cast<int>(work.size());
    int rank = 0;
    for (int r = 0; r < nrows; ++r) {
        // pick the remaining row with the lowest leading bit
        int best = -1, best_lo = -1;
        for (int i = r; i < nrows; ++i) {
            const int lo = work[static_cast<std::size_t>(i)].lowest();
            if (lo < 0) continue;
            if (best < 0 || lo < best_lo) {
                best = i;
                best_lo = lo;
            }
        }
        if (best < 0) break;
        std::swap(work[static_cast<std::size_t>(r)], work[static_cast<std::size_t>(best)]);
        const EdgeSet& pivot = work[static_cast<std::size_t>(r)];
        ++rank;
#pragma omp parallel for schedule(static)
        for (int i = r + 1; i < nrows; ++i) {
            if (work[static_cast<std::size_t>(i)].test(best_lo)) work[static_cast<std::size_t>(i)] ^= pivot;
        }
    }
    return rank;
}

}  // namespace cayplane
