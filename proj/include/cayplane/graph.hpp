#pragma once

#include <utility>
#include <vector>

namespace cayplane {

// Undirected topological view used by planarity, connectivity and the
// cycle space. Edge direction and labels live in CayleyGraph; indices
// here match the owning CayleyGraph's edge indices. Loops and parallel
// edges are allowed.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge)

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool connected() const;

    // BFS distances from src over vertices not in `removed` (indexed by
    // vertex, may be empty); unreachable/removed vertices get -1.
    std::vector<int> bfs_dist(int src, const std::vector<char>& removed = {}) const;

    // Connected components after deleting `removed` vertices; component
    // ids in discovery order, removed vertices get -1.
    std::vector<int> components(const std::vector<char>& removed, int* count) const;
};

}  // namespace cayplane
