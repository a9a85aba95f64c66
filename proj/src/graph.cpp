#include "cayplane/graph.hpp"

#include <deque>

namespace cayplane {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        g.adj[static_cast<std::size_t>(u)].push_back({v, e});
        if (u != v) g.adj[static_cast<std::size_t>(v)].push_back({u, e});
    }
    return g;
}

bool Graph::connected() const {
    if (n == 0) return true;
    const std::vector<int> d = bfs_dist(0);
    for (int v = 0; v < n; ++v)
        if (d[static_cast<std::size_t>(v)] < 0) return false;
    return true;
}

std::vector<int> Graph::bfs_dist(int src, const std::vector<char>& removed) const {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    if (!removed.empty() && removed[static_cast<std::size_t>(src)]) return dist;
    std::deque<int> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            if (!removed.empty() && removed[static_cast<std::size_t>(w)]) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push_back(w);
        }
    }
    return dist;
}

std::vector<int> Graph::components(const std::vector<char>& removed, int* count) const {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        if (!removed.empty() && removed[static_cast<std::size_t>(s)]) continue;
        std::deque<int> q{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] >= 0) continue;
                if (!removed.empty() && removed[static_cast<std::size_t>(w)]) continue;
                comp[static_cast<std::size_t>(w)] = next;
                q.push_back(w);
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

}  // namespace cayplane
