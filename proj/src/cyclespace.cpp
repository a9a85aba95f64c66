#include "cayplane/cyclespace.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace cayplane {

WalkResult walk_of_relator(const CayleyGraph& g, const Word& relator, int base) {
    const AlphabetMap& alpha = g.alphabet();
    ClosedWalk w;
    w.base = base;
    w.vertex_seq.push_back(base);
    int cur = base;
    for (std::size_t i = 0; i < relator.size(); ++i) {
        const int letter = alpha.index(relator[i]);
        const StepTo s = g.step[static_cast<std::size_t>(cur)][static_cast<std::size_t>(letter)];
        if (s.edge < 0)
            return LeavesBall{Word(relator.begin(), relator.begin() + static_cast<std::ptrdiff_t>(i) + 1)};
        w.edge_seq.push_back(s.edge);
        w.vertex_seq.push_back(s.to);
        cur = s.to;
    }
    return w;
}

EdgeSet circuit_of_walk(const ClosedWalk& w, int edge_count) {
    EdgeSet c(edge_count);
    for (int e : w.edge_seq) c.toggle(e);
    return c;
}

CircuitBasis relator_circuits(const CayleyGraph& g) {
    const Presentation& p = g.presentation();
    const int nr = static_cast<int>(p.relators.size());
    const int nv = g.n();
    const int grid = nr * nv;

    // Parallel fill of the (relator, base) grid, then a serial
    // first-seen dedup in grid order keeps the result deterministic.
    std::vector<std::optional<EdgeSet>> cell(static_cast<std::size_t>(grid));
#pragma omp parallel for schedule(dynamic, 16)
    for (int idx = 0; idx < grid; ++idx) {
        const int r = idx / nv;
        const int b = idx % nv;
        const WalkResult res = walk_of_relator(g, p.relators[static_cast<std::size_t>(r)], b);
        if (const ClosedWalk* walk = std::get_if<ClosedWalk>(&res)) {
            EdgeSet c = circuit_of_walk(*walk, g.m());
            if (!c.empty()) cell[static_cast<std::size_t>(idx)] = std::move(c);
        }
    }

    CircuitBasis out;
    out.edge_universe = g.m();
    std::map<EdgeSet, int> seen;
    for (int idx = 0; idx < grid; ++idx) {
        if (!cell[static_cast<std::size_t>(idx)]) continue;
        EdgeSet& c = *cell[static_cast<std::size_t>(idx)];
        if (seen.emplace(c, out.size()).second)
            out.circuits.push_back({std::move(c), idx / nv, idx % nv});
    }
    return out;
}

int basis_rank(const CircuitBasis& b) {
    std::vector<EdgeSet> vecs;
    vecs.reserve(b.circuits.size());
    for (const auto& c : b.circuits) vecs.push_back(c.edges);
    return gf2_rank(vecs);
}

std::vector<int> edge_incidence(const CircuitBasis& b) {
    std::vector<int> counts(static_cast<std::size_t>(b.edge_universe), 0);
    const int nc = b.size();
#pragma omp parallel
    {
        std::vector<int> local(counts.size(), 0);
#pragma omp for schedule(static)
        for (int i = 0; i < nc; ++i)
            for (int e : b.circuits[static_cast<std::size_t>(i)].edges.indices()) ++local[static_cast<std::size_t>(e)];
#pragma omp critical
        for (std::size_t e = 0; e < counts.size(); ++e) counts[e] += local[e];
    }
    return counts;
}

int cycle_space_dim(const Graph& g) {
    int comp_count = 0;
    g.components({}, &comp_count);
    return g.m() - g.n + comp_count;
}

std::vector<EdgeSet> fundamental_cycles(const Graph& g) {
    std::vector<int> parent_edge(static_cast<std::size_t>(g.n), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
    std::vector<int> depth(static_cast<std::size_t>(g.n), -1);
    std::vector<char> tree_edge(static_cast<std::size_t>(g.m()), 0);
    for (int s = 0; s < g.n; ++s) {
        if (depth[static_cast<std::size_t>(s)] >= 0) continue;
        depth[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (auto [w, e] : g.adj[static_cast<std::size_t>(v)]) {
                if (depth[static_cast<std::size_t>(w)] >= 0) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = v;
                parent_edge[static_cast<std::size_t>(w)] = e;
                tree_edge[static_cast<std::size_t>(e)] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<EdgeSet> out;
    for (int e = 0; e < g.m(); ++e) {
        if (tree_edge[static_cast<std::size_t>(e)]) continue;
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        EdgeSet c(g.m());
        c.toggle(e);
        int x = u, y = v;
        while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
            c.toggle(parent_edge[static_cast<std::size_t>(x)]);
            x = parent[static_cast<std::size_t>(x)];
        }
        while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
            c.toggle(parent_edge[static_cast<std::size_t>(y)]);
            y = parent[static_cast<std::size_t>(y)];
        }
        while (x != y) {
            c.toggle(parent_edge[static_cast<std::size_t>(x)]);
            x = parent[static_cast<std::size_t>(x)];
            c.toggle(parent_edge[static_cast<std::size_t>(y)]);
            y = parent[static_cast<std::size_t>(y)];
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool generates_cycle_space(const CircuitBasis& b, const CayleyGraph& g) {
    const Graph topo = g.topo();
    if (!g.is_ball()) {
        std::vector<EdgeSet> vecs;
        vecs.reserve(b.circuits.size());
        for (const auto& c : b.circuits) vecs.push_back(c.edges);
        return gf2_rank(vecs) == cycle_space_dim(topo);
    }

    // Ball scope rule: only cycles of the safe interior are asserted.
    const int safe = g.ball->radius - static_cast<int>(g.presentation().max_relator_length());
    Gf2Eliminator span;
    for (const auto& c : b.circuits) span.insert(c.edges);
    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        if (g.ball->dist[static_cast<std::size_t>(v)] > safe) removed[static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<int, int>> interior_edges;
    std::vector<int> global_index;
    for (int e = 0; e < topo.m(); ++e) {
        auto [u, v] = topo.edges[static_cast<std::size_t>(e)];
        if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) {
            interior_edges.push_back({u, v});
            global_index.push_back(e);
        }
    }
    const Graph interior = Graph::from_edges(topo.n, std::move(interior_edges));
    for (const EdgeSet& local : fundamental_cycles(interior)) {
        EdgeSet global(topo.m());
        for (int e : local.indices()) global.toggle(global_index[static_cast<std::size_t>(e)]);
        if (!span.in_span(global)) return false;
    }
    return true;
}

TwoBasisVerdict is_two_basis(const CircuitBasis& b, const CayleyGraph& g) {
    TwoBasisVerdict v;
    v.generates = generates_cycle_space(b, g);
    const std::vector<int> inc = edge_incidence(b);
    v.max_incidence = inc.empty() ? 0 : *std::max_element(inc.begin(), inc.end());
    for (std::size_t e = 0; e < inc.size(); ++e) {
        if (inc[e] > 2) {
            v.witness_edge = static_cast<int>(e);
            for (int i = 0; i < b.size(); ++i)
                if (b.circuits[static_cast<std::size_t>(i)].edges.test(static_cast<int>(e)))
                    v.witness_circuits.push_back(i);
            break;
        }
    }
    v.pass = v.generates && v.max_incidence <= 2;
    return v;
}

std::string circuit_to_json(const EdgeSet& c) {
    nlohmann::ordered_json j = c.indices();
    return j.dump();
}

std::string basis_report_json(const CircuitBasis& b, const CayleyGraph& g) {
    const TwoBasisVerdict v = is_two_basis(b, g);
    nlohmann::ordered_json j;
    j["rank"] = basis_rank(b);
    j["cycle_space_dim"] = cycle_space_dim(g.topo());
    j["max_incidence"] = v.max_incidence;
    if (v.witness_edge)
        j["witness"] = {{"edge", *v.witness_edge}, {"circuits", v.witness_circuits}};
    else
        j["witness"] = nullptr;
    return j.dump();
}

}  // namespace cayplane
