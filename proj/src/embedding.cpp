#include "cayplane/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "json.hpp"

namespace cayplane {

std::vector<int> RotationEmbedding::face_vertices(int f) const {
    std::vector<int> vs;
    for (int d : faces[static_cast<std::size_t>(f)]) vs.push_back(dart_vertex(d));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string RotationEmbedding::to_json() const {
    nlohmann::ordered_json j;
    j["rotations"] = rot;
    j["faces"] = nlohmann::ordered_json::array();
    for (std::size_t f = 0; f < faces.size(); ++f) j["faces"].push_back(face_circuits[f].indices());
    j["outer"] = outer;
    return j.dump();
}

RotationEmbedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotations) {
    RotationEmbedding e;
    e.n = g.n;
    e.edge_ends = g.edges;
    e.rot = std::move(rotations);

    const int darts = 2 * g.m();
    std::vector<int> succ(static_cast<std::size_t>(darts), -1);  // rotation successor per dart
    for (int v = 0; v < g.n; ++v) {
        const auto& r = e.rot[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < r.size(); ++i)
            succ[static_cast<std::size_t>(r[i])] = r[(i + 1) % r.size()];
    }

    std::vector<char> visited(static_cast<std::size_t>(darts), 0);
    for (int d0 = 0; d0 < darts; ++d0) {
        if (visited[static_cast<std::size_t>(d0)]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            visited[static_cast<std::size_t>(d)] = 1;
            walk.push_back(d);
            d = succ[static_cast<std::size_t>(d ^ 1)];
        } while (d != d0);
        EdgeSet c(g.m());
        for (int dd : walk) c.toggle(dd / 2);
        e.faces.push_back(std::move(walk));
        e.face_circuits.push_back(std::move(c));
    }
    if (g.m() == 0) {
        e.faces.push_back({});
        e.face_circuits.push_back(EdgeSet(0));
    }
    return e;
}

PlanarityResult test_planarity(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(static_cast<std::size_t>(g.n));
    std::vector<int> loops;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v)
            loops.push_back(e);
        else
            boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), e, bg);
    }

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(static_cast<std::size_t>(g.n));
    std::vector<EdgeDesc> kuratowski;
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (!planar) {
        NonPlanarWitness w{EdgeSet(g.m())};
        for (const EdgeDesc& ed : kuratowski) w.edges.set(boost::get(boost::edge_index, bg, ed));
        return w;
    }

    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        for (const EdgeDesc& ed : emb[static_cast<std::size_t>(v)]) {
            const int e = boost::get(boost::edge_index, bg, ed);
            const auto [u, w] = g.edges[static_cast<std::size_t>(e)];
            rotations[static_cast<std::size_t>(v)].push_back(v == u ? 2 * e : 2 * e + 1);
        }
    }
    // Loops never affect planarity; give each a private corner at its
    // vertex (consecutive darts bound a one-edge face).
    for (int e : loops) {
        const int v = g.edges[static_cast<std::size_t>(e)].first;
        rotations[static_cast<std::size_t>(v)].push_back(2 * e);
        rotations[static_cast<std::size_t>(v)].push_back(2 * e + 1);
    }
    RotationEmbedding out = build_embedding(g, std::move(rotations));

    // Outer face: largest walk (balls override this downstream).
    int best = 0;
    for (int f = 1; f < out.face_count(); ++f)
        if (out.faces[static_cast<std::size_t>(f)].size() > out.faces[static_cast<std::size_t>(best)].size())
            best = f;
    out.outer = best;
    return out;
}

std::vector<EdgeSet> enumerate_faces(const RotationEmbedding& e) { return e.face_circuits; }

namespace {

// Trace a circuit that should be a single simple cycle; returns the
// directed edge sequence (edge, forward?) or nothing.
std::optional<std::vector<std::pair<int, bool>>> trace_single_cycle(const Graph& g, const EdgeSet& c) {
    std::vector<int> inc_count(static_cast<std::size_t>(g.n), 0);
    std::vector<int> members = c.indices();
    if (members.empty()) return std::nullopt;
    for (int e : members) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) return std::nullopt;
        ++inc_count[static_cast<std::size_t>(u)];
        ++inc_count[static_cast<std::size_t>(v)];
    }
    for (int e : members) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (inc_count[static_cast<std::size_t>(u)] != 2 || inc_count[static_cast<std::size_t>(v)] != 2)
            return std::nullopt;
    }
    const int start = g.edges[static_cast<std::size_t>(members.front())].first;
    std::vector<std::pair<int, bool>> seq;
    std::vector<char> used(static_cast<std::size_t>(g.m()), 0);
    int cur = start;
    while (true) {
        int next_edge = -1;
        for (auto [w, e] : g.adj[static_cast<std::size_t>(cur)]) {
            if (!c.test(e) || used[static_cast<std::size_t>(e)]) continue;
            next_edge = e;
            break;
        }
        if (next_edge < 0) break;
        used[static_cast<std::size_t>(next_edge)] = 1;
        const auto [u, v] = g.edges[static_cast<std::size_t>(next_edge)];
        const bool forward = (cur == u);
        seq.push_back({next_edge, forward});
        cur = forward ? v : u;
    }
    if (cur != start || seq.size() != members.size()) return std::nullopt;
    return seq;
}

}  // namespace

RealizeResult embedding_from_two_basis(const Graph& g, const CircuitBasis& b) {
    std::vector<EdgeSet> candidates;
    EdgeSet sum(g.m());
    for (const auto& c : b.circuits) {
        candidates.push_back(c.edges);
        sum ^= c.edges;
    }
    int sum_face = -1;
    if (!sum.empty()) {
        sum_face = static_cast<int>(candidates.size());
        candidates.push_back(sum);
    }

    // Every edge must lie on exactly two candidate faces.
    std::vector<int> cover(static_cast<std::size_t>(g.m()), 0);
    for (const EdgeSet& c : candidates)
        for (int e : c.indices()) ++cover[static_cast<std::size_t>(e)];
    for (int e = 0; e < g.m(); ++e)
        if (cover[static_cast<std::size_t>(e)] != 2) return CannotRealize{CannotRealize::Stage::Incidence};

    std::vector<std::vector<std::pair<int, bool>>> cycles;
    for (const EdgeSet& c : candidates) {
        auto seq = trace_single_cycle(g, c);
        if (!seq) return CannotRealize{CannotRealize::Stage::Gluing};
        cycles.push_back(std::move(*seq));
    }

    // Orient the faces so the two traversals of each edge disagree.
    const int nf = static_cast<int>(cycles.size());
    std::vector<std::vector<std::pair<int, bool>>> occ(static_cast<std::size_t>(g.m()));
    for (int f = 0; f < nf; ++f)
        for (auto [e, fwd] : cycles[static_cast<std::size_t>(f)])
            occ[static_cast<std::size_t>(e)].push_back({f, fwd});
    std::vector<int> color(static_cast<std::size_t>(nf), -1);
    for (int f0 = 0; f0 < nf; ++f0) {
        if (color[static_cast<std::size_t>(f0)] >= 0) continue;
        color[static_cast<std::size_t>(f0)] = 0;
        std::vector<int> stack{f0};
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (auto [e, fwd] : cycles[static_cast<std::size_t>(f)]) {
                const auto& pair = occ[static_cast<std::size_t>(e)];
                const auto [f1, d1] = pair[0];
                const auto [f2, d2] = pair[1];
                if (f1 == f2) {
                    if (d1 == d2) return CannotRealize{CannotRealize::Stage::Gluing};
                    continue;
                }
                const int need = 1 ^ (d1 ? 0 : 1) ^ (d2 ? 0 : 1);  // color xor requirement
                const int other = (f == f1) ? f2 : f1;
                const int want = color[static_cast<std::size_t>(f)] ^ need;
                if (color[static_cast<std::size_t>(other)] < 0) {
                    color[static_cast<std::size_t>(other)] = want;
                    stack.push_back(other);
                } else if (color[static_cast<std::size_t>(other)] != want) {
                    return CannotRealize{CannotRealize::Stage::Gluing};
                }
            }
        }
    }

    // Face permutation over darts; sigma = phi after reversal.
    const int darts = 2 * g.m();
    std::vector<int> phi(static_cast<std::size_t>(darts), -1);
    for (int f = 0; f < nf; ++f) {
        std::vector<std::pair<int, bool>> seq = cycles[static_cast<std::size_t>(f)];
        if (color[static_cast<std::size_t>(f)] == 1) {
            std::reverse(seq.begin(), seq.end());
            for (auto& [e, fwd] : seq) fwd = !fwd;
        }
        std::vector<int> ds;
        for (auto [e, fwd] : seq) ds.push_back(fwd ? 2 * e : 2 * e + 1);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const int d = ds[i];
            if (phi[static_cast<std::size_t>(d)] >= 0) return CannotRealize{CannotRealize::Stage::Gluing};
            phi[static_cast<std::size_t>(d)] = ds[(i + 1) % ds.size()];
        }
    }
    for (int d = 0; d < darts; ++d)
        if (phi[static_cast<std::size_t>(d)] < 0) return CannotRealize{CannotRealize::Stage::Gluing};

    // Rotation at v = orbit of sigma(d) = phi(d ^ 1); must be a single
    // cycle through all darts at v.
    RotationEmbedding emb;
    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(g.n));
    std::vector<int> darts_at(static_cast<std::size_t>(g.n), 0);
    auto vertex_of_dart = [&](int d) {
        const auto& e = g.edges[static_cast<std::size_t>(d / 2)];
        return (d & 1) ? e.second : e.first;
    };
    for (int d = 0; d < darts; ++d) ++darts_at[static_cast<std::size_t>(vertex_of_dart(d))];
    std::vector<char> placed(static_cast<std::size_t>(darts), 0);
    for (int d0 = 0; d0 < darts; ++d0) {
        if (placed[static_cast<std::size_t>(d0)]) continue;
        const int v = vertex_of_dart(d0);
        if (!rotations[static_cast<std::size_t>(v)].empty())
            return CannotRealize{CannotRealize::Stage::Gluing};  // second orbit at v
        int d = d0;
        do {
            if (vertex_of_dart(d) != v) return CannotRealize{CannotRealize::Stage::Gluing};
            placed[static_cast<std::size_t>(d)] = 1;
            rotations[static_cast<std::size_t>(v)].push_back(d);
            d = phi[static_cast<std::size_t>(d ^ 1)];
        } while (d != d0);
        if (static_cast<int>(rotations[static_cast<std::size_t>(v)].size()) !=
            darts_at[static_cast<std::size_t>(v)])
            return CannotRealize{CannotRealize::Stage::Gluing};
    }

    emb = build_embedding(g, std::move(rotations));
    if (!emb.euler_ok()) return CannotRealize{CannotRealize::Stage::Euler};
    if (emb.face_count() != nf) return CannotRealize{CannotRealize::Stage::Euler};
    if (sum_face >= 0) {
        for (int f = 0; f < emb.face_count(); ++f)
            if (emb.face_circuits[static_cast<std::size_t>(f)] == sum) emb.outer = f;
    } else {
        int best = 0;
        for (int f = 1; f < emb.face_count(); ++f)
            if (emb.faces[static_cast<std::size_t>(f)].size() >
                emb.faces[static_cast<std::size_t>(best)].size())
                best = f;
        emb.outer = best;
    }
    return emb;
}

// ------------------------------------------------------------- connectivity

namespace {

struct FlowNet {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add(int a, int b, int cap) {
        arcs[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(arcs[static_cast<std::size_t>(b)].size())});
        arcs[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(arcs[static_cast<std::size_t>(a)].size()) - 1});
    }
};

// Minimum s-t vertex cut capped at `limit`; fills `cut` when below it.
int st_vertex_cut(const Graph& g, int s, int t, int limit, std::vector<int>* cut) {
    const int N = 2 * g.n;
    FlowNet net(N);
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < g.n; ++v) net.add(vin(v), vout(v), (v == s || v == t) ? limit + 1 : 1);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        net.add(vout(u), vin(v), limit + 1);
        net.add(vout(v), vin(u), limit + 1);
    }
    const int src = vout(s), dst = vin(t);
    int flow = 0;
    while (flow < limit) {
        std::vector<std::pair<int, int>> from(static_cast<std::size_t>(N), {-1, -1});
        std::vector<int> queue{src};
        from[static_cast<std::size_t>(src)] = {src, -1};
        bool reached = false;
        for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
            const int x = queue[qi];
            const auto& ar = net.arcs[static_cast<std::size_t>(x)];
            for (std::size_t ai = 0; ai < ar.size(); ++ai) {
                if (ar[ai].cap <= 0 || from[static_cast<std::size_t>(ar[ai].to)].first >= 0) continue;
                from[static_cast<std::size_t>(ar[ai].to)] = {x, static_cast<int>(ai)};
                if (ar[ai].to == dst) {
                    reached = true;
                    break;
                }
                queue.push_back(ar[ai].to);
            }
        }
        if (!reached) break;
        int x = dst;
        while (x != src) {
            auto [px, pai] = from[static_cast<std::size_t>(x)];
            FlowNet::Arc& a = net.arcs[static_cast<std::size_t>(px)][static_cast<std::size_t>(pai)];
            a.cap -= 1;
            net.arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            x = px;
        }
        ++flow;
    }
    if (flow < limit && cut) {
        std::vector<char> reach(static_cast<std::size_t>(N), 0);
        std::vector<int> queue{src};
        reach[static_cast<std::size_t>(src)] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (const auto& a : net.arcs[static_cast<std::size_t>(queue[qi])])
                if (a.cap > 0 && !reach[static_cast<std::size_t>(a.to)]) {
                    reach[static_cast<std::size_t>(a.to)] = 1;
                    queue.push_back(a.to);
                }
        cut->clear();
        for (int v = 0; v < g.n; ++v)
            if (v != s && v != t && reach[static_cast<std::size_t>(vin(v))] && !reach[static_cast<std::size_t>(vout(v))])
                cut->push_back(v);
    }
    return flow;
}

bool is_complete_simple(const Graph& g) {
    if (g.n < 2) return true;
    for (int v = 0; v < g.n; ++v) {
        std::set<int> nbrs;
        for (auto [w, e] : g.adj[static_cast<std::size_t>(v)])
            if (w != v) nbrs.insert(w);
        if (static_cast<int>(nbrs.size()) < g.n - 1) return false;
    }
    return true;
}

}  // namespace

std::string ConnectivityReport::to_json() const {
    nlohmann::ordered_json j;
    j["kappa"] = kappa == 3 ? ">=3" : std::to_string(kappa);
    j["witness"] = witness;
    j["scope"] = ball_scope ? "ball-interior" : "full";
    if (sepfin_candidate)
        j["sepfin_counterexample_candidate"] = *sepfin_candidate;
    return j.dump();
}

ConnectivityReport connectivity(const Graph& g, const BallInfo* ball) {
    ConnectivityReport rep;
    rep.ball_scope = ball != nullptr;

    std::vector<char> essential(static_cast<std::size_t>(g.n), 1);
    if (ball)
        for (int v = 0; v < g.n; ++v)
            if (ball->dist[static_cast<std::size_t>(v)] >= ball->radius) essential[static_cast<std::size_t>(v)] = 0;
    std::vector<char> is_boundary(static_cast<std::size_t>(g.n), 0);
    if (ball)
        for (int v : ball->boundary) is_boundary[static_cast<std::size_t>(v)] = 1;

    if (is_complete_simple(g)) {
        rep.kappa = std::min(g.n - 1, 3);
        if (rep.kappa < 1) rep.kappa = 1;
        return rep;
    }

    // Cut vertices, counting only separations of essential vertices.
    std::optional<int> cut_vertex;
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
        removed[static_cast<std::size_t>(v)] = 1;
        int count = 0;
        const std::vector<int> comp = g.components(removed, &count);
        if (count < 2) continue;
        std::vector<int> essential_comps(static_cast<std::size_t>(count), 0);
        std::vector<int> boundary_comps(static_cast<std::size_t>(count), 0);
        std::vector<int> sizes(static_cast<std::size_t>(count), 0);
        for (int u = 0; u < g.n; ++u) {
            if (comp[static_cast<std::size_t>(u)] < 0) continue;
            ++sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])];
            if (essential[static_cast<std::size_t>(u)]) ++essential_comps[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])];
            if (ball && is_boundary[static_cast<std::size_t>(u)]) ++boundary_comps[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])];
        }
        int with_essential = 0;
        for (int c = 0; c < count; ++c)
            if (essential_comps[static_cast<std::size_t>(c)] > 0) ++with_essential;
        if (with_essential >= 2 && !cut_vertex) cut_vertex = v;
        if (ball && !rep.sepfin_candidate)
            for (int c = 0; c < count; ++c)
                if (sizes[static_cast<std::size_t>(c)] > 0 && boundary_comps[static_cast<std::size_t>(c)] == 0)
                    rep.sepfin_candidate = std::vector<int>{v};
    }
    if (cut_vertex) {
        rep.kappa = 1;
        rep.witness = {*cut_vertex};
        return rep;
    }

    // No counting cut vertex: min vertex cuts between essential anchors
    // and essential targets decide 2 versus >= 3. A separator of size
    // <= 2 misses at least one of three anchors.
    std::vector<int> anchors;
    for (int v = 0; v < g.n && static_cast<int>(anchors.size()) < 3; ++v)
        if (essential[static_cast<std::size_t>(v)]) anchors.push_back(v);
    for (int s : anchors) {
        std::set<int> s_adj{s};
        for (auto [w, e] : g.adj[static_cast<std::size_t>(s)]) s_adj.insert(w);
        for (int t = 0; t < g.n; ++t) {
            if (!essential[static_cast<std::size_t>(t)] || s_adj.count(t)) continue;
            std::vector<int> cut;
            const int flow = st_vertex_cut(g, s, t, 3, &cut);
            if (flow < 3) {
                rep.kappa = std::max(flow, 1);
                rep.witness = cut;
                return rep;
            }
        }
    }
    rep.kappa = 3;
    return rep;
}

ConnectivityReport connectivity(const CayleyGraph& g) {
    return connectivity(g.topo(), g.ball ? &*g.ball : nullptr);
}

// ------------------------------------------------------- translate x faces

TranslateFaceCheck check_translate_faces(const CayleyGraph& g, const RotationEmbedding& e) {
    std::set<EdgeSet> face_set(e.face_circuits.begin(), e.face_circuits.end());
    const int nf = e.face_count();
    const int nv = g.n();

    std::vector<std::optional<std::pair<int, int>>> bad(static_cast<std::size_t>(nv));
#pragma omp parallel for schedule(dynamic, 4)
    for (int x = 0; x < nv; ++x) {
        const Translation t = translate(g, g.vertex_word[static_cast<std::size_t>(x)]);
        for (int f = 0; f < nf; ++f) {
            EdgeSet image(g.m());
            for (int edge : e.face_circuits[static_cast<std::size_t>(f)].indices())
                image.toggle(t.edge_map[static_cast<std::size_t>(edge)]);
            if (!face_set.count(image)) {
                bad[static_cast<std::size_t>(x)] = {x, f};
                break;
            }
        }
    }
    for (int x = 0; x < nv; ++x)
        if (bad[static_cast<std::size_t>(x)]) return {false, bad[static_cast<std::size_t>(x)]};
    return {true, std::nullopt};
}

// --------------------------------------------------- exhaustive face search

namespace {

struct SimpleView {
    Graph graph;                  // parallel edges merged, loops dropped
    std::vector<int> orig_edge;   // representative original edge index
};

SimpleView simplify(const Graph& g) {
    SimpleView out;
    std::map<std::pair<int, int>, int> seen;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) continue;
        const auto key = std::minmax(u, v);
        if (seen.emplace(std::pair<int, int>(key.first, key.second), e).second) {
            edges.push_back({key.first, key.second});
            out.orig_edge.push_back(e);
        }
    }
    out.graph = Graph::from_edges(g.n, std::move(edges));
    return out;
}

long long factorial_capped(int k, long long cap) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
        if (f > cap) return cap + 1;
    }
    return f;
}

// Biconnected components; blocks returned as edge-index lists.
struct BlockDecomposition {
    std::vector<std::vector<int>> block_edges;
    std::vector<char> is_cut;
};

BlockDecomposition biconnected_blocks(const Graph& g) {
    BlockDecomposition out;
    out.is_cut.assign(static_cast<std::size_t>(g.n), 0);
    std::vector<int> num(static_cast<std::size_t>(g.n), -1), low(static_cast<std::size_t>(g.n), 0);
    std::vector<int> edge_stack;
    int counter = 0;

    struct Frame {
        int v, parent_edge;
        std::size_t next;
        int children = 0;
    };
    for (int root = 0; root < g.n; ++root) {
        if (num[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < g.adj[static_cast<std::size_t>(fr.v)].size()) {
                auto [w, e] = g.adj[static_cast<std::size_t>(fr.v)][fr.next++];
                if (e == fr.parent_edge || w == fr.v) continue;
                if (num[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.push_back(e);
                    num[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back({w, e, 0, 0});
                    ++fr.children;
                } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(fr.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(fr.v)] =
                        std::min(low[static_cast<std::size_t>(fr.v)], num[static_cast<std::size_t>(w)]);
                }
            } else {
                const Frame done = fr;
                stack.pop_back();
                if (stack.empty()) {
                    if (done.children >= 2) out.is_cut[static_cast<std::size_t>(done.v)] = 1;
                    continue;
                }
                Frame& par = stack.back();
                low[static_cast<std::size_t>(par.v)] =
                    std::min(low[static_cast<std::size_t>(par.v)], low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >= num[static_cast<std::size_t>(par.v)]) {
                    if (stack.size() > 1) out.is_cut[static_cast<std::size_t>(par.v)] = 1;
                    std::vector<int> block;
                    while (!edge_stack.empty()) {
                        const int e = edge_stack.back();
                        const auto [a, b] = g.edges[static_cast<std::size_t>(e)];
                        const bool deeper = std::max(num[static_cast<std::size_t>(a)], num[static_cast<std::size_t>(b)]) >=
                                            num[static_cast<std::size_t>(done.v)];
                        if (!deeper && e != done.parent_edge) break;
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == done.parent_edge) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.block_edges.push_back(std::move(block));
                }
            }
        }
    }
    // root cut detection above; blocks already collected
    return out;
}

}  // namespace

std::optional<bool> search_face_containing(const Graph& g, const std::vector<int>& required,
                                           long long budget, long long* tried) {
    if (tried) *tried = 0;
    if (g.m() == 0) return required.size() <= 1;

    // Per-vertex cyclic orders: first dart pinned; one vertex of degree
    // >= 3 additionally halved by reflection (reversing every rotation
    // preserves face vertex sets).
    std::vector<std::vector<int>> darts_at(static_cast<std::size_t>(g.n));
    for (int e = 0; e < g.m(); ++e) {
        darts_at[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)].push_back(2 * e);
        darts_at[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)].push_back(2 * e + 1);
    }
    int pivot = -1;
    long long total = 1;
    for (int v = 0; v < g.n; ++v) {
        const int d = static_cast<int>(darts_at[static_cast<std::size_t>(v)].size());
        if (pivot < 0 && d >= 3) pivot = v;
        long long f = factorial_capped(d - 1, budget);
        if (pivot == v) f = std::max<long long>(1, f / 2);
        if (f > budget / std::max<long long>(total, 1) && total * f > budget) {
            if (total > budget / std::max<long long>(f, 1)) return std::nullopt;
        }
        total *= f;
        if (total > budget) return std::nullopt;
    }

    std::vector<std::vector<std::vector<int>>> orders(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        auto& ds = darts_at[static_cast<std::size_t>(v)];
        std::sort(ds.begin(), ds.end());
        if (ds.size() <= 1) {
            orders[static_cast<std::size_t>(v)].push_back(ds);
            continue;
        }
        std::vector<int> rest(ds.begin() + 1, ds.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (v == pivot && rest.size() >= 2 && rest.front() > rest.back()) continue;
            std::vector<int> order{ds.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            orders[static_cast<std::size_t>(v)].push_back(std::move(order));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    const int first_n = static_cast<int>(orders[0].size());
    std::vector<char> found_branch(static_cast<std::size_t>(first_n), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int b = 0; b < first_n; ++b) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(g.n), 0);
        pick[0] = static_cast<std::size_t>(b);
        bool found = false;
        while (!found) {
            std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.n));
            for (int v = 0; v < g.n; ++v) rot[static_cast<std::size_t>(v)] = orders[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
            const RotationEmbedding emb = build_embedding(g, std::move(rot));
            if (emb.euler_ok()) {
                for (int f = 0; f < emb.face_count() && !found; ++f) {
                    const std::vector<int> vs = emb.face_vertices(f);
                    bool all = true;
                    for (int r : required)
                        if (!std::binary_search(vs.begin(), vs.end(), r)) {
                            all = false;
                            break;
                        }
                    if (all) found = true;
                }
            }
            // odometer over vertices 1..n-1
            int v = 1;
            for (; v < g.n; ++v) {
                if (++pick[static_cast<std::size_t>(v)] < orders[static_cast<std::size_t>(v)].size()) break;
                pick[static_cast<std::size_t>(v)] = 0;
            }
            if (v == g.n) break;
        }
        found_branch[static_cast<std::size_t>(b)] = found ? 1 : 0;
    }
    if (tried) *tried = total;
    for (char f : found_branch)
        if (f) return true;
    return false;
}

BallVapVerdict ball_vap_diagnostic(const CayleyGraph& g, const RotationEmbedding& e,
                                   long long budget) {
    BallVapVerdict verdict;
    if (!g.is_ball() || g.ball->boundary.empty()) {
        verdict.consistent = true;
        return verdict;
    }
    const std::vector<int>& boundary = g.ball->boundary;

    // Try the given embedding first; remember the best face as witness base.
    int best_face = 0, best_cover = -1;
    for (int f = 0; f < e.face_count(); ++f) {
        const std::vector<int> vs = e.face_vertices(f);
        int cover = 0;
        for (int b : boundary)
            if (std::binary_search(vs.begin(), vs.end(), b)) ++cover;
        if (cover > best_cover) {
            best_cover = cover;
            best_face = f;
        }
        if (cover == static_cast<int>(boundary.size())) {
            verdict.consistent = true;
            return verdict;
        }
    }
    {
        const std::vector<int> vs = e.face_vertices(best_face);
        for (int b : boundary)
            if (!std::binary_search(vs.begin(), vs.end(), b)) {
                verdict.witness = b;
                break;
            }
    }

    // Exhaustive search per 2-connected block of the simplified graph.
    // Merging parallel edges and dropping loops only ever enlarges face
    // vertex sets, so verdicts transfer to the multigraph.
    const SimpleView sv = simplify(g.topo());
    const BlockDecomposition blocks = biconnected_blocks(sv.graph);
    std::vector<char> required_mask(static_cast<std::size_t>(g.n()), 0);
    for (int b : boundary) required_mask[static_cast<std::size_t>(b)] = 1;

    const int nb = static_cast<int>(blocks.block_edges.size());
    // Block-cut tree: block b adjacent to each cut vertex it contains.
    std::vector<std::vector<int>> block_vertices(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
        std::set<int> vs;
        for (int edge : blocks.block_edges[static_cast<std::size_t>(b)]) {
            vs.insert(sv.graph.edges[static_cast<std::size_t>(edge)].first);
            vs.insert(sv.graph.edges[static_cast<std::size_t>(edge)].second);
        }
        block_vertices[static_cast<std::size_t>(b)].assign(vs.begin(), vs.end());
    }
    std::vector<int> cut_ids;
    std::map<int, int> cut_node;  // vertex -> tree node id
    for (int v = 0; v < sv.graph.n; ++v)
        if (blocks.is_cut[static_cast<std::size_t>(v)]) {
            cut_node[v] = nb + static_cast<int>(cut_ids.size());
            cut_ids.push_back(v);
        }
    const int tree_n = nb + static_cast<int>(cut_ids.size());
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(tree_n));
    for (int b = 0; b < nb; ++b)
        for (int v : block_vertices[static_cast<std::size_t>(b)])
            if (cut_node.count(v)) {
                tree[static_cast<std::size_t>(b)].push_back(cut_node[v]);
                tree[static_cast<std::size_t>(cut_node[v])].push_back(b);
            }

    // Steiner subtree spanning every node that carries a required vertex.
    std::vector<char> marked(static_cast<std::size_t>(tree_n), 0);
    for (int b = 0; b < nb; ++b)
        for (int v : block_vertices[static_cast<std::size_t>(b)])
            if (required_mask[static_cast<std::size_t>(v)] && !blocks.is_cut[static_cast<std::size_t>(v)]) marked[static_cast<std::size_t>(b)] = 1;
    for (std::size_t c = 0; c < cut_ids.size(); ++c)
        if (required_mask[static_cast<std::size_t>(cut_ids[c])]) marked[static_cast<std::size_t>(nb) + c] = 1;
    std::vector<char> in_tree(static_cast<std::size_t>(tree_n), 1);
    std::vector<int> deg(static_cast<std::size_t>(tree_n), 0);
    for (int x = 0; x < tree_n; ++x) deg[static_cast<std::size_t>(x)] = static_cast<int>(tree[static_cast<std::size_t>(x)].size());
    std::vector<int> leaves;
    for (int x = 0; x < tree_n; ++x)
        if (deg[static_cast<std::size_t>(x)] <= 1 && !marked[static_cast<std::size_t>(x)]) leaves.push_back(x);
    while (!leaves.empty()) {
        const int x = leaves.back();
        leaves.pop_back();
        in_tree[static_cast<std::size_t>(x)] = 0;
        for (int y : tree[static_cast<std::size_t>(x)])
            if (in_tree[static_cast<std::size_t>(y)] && --deg[static_cast<std::size_t>(y)] <= 1 && !marked[static_cast<std::size_t>(y)])
                leaves.push_back(y);
    }

    bool all_sufficient = true;
    bool any_budget_miss = false;
    for (int b = 0; b < nb; ++b) {
        if (!in_tree[static_cast<std::size_t>(b)]) continue;
        // Reindex the block subgraph.
        std::map<int, int> local;
        for (int v : block_vertices[static_cast<std::size_t>(b)]) local.emplace(v, static_cast<int>(local.size()));
        std::vector<std::pair<int, int>> edges;
        for (int edge : blocks.block_edges[static_cast<std::size_t>(b)])
            edges.push_back({local[sv.graph.edges[static_cast<std::size_t>(edge)].first],
                             local[sv.graph.edges[static_cast<std::size_t>(edge)].second]});
        const Graph bg = Graph::from_edges(static_cast<int>(local.size()), std::move(edges));

        std::vector<int> necessity, sufficiency;
        for (int v : block_vertices[static_cast<std::size_t>(b)]) {
            if (required_mask[static_cast<std::size_t>(v)]) necessity.push_back(local[v]);
            if (required_mask[static_cast<std::size_t>(v)] ||
                (cut_node.count(v) && in_tree[static_cast<std::size_t>(cut_node[v])]))
                sufficiency.push_back(local[v]);
        }

        long long tried = 0;
        const std::optional<bool> suff = search_face_containing(bg, sufficiency, budget, &tried);
        verdict.embeddings_tried += tried;
        if (suff == true) continue;
        std::optional<bool> nec = suff;
        if (sufficiency != necessity) {
            nec = search_face_containing(bg, necessity, budget, &tried);
            verdict.embeddings_tried += tried;
        }
        if (nec == false) {
            verdict.consistent = false;
            verdict.exhaustive = true;
            return verdict;
        }
        all_sufficient = false;
        if (!suff.has_value() || !nec.has_value()) any_budget_miss = true;
    }

    if (all_sufficient) {
        verdict.consistent = true;
        verdict.witness.reset();
        return verdict;
    }
    verdict.consistent = false;
    verdict.exhaustive = !any_budget_miss;
    return verdict;
}

}  // namespace cayplane
