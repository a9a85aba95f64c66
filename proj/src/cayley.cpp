#include "cayplane/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace cayplane {

const AlphabetMap& CayleyGraph::alphabet() const {
    return model->finite() ? model->coset_table().alpha : model->rewriting().alpha;
}

int CayleyGraph::vertex_of(const Word& canonical) const {
    const auto it = index_.find(alphabet().encode(canonical));
    return it == index_.end() ? -1 : it->second;
}

Graph CayleyGraph::topo() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edges.size());
    for (const EdgeRec& e : edges) es.push_back({e.u, e.v});
    return Graph::from_edges(n(), std::move(es));
}

struct CayleyBuilder {
    static CayleyGraph build(const std::shared_ptr<const GroupModel>& m, int radius) {
        const Presentation& p = m->presentation;
        const AlphabetMap alpha = AlphabetMap::build(p);
        CayleyGraph g;
        g.model = m;

        // Vertex set: whole group (radius < 0) or BFS ball in letter steps.
        auto add_vertex = [&](const Word& w) {
            const int idx = g.n();
            g.vertex_word.push_back(w);
            g.index_.emplace(alpha.encode(w), idx);
            return idx;
        };
        std::vector<int> dist;
        add_vertex({});
        dist.push_back(0);
        for (std::size_t qi = 0; qi < g.vertex_word.size(); ++qi) {
            if (radius >= 0 && dist[qi] >= radius) continue;
            const Word cur = g.vertex_word[qi];
            for (const Letter& l : alpha.letters) {
                Word next = cur;
                next.push_back(l);
                const Word nf = normal_form(*m, next);
                const std::string key = alpha.encode(nf);
                if (!g.index_.count(key)) {
                    add_vertex(nf);
                    dist.push_back(dist[qi] + 1);
                }
            }
        }

        // Edges: one directed edge per (vertex, non-involution generator),
        // one undirected edge per involution vertex pair; in balls only
        // edges with both endpoints inside are kept.
        g.step.assign(static_cast<std::size_t>(g.n()),
                      std::vector<StepTo>(static_cast<std::size_t>(alpha.size())));
        auto target = [&](int v, const Letter& l) {
            Word w = g.vertex_word[static_cast<std::size_t>(v)];
            w.push_back(l);
            return g.vertex_of(normal_form(*m, w));
        };
        for (int v = 0; v < g.n(); ++v) {
            for (std::size_t gi = 0; gi < p.generators.size(); ++gi) {
                const int gen = static_cast<int>(gi);
                if (p.generators[gi].involution) {
                    const Letter l = alpha.letters[static_cast<std::size_t>(alpha.gen_letter[gi][0])];
                    const int w = target(v, l);
                    if (w < 0 || (w < v)) continue;  // added from the smaller endpoint
                    const int e = g.m();
                    g.edges.push_back({v, w, gen, false});
                    g.step[static_cast<std::size_t>(v)][static_cast<std::size_t>(alpha.gen_letter[gi][0])] = {w, e};
                    if (w != v)
                        g.step[static_cast<std::size_t>(w)][static_cast<std::size_t>(alpha.gen_letter[gi][0])] = {v, e};
                } else {
                    const Letter fwd{static_cast<std::int16_t>(gen), 1};
                    const int w = target(v, fwd);
                    if (w < 0) continue;
                    const int e = g.m();
                    g.edges.push_back({v, w, gen, true});
                    g.step[static_cast<std::size_t>(v)][static_cast<std::size_t>(alpha.gen_letter[gi][0])] = {w, e};
                    g.step[static_cast<std::size_t>(w)][static_cast<std::size_t>(alpha.gen_letter[gi][1])] = {v, e};
                }
            }
        }

        if (radius >= 0) {
            BallInfo info;
            info.radius = radius;
            info.dist = dist;
            for (int v = 0; v < g.n(); ++v)
                if (dist[static_cast<std::size_t>(v)] == radius) info.boundary.push_back(v);
            g.ball = std::move(info);
        }
        return g;
    }
};

CayleyGraph build_graph(const std::shared_ptr<const GroupModel>& m) {
    if (!m->finite())
        throw std::invalid_argument("build_graph needs a finite model; use build_ball");
    return CayleyBuilder::build(m, -1);
}

CayleyGraph build_ball(const std::shared_ptr<const GroupModel>& m, int radius) {
    if (radius < 1) throw std::invalid_argument("ball radius must be >= 1");
    return CayleyBuilder::build(m, radius);
}

Word vertex_times(const CayleyGraph& g, const Word& x, int vertex) {
    return mult(*g.model, x, g.vertex_word[static_cast<std::size_t>(vertex)]);
}

Translation translate(const CayleyGraph& g, const Word& x) {
    if (g.is_ball()) throw BallUnsupported{};
    Translation t;
    t.element = normal_form(*g.model, x);
    t.vertex_map.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        const int image = g.vertex_of(vertex_times(g, t.element, v));
        assert(image >= 0);
        t.vertex_map[static_cast<std::size_t>(v)] = image;
    }
    t.edge_map.resize(static_cast<std::size_t>(g.m()));
    const AlphabetMap& alpha = g.alphabet();
    for (int e = 0; e < g.m(); ++e) {
        const EdgeRec& rec = g.edges[static_cast<std::size_t>(e)];
        const int mu = t.vertex_map[static_cast<std::size_t>(rec.u)];
        const StepTo s = g.step[static_cast<std::size_t>(mu)]
                               [static_cast<std::size_t>(alpha.gen_letter[static_cast<std::size_t>(rec.gen)][0])];
        assert(s.edge >= 0 && s.to == t.vertex_map[static_cast<std::size_t>(rec.v)]);
        t.edge_map[static_cast<std::size_t>(e)] = s.edge;
    }
    return t;
}

std::string CayleyGraph::to_dot() const {
    const Presentation& p = presentation();
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (int v = 0; v < n(); ++v) {
        out << "  v" << v << " [label=\""
            << (vertex_word[static_cast<std::size_t>(v)].empty()
                    ? "e"
                    : p.word_string(vertex_word[static_cast<std::size_t>(v)]))
            << "\"];\n";
    }
    for (const EdgeRec& e : edges) {
        out << "  v" << e.u << " -> v" << e.v << " [label=\"" << p.generators[static_cast<std::size_t>(e.gen)].symbol
            << "\"";
        if (!e.directed) out << ", dir=none";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string CayleyGraph::to_json() const {
    const Presentation& p = presentation();
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const Word& w : vertex_word) j["vertices"].push_back(w.empty() ? "" : p.word_string(w));
    j["edges"] = nlohmann::ordered_json::array();
    for (const EdgeRec& e : edges)
        j["edges"].push_back({{"u", e.u},
                              {"v", e.v},
                              {"label", std::string(1, p.generators[static_cast<std::size_t>(e.gen)].symbol)},
                              {"directed", e.directed}});
    if (ball) {
        nlohmann::ordered_json b;
        b["radius"] = ball->radius;
        b["boundary"] = nlohmann::ordered_json::array();
        for (int v : ball->boundary)
            b["boundary"].push_back(vertex_word[static_cast<std::size_t>(v)].empty()
                                        ? ""
                                        : p.word_string(vertex_word[static_cast<std::size_t>(v)]));
        j["ball"] = std::move(b);
    }
    return j.dump();
}

}  // namespace cayplane
