#include "cayplane/vapcheck.hpp"

#include <algorithm>

#include "json.hpp"

namespace cayplane {

std::string VapVerdict::to_json(const Presentation& p) const {
    nlohmann::ordered_json j;
    j["subword_ok"] = subword_ok;
    j["incidence_ok"] = (subword_ok || incidence_witness) ? nlohmann::ordered_json(incidence_ok)
                                                          : nlohmann::ordered_json(nullptr);
    j["overall"] = overall;
    j["scope"] = scope_radius < 0 ? "full" : ("ball(" + std::to_string(scope_radius) + ")");
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    if (subword_witness)
        w["subword"] = {{"relator", subword_witness->relator},
                        {"word", p.word_string(subword_witness->subword)}};
    if (incidence_witness)
        w["incidence"] = {{"edge", incidence_witness->edge},
                          {"circuits", incidence_witness->circuits}};
    j["witnesses"] = std::move(w);
    return j.dump();
}

VapVerdict check_subword_condition(const Presentation& p, const GroupModel& m) {
    VapVerdict v;
    v.subword_ok = true;

    struct Item {
        int relator;
        Word sub;
    };
    std::vector<Item> items;
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (Word& s : proper_cyclic_subwords(p.relators[r]))
            items.push_back({static_cast<int>(r), std::move(s)});

    const int total = static_cast<int>(items.size());
    std::vector<char> is_rel(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < total; ++i)
        is_rel[static_cast<std::size_t>(i)] = is_relation(m, items[static_cast<std::size_t>(i)].sub) ? 1 : 0;

    for (int i = 0; i < total; ++i) {
        if (is_rel[static_cast<std::size_t>(i)]) {
            v.subword_ok = false;
            v.subword_witness = SubwordWitness{items[static_cast<std::size_t>(i)].relator,
                                               items[static_cast<std::size_t>(i)].sub};
            break;
        }
    }
    v.overall = v.subword_ok;
    return v;
}

namespace {

std::optional<IncidenceWitness> incidence_failure(const CircuitBasis& basis,
                                                  const std::vector<int>& counts,
                                                  const std::vector<char>& eligible) {
    for (std::size_t e = 0; e < counts.size(); ++e) {
        if (counts[e] <= 2) continue;
        if (!eligible.empty() && !eligible[e]) continue;
        IncidenceWitness w;
        w.edge = static_cast<int>(e);
        for (int i = 0; i < basis.size(); ++i)
            if (basis.circuits[static_cast<std::size_t>(i)].edges.test(static_cast<int>(e)))
                w.circuits.push_back(i);
        return w;
    }
    return std::nullopt;
}

}  // namespace

VapVerdict check_edge_incidence(const CayleyGraph& g, IncidenceScan scan) {
    VapVerdict v;
    v.subword_ok = true;
    v.scope_radius = g.is_ball() ? g.ball->radius : -1;

    const CircuitBasis basis = relator_circuits(g);
    const std::vector<int> counts = edge_incidence(basis);
    std::vector<char> eligible;
    if (scan == IncidenceScan::IdentityEdges) {
        eligible.assign(static_cast<std::size_t>(g.m()), 0);
        for (int e = 0; e < g.m(); ++e)
            if (g.edges[static_cast<std::size_t>(e)].u == 0 || g.edges[static_cast<std::size_t>(e)].v == 0)
                eligible[static_cast<std::size_t>(e)] = 1;
    }
    v.incidence_witness = incidence_failure(basis, counts, eligible);
    v.incidence_ok = !v.incidence_witness.has_value();
    v.overall = v.incidence_ok;
    return v;
}

VapVerdict check_vap_presentation(const Presentation& p, const GroupModel& m,
                                  const CayleyGraph& g) {
    VapVerdict v = check_subword_condition(p, m);
    v.scope_radius = g.is_ball() ? g.ball->radius : -1;
    if (!v.subword_ok) {
        v.overall = false;
        return v;
    }

    VapVerdict inc = check_edge_incidence(g);
    v.incidence_ok = inc.incidence_ok;
    v.incidence_witness = inc.incidence_witness;

    // A ball pass is only trusted after re-counting on a window wide
    // enough that every walk through an edge of this ball fits inside.
    if (v.incidence_ok && g.is_ball() && !p.relators.empty()) {
        const int r = g.ball->radius;
        const int wide_r = r + static_cast<int>(p.max_relator_length());
        const CayleyGraph wide = build_ball(g.model, wide_r);
        const CircuitBasis basis = relator_circuits(wide);
        const std::vector<int> counts = edge_incidence(basis);
        std::vector<char> eligible(static_cast<std::size_t>(wide.m()), 0);
        for (int e = 0; e < wide.m(); ++e) {
            const EdgeRec& rec = wide.edges[static_cast<std::size_t>(e)];
            if (wide.ball->dist[static_cast<std::size_t>(rec.u)] <= r &&
                wide.ball->dist[static_cast<std::size_t>(rec.v)] <= r)
                eligible[static_cast<std::size_t>(e)] = 1;
        }
        if (auto w = incidence_failure(basis, counts, eligible)) {
            // report the witness as an edge of the original ball
            const EdgeRec& rec = wide.edges[static_cast<std::size_t>(w->edge)];
            const int u = g.vertex_of(wide.vertex_word[static_cast<std::size_t>(rec.u)]);
            const AlphabetMap& alpha = g.alphabet();
            int original = w->edge;
            if (u >= 0) {
                const StepTo s = g.step[static_cast<std::size_t>(u)][static_cast<std::size_t>(
                    alpha.gen_letter[static_cast<std::size_t>(rec.gen)][0])];
                if (s.edge >= 0) original = s.edge;
            }
            v.incidence_ok = false;
            v.incidence_witness = IncidenceWitness{original, w->circuits};
        }
    }
    v.overall = v.subword_ok && v.incidence_ok;
    return v;
}

}  // namespace cayplane
