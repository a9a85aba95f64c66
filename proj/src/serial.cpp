#include "cayplane/serial.hpp"

namespace cayplane::serial {

CircuitBasis relator_circuits(const CayleyGraph& g) {
    const Presentation& p = g.presentation();
    CircuitBasis out;
    out.edge_universe = g.m();
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (int b = 0; b < g.n(); ++b) {
            const WalkResult res = walk_of_relator(g, p.relators[r], b);
            const ClosedWalk* walk = std::get_if<ClosedWalk>(&res);
            if (!walk) continue;
            EdgeSet c = circuit_of_walk(*walk, g.m());
            if (c.empty()) continue;
            bool dup = false;
            for (const auto& prev : out.circuits)
                if (prev.edges == c) {
                    dup = true;
                    break;
                }
            if (!dup) out.circuits.push_back({std::move(c), static_cast<int>(r), b});
        }
    }
    return out;
}

std::vector<int> edge_incidence(const CircuitBasis& b) {
    std::vector<int> counts(static_cast<std::size_t>(b.edge_universe), 0);
    for (const auto& c : b.circuits)
        for (int e = 0; e < b.edge_universe; ++e)
            if (c.edges.test(e)) ++counts[static_cast<std::size_t>(e)];
    return counts;
}

int gf2_rank(const std::vector<EdgeSet>& vecs) {
    Gf2Eliminator elim;
    for (const EdgeSet& v : vecs) elim.insert(v);
    return elim.rank();
}

}  // namespace cayplane::serial
