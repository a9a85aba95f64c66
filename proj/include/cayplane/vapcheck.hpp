#pragma once

#include <optional>
#include <string>

#include "cayplane/cyclespace.hpp"

namespace cayplane {

struct SubwordWitness {
    int relator = -1;
    Word subword;  // proper cyclic subword that is a relation
};

struct IncidenceWitness {
    int edge = -1;
    std::vector<int> circuits;  // indices of relator circuits through it
};

struct VapVerdict {
    bool subword_ok = false;
    bool incidence_ok = false;
    bool overall = false;
    std::optional<SubwordWitness> subword_witness;
    std::optional<IncidenceWitness> incidence_witness;
    int scope_radius = -1;  // -1 = full graph, else ball(r)

    std::string to_json(const Presentation& p) const;
};

// "No proper cyclic subword of any relator is a relation"; witness is
// the first failing (relator, subword) in scan order.
VapVerdict check_subword_condition(const Presentation& p, const GroupModel& m);

enum class IncidenceScan { Full, IdentityEdges };

// "Every edge lies on at most two relator-induced circuits". The
// identity-edge scan uses vertex transitivity and only inspects edges
// at the identity; full scan is the default.
VapVerdict check_edge_incidence(const CayleyGraph& g,
                                IncidenceScan scan = IncidenceScan::Full);

// Subword condition first, edge incidence only if it passes. On balls a
// pass is re-checked on the radius r + max-relator-length ball so walks
// clipped by the window cannot hide an over-incident edge.
VapVerdict check_vap_presentation(const Presentation& p, const GroupModel& m,
                                  const CayleyGraph& g);

}  // namespace cayplane
