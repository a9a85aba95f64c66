#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayplane/cayley.hpp"
#include "cayplane/edgeset.hpp"

namespace cayplane {

// Closed walk in a Cayley graph; when relator-induced, relator/base
// record which relator was traced from which vertex.
struct ClosedWalk {
    int base = 0;
    std::vector<int> vertex_seq;  // length = edges + 1, first == last == base
    std::vector<int> edge_seq;
    int relator = -1;
};

struct LeavesBall {
    Word prefix;  // the shortest relator prefix whose trace exits the ball
};

using WalkResult = std::variant<ClosedWalk, LeavesBall>;

WalkResult walk_of_relator(const CayleyGraph& g, const Word& relator, int base);

// Edges traversed an odd number of times; always a cycle-space member.
EdgeSet circuit_of_walk(const ClosedWalk& w, int edge_count);

struct ProvenancedCircuit {
    EdgeSet edges;
    int relator = -1;  // first walk that produced this circuit
    int base = -1;
};

struct CircuitBasis {
    std::vector<ProvenancedCircuit> circuits;
    int edge_universe = 0;

    int size() const { return static_cast<int>(circuits.size()); }
};

// Circuits of all relator walks from all base vertices (balls: bases
// whose walk stays inside), empty circuits dropped, first-seen dedup.
CircuitBasis relator_circuits(const CayleyGraph& g);

int basis_rank(const CircuitBasis& b);

// Per-edge count of circuits containing the edge.
std::vector<int> edge_incidence(const CircuitBasis& b);

// Cycle-space dimension |E| - |V| + c of an undirected graph.
int cycle_space_dim(const Graph& g);

// Full graphs: GF(2) rank of b equals |E| - |V| + 1. Balls: every cycle
// of the subgraph induced on vertices deeper than the longest relator
// lies in the span of b.
bool generates_cycle_space(const CircuitBasis& b, const CayleyGraph& g);

struct TwoBasisVerdict {
    bool pass = false;
    bool generates = false;
    int max_incidence = 0;
    std::optional<int> witness_edge;            // lowest edge with incidence > 2
    std::vector<int> witness_circuits;          // circuits through the witness edge
};

TwoBasisVerdict is_two_basis(const CircuitBasis& b, const CayleyGraph& g);

// Fundamental circuits of a BFS spanning forest; generates the whole
// cycle space of g and doubles as the independent rank oracle.
std::vector<EdgeSet> fundamental_cycles(const Graph& g);

std::string circuit_to_json(const EdgeSet& c);
std::string basis_report_json(const CircuitBasis& b, const CayleyGraph& g);

}  // namespace cayplane
