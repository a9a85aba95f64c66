#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayplane/cayley.hpp"
#include "cayplane/cyclespace.hpp"

namespace cayplane {

// Combinatorial embedding as a rotation system. Edge e owns darts 2e
// (at edges[e].first) and 2e+1 (at edges[e].second; loops keep both at
// the same vertex). Faces are the orbits of dart -> rotation-successor
// of the reverse dart; every dart lies on exactly one face walk.
struct RotationEmbedding {
    int n = 0;
    std::vector<std::pair<int, int>> edge_ends;
    std::vector<std::vector<int>> rot;        // per-vertex cyclic dart order
    std::vector<std::vector<int>> faces;      // dart walks
    std::vector<EdgeSet> face_circuits;       // odd-count edge set per walk
    int outer = 0;

    int dart_edge(int d) const { return d / 2; }
    int dart_vertex(int d) const {
        const auto& e = edge_ends[static_cast<std::size_t>(d / 2)];
        return (d & 1) ? e.second : e.first;
    }
    int face_count() const { return static_cast<int>(faces.size()); }
    bool euler_ok() const { return n - static_cast<int>(edge_ends.size()) + face_count() == 2; }

    std::vector<int> face_vertices(int f) const;  // sorted, deduplicated
    std::string to_json() const;
};

// Faces derived from an explicit rotation system.
RotationEmbedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotations);

struct NonPlanarWitness {
    EdgeSet edges;  // a K5 or K3,3 subdivision
};

using PlanarityResult = std::variant<RotationEmbedding, NonPlanarWitness>;

// Boyer-Myrvold planarity with Kuratowski extraction on failure.
PlanarityResult test_planarity(const Graph& g);

// One circuit per face walk, in face order (equal circuits may repeat).
std::vector<EdgeSet> enumerate_faces(const RotationEmbedding& e);

struct CannotRealize {
    enum class Stage { Incidence, Gluing, Euler } stage;
};

using RealizeResult = std::variant<RotationEmbedding, CannotRealize>;

// Glues the circuits of a verified 2-basis (plus their GF(2) sum when
// nonzero) into a rotation system whose faces are exactly those
// circuits; Euler characteristic 2 is verified.
RealizeResult embedding_from_two_basis(const Graph& g, const CircuitBasis& b);

struct ConnectivityReport {
    int kappa = 3;  // 1, 2, or 3 meaning ">= 3"
    std::vector<int> witness;  // cut vertex or separating pair when kappa < 3
    bool ball_scope = false;
    // Ball separator leaving a component that avoids the boundary
    // entirely; on a ball of an infinite vertex-transitive graph this
    // should never exist, so it is surfaced when found.
    std::optional<std::vector<int>> sepfin_candidate;

    std::string to_json() const;
};

// Exact vertex-connectivity class. On balls only separations between
// interior vertices count, so window-truncation artifacts at the
// boundary do not masquerade as cut vertices.
ConnectivityReport connectivity(const Graph& g, const BallInfo* ball = nullptr);
ConnectivityReport connectivity(const CayleyGraph& g);

struct TranslateFaceCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;  // (group element vertex, face index)
};

// Every left translate of every face circuit must again be a face
// circuit (full graphs only).
TranslateFaceCheck check_translate_faces(const CayleyGraph& g, const RotationEmbedding& e);

struct BallVapVerdict {
    bool consistent = false;
    bool exhaustive = true;       // search covered every embedding within budget
    std::optional<int> witness;   // boundary vertex off the designated face
    long long embeddings_tried = 0;
};

// Finite proxy for vertex-accumulation-freeness: some face must carry
// every boundary vertex of the ball. If the given embedding fails, an
// exhaustive rotation-system search per 2-connected block (parallel
// edges merged, loops dropped; both only ever enlarge face vertex
// sets) decides whether any embedding succeeds, up to `budget`
// rotation systems per block.
BallVapVerdict ball_vap_diagnostic(const CayleyGraph& g, const RotationEmbedding& e,
                                   long long budget = 10000);

// Search primitive shared by the diagnostic and its tests: does some
// planar rotation system of g put all of `required` on one face?
// Returns nullopt when the budget is exhausted first.
std::optional<bool> search_face_containing(const Graph& g, const std::vector<int>& required,
                                           long long budget, long long* tried = nullptr);

}  // namespace cayplane
