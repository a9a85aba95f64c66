#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayplane/graph.hpp"
#include "cayplane/wordproblem.hpp"

namespace cayplane {

// Labeled Cayley graph edge. Directed edges run u --gen--> v (v = u*gen);
// involution generators get a single undirected edge per vertex pair.
struct EdgeRec {
    int u = 0, v = 0;
    int gen = 0;
    bool directed = true;
};

struct BallInfo {
    int radius = 0;
    std::vector<int> dist;      // per vertex, word distance in the merged graph
    std::vector<int> boundary;  // vertices at distance exactly radius
};

struct StepTo {
    int to = -1;
    int edge = -1;
};

struct CayleyGraph {
    std::shared_ptr<const GroupModel> model;
    std::vector<Word> vertex_word;  // canonical words, identity first
    std::vector<EdgeRec> edges;
    std::vector<std::vector<StepTo>> step;  // step[v][letter]; missing in balls
    std::optional<BallInfo> ball;

    int n() const { return static_cast<int>(vertex_word.size()); }
    int m() const { return static_cast<int>(edges.size()); }
    bool is_ball() const { return ball.has_value(); }

    const Presentation& presentation() const { return model->presentation; }
    const AlphabetMap& alphabet() const;
    int vertex_of(const Word& canonical) const;  // -1 if absent

    Graph topo() const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    friend CayleyGraph build_graph(std::shared_ptr<const GroupModel>, int);
    std::unordered_map<std::string, int> index_;
    friend struct CayleyBuilder;
};

struct BallUnsupported : std::logic_error {
    BallUnsupported() : std::logic_error("left translation is not defined on a ball") {}
};

// Label-preserving automorphism x |-> element * x of a full Cayley graph.
struct Translation {
    Word element;
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
};

// Full Cayley graph of a finite model; vertex order = shortlex.
CayleyGraph build_graph(const std::shared_ptr<const GroupModel>& m);

// Radius-r ball around the identity in the merged-edge word metric;
// includes every labeled edge with both endpoints inside.
CayleyGraph build_ball(const std::shared_ptr<const GroupModel>& m, int radius);

Translation translate(const CayleyGraph& g, const Word& x);

// Composition helper used by the translation property tests.
Word vertex_times(const CayleyGraph& g, const Word& x, int vertex);

}  // namespace cayplane
