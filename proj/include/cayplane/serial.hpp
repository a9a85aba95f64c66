#pragma once

#include <vector>

#include "cayplane/cyclespace.hpp"

namespace cayplane::serial {

// Straight-line reference implementations of the OpenMP kernels. Tests
// cross-check these against the parallel versions; tools/bench times
// both. Keep them simple rather than fast.

CircuitBasis relator_circuits(const CayleyGraph& g);
std::vector<int> edge_incidence(const CircuitBasis& b);
int gf2_rank(const std::vector<EdgeSet>& vecs);

}  // namespace cayplane::serial
