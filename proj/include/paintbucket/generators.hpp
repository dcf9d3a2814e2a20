#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "paintbucket/ae.hpp"
#include "paintbucket/position.hpp"

namespace paintbucket {

using Rng = std::mt19937_64;

/// K_{blacks,whites}: black ids 0..blacks-1, white ids blacks..blacks+whites-1.
BipartitePosition complete_bipartite(int blacks, int whites);

/// Random tree grown by attaching each new vertex to a random earlier one
/// (taking the opposite color), plus every remaining black-white pair with
/// probability `extra_edge_probability`. Ids are 0..vertices-1.
BipartitePosition random_connected_bipartite(Rng& rng, int vertices, double extra_edge_probability);

/// A connected bipartite graph with `leaves` black leaves hanging off the
/// white `hub`. `white_count` is the number of white vertices overall.
struct ClawInstance {
  BipartitePosition position;
  VertexId hub;
  int leaves;
  int white_count;
};

/// Total size stays within `max_vertices`; white_count <= leaves always.
ClawInstance random_claw(Rng& rng, int max_vertices, int max_leaves);

/// `twins` all share one color and the same neighborhood.
struct TwinInstance {
  BipartitePosition position;
  std::vector<VertexId> twins;
};

TwinInstance random_twins(Rng& rng, int max_base_vertices, int max_twins);

/// Every ordered family of at most `max_sets` subsets over cells c1..c<cells>.
std::vector<AePosition> enumerate_ae(int cells, int max_sets, AePlayer to_move);

}  // namespace paintbucket
