#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "paintbucket/ae.hpp"
#include "paintbucket/position.hpp"
#include "paintbucket/solver.hpp"

namespace paintbucket {

enum class RoleType : unsigned char { V, U, W, T, R, S };

std::string_view to_string(RoleType t) noexcept;

/// Which gadget vertex an id plays. Indices are 1-based like c_i, A_j and
/// w_k; unused indices stay 0.
struct VertexRole {
  RoleType type;
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Paintbucket graph simulating an avoider-enforcer game.
///
/// Black side: v_i (one per cell), w_k (k = 1..K) and the universal r.
/// White side: u_i (one per cell), t_{j,k} (K per avoider set) and the
/// universal s. Edges: r and s see every vertex of the other color, u_i
/// sees {r, v_i}, every w_k sees every t_{j,k'}, and v_i sees t_{j,k} for
/// all k iff c_i is in A_j.
struct ReductionInstance {
  AePosition ae;
  int K;
  BipartitePosition graph;
  std::map<VertexId, VertexRole> roles;

  VertexId id_of(const VertexRole& role) const;
};

/// Ids are assigned densely from 0 in the order r, s, v_1..v_I, u_1..u_I,
/// w_1..w_K, t_{1,1}..t_{1,K}, ..., t_{J,K}. Throws PreconditionError for K < 1.
ReductionInstance build_reduction(const AePosition& ae, int K);

/// |C| + 2, the smallest K for which off-type moves are sure to lose.
int default_K(const AePosition& ae) noexcept;

/// Structural audit against the construction; returns one message per
/// violated property (empty when the instance is sound).
std::vector<std::string> audit_instance(const ReductionInstance& ri);

/// Black at u_i must give a graph isomorphic to the instance built from the
/// avoider's move at c_i; White at v_i must match the enforcer's move.
/// Throws IllegalMove for an unknown cell.
bool verify_simulation_step(const ReductionInstance& ri, std::string_view cell, Color player);

/// Every move by `player` that is not at its intended type (White off the
/// v vertices, Black off the u vertices) must lose. Throws
/// PreconditionError when K < |C| + 2, or for Black when there are no
/// avoider sets.
bool verify_shenanigans(const ReductionInstance& ri, Color player,
                        const SolveOptions& opts = isomorphism_options());

/// Winner correspondence between the avoider-enforcer game and its graph:
/// for even |C|, Black wins moving first iff the avoider wins moving first;
/// for odd |C|, Black wins moving second iff the avoider wins moving second.
/// Returns the truth of that biconditional. Throws PreconditionError when
/// K < |C| + 2.
bool verify_proposition(const AePosition& ae, int K,
                        const SolveOptions& opts = isomorphism_options());

struct DecisionInstance {
  BipartitePosition graph;
  Color to_move;
  AePosition normalized;
  int K;
  /// Human-readable normalization steps that were applied, in order.
  std::vector<std::string> steps;
  ReductionInstance instance;
};

/// Normalizes to avoider-first with an even number of cells, then builds
/// the graph with K = |C| + 2 and Black to move. Black wins the result iff
/// the avoider wins the input.
DecisionInstance reduce_decision(const AePosition& ae);

}  // namespace paintbucket
