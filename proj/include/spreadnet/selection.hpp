#ifndef SPREADNET_SELECTION_HPP_
#define SPREADNET_SELECTION_HPP_

#include <string>
#include <vector>

#include "spreadnet/graph.hpp"

namespace spreadnet {

enum class ConvergedReason {
  kReachedM,                // selected the requested m spreaders
  kNoFeasibleCandidate,     // candidates remained but none was admissible
  kExhaustedDegreeFilter,   // ran out of degree >= 2 candidates entirely
};

const char* to_string(ConvergedReason reason);

/// A selected spreader set, in selection order.
struct Selection {
  std::vector<int> nodes;
  ConvergedReason converged_reason = ConvergedReason::kReachedM;
};

/// Node ids sorted by degree descending, ties broken by ascending id. All
/// selectors walk (or rank consistently with) this order, so results are
/// deterministic.
std::vector<int> degree_order(const Graph& g);

/// Top-m nodes by degree.
Selection select_degree(const Graph& g, int m);

/// Degree-ordered greedy that admits a candidate only if, once added, no
/// non-spreader node receives redundant influence (total influence above 1).
/// Degree-1 nodes are filtered out; the scan can converge before reaching m
/// when every remaining candidate would create redundant influence.
Selection select_dri(const Graph& g, double beta, int m);

/// Degree-ordered greedy that admits a candidate only if its shortest
/// distance to every selected spreader is at least 3 (no shared first-order
/// neighbors). Degree-1 nodes are filtered out.
Selection select_dsn(const Graph& g, int m);

/// Neighborhood coreness: score(v) = sum of coreness over v's neighbors;
/// top-m by score, ties by higher degree then ascending id.
Selection select_nc(const Graph& g, int m);

/// Degree-ordered greedy that admits a candidate only if it is adjacent to
/// no selected spreader (pairwise distance >= 2).
Selection select_nd(const Graph& g, int m);

/// Collective influence with ball radius `radius`: repeatedly pick the node
/// maximizing (k_v - 1) * sum of (k_u - 1) over the frontier at distance
/// exactly `radius`, then delete it from the residual graph. Degrees are
/// residual. Stops early when only isolated nodes remain.
Selection select_ci(const Graph& g, int m, int radius = 2);

}  // namespace spreadnet

#endif  // SPREADNET_SELECTION_HPP_
