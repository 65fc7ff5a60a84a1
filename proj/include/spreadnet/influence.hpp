#ifndef SPREADNET_INFLUENCE_HPP_
#define SPREADNET_INFLUENCE_HPP_

#include <array>
#include <iosfwd>
#include <vector>

#include "spreadnet/graph.hpp"

namespace spreadnet {

/// Influence a spreader exerts is cut off beyond third-order neighbors.
inline constexpr int kInfluenceRange = 3;

/// Slack on the I(v) <= 1 upper-limit test, shared by the redundant-influence
/// feasibility checks and the placement optimizer. Keeps float noise at the
/// exact boundary from flipping a verdict; the boundary I(v) = 1 itself is
/// feasible.
inline constexpr double kInfluenceSlack = 1e-12;

/// Influence a single spreader at the given shortest distance exerts on a
/// node: beta^d within range, 0 beyond it. Distance 0 (the node is itself a
/// spreader) yields 1. Throws std::domain_error unless beta is in (0, 1].
double pair_influence(int distance, double beta);

/// Total influence on a node exposed to n1/n2/n3 spreaders at distances
/// 1/2/3. Same-order spreaders aggregate binomially, orders add:
///   [1-(1-beta)^n1] + [1-(1-beta^2)^n2] + [1-(1-beta^3)^n3].
/// Each bracket lies in [0, 1), so the result is in [0, 3).
double total_influence(int n1, int n2, int n3, double beta);

/// The part of total influence exceeding the upper limit 1, i.e.
/// max(0, total_influence - 1).
double redundant_influence(int n1, int n2, int n3, double beta);

/// Per-node spreader counts at shortest distance exactly 1, 2 and 3.
/// Spreaders themselves carry no counts and are flagged instead.
struct ExposureCounts {
  std::vector<std::array<int, 3>> counts;
  std::vector<char> is_seed;

  int node_count() const { return static_cast<int>(counts.size()); }
};

/// Exposure of every non-seed node, computed by depth-3 BFS outward from
/// each seed. Distances run on the unperturbed graph, through other seeds
/// included. Seeds must be distinct graph nodes.
ExposureCounts exposure_counts(const Graph& g, const std::vector<int>& seeds);

/// Folds one more seed into existing counts, touching only the new seed's
/// depth-3 ball. Returns the non-seed nodes whose counts grew (ascending),
/// so callers re-check the upper limit only where influence could have
/// risen. Throws if new_seed is already a seed.
std::vector<int> incremental_exposure_update(ExposureCounts& counts,
                                             const Graph& g, int new_seed);

/// Network-wide influence and redundant-influence readout for one seed set.
struct RiReport {
  double beta = 0.0;
  std::vector<double> influence;   // I(v); 0 for seeds
  std::vector<double> redundant;   // RI(v) = max(0, I(v) - 1); 0 for seeds
  std::vector<char> is_seed;
  double total_ri = 0.0;           // sum of RI over non-seed nodes
  std::vector<int> violating_nodes;  // RI(v) > 0, ascending
};

RiReport ri_report(const Graph& g, const std::vector<int>& seeds, double beta);

/// CSV rows node_label,n1,n2,n3,I,RI for every non-seed node, then a
/// trailing "# beta=... total_ri=..." summary line.
void write_ri_csv(const Graph& g, const std::vector<int>& seeds, double beta,
                  std::ostream& out);

}  // namespace spreadnet

#endif  // SPREADNET_INFLUENCE_HPP_
