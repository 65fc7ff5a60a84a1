#ifndef SPREADNET_PLACEMENT_HPP_
#define SPREADNET_PLACEMENT_HPP_

#include <vector>

namespace spreadnet {

/// Spreader counts at the first/second/third-order neighborhoods of one
/// non-spreader node, ordered x1 <= x2 <= x3.
struct PlacementTriple {
  int x1 = 0;
  int x2 = 0;
  int x3 = 0;

  bool operator==(const PlacementTriple&) const = default;
};

/// True iff the placement keeps the node's total influence within its upper
/// limit (<= 1, with the shared boundary slack). Throws std::domain_error
/// when the ordering invariant x1 <= x2 <= x3 is violated.
bool placement_feasible(const PlacementTriple& triple, double beta);

/// All maximal feasible placements with coordinates up to `bound`. Maximal
/// means no single coordinate can be incremented by 1 (re-sorting to restore
/// the ordering) while staying feasible; increments are evaluated directly,
/// so triples sitting exactly at the bound are still judged correctly.
/// Sorted by x1 descending, then coordinate total descending.
///
/// Throws std::runtime_error naming a larger bound when the box provably
/// cannot contain the whole maximal set (small beta pushes x3 far out).
std::vector<PlacementTriple> maximal_triples(double beta, int bound = 64);

/// Pairwise spreader distance threshold the placement analysis justifies:
/// two or more spreaders sharing a first-order neighbor (x1 >= 2) is what
/// drives redundant influence, so spreaders should sit at distance >= 3.
constexpr int min_pairwise_distance_rule() { return 3; }

}  // namespace spreadnet

#endif  // SPREADNET_PLACEMENT_HPP_
