#include "spreadnet/placement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spreadnet/influence.hpp"

namespace spreadnet {

namespace {

// Per-order survival tables: table[i][k] = (1 - beta^(i+1))^k, so a triple
// evaluates in O(1) during enumeration.
struct InfluenceTables {
  std::array<std::vector<double>, 3> survive;

  InfluenceTables(double beta, int max_count) {
    double base[3] = {1.0 - beta, 1.0 - beta * beta,
                      1.0 - beta * beta * beta};
    for (int i = 0; i < 3; ++i) {
      survive[i].resize(max_count + 1);
      survive[i][0] = 1.0;
      for (int k = 1; k <= max_count; ++k)
        survive[i][k] = survive[i][k - 1] * base[i];
    }
  }

  double total(int x1, int x2, int x3) const {
    return (1.0 - survive[0][x1]) + (1.0 - survive[1][x2]) +
           (1.0 - survive[2][x3]);
  }

  bool feasible(int x1, int x2, int x3) const {
    return total(x1, x2, x3) <= 1.0 + kInfluenceSlack;
  }

  // Feasibility after incrementing coordinate `which` and re-sorting.
  bool increment_feasible(const PlacementTriple& t, int which) const {
    int x[3] = {t.x1, t.x2, t.x3};
    ++x[which];
    std::sort(x, x + 3);
    return feasible(x[0], x[1], x[2]);
  }
};

}  // namespace

bool placement_feasible(const PlacementTriple& triple, double beta) {
  if (!(triple.x1 <= triple.x2 && triple.x2 <= triple.x3))
    throw std::domain_error("placement triple must satisfy x1 <= x2 <= x3");
  if (triple.x1 < 0) throw std::domain_error("placement counts must be >= 0");
  return total_influence(triple.x1, triple.x2, triple.x3, beta) <=
         1.0 + kInfluenceSlack;
}

std::vector<PlacementTriple> maximal_triples(double beta, int bound) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("beta must lie in (0, 1]");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");

  // +1 covers increment probes of triples sitting at the bound.
  InfluenceTables tables(beta, bound + 1);

  std::vector<PlacementTriple> maximal;
  bool incomplete = false;
  for (int x1 = 0; x1 <= bound; ++x1) {
    if (!tables.feasible(x1, x1, x1)) break;  // monotone in every coordinate
    for (int x2 = x1; x2 <= bound; ++x2) {
      if (!tables.feasible(x1, x2, x2)) break;
      for (int x3 = x2; x3 <= bound; ++x3) {
        if (!tables.feasible(x1, x2, x3)) break;
        PlacementTriple t{x1, x2, x3};
        if (!tables.increment_feasible(t, 0) &&
            !tables.increment_feasible(t, 1) &&
            !tables.increment_feasible(t, 2))
          maximal.push_back(t);
        // Feasible growth beyond the box is only reachable through a
        // feasible triple at the boundary. The x2 = 0 ray is exempt: it is
        // feasible for every x3 yet never maximal, so it cannot hide
        // solutions.
        if (x2 >= 1 && x3 == bound && tables.feasible(x1, x2, x3 + 1))
          incomplete = true;
        if (x2 == bound && tables.increment_feasible(t, 1)) incomplete = true;
        if (x1 == bound && tables.increment_feasible(t, 0)) incomplete = true;
      }
    }
  }
  if (incomplete) {
    // Any maximal triple has x2 >= 1, which caps x3 at log(beta^2) /
    // log(1 - beta^3); suggest a bound just past that.
    double cap = std::log(beta * beta) / std::log1p(-beta * beta * beta);
    int suggestion = std::max(bound * 2, static_cast<int>(cap) + 2);
    throw std::runtime_error(
        "enumeration bound " + std::to_string(bound) +
        " cannot contain all maximal placements at beta=" +
        std::to_string(beta) + "; rerun with a larger bound (try " +
        std::to_string(suggestion) + ")");
  }

  std::sort(maximal.begin(), maximal.end(),
            [](const PlacementTriple& a, const PlacementTriple& b) {
              if (a.x1 != b.x1) return a.x1 > b.x1;
              int ta = a.x1 + a.x2 + a.x3, tb = b.x1 + b.x2 + b.x3;
              if (ta != tb) return ta > tb;
              return a.x2 > b.x2;
            });
  return maximal;
}

}  // namespace spreadnet
