// Brute-force reference implementations the library is checked against.
// Everything here recomputes from first principles (plain BFS, direct
// definitions, std::pow) and stays independent of the library's own
// algorithmic paths.

#ifndef SPREADNET_TESTS_ORACLES_HPP_
#define SPREADNET_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "spreadnet/graph.hpp"
#include "spreadnet/placement.hpp"

namespace spreadnet::testing {

// Single-source hop distances; -1 when unreachable.
inline std::vector<int> oracle_bfs(const Graph& g, int source) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Coreness by the definition: for each k, repeatedly delete nodes of degree
// < k; coreness(v) is the largest k at which v survives.
inline std::vector<int> oracle_coreness(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> coreness(n, 0);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  for (int k = 1; k <= max_deg; ++k) {
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        int deg = 0;
        for (int w : g.neighbors(v)) deg += alive[w];
        if (deg < k) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (alive[v]) coreness[v] = k;
  }
  return coreness;
}

// Exposure counts by the per-node definition n_i(v) = |S ∩ N_i(v)|.
inline std::vector<std::array<int, 3>> oracle_exposure(
    const Graph& g, const std::vector<int>& seeds) {
  std::vector<char> is_seed(g.node_count(), 0);
  for (int s : seeds) is_seed[s] = 1;
  std::vector<std::array<int, 3>> counts(g.node_count(), {0, 0, 0});
  for (int v = 0; v < g.node_count(); ++v) {
    if (is_seed[v]) continue;
    std::vector<int> dist = oracle_bfs(g, v);
    for (int s : seeds)
      if (dist[s] >= 1 && dist[s] <= 3) ++counts[v][dist[s] - 1];
  }
  return counts;
}

struct OracleStats {
  double avg_degree = 0.0;
  double avg_distance = 0.0;
  double clustering = 0.0;
  double epidemic_threshold = 0.0;
};

// Statistics straight from the definitions, distances over the component
// holding the most nodes.
inline OracleStats oracle_stats(const Graph& g) {
  const int n = g.node_count();
  OracleStats stats;

  double sum_k = 0.0, sum_k2 = 0.0;
  for (int v = 0; v < n; ++v) {
    sum_k += g.degree(v);
    sum_k2 += static_cast<double>(g.degree(v)) * g.degree(v);
  }
  stats.avg_degree = sum_k / n;
  stats.epidemic_threshold = sum_k2 > 0 ? sum_k / sum_k2 : 0.0;

  for (int v = 0; v < n; ++v) {
    int k = g.degree(v);
    if (k < 2) continue;
    int links = 0;
    const auto& adj = g.neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (std::size_t j = i + 1; j < adj.size(); ++j)
        if (g.has_edge(adj[i], adj[j])) ++links;
    stats.clustering += 2.0 * links / (static_cast<double>(k) * (k - 1));
  }
  stats.clustering /= n;

  // Largest component, smallest-id tie break, then mean pairwise distance.
  std::vector<int> best;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> dist = oracle_bfs(g, v);
    std::vector<int> members;
    for (int u = 0; u < n; ++u)
      if (dist[u] >= 0) {
        members.push_back(u);
        seen[u] = 1;
      }
    if (members.size() > best.size()) best = members;
  }
  long long pairs = 0, total = 0;
  for (int u : best) {
    std::vector<int> dist = oracle_bfs(g, u);
    for (int v : best) {
      if (u == v) continue;
      total += dist[v];
      ++pairs;
    }
  }
  stats.avg_distance = pairs > 0 ? static_cast<double>(total) / pairs : 0.0;
  return stats;
}

// Independent evaluation of the three-bracket influence formula.
inline double oracle_influence(int n1, int n2, int n3, double beta) {
  return (1.0 - std::pow(1.0 - beta, n1)) +
         (1.0 - std::pow(1.0 - beta * beta, n2)) +
         (1.0 - std::pow(1.0 - beta * beta * beta, n3));
}

// Exhaustive maximal-placement scan over the box [0, bound]^3.
inline std::vector<PlacementTriple> oracle_maximal_triples(double beta,
                                                           int bound) {
  auto feasible = [&](int a, int b, int c) {
    return oracle_influence(a, b, c, beta) <= 1.0 + 1e-12;
  };
  auto grown_feasible = [&](int a, int b, int c, int which) {
    int x[3] = {a, b, c};
    ++x[which];
    std::sort(x, x + 3);
    return feasible(x[0], x[1], x[2]);
  };
  std::vector<PlacementTriple> result;
  for (int a = 0; a <= bound; ++a)
    for (int b = a; b <= bound; ++b)
      for (int c = b; c <= bound; ++c) {
        if (!feasible(a, b, c)) continue;
        if (!grown_feasible(a, b, c, 0) && !grown_feasible(a, b, c, 1) &&
            !grown_feasible(a, b, c, 2))
          result.push_back({a, b, c});
      }
  std::sort(result.begin(), result.end(),
            [](const PlacementTriple& x, const PlacementTriple& y) {
              if (x.x1 != y.x1) return x.x1 > y.x1;
              int tx = x.x1 + x.x2 + x.x3, ty = y.x1 + y.x2 + y.x3;
              if (tx != ty) return tx > ty;
              return x.x2 > y.x2;
            });
  return result;
}

}  // namespace spreadnet::testing

#endif  // SPREADNET_TESTS_ORACLES_HPP_
