#include <doctest.h>

#include <algorithm>

#include "spreadnet/influence.hpp"
#include "spreadnet/placement.hpp"
#include "spreadnet/selection.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace spreadnet;
using namespace spreadnet::testing;

TEST_SUITE_BEGIN("selection");

TEST_CASE("degree_order sorts by degree then id") {
  Graph g = make_path(3);  // degrees 1, 2, 1
  CHECK(degree_order(g) == std::vector<int>{1, 0, 2});
}

TEST_CASE("select_degree basics") {
  CHECK(select_degree(make_star(5), 1).nodes == std::vector<int>{0});
  CHECK(select_degree(make_path(3), 2).nodes == std::vector<int>{1, 0});
  CHECK(select_degree(make_complete(5), 3).nodes ==
        std::vector<int>{0, 1, 2});
  CHECK(select_degree(make_path(3), 3).converged_reason ==
        ConvergedReason::kReachedM);
  CHECK_THROWS_AS(select_degree(make_path(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(select_degree(make_path(3), 0), std::invalid_argument);
}

TEST_CASE("select_dri with m=1 takes the top-degree node") {
  Graph g = barabasi_albert(50, 2, 3);
  Selection sel = select_dri(g, 0.37, 1);
  CHECK(sel.nodes == std::vector<int>{degree_order(g)[0]});
  CHECK(sel.converged_reason == ConvergedReason::kReachedM);
}

TEST_CASE("select_dri on K2,3 converges at two spreaders") {
  Graph g = make_k23();
  Selection sel = select_dri(g, 0.8, 3);
  CHECK(sel.nodes == std::vector<int>{0, 1});
  CHECK(sel.converged_reason == ConvergedReason::kNoFeasibleCandidate);
  // Every remaining degree->=2 candidate would create redundant influence.
  for (int candidate : {2, 3, 4}) {
    std::vector<int> with = sel.nodes;
    with.push_back(candidate);
    CHECK(ri_report(g, with, 0.8).total_ri > 0.0);
  }
}

TEST_CASE("select_dri on a triangle accepts two spreaders") {
  Selection sel = select_dri(make_triangle(), 0.6, 2);
  CHECK(sel.nodes == std::vector<int>{0, 1});
  CHECK(sel.converged_reason == ConvergedReason::kReachedM);
}

TEST_CASE("select_dri stops at the degree-1 frontier") {
  // Star: only the center has degree >= 2.
  Selection sel = select_dri(make_star(5), 0.5, 3);
  CHECK(sel.nodes == std::vector<int>{0});
  CHECK(sel.converged_reason == ConvergedReason::kExhaustedDegreeFilter);
  CHECK_THROWS_AS(select_dri(make_star(5), 0.0, 1), std::domain_error);
}

TEST_CASE("select_dri leaves zero redundant influence on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = seed % 2 == 0 ? erdos_renyi(120, 0.06, seed + 40)
                            : barabasi_albert(120, 3, seed + 40);
    for (double beta : {0.2, 0.35}) {
      Selection sel = select_dri(g, beta, 15);
      RiReport report = ri_report(g, sel.nodes, beta);
      CHECK(report.total_ri == 0.0);
      for (int v : sel.nodes) CHECK(g.degree(v) >= 2);
    }
  }
}

TEST_CASE("select_dri convergence claim holds when it stalls below m") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = erdos_renyi(60, 0.15, seed + 77);
    double beta = 0.45;
    Selection sel = select_dri(g, beta, g.node_count());
    if (sel.converged_reason != ConvergedReason::kNoFeasibleCandidate)
      continue;
    std::vector<char> chosen(g.node_count(), 0);
    for (int v : sel.nodes) chosen[v] = 1;
    for (int c = 0; c < g.node_count(); ++c) {
      if (chosen[c] || g.degree(c) < 2) continue;
      std::vector<int> with = sel.nodes;
      with.push_back(c);
      CHECK(ri_report(g, with, beta).total_ri > 0.0);
    }
  }
}

TEST_CASE("select_dsn keeps spreaders three apart") {
  CHECK(select_dsn(make_path(7), 2).nodes == std::vector<int>{1, 4});
  Selection star = select_dsn(make_star(5), 2);
  CHECK(star.nodes == std::vector<int>{0});
  CHECK(star.converged_reason == ConvergedReason::kExhaustedDegreeFilter);
  Graph g = barabasi_albert(60, 3, 11);
  CHECK(select_dsn(g, 1).nodes == std::vector<int>{degree_order(g)[0]});
}

TEST_CASE("select_dsn pairwise distances and degree filter on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = seed % 2 == 0 ? erdos_renyi(100, 0.04, seed)
                            : barabasi_albert(100, 2, seed);
    Selection sel = select_dsn(g, 12);
    for (int v : sel.nodes) CHECK(g.degree(v) >= 2);
    for (std::size_t i = 0; i < sel.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < sel.nodes.size(); ++j) {
        auto dist = oracle_bfs(g, sel.nodes[i]);
        int d = dist[sel.nodes[j]];
        CHECK((d < 0 || d >= min_pairwise_distance_rule()));
      }
    // Spreaders three apart cannot share a first-order neighbor.
    ExposureCounts counts = exposure_counts(g, sel.nodes);
    for (int v = 0; v < g.node_count(); ++v)
      if (!counts.is_seed[v]) CHECK(counts.counts[v][0] <= 1);
    if (sel.converged_reason == ConvergedReason::kNoFeasibleCandidate) {
      // Every leftover candidate really is too close to the set.
      std::vector<char> chosen(g.node_count(), 0);
      for (int v : sel.nodes) chosen[v] = 1;
      for (int c = 0; c < g.node_count(); ++c) {
        if (chosen[c] || g.degree(c) < 2) continue;
        auto dist = oracle_bfs(g, c);
        bool too_close = false;
        for (int v : sel.nodes)
          if (dist[v] >= 0 && dist[v] < 3) too_close = true;
        CHECK(too_close);
      }
    }
  }
}

TEST_CASE("select_nc scores by neighbor coreness") {
  Graph g = make_triangle_pendant();
  // coreness = {2,2,2,1}; nc(0)=5, nc(1)=nc(2)=4, nc(3)=2.
  CHECK(select_nc(g, 1).nodes == std::vector<int>{0});
  CHECK(select_nc(g, 3).nodes == std::vector<int>{0, 1, 2});

  CHECK(select_nc(make_complete(4), 2).nodes == std::vector<int>{0, 1});

  Graph isolated(1, {});
  CHECK(select_nc(isolated, 1).nodes == std::vector<int>{0});
  CHECK_THROWS_AS(select_nc(make_path(3), 4), std::invalid_argument);
}

TEST_CASE("select_nd keeps spreaders non-adjacent") {
  CHECK(select_nd(make_cycle(4), 2).nodes == std::vector<int>{0, 2});
  Selection star = select_nd(make_star(5), 2);
  CHECK(star.nodes == std::vector<int>{0});
  CHECK(star.converged_reason == ConvergedReason::kNoFeasibleCandidate);
  Graph edgeless(3, {});
  CHECK(select_nd(edgeless, 3).nodes == std::vector<int>{0, 1, 2});

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = erdos_renyi(80, 0.05, seed + 13);
    Selection sel = select_nd(g, 10);
    for (std::size_t i = 0; i < sel.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < sel.nodes.size(); ++j)
        CHECK_FALSE(g.has_edge(sel.nodes[i], sel.nodes[j]));
  }
}

TEST_CASE("select_ci follows the residual-graph score") {
  // Path: CI_1(2) = 1*(1+1) = 2 beats CI_1(1) = CI_1(3) = 1.
  Graph path = make_path(5);
  CHECK(select_ci(path, 1, 1).nodes == std::vector<int>{2});

  // K4: all scores 3*6 = 18, id tie-break.
  CHECK(select_ci(make_complete(4), 1, 1).nodes == std::vector<int>{0});

  // Degree-1 nodes have CI = 0.
  Graph two = make_path(2);
  Selection pair = select_ci(two, 2, 1);
  CHECK(pair.nodes.size() == 1);  // after removing one, the other is isolated
  CHECK(pair.converged_reason == ConvergedReason::kExhaustedDegreeFilter);

  CHECK_THROWS_AS(select_ci(path, 1, 0), std::invalid_argument);
}

TEST_CASE("select_ci equals a naive full-recompute reference") {
  // Reference: recompute CI for every alive node each round via plain BFS.
  auto naive_ci = [](const Graph& g, int m, int radius) {
    std::vector<char> alive(g.node_count(), 1);
    std::vector<int> deg(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);
    std::vector<int> picks;
    while (static_cast<int>(picks.size()) < m) {
      int best = -1;
      long long best_ci = -1;
      for (int v = 0; v < g.node_count(); ++v) {
        if (!alive[v] || deg[v] == 0) continue;
        // BFS on the residual graph out to `radius`.
        std::vector<int> dist(g.node_count(), -1);
        std::vector<int> queue{v};
        dist[v] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
          int u = queue[qi];
          if (dist[u] >= radius) continue;
          for (int w : g.neighbors(u)) {
            if (!alive[w] || dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        }
        long long frontier = 0;
        for (int u = 0; u < g.node_count(); ++u)
          if (dist[u] == radius) frontier += deg[u] - 1;
        long long ci = static_cast<long long>(deg[v] - 1) * frontier;
        bool better = ci > best_ci ||
                      (ci == best_ci && best >= 0 &&
                       (deg[v] > deg[best] || (deg[v] == deg[best] && v < best)));
        if (best < 0 || better) {
          best = v;
          best_ci = ci;
        }
      }
      if (best < 0) break;
      alive[best] = 0;
      for (int w : g.neighbors(best))
        if (alive[w]) --deg[w];
      deg[best] = 0;
      picks.push_back(best);
    }
    return picks;
  };

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = seed % 2 == 0 ? erdos_renyi(70, 0.06, seed + 200)
                            : barabasi_albert(70, 2, seed + 200);
    for (int radius : {1, 2}) {
      CHECK(select_ci(g, 8, radius).nodes == naive_ci(g, 8, radius));
    }
  }
}

TEST_CASE("all selectors are deterministic") {
  Graph g = barabasi_albert(90, 3, 21);
  CHECK(select_degree(g, 10).nodes == select_degree(g, 10).nodes);
  CHECK(select_dri(g, 0.3, 10).nodes == select_dri(g, 0.3, 10).nodes);
  CHECK(select_dsn(g, 10).nodes == select_dsn(g, 10).nodes);
  CHECK(select_nc(g, 10).nodes == select_nc(g, 10).nodes);
  CHECK(select_nd(g, 10).nodes == select_nd(g, 10).nodes);
  CHECK(select_ci(g, 10, 2).nodes == select_ci(g, 10, 2).nodes);
}

TEST_SUITE_END();
