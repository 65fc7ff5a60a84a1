#ifndef SPREADNET_TESTS_FIXTURES_HPP_
#define SPREADNET_TESTS_FIXTURES_HPP_

#include <utility>
#include <vector>

#include "spreadnet/graph.hpp"

namespace spreadnet::testing {

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

// Node 0 is the center.
inline Graph make_star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph make_triangle() { return make_complete(3); }

// Left side {0, 1}, right side {2, 3, 4}.
inline Graph make_k23() {
  return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Triangle {0,1,2} plus pendant node 3 attached to 0.
inline Graph make_triangle_pendant() {
  return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

}  // namespace spreadnet::testing

#endif  // SPREADNET_TESTS_FIXTURES_HPP_
