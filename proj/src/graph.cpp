#include "spreadnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "spreadnet/rng.hpp"

namespace spreadnet {

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  if (!labels.empty() && static_cast<int>(labels.size()) != node_count)
    throw std::invalid_argument("label list does not match node count");

  adjacency_.assign(node_count, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) {
      ++dropped_self_loops_;
      continue;
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    auto last = std::unique(adj.begin(), adj.end());
    dropped_duplicates_ += static_cast<int>(adj.end() - last);
    adj.erase(last, adj.end());
    edge_count_ += static_cast<long long>(adj.size());
  }
  dropped_duplicates_ /= 2;  // counted from both endpoints
  edge_count_ /= 2;

  if (labels.empty()) {
    labels_.reserve(node_count);
    for (int v = 0; v < node_count; ++v) labels_.push_back(std::to_string(v));
  } else {
    labels_ = std::move(labels);
  }
  id_by_label_.reserve(labels_.size());
  for (int v = 0; v < node_count; ++v) id_by_label_.emplace(labels_[v], v);
}

bool Graph::has_edge(int u, int v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

int Graph::id_of(const std::string& label) const {
  auto it = id_by_label_.find(label);
  return it == id_by_label_.end() ? -1 : it->second;
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank line
    if (line[first] == '#' || line[first] == '%') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a;
    if (!(fields >> b) || (fields >> extra))
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected two whitespace-separated labels");
    int ia = intern(a);  // sequenced: first appearance decides the id
    int ib = intern(b);
    edges.emplace_back(ia, ib);
  }
  const int node_count = static_cast<int>(labels.size());
  return Graph(node_count, edges, std::move(labels));
}

namespace {

void check_node(const Graph& g, int v, const char* what) {
  if (!g.has_node(v))
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " is not a node of the graph");
}

/// Distances from `source`, capped at `cutoff` when cutoff >= 0 (unvisited /
/// beyond-cutoff entries stay -1).
std::vector<int> bfs_distances(const Graph& g, int source, int cutoff) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    if (cutoff >= 0 && dist[u] >= cutoff) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<int>> neighborhood_orders(const Graph& g, int v,
                                                  int max_order) {
  check_node(g, v, "node");
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  std::vector<int> dist = bfs_distances(g, v, max_order);
  std::vector<std::vector<int>> orders(max_order);
  for (int u = 0; u < g.node_count(); ++u)
    if (dist[u] >= 1) orders[dist[u] - 1].push_back(u);
  return orders;
}

std::optional<int> shortest_distance(const Graph& g, int u, int v,
                                     std::optional<int> cutoff) {
  check_node(g, u, "node");
  check_node(g, v, "node");
  if (u == v) return 0;
  int cap = cutoff ? *cutoff : -1;
  std::vector<int> dist = bfs_distances(g, u, cap);
  if (dist[v] < 0) return std::nullopt;
  return dist[v];
}

std::vector<int> k_core_decomposition(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // Bucket sort by degree, then peel in nondecreasing order (Batagelj-Zaversnik).
  std::vector<int> bucket_start(max_deg + 2, 0);
  for (int v = 0; v < n; ++v) ++bucket_start[deg[v] + 1];
  for (int d = 0; d <= max_deg; ++d) bucket_start[d + 1] += bucket_start[d];
  std::vector<int> order(n), pos(n);
  {
    std::vector<int> cursor(bucket_start.begin(), bucket_start.end() - 1);
    for (int v = 0; v < n; ++v) {
      pos[v] = cursor[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  std::vector<int> coreness(n, 0);
  std::vector<int> cur_deg = deg;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    coreness[v] = cur_deg[v];
    for (int w : g.neighbors(v)) {
      if (cur_deg[w] > cur_deg[v]) {
        // Move w one bucket down: swap it with the first node of its bucket.
        int dw = cur_deg[w];
        int first_pos = bucket_start[dw];
        int first_node = order[first_pos];
        if (first_node != w) {
          std::swap(order[pos[w]], order[first_pos]);
          std::swap(pos[w], pos[first_node]);
        }
        ++bucket_start[dw];
        --cur_deg[w];
      }
    }
  }
  return coreness;
}

SubgraphResult induced_subgraph(const Graph& g,
                                const std::vector<int>& nodes) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) check_node(g, v, "node");

  std::vector<int> new_id(g.node_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    new_id[sorted[i]] = i;
    labels.push_back(g.label(sorted[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : sorted)
    for (int w : g.neighbors(v))
      if (v < w && new_id[w] >= 0) edges.emplace_back(new_id[v], new_id[w]);

  return SubgraphResult{
      Graph(static_cast<int>(sorted.size()), edges, std::move(labels)),
      std::move(sorted)};
}

SubgraphResult largest_connected_component(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> component(n, -1);
  std::vector<int> best;
  for (int v = 0; v < n; ++v) {
    if (component[v] >= 0) continue;
    std::vector<int> members;
    std::queue<int> frontier;
    component[v] = v;
    frontier.push(v);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (int w : g.neighbors(u)) {
        if (component[w] < 0) {
          component[w] = v;
          frontier.push(w);
        }
      }
    }
    // Strict > keeps the first (smallest-id) component on ties.
    if (members.size() > best.size()) best = std::move(members);
  }
  return induced_subgraph(g, best);
}

Graph remove_random_nodes(const Graph& g, double fraction,
                          std::uint64_t seed) {
  if (fraction < 0.0 || fraction >= 1.0)
    throw std::invalid_argument("fraction must lie in [0, 1)");
  const int n = g.node_count();
  const int k = static_cast<int>(fraction * n);

  // Partial Fisher-Yates: the first k entries are the removed sample.
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  Rng rng(seed);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(ids[i], ids[j]);
  }
  std::vector<int> survivors(ids.begin() + k, ids.end());
  return induced_subgraph(g, survivors).graph;
}

double epidemic_threshold(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  double sum_k = 0.0, sum_k2 = 0.0;
  for (int v = 0; v < n; ++v) {
    double k = g.degree(v);
    sum_k += k;
    sum_k2 += k * k;
  }
  if (sum_k2 == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sum_k / sum_k2;
}

NetworkStats network_stats(const Graph& g, DistanceMode mode,
                           int sample_sources, std::uint64_t seed) {
  const int n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");

  NetworkStats stats;
  stats.n_nodes = n;
  stats.n_edges = g.edge_count();
  stats.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
  stats.epidemic_threshold = epidemic_threshold(g);

  // Mean local clustering; nodes of degree < 2 contribute 0.
  double clustering_sum = 0.0;
  for (int v = 0; v < n; ++v) {
    const auto& adj = g.neighbors(v);
    const int k = static_cast<int>(adj.size());
    if (k < 2) continue;
    long long links = 0;
    for (int u : adj) {
      // |N(v) ∩ N(u)| by sorted-list intersection; each triangle at v is
      // counted once per incident edge, i.e. twice in total.
      const auto& adj_u = g.neighbors(u);
      auto it_v = adj.begin();
      auto it_u = adj_u.begin();
      while (it_v != adj.end() && it_u != adj_u.end()) {
        if (*it_v < *it_u) {
          ++it_v;
        } else if (*it_u < *it_v) {
          ++it_u;
        } else {
          ++links;
          ++it_v;
          ++it_u;
        }
      }
    }
    clustering_sum += static_cast<double>(links) /
                      (static_cast<double>(k) * (k - 1));
  }
  stats.clustering = clustering_sum / n;

  // Average distance, on the LCC when disconnected.
  SubgraphResult lcc = largest_connected_component(g);
  const Graph& dg = lcc.graph;
  const int dn = dg.node_count();
  stats.lcc_size = dn;
  stats.distance_on_lcc = dn < n;

  bool exact = mode == DistanceMode::kExact ||
               (mode == DistanceMode::kAuto && dn <= 5000);
  std::vector<int> sources;
  if (exact || sample_sources >= dn) {
    sources.resize(dn);
    std::iota(sources.begin(), sources.end(), 0);
  } else {
    stats.distance_sampled = true;
    std::vector<int> ids(dn);
    std::iota(ids.begin(), ids.end(), 0);
    Rng rng(seed);
    for (int i = 0; i < sample_sources; ++i) {
      int j =
          i + static_cast<int>(rng.below(static_cast<std::uint64_t>(dn - i)));
      std::swap(ids[i], ids[j]);
    }
    sources.assign(ids.begin(), ids.begin() + sample_sources);
  }

  long long pair_count = 0;
  long long dist_sum = 0;
  for (int s : sources) {
    std::vector<int> dist = bfs_distances(dg, s, -1);
    for (int v = 0; v < dn; ++v) {
      if (v == s) continue;
      dist_sum += dist[v];
      ++pair_count;
    }
  }
  stats.avg_distance =
      pair_count == 0 ? 0.0
                      : static_cast<double>(dist_sum) / pair_count;
  return stats;
}

}  // namespace spreadnet
