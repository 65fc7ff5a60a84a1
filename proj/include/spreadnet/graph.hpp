#ifndef SPREADNET_GRAPH_HPP_
#define SPREADNET_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spreadnet {

/// Immutable undirected simple graph over dense node ids [0, node_count).
/// Construction collapses duplicate edges and drops self-loops; adjacency
/// lists are kept sorted. Safe to share across concurrent readers.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over dense ids. `labels`, when given, maps each
  /// id to its original external label; otherwise labels default to the
  /// decimal id.
  Graph(int node_count, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  long long edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  bool has_node(int v) const { return v >= 0 && v < node_count(); }
  bool has_edge(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  /// Dense id of an original label, or -1 when absent.
  int id_of(const std::string& label) const;

  /// Construction counters (collapsed duplicates / dropped self-loops), kept
  /// so loaders can log a summary.
  int dropped_duplicate_edges() const { return dropped_duplicates_; }
  int dropped_self_loops() const { return dropped_self_loops_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> id_by_label_;
  long long edge_count_ = 0;
  int dropped_duplicates_ = 0;
  int dropped_self_loops_ = 0;
};

/// Parses "u v" edge lines; '#'/'%' comment lines and blank lines are
/// ignored. Labels are assigned dense ids in first-appearance order.
/// Throws std::runtime_error with the line number on a malformed line.
Graph load_edge_list(std::istream& in);

/// N_1..N_max: nodes at shortest distance exactly i from v (v excluded,
/// sets pairwise disjoint, each sorted ascending).
std::vector<std::vector<int>> neighborhood_orders(const Graph& g, int v,
                                                  int max_order);

/// Hop count of the shortest u-v path; nullopt when unreachable or, with a
/// cutoff, when the distance exceeds it (the search stops early).
std::optional<int> shortest_distance(const Graph& g, int u, int v,
                                     std::optional<int> cutoff = std::nullopt);

/// Coreness of every node via iterative peeling: the largest k such that the
/// node survives in the k-core.
std::vector<int> k_core_decomposition(const Graph& g);

struct SubgraphResult {
  Graph graph;
  std::vector<int> original_ids;  // new id -> id in the parent graph
};

/// Node-induced subgraph; `nodes` need not be sorted. Labels carry over, so
/// members remain addressable in the parent via id_of(label).
SubgraphResult induced_subgraph(const Graph& g, const std::vector<int>& nodes);

/// Largest connected component; ties go to the component holding the
/// smallest original id. Empty input yields an empty graph.
SubgraphResult largest_connected_component(const Graph& g);

/// Removes floor(fraction * N) distinct nodes sampled uniformly with the
/// given seed and returns the induced subgraph on the survivors. Original
/// labels are retained, so nodes stay addressable in `g`.
Graph remove_random_nodes(const Graph& g, double fraction, std::uint64_t seed);

/// <k> / <k^2>. NaN on an edgeless graph.
double epidemic_threshold(const Graph& g);

enum class DistanceMode { kAuto, kExact, kSampled };

struct NetworkStats {
  int n_nodes = 0;
  long long n_edges = 0;
  double avg_degree = 0.0;
  double avg_distance = 0.0;   // hops; on the LCC when disconnected
  double clustering = 0.0;     // mean local clustering, degree<2 nodes count 0
  double epidemic_threshold = 0.0;
  bool distance_sampled = false;  // avg_distance estimated from sampled sources
  bool distance_on_lcc = false;   // graph was disconnected
  int lcc_size = 0;
};

/// Descriptive statistics. avg_distance is exact (all-pairs BFS) in kExact
/// mode, or in kAuto mode up to 5000 nodes; above that kAuto falls back to
/// `sample_sources` seeded BFS sources. Throws on an empty graph.
NetworkStats network_stats(const Graph& g,
                           DistanceMode mode = DistanceMode::kAuto,
                           int sample_sources = 1000, std::uint64_t seed = 0);

}  // namespace spreadnet

#endif  // SPREADNET_GRAPH_HPP_
