#include "spreadnet/selection.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "spreadnet/influence.hpp"
#include "spreadnet/placement.hpp"

namespace spreadnet {

const char* to_string(ConvergedReason reason) {
  switch (reason) {
    case ConvergedReason::kReachedM:
      return "reached_m";
    case ConvergedReason::kNoFeasibleCandidate:
      return "no_feasible_candidate";
    case ConvergedReason::kExhaustedDegreeFilter:
      return "exhausted_degree_filter";
  }
  return "unknown";
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

namespace {

void check_m(const Graph& g, int m, bool capped_by_n) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (capped_by_n && m > g.node_count())
    throw std::invalid_argument("m exceeds the number of nodes");
}

// Reason for a greedy scan that ended below m: if some degree >= min_degree
// node is still unselected, every such candidate was rejected; otherwise the
// degree filter simply ran out of candidates.
ConvergedReason exhausted_reason(const Graph& g,
                                 const std::vector<char>& selected,
                                 int min_degree) {
  for (int v = 0; v < g.node_count(); ++v)
    if (!selected[v] && g.degree(v) >= min_degree)
      return ConvergedReason::kNoFeasibleCandidate;
  return ConvergedReason::kExhaustedDegreeFilter;
}

}  // namespace

Selection select_degree(const Graph& g, int m) {
  check_m(g, m, true);
  std::vector<int> order = degree_order(g);
  Selection sel;
  sel.nodes.assign(order.begin(), order.begin() + m);
  sel.converged_reason = ConvergedReason::kReachedM;
  return sel;
}

Selection select_dri(const Graph& g, double beta, int m) {
  check_m(g, m, false);
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("beta must lie in (0, 1]");

  ExposureCounts counts;
  counts.counts.assign(g.node_count(), {0, 0, 0});
  counts.is_seed.assign(g.node_count(), 0);

  Selection sel;
  for (int candidate : degree_order(g)) {
    if (static_cast<int>(sel.nodes.size()) == m) break;
    // The order is degree-descending, so the first marginal node ends the
    // scan: everything after it is marginal too.
    if (g.degree(candidate) < 2) break;

    // Probe the candidate's depth-3 ball. Only nodes inside it gain
    // influence, and influence never decreases when a spreader is added, so
    // nodes outside the ball stay within their verified limit.
    bool admissible = true;
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> frontier;
    dist[candidate] = 0;
    frontier.push(candidate);
    while (admissible && !frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      if (dist[u] >= kInfluenceRange) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        frontier.push(w);
        if (counts.is_seed[w]) continue;
        auto c = counts.counts[w];
        ++c[dist[w] - 1];
        if (total_influence(c[0], c[1], c[2], beta) >
            1.0 + kInfluenceSlack) {
          admissible = false;  // w would receive redundant influence
          break;
        }
      }
    }
    if (!admissible) continue;  // try the next candidate in degree order

    incremental_exposure_update(counts, g, candidate);
    sel.nodes.push_back(candidate);
  }

  sel.converged_reason = static_cast<int>(sel.nodes.size()) == m
                             ? ConvergedReason::kReachedM
                             : exhausted_reason(g, counts.is_seed, 2);
  return sel;
}

namespace {

// True iff some selected spreader lies within distance `radius` of v.
bool spreader_within(const Graph& g, int v, const std::vector<char>& selected,
                     int radius) {
  if (selected[v]) return true;
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> frontier;
  dist[v] = 0;
  frontier.push(v);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    if (dist[u] >= radius) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      if (selected[w]) return true;
      dist[w] = dist[u] + 1;
      frontier.push(w);
    }
  }
  return false;
}

}  // namespace

Selection select_dsn(const Graph& g, int m) {
  check_m(g, m, false);
  Selection sel;
  std::vector<char> selected(g.node_count(), 0);
  for (int candidate : degree_order(g)) {
    if (static_cast<int>(sel.nodes.size()) == m) break;
    if (g.degree(candidate) < 2) break;  // marginal nodes end the scan
    // Admissible iff every selected spreader is at distance >= 3, i.e. none
    // lies within the candidate's radius-2 ball.
    if (spreader_within(g, candidate, selected,
                        min_pairwise_distance_rule() - 1))
      continue;
    selected[candidate] = 1;
    sel.nodes.push_back(candidate);
  }
  sel.converged_reason = static_cast<int>(sel.nodes.size()) == m
                             ? ConvergedReason::kReachedM
                             : exhausted_reason(g, selected, 2);
  return sel;
}

Selection select_nc(const Graph& g, int m) {
  check_m(g, m, true);
  std::vector<int> coreness = k_core_decomposition(g);
  std::vector<long long> score(g.node_count(), 0);
  for (int v = 0; v < g.node_count(); ++v)
    for (int u : g.neighbors(v)) score[v] += coreness[u];

  std::vector<int> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  Selection sel;
  sel.nodes.assign(order.begin(), order.begin() + m);
  sel.converged_reason = ConvergedReason::kReachedM;
  return sel;
}

Selection select_nd(const Graph& g, int m) {
  check_m(g, m, false);
  Selection sel;
  std::vector<char> selected(g.node_count(), 0);
  for (int candidate : degree_order(g)) {
    if (static_cast<int>(sel.nodes.size()) == m) break;
    bool adjacent = false;
    for (int w : g.neighbors(candidate)) {
      if (selected[w]) {
        adjacent = true;
        break;
      }
    }
    if (adjacent) continue;
    selected[candidate] = 1;
    sel.nodes.push_back(candidate);
  }
  sel.converged_reason = static_cast<int>(sel.nodes.size()) == m
                             ? ConvergedReason::kReachedM
                             : exhausted_reason(g, selected, 0);
  return sel;
}

namespace {

// Residual graph for collective influence: nodes get deleted round by round.
class ResidualGraph {
 public:
  explicit ResidualGraph(const Graph& g) : graph_(g), alive_(g.node_count(), 1) {
    degree_.reserve(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) degree_.push_back(g.degree(v));
    mark_.assign(g.node_count(), -1);
  }

  bool alive(int v) const { return alive_[v]; }
  int degree(int v) const { return degree_[v]; }

  void remove(int v) {
    alive_[v] = 0;
    degree_[v] = 0;
    for (int w : graph_.neighbors(v))
      if (alive_[w]) --degree_[w];
  }

  // (k_v - 1) * sum over the residual frontier at distance exactly `radius`
  // of (k_u - 1). Integer-valued, so ties are exact.
  long long collective_influence(int v, int radius) {
    if (degree_[v] == 0) return 0;
    ++token_;
    mark_[v] = token_;
    ring_[0].clear();
    ring_[0].push_back(v);
    int cur = 0;
    for (int depth = 1; depth <= radius; ++depth) {
      ring_[1 - cur].clear();
      for (int u : ring_[cur]) {
        for (int w : graph_.neighbors(u)) {
          if (!alive_[w] || mark_[w] == token_) continue;
          mark_[w] = token_;
          ring_[1 - cur].push_back(w);
        }
      }
      cur = 1 - cur;
      if (ring_[cur].empty()) return 0;
    }
    long long frontier_sum = 0;
    for (int u : ring_[cur]) frontier_sum += degree_[u] - 1;
    return static_cast<long long>(degree_[v] - 1) * frontier_sum;
  }

  // Alive nodes within distance `radius` of v (v included).
  std::vector<int> ball(int v, int radius) {
    std::vector<int> nodes;
    ++token_;
    mark_[v] = token_;
    nodes.push_back(v);
    std::size_t begin = 0, end = 1;
    for (int depth = 1; depth <= radius; ++depth) {
      for (std::size_t i = begin; i < end; ++i) {
        for (int w : graph_.neighbors(nodes[i])) {
          if (!alive_[w] || mark_[w] == token_) continue;
          mark_[w] = token_;
          nodes.push_back(w);
        }
      }
      begin = end;
      end = nodes.size();
    }
    return nodes;
  }

 private:
  const Graph& graph_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  std::vector<int> mark_;
  long long token_ = 0;
  std::vector<int> ring_[2];
};

struct CiEntry {
  long long ci;
  int degree;
  int node;
  long long version;

  bool operator<(const CiEntry& other) const {
    // max-heap: higher ci, then higher degree, then lower id
    if (ci != other.ci) return ci < other.ci;
    if (degree != other.degree) return degree < other.degree;
    return node > other.node;
  }
};

}  // namespace

Selection select_ci(const Graph& g, int m, int radius) {
  check_m(g, m, false);
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");

  ResidualGraph residual(g);
  std::vector<long long> version(g.node_count(), 0);
  std::priority_queue<CiEntry> heap;
  for (int v = 0; v < g.node_count(); ++v)
    heap.push({residual.collective_influence(v, radius), residual.degree(v), v,
               0});

  Selection sel;
  while (static_cast<int>(sel.nodes.size()) < m) {
    // Pop until a fresh entry of an alive, non-isolated node surfaces.
    int pick = -1;
    while (!heap.empty()) {
      CiEntry top = heap.top();
      if (!residual.alive(top.node) || top.version != version[top.node]) {
        heap.pop();
        continue;
      }
      if (residual.degree(top.node) == 0) {
        pick = -1;  // best remaining candidate is isolated: stop
      } else {
        pick = top.node;
      }
      break;
    }
    if (pick < 0) break;

    // Deleting `pick` changes CI only inside its radius+1 ball: degrees of
    // its neighbors, and frontiers that used to route through it.
    std::vector<int> stale = residual.ball(pick, radius + 1);
    residual.remove(pick);
    sel.nodes.push_back(pick);
    for (int v : stale) {
      if (!residual.alive(v)) continue;
      ++version[v];
      heap.push({residual.collective_influence(v, radius),
                 residual.degree(v), v, version[v]});
    }
  }
  sel.converged_reason = static_cast<int>(sel.nodes.size()) == m
                             ? ConvergedReason::kReachedM
                             : ConvergedReason::kExhaustedDegreeFilter;
  return sel;
}

}  // namespace spreadnet
