#include "spreadnet/influence.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

#include "spreadnet/csv.hpp"

namespace spreadnet {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("beta must lie in (0, 1]");
}

// x^n for small non-negative integer n; reproducible across libm versions.
double powi(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

double pair_influence(int distance, double beta) {
  check_beta(beta);
  if (distance < 0) throw std::domain_error("distance must be >= 0");
  if (distance > kInfluenceRange) return 0.0;
  return powi(beta, distance);
}

double total_influence(int n1, int n2, int n3, double beta) {
  check_beta(beta);
  if (n1 < 0 || n2 < 0 || n3 < 0)
    throw std::invalid_argument("exposure counts must be non-negative");
  double i1 = 1.0 - powi(1.0 - beta, n1);
  double i2 = 1.0 - powi(1.0 - beta * beta, n2);
  double i3 = 1.0 - powi(1.0 - beta * beta * beta, n3);
  return i1 + i2 + i3;
}

double redundant_influence(int n1, int n2, int n3, double beta) {
  double total = total_influence(n1, n2, n3, beta);
  return total > 1.0 ? total - 1.0 : 0.0;
}

namespace {

void check_seeds(const Graph& g, const std::vector<int>& seeds) {
  std::vector<char> seen(g.node_count(), 0);
  for (int s : seeds) {
    if (!g.has_node(s))
      throw std::invalid_argument("seed " + std::to_string(s) +
                                  " is not a node of the graph");
    if (seen[s])
      throw std::invalid_argument("seed " + std::to_string(s) +
                                  " listed twice");
    seen[s] = 1;
  }
}

// Applies +1 at the order of each node within distance kInfluenceRange of
// `seed` (skipping seeds), recording touched non-seed nodes when `touched`
// is given.
void spread_counts(const Graph& g, int seed, ExposureCounts& counts,
                   std::vector<int>* touched) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> frontier;
  dist[seed] = 0;
  frontier.push(seed);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    if (dist[u] >= kInfluenceRange) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      frontier.push(w);
      if (!counts.is_seed[w]) {
        ++counts.counts[w][dist[w] - 1];
        if (touched) touched->push_back(w);
      }
    }
  }
}

}  // namespace

ExposureCounts exposure_counts(const Graph& g, const std::vector<int>& seeds) {
  check_seeds(g, seeds);
  ExposureCounts counts;
  counts.counts.assign(g.node_count(), {0, 0, 0});
  counts.is_seed.assign(g.node_count(), 0);
  for (int s : seeds) counts.is_seed[s] = 1;
  for (int s : seeds) spread_counts(g, s, counts, nullptr);
  return counts;
}

std::vector<int> incremental_exposure_update(ExposureCounts& counts,
                                             const Graph& g, int new_seed) {
  if (!g.has_node(new_seed) ||
      counts.node_count() != g.node_count())
    throw std::invalid_argument("new seed is not a node of the graph");
  if (counts.is_seed[new_seed])
    throw std::invalid_argument("node " + std::to_string(new_seed) +
                                " is already a seed");
  counts.is_seed[new_seed] = 1;
  counts.counts[new_seed] = {0, 0, 0};
  std::vector<int> touched;
  spread_counts(g, new_seed, counts, &touched);
  std::sort(touched.begin(), touched.end());
  return touched;
}

RiReport ri_report(const Graph& g, const std::vector<int>& seeds,
                   double beta) {
  check_beta(beta);
  ExposureCounts counts = exposure_counts(g, seeds);

  RiReport report;
  report.beta = beta;
  report.is_seed = counts.is_seed;
  report.influence.assign(g.node_count(), 0.0);
  report.redundant.assign(g.node_count(), 0.0);
  for (int v = 0; v < g.node_count(); ++v) {
    if (counts.is_seed[v]) continue;
    const auto& c = counts.counts[v];
    double total = total_influence(c[0], c[1], c[2], beta);
    report.influence[v] = total;
    if (total > 1.0) {
      report.redundant[v] = total - 1.0;
      report.total_ri += total - 1.0;
      report.violating_nodes.push_back(v);
    }
  }
  return report;
}

void write_ri_csv(const Graph& g, const std::vector<int>& seeds, double beta,
                  std::ostream& out) {
  ExposureCounts counts = exposure_counts(g, seeds);
  double total_ri = 0.0;
  out << "node_label,n1,n2,n3,I,RI\n";
  for (int v = 0; v < g.node_count(); ++v) {
    if (counts.is_seed[v]) continue;
    const auto& c = counts.counts[v];
    double total = total_influence(c[0], c[1], c[2], beta);
    double ri = total > 1.0 ? total - 1.0 : 0.0;
    total_ri += ri;
    out << g.label(v) << ',' << c[0] << ',' << c[1] << ',' << c[2] << ','
        << fmt_double(total) << ',' << fmt_double(ri) << '\n';
  }
  out << "# beta=" << fmt_double(beta) << " total_ri=" << fmt_double(total_ri)
      << '\n';
}

}  // namespace spreadnet
