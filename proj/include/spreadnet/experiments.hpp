#ifndef SPREADNET_EXPERIMENTS_HPP_
#define SPREADNET_EXPERIMENTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadnet/graph.hpp"
#include "spreadnet/selection.hpp"

namespace spreadnet {

/// Shared experiment settings. When `betas` is empty the grid is derived
/// from `beta_factors`, as multiples of the graph's epidemic threshold.
struct ExperimentConfig {
  std::string graph_path;
  std::vector<std::string> algorithms = {"degree", "dri", "dsn",
                                         "nc",     "nd",  "ci"};
  std::vector<int> m_grid = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::vector<double> betas;
  std::vector<double> beta_factors = {4.0, 6.0, 8.0};
  int replications = 100;
  std::uint64_t master_seed = 0;
  int ci_radius = 2;
};

/// Node-removal settings for the stability experiment.
struct PerturbationSpec {
  std::vector<double> fractions = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
  int trials = 1;
  std::uint64_t seed = 0;
};

/// Dispatches a selector by name: degree | dri | dsn | nc | nd | ci.
/// dri needs `beta`; ci uses `ci_radius`.
Selection run_selector(const Graph& g, const std::string& algo, int m,
                       std::optional<double> beta, int ci_radius = 2);

/// The beta grid an experiment runs on: config.betas verbatim, or
/// beta_factors scaled by the graph's epidemic threshold.
std::vector<double> resolve_betas(const Graph& g,
                                  const ExperimentConfig& config);

// --- spreading curve -------------------------------------------------------

struct CurvePoint {
  int step = 0;
  double mean_s = 0.0, mean_i = 0.0, mean_r = 0.0, mean_aif = 0.0;
};

struct CurveResult {
  std::string algo;
  int m_requested = 0;
  int m_used = 0;  // selectors with convergence rules may return fewer
  double beta = 0.0;
  std::vector<CurvePoint> points;
};

/// Seed selection followed by replication-averaged spreading, one
/// (algo, m, beta) cell. Throws when the selector returns no seeds.
CurveResult run_curve(const Graph& g, const ExperimentConfig& config,
                      const std::string& algo, int m, double beta);

// --- redundant influence / AIF sweep ---------------------------------------

struct SweepRow {
  std::string algo;
  int m_requested = 0;
  int m_used = 0;
  double beta = 0.0;
  double total_ri = 0.0;
  double aif = 0.0;
  double aif_star = 0.0;  // normalized against the dri row of the same cell
};

/// Full (algo x m x beta) sweep. config.algorithms must contain "dri": it is
/// the normalization baseline, and its row leads every (m, beta) group.
std::vector<SweepRow> run_sweep(const Graph& g,
                                const ExperimentConfig& config);

// --- stability under incomplete structure information -----------------------

struct StabilityRow {
  double fraction = 0.0;
  int trial = 0;
  int m_requested = 0;
  int m_used = 0;
  double beta = 0.0;
  double aif = 0.0;
};

/// For each removal fraction and trial: drop random nodes, take the largest
/// connected component, pick dsn spreaders there, then simulate those
/// spreaders on the ORIGINAL graph.
std::vector<StabilityRow> run_stability(const Graph& g,
                                        const ExperimentConfig& config,
                                        const PerturbationSpec& perturbation);

// --- spreader properties -----------------------------------------------------

struct PropertiesRow {
  std::string algo;
  int m_requested = 0;
  int m_used = 0;
  double avg_degree = 0.0;
  double avg_coreness = 0.0;
};

/// Mean degree and mean coreness of each algorithm's spreader sets across
/// the m grid.
std::vector<PropertiesRow> run_properties(const Graph& g,
                                          const ExperimentConfig& config);

// --- network statistics table ------------------------------------------------

struct StatsRow {
  std::string name;
  bool ok = false;
  std::string error;
  NetworkStats stats;
};

/// network_stats for each edge-list file; a file that fails to load yields
/// an error row and the rest proceed.
std::vector<StatsRow> run_stats(const std::vector<std::string>& paths,
                                DistanceMode mode = DistanceMode::kAuto,
                                int sample_sources = 1000,
                                std::uint64_t seed = 0);

// --- CSV writers -------------------------------------------------------------

void write_curve_csv(const CurveResult& curve, std::ostream& out);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_stability_csv(const std::vector<StabilityRow>& rows,
                         std::ostream& out);
void write_properties_csv(const std::vector<PropertiesRow>& rows,
                          std::ostream& out);
void write_stats_csv(const std::vector<StatsRow>& rows, std::ostream& out);
void write_selection_csv(const Graph& g, const Selection& selection,
                         std::ostream& out);

}  // namespace spreadnet

#endif  // SPREADNET_EXPERIMENTS_HPP_
