#ifndef SPREADNET_SIR_HPP_
#define SPREADNET_SIR_HPP_

#include <cstdint>
#include <vector>

#include "spreadnet/graph.hpp"
#include "spreadnet/rng.hpp"

namespace spreadnet {

/// Monte-Carlo parameters. Recovery probability is fixed at 1: a node is
/// infectious for exactly one step.
struct SpreadParams {
  double beta = 0.0;
  int replications = 100;
  long long max_steps = -1;  // < 0: run until no infected node remains
  std::uint64_t master_seed = 0;
};

struct TrajectoryStep {
  int susceptible = 0;
  int infected = 0;
  int recovered = 0;
};

/// One realization. steps[t] holds the state after step t (step 0 is the
/// initial condition); aif[t] = (infected + recovered) / N, the fraction
/// ever infected so far.
struct Trajectory {
  std::vector<TrajectoryStep> steps;
  std::vector<double> aif;
  double final_aif = 0.0;
};

/// Replication average. Shorter runs are padded by carrying their terminal
/// values forward before averaging.
struct SpreadSummary {
  std::vector<double> mean_susceptible;
  std::vector<double> mean_infected;
  std::vector<double> mean_recovered;
  std::vector<double> mean_aif;
  double final_aif_mean = 0.0;
  double final_aif_std = 0.0;  // sample standard deviation across replications
  int replications = 0;
  double beta = 0.0;
  std::uint64_t master_seed = 0;
};

/// Synchronous discrete-time SIR: at each step every node infected in the
/// previous step draws an independent Bernoulli(beta) infection attempt
/// against each neighbor that was susceptible at the start of the step, then
/// recovers. Seeds start infected at step 0. Runs until no infected node
/// remains (guaranteed within N steps).
Trajectory simulate_once(const Graph& g, const std::vector<int>& seeds,
                         double beta, Rng& rng);

/// Runs params.replications independent trajectories; replication i uses the
/// generator seeded with derive_seed(master_seed, i), so results are
/// reproducible and order-independent.
SpreadSummary simulate(const Graph& g, const std::vector<int>& seeds,
                       const SpreadParams& params);

/// (aif_x - aif_dri) / aif_dri. Throws std::domain_error when aif_dri is 0.
double aif_normalized(double aif_x, double aif_dri);

/// Exact expected final AIF by exhaustive expansion of the process tree,
/// branching over every subset of per-step infection outcomes. Limited to
/// graphs of at most 12 nodes; serves as the reference the Monte-Carlo
/// estimate is checked against.
double exact_aif_small(const Graph& g, const std::vector<int>& seeds,
                       double beta);

}  // namespace spreadnet

#endif  // SPREADNET_SIR_HPP_
