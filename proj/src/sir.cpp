#include "spreadnet/sir.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace spreadnet {

namespace {

enum NodeState : char { kSusceptible = 0, kInfected = 1, kRecovered = 2 };

void check_sim_inputs(const Graph& g, const std::vector<int>& seeds,
                      double beta) {
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::domain_error("beta must lie in [0, 1]");
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

}  // namespace

Trajectory simulate_once(const Graph& g, const std::vector<int>& seeds,
                         double beta, Rng& rng) {
  check_sim_inputs(g, seeds, beta);
  const int n = g.node_count();

  std::vector<char> state(n, kSusceptible);
  std::vector<int> frontier = seeds;
  std::sort(frontier.begin(), frontier.end());
  for (int s : frontier) state[s] = kInfected;

  int n_infected = static_cast<int>(frontier.size());
  int n_recovered = 0;

  Trajectory traj;
  auto record = [&]() {
    traj.steps.push_back(
        {n - n_infected - n_recovered, n_infected, n_recovered});
    traj.aif.push_back(static_cast<double>(n_infected + n_recovered) / n);
  };
  record();  // step 0

  std::vector<char> newly(n, 0);
  std::vector<int> next_frontier;
  while (!frontier.empty()) {
    next_frontier.clear();
    // All attempts of a step are simultaneous: every (infectious, neighbor
    // susceptible at step start) pair draws once, even if the neighbor was
    // already infected by an earlier attempt in the same step.
    for (int u : frontier) {
      for (int w : g.neighbors(u)) {
        if (state[w] != kSusceptible) continue;
        if (rng.bernoulli(beta) && !newly[w]) {
          newly[w] = 1;
          next_frontier.push_back(w);
        }
      }
    }
    for (int u : frontier) state[u] = kRecovered;
    n_recovered += static_cast<int>(frontier.size());
    for (int w : next_frontier) {
      state[w] = kInfected;
      newly[w] = 0;
    }
    n_infected = static_cast<int>(next_frontier.size());
    std::sort(next_frontier.begin(), next_frontier.end());
    frontier.swap(next_frontier);
    record();
  }
  traj.final_aif = traj.aif.back();
  return traj;
}

SpreadSummary simulate(const Graph& g, const std::vector<int>& seeds,
                       const SpreadParams& params) {
  check_sim_inputs(g, seeds, params.beta);
  if (params.replications < 1)
    throw std::invalid_argument("replications must be >= 1");

  std::vector<Trajectory> runs;
  runs.reserve(params.replications);
  std::size_t longest = 0;
  for (int i = 0; i < params.replications; ++i) {
    Rng rng(derive_seed(params.master_seed, static_cast<std::uint64_t>(i)));
    runs.push_back(simulate_once(g, seeds, params.beta, rng));
    if (params.max_steps >= 0) {
      const auto cap = static_cast<std::size_t>(params.max_steps) + 1;
      if (runs.back().steps.size() > cap) {
        runs.back().steps.resize(cap);
        runs.back().aif.resize(cap);
        runs.back().final_aif = runs.back().aif.back();
      }
    }
    longest = std::max(longest, runs.back().steps.size());
  }

  // The per-step counts are integers, so sum them exactly and divide once;
  // the means then carry no accumulation noise and are independent of
  // summation order.
  std::vector<long long> sum_s(longest, 0), sum_i(longest, 0),
      sum_r(longest, 0), sum_ever(longest, 0);
  long long sum_final_ever = 0;
  for (const Trajectory& run : runs) {
    for (std::size_t t = 0; t < longest; ++t) {
      // Carry terminal values forward for runs that ended earlier.
      const TrajectoryStep& step =
          run.steps[std::min(t, run.steps.size() - 1)];
      sum_s[t] += step.susceptible;
      sum_i[t] += step.infected;
      sum_r[t] += step.recovered;
      sum_ever[t] += step.infected + step.recovered;
    }
    const TrajectoryStep& last = run.steps.back();
    sum_final_ever += last.infected + last.recovered;
  }

  SpreadSummary summary;
  summary.replications = params.replications;
  summary.beta = params.beta;
  summary.master_seed = params.master_seed;
  summary.mean_susceptible.resize(longest);
  summary.mean_infected.resize(longest);
  summary.mean_recovered.resize(longest);
  summary.mean_aif.resize(longest);
  const double reps = params.replications;
  const double n = g.node_count();
  for (std::size_t t = 0; t < longest; ++t) {
    summary.mean_susceptible[t] = static_cast<double>(sum_s[t]) / reps;
    summary.mean_infected[t] = static_cast<double>(sum_i[t]) / reps;
    summary.mean_recovered[t] = static_cast<double>(sum_r[t]) / reps;
    summary.mean_aif[t] = static_cast<double>(sum_ever[t]) / (reps * n);
  }
  summary.final_aif_mean = static_cast<double>(sum_final_ever) / (reps * n);

  double ss = 0.0;
  for (const Trajectory& run : runs) {
    double d = run.final_aif - summary.final_aif_mean;
    ss += d * d;
  }
  summary.final_aif_std =
      params.replications > 1 ? std::sqrt(ss / (reps - 1.0)) : 0.0;
  return summary;
}

double aif_normalized(double aif_x, double aif_dri) {
  if (aif_dri == 0.0)
    throw std::domain_error("cannot normalize against a zero baseline AIF");
  return (aif_x - aif_dri) / aif_dri;
}

namespace {

// State key for the exact expansion: susceptible mask and infected mask.
std::uint64_t state_key(std::uint32_t susceptible, std::uint32_t infected) {
  return (static_cast<std::uint64_t>(susceptible) << 32) | infected;
}

// Expected number of never-infected nodes from this state onward.
double expected_final_susceptible(
    const Graph& g, std::uint32_t susceptible, std::uint32_t infected,
    double beta, std::unordered_map<std::uint64_t, double>& memo) {
  if (infected == 0)
    return static_cast<double>(std::popcount(susceptible));
  auto it = memo.find(state_key(susceptible, infected));
  if (it != memo.end()) return it->second;

  // Exposed susceptible nodes become infected independently, each with
  // probability 1 - (1 - beta)^{#infectious neighbors}.
  std::vector<int> exposed;
  std::vector<double> p_infect;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!(susceptible & (1u << v))) continue;
    int infectious_neighbors = 0;
    for (int w : g.neighbors(v))
      if (infected & (1u << w)) ++infectious_neighbors;
    if (infectious_neighbors == 0) continue;
    exposed.push_back(v);
    double miss = 1.0;
    for (int i = 0; i < infectious_neighbors; ++i) miss *= 1.0 - beta;
    p_infect.push_back(1.0 - miss);
  }

  double expectation = 0.0;
  const std::uint32_t subsets = 1u << exposed.size();
  for (std::uint32_t pick = 0; pick < subsets; ++pick) {
    double prob = 1.0;
    std::uint32_t newly = 0;
    for (std::size_t i = 0; i < exposed.size(); ++i) {
      if (pick & (1u << i)) {
        prob *= p_infect[i];
        newly |= 1u << exposed[i];
      } else {
        prob *= 1.0 - p_infect[i];
      }
    }
    if (prob == 0.0) continue;
    expectation += prob * expected_final_susceptible(
                              g, susceptible & ~newly, newly, beta, memo);
  }
  memo.emplace(state_key(susceptible, infected), expectation);
  return expectation;
}

}  // namespace

double exact_aif_small(const Graph& g, const std::vector<int>& seeds,
                       double beta) {
  check_sim_inputs(g, seeds, beta);
  const int n = g.node_count();
  if (n > 12)
    throw std::invalid_argument(
        "exact expansion is limited to graphs of at most 12 nodes");

  std::uint32_t infected = 0;
  for (int s : seeds) infected |= 1u << s;
  std::uint32_t susceptible = ((1u << n) - 1u) & ~infected;

  std::unordered_map<std::uint64_t, double> memo;
  double never_infected =
      expected_final_susceptible(g, susceptible, infected, beta, memo);
  return (n - never_infected) / n;
}

}  // namespace spreadnet
