#include "spreadnet/experiments.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "spreadnet/csv.hpp"
#include "spreadnet/influence.hpp"
#include "spreadnet/rng.hpp"
#include "spreadnet/sir.hpp"

namespace spreadnet {

Selection run_selector(const Graph& g, const std::string& algo, int m,
                       std::optional<double> beta, int ci_radius) {
  if (algo == "degree") return select_degree(g, m);
  if (algo == "dri") {
    if (!beta)
      throw std::invalid_argument("the dri selector requires a beta value");
    return select_dri(g, *beta, m);
  }
  if (algo == "dsn") return select_dsn(g, m);
  if (algo == "nc") return select_nc(g, m);
  if (algo == "nd") return select_nd(g, m);
  if (algo == "ci") return select_ci(g, m, ci_radius);
  throw std::invalid_argument("unknown selector '" + algo + "'");
}

std::vector<double> resolve_betas(const Graph& g,
                                  const ExperimentConfig& config) {
  if (!config.betas.empty()) return config.betas;
  double threshold = epidemic_threshold(g);
  std::vector<double> betas;
  betas.reserve(config.beta_factors.size());
  for (double f : config.beta_factors) betas.push_back(f * threshold);
  return betas;
}

namespace {

// Stable per-cell seed, independent of evaluation order.
std::uint64_t cell_seed(std::uint64_t master, std::size_t algo_idx,
                        std::size_t m_idx, std::size_t beta_idx,
                        std::size_t n_m, std::size_t n_beta) {
  return derive_seed(master, (algo_idx * n_m + m_idx) * n_beta + beta_idx);
}

SpreadSummary simulate_cell(const Graph& g, const std::vector<int>& seeds,
                            double beta, const ExperimentConfig& config,
                            std::uint64_t master) {
  SpreadParams params;
  params.beta = beta;
  params.replications = config.replications;
  params.master_seed = master;
  return simulate(g, seeds, params);
}

}  // namespace

CurveResult run_curve(const Graph& g, const ExperimentConfig& config,
                      const std::string& algo, int m, double beta) {
  Selection sel = run_selector(g, algo, m, beta, config.ci_radius);
  if (sel.nodes.empty())
    throw std::runtime_error("selector '" + algo +
                             "' produced an empty spreader set");
  SpreadSummary summary =
      simulate_cell(g, sel.nodes, beta, config, config.master_seed);

  CurveResult curve;
  curve.algo = algo;
  curve.m_requested = m;
  curve.m_used = static_cast<int>(sel.nodes.size());
  curve.beta = beta;
  curve.points.reserve(summary.mean_aif.size());
  for (std::size_t t = 0; t < summary.mean_aif.size(); ++t)
    curve.points.push_back({static_cast<int>(t), summary.mean_susceptible[t],
                            summary.mean_infected[t],
                            summary.mean_recovered[t], summary.mean_aif[t]});
  return curve;
}

std::vector<SweepRow> run_sweep(const Graph& g,
                                const ExperimentConfig& config) {
  auto algos = config.algorithms;
  auto dri_pos = std::find(algos.begin(), algos.end(), "dri");
  if (dri_pos == algos.end())
    throw std::invalid_argument(
        "sweep requires 'dri' among the algorithms: it is the AIF "
        "normalization baseline");
  // The dri row must precede the rows it normalizes.
  std::rotate(algos.begin(), dri_pos, dri_pos + 1);

  const std::vector<double> betas = resolve_betas(g, config);
  std::vector<SweepRow> rows;
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    const double beta = betas[bi];
    for (std::size_t mi = 0; mi < config.m_grid.size(); ++mi) {
      const int m = config.m_grid[mi];
      double dri_aif = 0.0;
      for (std::size_t ai = 0; ai < algos.size(); ++ai) {
        const std::string& algo = algos[ai];
        Selection sel = run_selector(g, algo, m, beta, config.ci_radius);
        if (sel.nodes.empty())
          throw std::runtime_error("selector '" + algo +
                                   "' produced an empty spreader set");
        SweepRow row;
        row.algo = algo;
        row.m_requested = m;
        row.m_used = static_cast<int>(sel.nodes.size());
        row.beta = beta;
        row.total_ri = ri_report(g, sel.nodes, beta).total_ri;
        row.aif = simulate_cell(g, sel.nodes, beta, config,
                                cell_seed(config.master_seed, ai, mi, bi,
                                          config.m_grid.size(), betas.size()))
                      .final_aif_mean;
        if (algo == "dri") dri_aif = row.aif;  // first in the group
        row.aif_star = aif_normalized(row.aif, dri_aif);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<StabilityRow> run_stability(const Graph& g,
                                        const ExperimentConfig& config,
                                        const PerturbationSpec& perturbation) {
  for (double f : perturbation.fractions)
    if (f < 0.0 || f >= 1.0)
      throw std::invalid_argument("removal fractions must lie in [0, 1)");
  if (perturbation.trials < 1)
    throw std::invalid_argument("trials must be >= 1");

  const std::vector<double> betas = resolve_betas(g, config);
  std::vector<StabilityRow> rows;
  for (std::size_t fi = 0; fi < perturbation.fractions.size(); ++fi) {
    const double fraction = perturbation.fractions[fi];
    for (int trial = 0; trial < perturbation.trials; ++trial) {
      const std::uint64_t run_index = fi * perturbation.trials + trial;
      Graph perturbed = remove_random_nodes(
          g, fraction, derive_seed(perturbation.seed, run_index));
      SubgraphResult lcc = largest_connected_component(perturbed);

      for (int m : config.m_grid) {
        Selection sel = select_dsn(lcc.graph, m);
        // Map the spreaders back through their labels; removal and LCC both
        // preserve labels, so each one must resolve in the original graph.
        std::vector<int> seeds;
        seeds.reserve(sel.nodes.size());
        for (int v : sel.nodes) {
          int original = g.id_of(lcc.graph.label(v));
          if (original < 0)
            throw std::logic_error(
                "perturbed-graph spreader is missing from the original "
                "graph");
          seeds.push_back(original);
        }
        for (std::size_t bi = 0; bi < betas.size(); ++bi) {
          StabilityRow row;
          row.fraction = fraction;
          row.trial = trial;
          row.m_requested = m;
          row.m_used = static_cast<int>(seeds.size());
          row.beta = betas[bi];
          if (seeds.empty())
            throw std::runtime_error(
                "dsn produced no spreaders on the perturbed graph");
          row.aif =
              simulate_cell(g, seeds, betas[bi], config,
                            derive_seed(config.master_seed,
                                        run_index * betas.size() + bi))
                  .final_aif_mean;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::vector<PropertiesRow> run_properties(const Graph& g,
                                          const ExperimentConfig& config) {
  const std::vector<int> coreness = k_core_decomposition(g);
  std::vector<double> betas = resolve_betas(g, config);

  std::vector<PropertiesRow> rows;
  for (const std::string& algo : config.algorithms) {
    for (int m : config.m_grid) {
      // Only dri conditions its choice on beta; give it the first grid value.
      std::optional<double> beta;
      if (algo == "dri") {
        if (betas.empty())
          throw std::invalid_argument("dri requires a beta grid");
        beta = betas.front();
      }
      Selection sel = run_selector(g, algo, m, beta, config.ci_radius);
      PropertiesRow row;
      row.algo = algo;
      row.m_requested = m;
      row.m_used = static_cast<int>(sel.nodes.size());
      if (!sel.nodes.empty()) {
        double deg_sum = 0.0, core_sum = 0.0;
        for (int v : sel.nodes) {
          deg_sum += g.degree(v);
          core_sum += coreness[v];
        }
        row.avg_degree = deg_sum / static_cast<double>(sel.nodes.size());
        row.avg_coreness = core_sum / static_cast<double>(sel.nodes.size());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<StatsRow> run_stats(const std::vector<std::string>& paths,
                                DistanceMode mode, int sample_sources,
                                std::uint64_t seed) {
  std::vector<StatsRow> rows;
  for (const std::string& path : paths) {
    StatsRow row;
    // Strip directory and extension for the name column.
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
      name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos)
      name = name.substr(0, dot);
    row.name = name;
    try {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open " + path);
      Graph g = load_edge_list(in);
      row.stats = network_stats(g, mode, sample_sources, seed);
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_curve_csv(const CurveResult& curve, std::ostream& out) {
  out << "algo,m,beta,step,mean_S,mean_I,mean_R,mean_AIF\n";
  for (const CurvePoint& p : curve.points)
    out << curve.algo << ',' << curve.m_used << ',' << fmt_double(curve.beta)
        << ',' << p.step << ',' << fmt_double(p.mean_s) << ','
        << fmt_double(p.mean_i) << ',' << fmt_double(p.mean_r) << ','
        << fmt_double(p.mean_aif) << '\n';
  if (curve.m_used != curve.m_requested)
    out << "# m_requested=" << curve.m_requested
        << " m_used=" << curve.m_used << '\n';
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "algo,m,m_used,beta,total_ri,aif,aif_star\n";
  for (const SweepRow& r : rows)
    out << r.algo << ',' << r.m_requested << ',' << r.m_used << ','
        << fmt_double(r.beta) << ',' << fmt_double(r.total_ri) << ','
        << fmt_double(r.aif) << ',' << fmt_double(r.aif_star) << '\n';
}

void write_stability_csv(const std::vector<StabilityRow>& rows,
                         std::ostream& out) {
  out << "fraction,trial,m,m_used,beta,aif\n";
  for (const StabilityRow& r : rows)
    out << fmt_double(r.fraction) << ',' << r.trial << ',' << r.m_requested
        << ',' << r.m_used << ',' << fmt_double(r.beta) << ','
        << fmt_double(r.aif) << '\n';
}

void write_properties_csv(const std::vector<PropertiesRow>& rows,
                          std::ostream& out) {
  out << "algo,m,m_used,avg_degree,avg_coreness\n";
  for (const PropertiesRow& r : rows)
    out << r.algo << ',' << r.m_requested << ',' << r.m_used << ','
        << fmt_double(r.avg_degree) << ',' << fmt_double(r.avg_coreness)
        << '\n';
}

void write_stats_csv(const std::vector<StatsRow>& rows, std::ostream& out) {
  out << "name,N,E,avg_k,avg_d,C,beta_c\n";
  for (const StatsRow& r : rows) {
    if (!r.ok) {
      out << "# error " << r.name << ": " << r.error << '\n';
      continue;
    }
    out << r.name << ',' << r.stats.n_nodes << ',' << r.stats.n_edges << ','
        << fmt_double(r.stats.avg_degree) << ','
        << fmt_double(r.stats.avg_distance) << ','
        << fmt_double(r.stats.clustering) << ','
        << fmt_double(r.stats.epidemic_threshold) << '\n';
  }
  for (const StatsRow& r : rows) {
    if (!r.ok) continue;
    if (r.stats.distance_on_lcc)
      out << "# " << r.name << ": avg_d computed on the largest component ("
          << r.stats.lcc_size << " of " << r.stats.n_nodes << " nodes)\n";
    if (r.stats.distance_sampled)
      out << "# " << r.name << ": avg_d estimated from sampled sources\n";
  }
}

void write_selection_csv(const Graph& g, const Selection& selection,
                         std::ostream& out) {
  const std::vector<int> coreness = k_core_decomposition(g);
  out << "rank,node_label,degree,coreness\n";
  for (std::size_t i = 0; i < selection.nodes.size(); ++i) {
    int v = selection.nodes[i];
    out << (i + 1) << ',' << g.label(v) << ',' << g.degree(v) << ','
        << coreness[v] << '\n';
  }
  out << "# converged_reason=" << to_string(selection.converged_reason)
      << '\n';
}

}  // namespace spreadnet
