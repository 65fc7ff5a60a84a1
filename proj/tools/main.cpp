// spreadnet command-line interface: network statistics, spreader selection,
// redundant-influence reports, SIR spreading simulation and the experiment
// harness around them. Every command is deterministic for a fixed seed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spreadnet/csv.hpp"
#include "spreadnet/experiments.hpp"
#include "spreadnet/graph.hpp"
#include "spreadnet/influence.hpp"
#include "spreadnet/placement.hpp"
#include "spreadnet/selection.hpp"
#include "spreadnet/sir.hpp"

namespace {

using nlohmann::json;
using namespace spreadnet;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  Graph g = load_edge_list(in);
  if (g.dropped_duplicate_edges() > 0 || g.dropped_self_loops() > 0)
    std::cerr << path << ": dropped " << g.dropped_duplicate_edges()
              << " duplicate edge(s) and " << g.dropped_self_loops()
              << " self-loop(s)\n";
  return g;
}

// Seed file: one node label per line; '#'/'%' comments allowed.
std::vector<int> load_seeds(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file " + path);
  std::vector<int> seeds;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    if (token[0] == '#' || token[0] == '%') continue;
    int id = g.id_of(token);
    if (id < 0)
      throw std::runtime_error("seed label '" + token +
                               "' is not a node of the graph");
    seeds.push_back(id);
  }
  return seeds;
}

// "10,20,30" or "10:100:10" (inclusive range).
std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    int from = 0, to = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> from >> c1 >> to >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0)
      throw std::runtime_error("cannot parse grid '" + text +
                               "' (want a,b,c or from:to:step)");
    for (int v = from; v <= to; v += step) values.push_back(v);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty()) values.push_back(std::stoi(item));
  }
  if (values.empty()) throw std::runtime_error("empty grid '" + text + "'");
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) values.push_back(std::stod(item));
  if (values.empty()) throw std::runtime_error("empty list '" + text + "'");
  return values;
}

// Writes to --out when given, else to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_)
        throw std::runtime_error("cannot open output file " + path_);
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  bool is_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
};

bool option_passed(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Options shared by the experiment subcommands; a JSON config file provides
// defaults and explicit flags override it.
struct HarnessCli {
  std::string config_path;
  std::string graph;
  std::string algos;
  std::string m_grid;
  std::string betas;
  std::string beta_factors;
  int replications = 100;
  std::uint64_t master_seed = 0;
  int ci_radius = 2;

  void attach(CLI::App* cmd, bool with_algos) {
    cmd->add_option("--config", config_path,
                    "JSON config file; explicit flags override it");
    cmd->add_option("--graph", graph, "edge-list file");
    if (with_algos)
      cmd->add_option("--algos", algos,
                      "comma-separated selectors (degree,dri,dsn,nc,nd,ci)");
    cmd->add_option("--m-grid", m_grid,
                    "spreader counts, e.g. 10:100:10 or 10,50,100");
    cmd->add_option("--betas", betas, "absolute infection probabilities");
    cmd->add_option("--beta-factors", beta_factors,
                    "infection probabilities as multiples of beta_c");
    cmd->add_option("--reps", replications, "replications per simulation");
    cmd->add_option("--seed", master_seed, "master seed");
    cmd->add_option("--ci-radius", ci_radius, "ball radius for ci");
  }

  ExperimentConfig resolve(const CLI::App* cmd) const {
    ExperimentConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw std::runtime_error("cannot open config file " + config_path);
      json j = json::parse(in);
      if (j.contains("graph")) config.graph_path = j["graph"];
      if (j.contains("algorithms"))
        config.algorithms = j["algorithms"].get<std::vector<std::string>>();
      if (j.contains("m_grid"))
        config.m_grid = j["m_grid"].get<std::vector<int>>();
      if (j.contains("betas"))
        config.betas = j["betas"].get<std::vector<double>>();
      if (j.contains("beta_factors"))
        config.beta_factors = j["beta_factors"].get<std::vector<double>>();
      if (j.contains("replications")) config.replications = j["replications"];
      if (j.contains("master_seed")) config.master_seed = j["master_seed"];
      if (j.contains("ci_radius")) config.ci_radius = j["ci_radius"];
    }
    if (option_passed(cmd, "--graph")) config.graph_path = graph;
    if (option_passed(cmd, "--algos")) {
      config.algorithms.clear();
      std::istringstream in(algos);
      std::string item;
      while (std::getline(in, item, ','))
        if (!item.empty()) config.algorithms.push_back(item);
    }
    if (option_passed(cmd, "--m-grid")) config.m_grid = parse_int_grid(m_grid);
    if (option_passed(cmd, "--betas")) {
      config.betas = parse_double_list(betas);
    } else if (option_passed(cmd, "--beta-factors")) {
      config.betas.clear();
      config.beta_factors = parse_double_list(beta_factors);
    }
    if (option_passed(cmd, "--reps")) config.replications = replications;
    if (option_passed(cmd, "--seed")) config.master_seed = master_seed;
    if (option_passed(cmd, "--ci-radius")) config.ci_radius = ci_radius;
    if (config.graph_path.empty())
      throw std::runtime_error("no graph file given (--graph or config)");
    return config;
  }
};

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["graph"] = config.graph_path;
  j["algorithms"] = config.algorithms;
  j["m_grid"] = config.m_grid;
  j["betas"] = config.betas;
  j["beta_factors"] = config.beta_factors;
  j["replications"] = config.replications;
  j["master_seed"] = config.master_seed;
  j["ci_radius"] = config.ci_radius;
  return j;
}

// Config provenance next to a CSV written to disk.
void write_sidecar(const OutputTarget& target, json extra) {
  if (!target.is_file()) return;
  std::ofstream out(target.path() + ".config.json");
  out << extra.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Redundant-influence toolkit: spreader selection and SIR spreading "
      "experiments on social graphs"};
  app.require_subcommand(1);

  // --- stats ---------------------------------------------------------------
  auto* stats_cmd = app.add_subcommand(
      "stats", "Descriptive statistics (CSV: name,N,E,avg_k,avg_d,C,beta_c)");
  std::vector<std::string> stats_paths;
  std::string stats_mode = "auto";
  int stats_sources = 1000;
  std::uint64_t stats_seed = 0;
  std::string stats_out;
  stats_cmd->add_option("paths", stats_paths, "edge-list files")->required();
  stats_cmd->add_option("--distance-mode", stats_mode,
                        "avg_d mode: auto|exact|sampled");
  stats_cmd->add_option("--sample-sources", stats_sources,
                        "BFS sources in sampled mode");
  stats_cmd->add_option("--seed", stats_seed, "source-sampling seed");
  stats_cmd->add_option("--out", stats_out, "output CSV file");
  stats_cmd->callback([&] {
    DistanceMode mode;
    if (stats_mode == "auto")
      mode = DistanceMode::kAuto;
    else if (stats_mode == "exact")
      mode = DistanceMode::kExact;
    else if (stats_mode == "sampled")
      mode = DistanceMode::kSampled;
    else
      throw std::runtime_error("unknown distance mode '" + stats_mode + "'");
    auto rows = run_stats(stats_paths, mode, stats_sources, stats_seed);
    OutputTarget target(stats_out);
    write_stats_csv(rows, target.stream());
    for (const auto& row : rows)
      if (!row.ok) std::cerr << row.name << ": " << row.error << '\n';
  });

  // --- select ----------------------------------------------------------------
  auto* select_cmd = app.add_subcommand(
      "select", "Select spreaders (CSV: rank,node_label,degree,coreness)");
  std::string sel_graph, sel_algo, sel_out;
  int sel_m = 0;
  double sel_beta = 0.0;
  int sel_radius = 2;
  select_cmd->add_option("--graph", sel_graph, "edge-list file")->required();
  select_cmd
      ->add_option("--algo", sel_algo, "degree | dri | dsn | nc | nd | ci")
      ->required();
  select_cmd->add_option("--m", sel_m, "number of spreaders")->required();
  select_cmd->add_option("--beta", sel_beta,
                         "infection probability (required for dri)");
  select_cmd->add_option("--ci-radius", sel_radius, "ball radius for ci");
  select_cmd->add_option("--out", sel_out, "output CSV file");
  select_cmd->callback([&] {
    Graph g = load_graph(sel_graph);
    std::optional<double> beta;
    if (select_cmd->count("--beta")) beta = sel_beta;
    Selection sel = run_selector(g, sel_algo, sel_m, beta, sel_radius);
    OutputTarget target(sel_out);
    write_selection_csv(g, sel, target.stream());
  });

  // --- ri ---------------------------------------------------------------------
  auto* ri_cmd = app.add_subcommand(
      "ri", "Redundant-influence report (CSV: node_label,n1,n2,n3,I,RI)");
  std::string ri_graph, ri_seeds, ri_out;
  double ri_beta = 0.0;
  ri_cmd->add_option("--graph", ri_graph, "edge-list file")->required();
  ri_cmd->add_option("--seeds", ri_seeds, "seed file, one label per line")
      ->required();
  ri_cmd->add_option("--beta", ri_beta, "infection probability")->required();
  ri_cmd->add_option("--out", ri_out, "output CSV file");
  ri_cmd->callback([&] {
    Graph g = load_graph(ri_graph);
    std::vector<int> seeds = load_seeds(g, ri_seeds);
    OutputTarget target(ri_out);
    write_ri_csv(g, seeds, ri_beta, target.stream());
  });

  // --- simulate ----------------------------------------------------------------
  auto* sim_cmd = app.add_subcommand(
      "simulate",
      "SIR spreading (CSV: step,mean_S,mean_I,mean_R,mean_AIF + JSON summary)");
  std::string sim_graph, sim_seeds, sim_out;
  SpreadParams sim_params;
  sim_cmd->add_option("--graph", sim_graph, "edge-list file")->required();
  sim_cmd->add_option("--seeds", sim_seeds, "seed file, one label per line")
      ->required();
  sim_cmd->add_option("--beta", sim_params.beta, "infection probability")
      ->required();
  sim_cmd->add_option("--reps", sim_params.replications, "replications");
  sim_cmd->add_option("--seed", sim_params.master_seed, "master seed");
  sim_cmd->add_option("--max-steps", sim_params.max_steps,
                      "truncate curves after this many steps (<0: no cap)");
  sim_cmd->add_option("--out", sim_out,
                      "output CSV file (summary goes to <out>.summary.json)");
  sim_cmd->callback([&] {
    Graph g = load_graph(sim_graph);
    std::vector<int> seeds = load_seeds(g, sim_seeds);
    SpreadSummary summary = simulate(g, seeds, sim_params);
    OutputTarget target(sim_out);
    std::ostream& out = target.stream();
    out << "step,mean_S,mean_I,mean_R,mean_AIF\n";
    for (std::size_t t = 0; t < summary.mean_aif.size(); ++t)
      out << t << ',' << fmt_double(summary.mean_susceptible[t]) << ','
          << fmt_double(summary.mean_infected[t]) << ','
          << fmt_double(summary.mean_recovered[t]) << ','
          << fmt_double(summary.mean_aif[t]) << '\n';
    json j;
    j["final_aif_mean"] = summary.final_aif_mean;
    j["final_aif_std"] = summary.final_aif_std;
    j["reps"] = summary.replications;
    j["beta"] = summary.beta;
    if (target.is_file()) {
      std::ofstream jout(target.path() + ".summary.json");
      jout << j.dump(2) << '\n';
    } else {
      std::cerr << j.dump() << '\n';
    }
  });

  // --- curve ---------------------------------------------------------------------
  auto* curve_cmd = app.add_subcommand(
      "curve", "Per-step AIF for one selector (CSV: algo,m,beta,step,...)");
  HarnessCli curve_cli;
  std::string curve_algo, curve_out;
  int curve_m = 0;
  double curve_beta = 0.0;
  curve_cli.attach(curve_cmd, false);
  curve_cmd->add_option("--algo", curve_algo, "selector")->required();
  curve_cmd->add_option("--m", curve_m, "number of spreaders")->required();
  curve_cmd->add_option("--beta", curve_beta, "infection probability")
      ->required();
  curve_cmd->add_option("--out", curve_out, "output CSV file");
  curve_cmd->callback([&] {
    ExperimentConfig config = curve_cli.resolve(curve_cmd);
    Graph g = load_graph(config.graph_path);
    CurveResult curve = run_curve(g, config, curve_algo, curve_m, curve_beta);
    OutputTarget target(curve_out);
    write_curve_csv(curve, target.stream());
    json j = config_to_json(config);
    j["command"] = "curve";
    j["algo"] = curve_algo;
    j["m"] = curve_m;
    j["beta"] = curve_beta;
    write_sidecar(target, j);
  });

  // --- sweep ----------------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "Total RI and AIF over the (algo, m, beta) grid, normalized against "
      "dri (CSV: algo,m,m_used,beta,total_ri,aif,aif_star)");
  HarnessCli sweep_cli;
  std::string sweep_out;
  sweep_cli.attach(sweep_cmd, true);
  sweep_cmd->add_option("--out", sweep_out, "output CSV file");
  sweep_cmd->callback([&] {
    ExperimentConfig config = sweep_cli.resolve(sweep_cmd);
    Graph g = load_graph(config.graph_path);
    auto rows = run_sweep(g, config);
    OutputTarget target(sweep_out);
    write_sweep_csv(rows, target.stream());
    json j = config_to_json(config);
    j["command"] = "sweep";
    write_sidecar(target, j);
  });

  // --- stability -------------------------------------------------------------------
  auto* stab_cmd = app.add_subcommand(
      "stability",
      "dsn selection on randomly thinned graphs, simulated on the original "
      "(CSV: fraction,trial,m,m_used,beta,aif)");
  HarnessCli stab_cli;
  std::string stab_fractions, stab_out;
  PerturbationSpec stab_spec;
  stab_cli.attach(stab_cmd, false);
  stab_cmd->add_option("--fractions", stab_fractions,
                       "removal fractions, e.g. 0.05,0.1,0.15");
  stab_cmd->add_option("--trials", stab_spec.trials, "trials per fraction");
  stab_cmd->add_option("--removal-seed", stab_spec.seed,
                       "seed of the node-removal sampler");
  stab_cmd->add_option("--out", stab_out, "output CSV file");
  stab_cmd->callback([&] {
    ExperimentConfig config = stab_cli.resolve(stab_cmd);
    if (stab_cmd->count("--fractions"))
      stab_spec.fractions = parse_double_list(stab_fractions);
    Graph g = load_graph(config.graph_path);
    auto rows = run_stability(g, config, stab_spec);
    OutputTarget target(stab_out);
    write_stability_csv(rows, target.stream());
    json j = config_to_json(config);
    j["command"] = "stability";
    j["fractions"] = stab_spec.fractions;
    j["trials"] = stab_spec.trials;
    j["removal_seed"] = stab_spec.seed;
    write_sidecar(target, j);
  });

  // --- properties --------------------------------------------------------------------
  auto* props_cmd = app.add_subcommand(
      "properties",
      "Mean degree and coreness of selected spreaders "
      "(CSV: algo,m,m_used,avg_degree,avg_coreness)");
  HarnessCli props_cli;
  std::string props_out;
  props_cli.attach(props_cmd, true);
  props_cmd->add_option("--out", props_out, "output CSV file");
  props_cmd->callback([&] {
    ExperimentConfig config = props_cli.resolve(props_cmd);
    Graph g = load_graph(config.graph_path);
    auto rows = run_properties(g, config);
    OutputTarget target(props_out);
    write_properties_csv(rows, target.stream());
    json j = config_to_json(config);
    j["command"] = "properties";
    write_sidecar(target, j);
  });

  // --- table1 -----------------------------------------------------------------------
  auto* table1_cmd = app.add_subcommand(
      "table1",
      "Maximal zero-RI spreader placements around one node "
      "(CSV: beta,x1,x2,x3,I)");
  double t1_beta = 0.0;
  int t1_bound = 64;
  std::string t1_out;
  table1_cmd->add_option("--beta", t1_beta, "infection probability")
      ->required();
  table1_cmd->add_option("--bound", t1_bound, "enumeration bound per count");
  table1_cmd->add_option("--out", t1_out, "output CSV file");
  table1_cmd->callback([&] {
    auto triples = maximal_triples(t1_beta, t1_bound);
    OutputTarget target(t1_out);
    std::ostream& out = target.stream();
    out << "beta,x1,x2,x3,I\n";
    for (const PlacementTriple& t : triples)
      out << fmt_double(t1_beta) << ',' << t.x1 << ',' << t.x2 << ',' << t.x3
          << ','
          << fmt_double(total_influence(t.x1, t.x2, t.x3, t1_beta)) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
