// linkq: run link-query measurement experiments on a hidden graph.
//
//   linkq run   --gen pa:5000,3 --strategy random --strategy c:100 --budget 2% --seeds 1:20 --svg
//   linkq stats --graph edges.txt
//   linkq gen   --gen sw:1000,10,0.05 --seed 7 > edges.txt
//   linkq bias  --graph edges.txt --trace out/trace.csv

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "linkq/bias.hpp"
#include "linkq/edge_list.hpp"
#include "linkq/experiment.hpp"
#include "linkq/generators.hpp"
#include "linkq/graph_stats.hpp"

namespace {

struct GraphSource {
  std::string graph;
  std::string gen;
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph", graph, "edge-list file");
    cmd->add_option("--gen", gen, "synthetic graph: er:n,p | pa:n,m0 | sw:n,k,beta");
    cmd->add_option("--gen-seed", seed, "seed for --gen");
  }

  linkq::LoadedGraph load() const {
    if (graph.empty() == gen.empty()) throw linkq::ConfigError("give exactly one of --graph and --gen");
    if (!graph.empty()) {
      auto loaded = linkq::load_edge_list(graph);
      if (loaded.self_loops + loaded.duplicates > 0) {
        std::cerr << "warning: dropped " << loaded.self_loops << " self-loop(s) and " << loaded.duplicates
                  << " duplicate edge(s)\n";
      }
      return loaded;
    }
    return {linkq::generate(linkq::parse_generator(gen, seed)), {}, 0, 0};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted link-query measurement of complex networks"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run measurement strategies and write CSV/SVG artifacts");
  std::string config_path;
  std::string graph_path, gen, budget, seeds, out_dir;
  std::uint64_t gen_seed = 0, stride = 0;
  unsigned jobs = 0;
  std::vector<std::string> strategies;
  bool svg = false, tbf_dynamic = false;
  run->add_option("--config", config_path, "key = value config file (flags override it)");
  run->add_option("--graph", graph_path, "edge-list file");
  run->add_option("--gen", gen, "synthetic graph: er:n,p | pa:n,m0 | sw:n,k,beta");
  run->add_option("--gen-seed", gen_seed, "seed for --gen");
  run->add_option("--strategy", strategies, "name[:k], repeatable (random, v-random, cs, v-cs, c, v-c, tbf, "
                                            "v-tbf, tbfc, v-tbfc)");
  run->add_option("--budget", budget, "query budget Q, absolute or a percentage of all pairs (e.g. 2%)");
  run->add_option("--seeds", seeds, "seed list 1,2,3 or base:count");
  run->add_option("--stride", stride, "write every stride-th trace point");
  run->add_option("--jobs", jobs, "concurrent runs");
  run->add_option("--out-dir", out_dir, "output directory");
  run->add_flag("--svg", svg, "also write curves.svg");
  run->add_flag("--tbf-dynamic", tbf_dynamic, "rank between-found pairs by live degrees");

  // stats
  auto* stats = app.add_subcommand("stats", "print statistics of a graph");
  GraphSource stats_src;
  stats_src.add_to(stats);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic graph as an edge list");
  std::string gen_spec, gen_out;
  std::uint64_t gen_cmd_seed = 1;
  gen_cmd->add_option("--gen", gen_spec, "er:n,p | pa:n,m0 | sw:n,k,beta")->required();
  gen_cmd->add_option("--seed", gen_cmd_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  // bias
  auto* bias = app.add_subcommand("bias", "recompute sample bias by replaying a saved trace");
  GraphSource bias_src;
  bias_src.add_to(bias);
  std::string trace_path, bias_out;
  bool bias_dynamic = false;
  bias->add_option("--trace", trace_path, "trace.csv written by run")->required();
  bias->add_option("--out", bias_out, "output file (default stdout)");
  bias->add_flag("--tbf-dynamic", bias_dynamic, "the run used --tbf-dynamic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      linkq::ExperimentConfig config;
      if (!config_path.empty()) config = linkq::load_config(config_path);
      if (!graph_path.empty()) {
        config.graph_path = graph_path;
        config.generator.reset();
      }
      if (!gen.empty()) {
        config.generator = gen;
        config.graph_path.reset();
      }
      if (run->count("--gen-seed")) config.generator_seed = gen_seed;
      if (!strategies.empty()) {
        config.strategies.clear();
        for (const auto& s : strategies) linkq::apply_config_value(config, "strategy", s);
      }
      if (!budget.empty()) config.budget = budget;
      if (!seeds.empty()) config.seeds = linkq::parse_seeds(seeds);
      if (run->count("--stride")) config.stride = stride;
      if (run->count("--jobs")) config.jobs = jobs;
      if (!out_dir.empty()) config.out_dir = out_dir;
      if (svg) config.svg = true;
      if (tbf_dynamic) config.tbf_dynamic = true;
      const auto result = linkq::run_experiment(config);
      std::cout << "ran " << result.runs.size() << " run(s), Q = " << result.budget << ", outputs in "
                << config.out_dir.string() << "\n";
    } else if (stats->parsed()) {
      const auto loaded = stats_src.load();
      const auto s = linkq::graph_stats(loaded.graph);
      std::cout << "nodes " << s.node_count << "\nedges " << s.edge_count << "\ndensity " << s.density
                << "\navg_degree " << s.avg_degree << "\nmax_degree " << s.max_degree << "\nclustering "
                << s.clustering << "\ntransitivity " << s.transitivity << "\n";
    } else if (gen_cmd->parsed()) {
      const auto g = linkq::generate(linkq::parse_generator(gen_spec, gen_cmd_seed));
      if (gen_out.empty()) {
        linkq::write_edge_list(std::cout, g);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        linkq::write_edge_list(out, g);
      }
    } else if (bias->parsed()) {
      const auto loaded = bias_src.load();
      std::ifstream in(trace_path);
      if (!in) throw std::runtime_error("cannot open " + trace_path);
      const auto rows = linkq::read_trace_csv(in);
      const auto samples = linkq::replay_samples(loaded.graph, rows, bias_dynamic);
      const auto reference = linkq::graph_stats(loaded.graph);
      if (bias_out.empty()) {
        linkq::write_bias_csv(std::cout, reference, samples);
      } else {
        std::ofstream out(bias_out);
        if (!out) throw std::runtime_error("cannot write " + bias_out);
        linkq::write_bias_csv(out, reference, samples);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
