#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prfas/prfas.hpp"

namespace prfas::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidFas = 1,
  kUsage = 2,
  kIo = 3,
  kInfeasible = 4,
};

inline constexpr const char* workers_env = "PRFAS_WORKERS";

namespace detail {

inline ParsedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// "algorithm size pct elapsed_ms"
inline std::string summary_line(Algorithm a, const FasResult& fas, const DirectedGraph& g) {
  std::ostringstream line;
  line << algorithm_name(a) << ' ' << fas.size << ' '
       << format_percentage(fas.size, g.edge_count()) << ' '
       << prfas::detail::format_fixed(fas.elapsed.count(), 3);
  return line.str();
}

}  // namespace detail

// Entry point shared by the executable and the tests. args[0] is the program
// name. Diagnostics go to `err`, results to `out`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feedback arc set heuristics: PageRankFAS, GreedyFAS, SortFAS"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Random digraph with planted back edges");
  GeneratorParams params;
  std::string gen_output, gen_planted;
  gen->add_option("--n", params.n, "Node count")->required();
  gen->add_option("--avg-out-degree", params.avg_out_degree, "Average out-degree")->required();
  gen->add_option("--back-fraction", params.back_fraction, "Planted back-edge fraction")
      ->default_val(0.0);
  gen->add_option("--seed", params.seed, "Random seed")->default_val(0);
  gen->add_option("-o,--output", gen_output, "Edge-list output file")->required();
  gen->add_option("--planted", gen_planted, "Planted back-edge file (default: OUTPUT.planted)");

  // run
  auto* run_cmd = app.add_subcommand("run", "Compute a feedback arc set");
  std::string run_input, run_output, algorithm_text = "pagerank";
  int iterations = default_pagerank_iterations;
  bool run_all = false;
  run_cmd->add_option("input", run_input, "Edge-list file")->required();
  run_cmd->add_option("-a,--algorithm", algorithm_text, "greedy | sort | pagerank")
      ->check(CLI::IsMember({"greedy", "sort", "pagerank"}));
  run_cmd->add_option("-k,--iterations", iterations, "PageRank sweeps per round")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("-o,--output", run_output, "FAS output file (with --all: OUTPUT.<algorithm>)");
  run_cmd->add_flag("--all", run_all, "Run all three heuristics");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check that a FAS leaves the graph acyclic");
  std::string verify_graph, verify_fas;
  verify_cmd->add_option("graph", verify_graph, "Edge-list file")->required();
  verify_cmd->add_option("fas", verify_fas, "FAS file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  std::string config_path, out_dir = ".";
  struct FlagSetting {
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
  };
  std::vector<FlagSetting> flag_settings;
  for (const char* key : {"sweep", "values", "files", "n", "avg_out_degree", "back_fraction",
                          "seeds", "base_seed", "algorithms", "pagerank_iterations",
                          "full_scale", "workers"}) {
    flag_settings.push_back({key, "", nullptr});
  }
  bench->add_option("-c,--config", config_path, "Key-value experiment config");
  bench->add_option("--out-dir", out_dir, "Directory for runs.csv and aggregate.csv");
  for (auto& setting : flag_settings) {
    std::string flag = "--" + setting.key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    setting.option = bench->add_option(flag, setting.value, "Overrides config key " + setting.key);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      if (gen_planted.empty()) gen_planted = gen_output + ".planted";
      const auto generated = generate(params);
      auto graph_out = detail::open_output(gen_output);
      write_edge_list(generated.graph, graph_out);
      auto planted_out = detail::open_output(gen_planted);
      planted_out << "# planted=" << generated.planted_back_edges.size() << '\n';
      for (EdgeId e : generated.planted_back_edges) {
        planted_out << generated.graph.tail(e).value << ' ' << generated.graph.head(e).value
                    << '\n';
      }
      if (!planted_out) throw std::runtime_error("write failure on " + gen_planted);
      return kOk;
    }

    if (*run_cmd) {
      const auto parsed = detail::load_graph(run_input);
      if (parsed.duplicates > 0) {
        err << "warning: dropped " << parsed.duplicates << " duplicate edge(s)\n";
      }
      std::vector<Algorithm> chosen;
      if (run_all) {
        chosen = {Algorithm::greedy, Algorithm::sort, Algorithm::pagerank};
      } else {
        chosen = {*parse_algorithm(algorithm_text)};
      }
      for (Algorithm a : chosen) {
        const auto fas = run_algorithm(a, parsed.graph, iterations);
        if (!run_output.empty()) {
          auto fas_out = detail::open_output(
              run_all ? run_output + "." + std::string(algorithm_name(a)) : run_output);
          write_fas(fas, parsed.graph, fas_out);
        }
        out << detail::summary_line(a, fas, parsed.graph) << '\n';
      }
      return kOk;
    }

    if (*verify_cmd) {
      const auto parsed = detail::load_graph(verify_graph);
      std::ifstream fas_in(verify_fas);
      if (!fas_in) throw std::runtime_error("cannot open " + verify_fas);
      std::vector<EdgeId> fas;
      try {
        fas = read_fas(parsed.graph, fas_in);
      } catch (const GraphError& e) {
        err << "invalid: " << e.what() << '\n';
        return kInvalidFas;
      }
      if (!validate_fas(parsed.graph, fas)) {
        err << "invalid: graph still has a cycle after removing " << fas.size()
            << " edge(s)\n";
        return kInvalidFas;
      }
      out << "valid " << fas.size() << ' '
          << format_percentage(fas.size(), parsed.graph.edge_count()) << '\n';
      return kOk;
    }

    if (*bench) {
      ExperimentConfig cfg;
      try {
        if (!config_path.empty()) {
          std::ifstream in(config_path);
          if (!in) throw std::runtime_error("cannot open " + config_path);
          cfg = parse_experiment_config(in);
        }
        if (const char* env = std::getenv(workers_env); env && *env) {
          apply_setting(cfg, "workers", env);
        }
        bool values_given = false, axis_given = false;
        for (const auto& setting : flag_settings) {
          if (setting.option->count() == 0) continue;
          apply_setting(cfg, setting.key, setting.value);
          values_given |= setting.key == "values";
          axis_given |= setting.key == "sweep" || setting.key == "full_scale";
        }
        if (!values_given && (config_path.empty() || axis_given)) {
          cfg.values = default_sweep(cfg.axis, cfg.full_scale);
        }
        validate(cfg);
      } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      const auto rows = run_experiment(cfg);
      auto runs_out = detail::open_output(out_dir + "/runs.csv");
      write_benchmark_csv(rows, runs_out);
      auto agg_out = detail::open_output(out_dir + "/aggregate.csv");
      const auto agg = aggregate(rows);
      write_aggregate_csv(agg, agg_out);
      for (const auto& a : agg) {
        out << a.algorithm << ' ' << a.n << ' ' << prfas::detail::format_real(a.avg_out_degree)
            << ' ' << (a.back_fraction ? prfas::detail::format_real(*a.back_fraction) : "-")
            << ' ' << prfas::detail::format_fixed(a.mean_fas_pct, 2) << '\n';
      }
      return kOk;
    }
  } catch (const InfeasibleParams& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidFas;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace prfas::cli
