#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "prfas/generator.hpp"
#include "prfas/graph.hpp"
#include "prfas/heuristics.hpp"
#include "prfas/io.hpp"
#include "prfas/verify.hpp"

namespace prfas {

enum class Algorithm { greedy, sort, pagerank };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::sort: return "sort";
    case Algorithm::pagerank: return "pagerank";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::greedy;
  if (name == "sort") return Algorithm::sort;
  if (name == "pagerank") return Algorithm::pagerank;
  return std::nullopt;
}

inline FasResult run_algorithm(Algorithm a, const DirectedGraph& g,
                               int pagerank_iterations = default_pagerank_iterations) {
  switch (a) {
    case Algorithm::greedy: return greedy_fas(g).fas;
    case Algorithm::sort: return sort_fas(g).fas;
    case Algorithm::pagerank: return page_rank_fas(g, pagerank_iterations);
  }
  throw std::logic_error("unknown algorithm");
}

enum class SweepAxis { nodes, back_fraction, out_degree, files };

inline constexpr std::uint32_t desk_scale_node_cap = 1000;

struct ExperimentConfig {
  SweepAxis axis = SweepAxis::nodes;
  std::vector<double> values;        // sweep points for numeric axes
  std::vector<std::string> files;    // edge lists for SweepAxis::files
  std::uint32_t n = 1000;
  double avg_out_degree = 3.0;
  double back_fraction = 0.2;
  std::uint32_t seeds_per_point = 10;
  std::uint64_t base_seed = 1;       // seed of run i is base_seed + i
  std::vector<Algorithm> algorithms{Algorithm::greedy, Algorithm::sort, Algorithm::pagerank};
  int pagerank_iterations = default_pagerank_iterations;
  bool full_scale = false;           // lifts the node-count cap
  unsigned workers = 1;              // 0 = hardware concurrency
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<double> default_sweep(SweepAxis axis, bool full_scale) {
  switch (axis) {
    case SweepAxis::nodes:
      return full_scale ? std::vector<double>{100, 200, 400, 1000, 2000, 4000}
                        : std::vector<double>{100, 200, 400, 1000};
    case SweepAxis::back_fraction: return {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
    case SweepAxis::out_degree: return {1.5, 3, 5, 8, 10, 15};
    case SweepAxis::files: return {};
  }
  return {};
}

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.seeds_per_point < 1) throw ConfigError("seeds must be >= 1");
  if (cfg.algorithms.empty()) throw ConfigError("no algorithm selected");
  if (cfg.pagerank_iterations < 0) throw ConfigError("pagerank_iterations must be >= 0");
  if (cfg.axis == SweepAxis::files) {
    if (cfg.files.empty()) throw ConfigError("file sweep without files");
    return;
  }
  if (cfg.values.empty()) throw ConfigError("empty sweep");
  if (cfg.axis == SweepAxis::nodes) {
    for (double v : cfg.values) {
      if (v < 1 || v != static_cast<double>(static_cast<std::uint32_t>(v))) {
        throw ConfigError("node counts must be positive integers");
      }
      if (!cfg.full_scale && v > desk_scale_node_cap) {
        throw ConfigError("node count " + detail::format_real(v) +
                          " exceeds the desk-scale cap of " +
                          std::to_string(desk_scale_node_cap) + "; set full_scale");
      }
    }
  }
}

namespace detail {

inline std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = trim(text.substr(start, comma - start));
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

inline double parse_real(const std::string& key, std::string_view text) {
  double value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(key + ": not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

inline std::uint64_t parse_count(const std::string& key, std::string_view text) {
  const auto value = parse_uint(text);
  if (!value) throw ConfigError(key + ": not a nonnegative integer: \"" + std::string(text) + "\"");
  return *value;
}

}  // namespace detail

// Applies one "key = value" setting.
//
//   sweep               nodes | back_fraction | out_degree | files
//   values              comma list of sweep points (default per axis)
//   files               comma list of edge-list paths (files sweep)
//   n                   node count when not swept
//   avg_out_degree      average out-degree when not swept
//   back_fraction       planted back-edge fraction when not swept
//   seeds               graphs per sweep point
//   base_seed           seed of the first graph at every point
//   algorithms          comma list of greedy, sort, pagerank
//   pagerank_iterations PageRank sweeps per round
//   full_scale          true | false
//   workers             worker threads, 0 = all cores
inline void apply_setting(ExperimentConfig& cfg, const std::string& key, std::string_view value) {
  value = detail::trim(value);
  if (key == "sweep") {
    if (value == "nodes") cfg.axis = SweepAxis::nodes;
    else if (value == "back_fraction") cfg.axis = SweepAxis::back_fraction;
    else if (value == "out_degree") cfg.axis = SweepAxis::out_degree;
    else if (value == "files") cfg.axis = SweepAxis::files;
    else throw ConfigError("unknown sweep axis \"" + std::string(value) + "\"");
  } else if (key == "values") {
    cfg.values.clear();
    for (const auto& item : detail::split_list(value)) {
      cfg.values.push_back(detail::parse_real(key, item));
    }
  } else if (key == "files") {
    cfg.files = detail::split_list(value);
  } else if (key == "n") {
    const auto n = detail::parse_count(key, value);
    if (n > UINT32_MAX) throw ConfigError("n too large");
    cfg.n = static_cast<std::uint32_t>(n);
  } else if (key == "avg_out_degree") {
    cfg.avg_out_degree = detail::parse_real(key, value);
  } else if (key == "back_fraction") {
    cfg.back_fraction = detail::parse_real(key, value);
  } else if (key == "seeds") {
    cfg.seeds_per_point = static_cast<std::uint32_t>(detail::parse_count(key, value));
  } else if (key == "base_seed") {
    cfg.base_seed = detail::parse_count(key, value);
  } else if (key == "algorithms") {
    cfg.algorithms.clear();
    for (const auto& item : detail::split_list(value)) {
      const auto a = parse_algorithm(item);
      if (!a) throw ConfigError("unknown algorithm \"" + item + "\"");
      cfg.algorithms.push_back(*a);
    }
  } else if (key == "pagerank_iterations") {
    cfg.pagerank_iterations = static_cast<int>(detail::parse_count(key, value));
  } else if (key == "full_scale") {
    if (value == "true") cfg.full_scale = true;
    else if (value == "false") cfg.full_scale = false;
    else throw ConfigError("full_scale must be true or false");
  } else if (key == "workers") {
    cfg.workers = static_cast<unsigned>(detail::parse_count(key, value));
  } else {
    throw ConfigError("unknown key \"" + key + "\"");
  }
}

// Key-value config: one "key = value" per line, '#' comments. An absent
// `values` key selects the axis default. The result is validated.
inline ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig cfg;
  bool have_values = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    try {
      apply_setting(cfg, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
    have_values |= key == "values";
  }
  if (!have_values) cfg.values = default_sweep(cfg.axis, cfg.full_scale);
  validate(cfg);
  return cfg;
}

namespace detail {

struct Instance {
  std::size_t point;
  std::uint64_t seed;
};

// Runs every algorithm of `cfg` on one graph, validating each FAS.
inline std::vector<BenchmarkRow> run_instance(const ExperimentConfig& cfg, const Instance& inst,
                                              const DirectedGraph& g, BenchmarkRow base) {
  std::vector<BenchmarkRow> rows;
  for (Algorithm a : cfg.algorithms) {
    const auto fas = run_algorithm(a, g, cfg.pagerank_iterations);
    if (!validate_fas(g, fas.edges)) {
      throw ValidationFailure(std::string(algorithm_name(a)) +
                              " returned an invalid FAS at sweep point " +
                              std::to_string(inst.point) + ", seed " +
                              std::to_string(inst.seed));
    }
    BenchmarkRow row = base;
    row.algorithm = algorithm_name(a);
    row.fas_size = fas.size;
    row.fas_pct = fas.percentage;
    row.elapsed_ms = fas.elapsed.count();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

// Runs every (sweep point, seed) instance, in parallel across instances.
// Rows come back ordered by point, then seed, then the configured algorithm
// order, regardless of worker count.
inline std::vector<BenchmarkRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<detail::Instance> instances;
  const std::size_t points =
      cfg.axis == SweepAxis::files ? cfg.files.size() : cfg.values.size();
  for (std::size_t p = 0; p < points; ++p) {
    const std::uint32_t seeds = cfg.axis == SweepAxis::files ? 1 : cfg.seeds_per_point;
    for (std::uint32_t i = 0; i < seeds; ++i) instances.push_back({p, cfg.base_seed + i});
  }

  auto run_one = [&](const detail::Instance& inst) {
    BenchmarkRow base;
    base.point = inst.point;
    base.seed = inst.seed;
    if (cfg.axis == SweepAxis::files) {
      std::ifstream in(cfg.files[inst.point]);
      if (!in) throw std::runtime_error("cannot open " + cfg.files[inst.point]);
      const auto parsed = parse_edge_list(in);
      const auto& g = parsed.graph;
      base.seed = 0;
      base.n = g.node_count();
      base.avg_out_degree = g.node_count() == 0 ? 0.0
                                                : static_cast<double>(g.edge_count()) /
                                                      static_cast<double>(g.node_count());
      return detail::run_instance(cfg, inst, g, base);
    }
    GeneratorParams params{cfg.n, cfg.avg_out_degree, cfg.back_fraction, inst.seed};
    const double v = cfg.values[inst.point];
    switch (cfg.axis) {
      case SweepAxis::nodes: params.n = static_cast<std::uint32_t>(v); break;
      case SweepAxis::back_fraction: params.back_fraction = v; break;
      case SweepAxis::out_degree: params.avg_out_degree = v; break;
      case SweepAxis::files: break;
    }
    base.n = params.n;
    base.avg_out_degree = params.avg_out_degree;
    base.back_fraction = params.back_fraction;
    const auto generated = generate(params);
    return detail::run_instance(cfg, inst, generated.graph, base);
  };

  std::vector<std::vector<BenchmarkRow>> results(instances.size());
  unsigned workers = cfg.workers == 0 ? std::thread::hardware_concurrency() : cfg.workers;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        results[i] = run_one(instances[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchmarkRow> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace prfas
