#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "prfas/graph.hpp"
#include "prfas/heuristics.hpp"

namespace prfas {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  DirectedGraph graph;
  std::size_t duplicates = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Splits a line into whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Reads "tail head" lines. Calls on_edge(line_no, tail, head) per edge and
// on_directive(line_no, text) for '#' lines.
template <typename OnEdge, typename OnComment>
void scan_edge_lines(std::istream& in, OnEdge on_edge, OnComment on_comment) {
  std::string raw;
  std::size_t line_no = 0;
  constexpr std::uint64_t max_id = UINT32_MAX - 1;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      on_comment(line_no, line);
      continue;
    }
    const auto parts = tokens(line);
    if (parts.size() != 2) {
      throw ParseError(line_no, "expected \"tail head\", got \"" + std::string(line) + "\"");
    }
    const auto tail = parse_uint(parts[0]);
    const auto head = parse_uint(parts[1]);
    if (!tail || !head) {
      throw ParseError(line_no, "malformed node id in \"" + std::string(line) + "\"");
    }
    if (*tail > max_id || *head > max_id) throw ParseError(line_no, "node id too large");
    on_edge(line_no, static_cast<std::uint32_t>(*tail), static_cast<std::uint32_t>(*head));
  }
  if (in.bad()) throw std::runtime_error("read failure");
}

}  // namespace detail

// Plain edge list: one "tail head" pair of base-10 ids per line; blank lines
// and '#' lines are skipped. The node count is 1 + the largest id, raised to
// N when a "# nodes=N" line is present. Repeated edges are dropped and
// counted; self-loops are kept.
inline ParsedGraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::uint64_t node_count = 0;
  detail::scan_edge_lines(
      in,
      [&](std::size_t, std::uint32_t tail, std::uint32_t head) {
        edges.push_back({NodeId{tail}, NodeId{head}});
        node_count = std::max<std::uint64_t>(node_count, std::max(tail, head) + 1ULL);
      },
      [&](std::size_t line_no, std::string_view line) {
        constexpr std::string_view directive = "# nodes=";
        if (line.substr(0, directive.size()) != directive) return;
        auto rest = line.substr(directive.size());
        rest = rest.substr(0, rest.find_first_of(" \t"));
        const auto value = detail::parse_uint(detail::trim(rest));
        if (!value || *value > UINT32_MAX) throw ParseError(line_no, "bad nodes directive");
        node_count = std::max(node_count, *value);
      });

  ParsedGraph parsed{DirectedGraph(node_count), 0};
  for (const auto& e : edges) {
    if (parsed.graph.has_edge(e.tail, e.head)) {
      ++parsed.duplicates;
    } else {
      parsed.graph.add_edge(e.tail, e.head);
    }
  }
  return parsed;
}

inline void write_edge_list(const DirectedGraph& g, std::ostream& out) {
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  for (EdgeId e : g.edges()) out << g.tail(e).value << ' ' << g.head(e).value << '\n';
  if (!out) throw std::runtime_error("write failure");
}

// 100 * size / m to two decimals, half rounded up, computed exactly.
inline std::string format_percentage(std::uint64_t size, std::uint64_t m) {
  if (m == 0) return "0.00";
  const std::uint64_t hundredths = (20000 * size + m) / (2 * m);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%02llu",
                static_cast<unsigned long long>(hundredths / 100),
                static_cast<unsigned long long>(hundredths % 100));
  return buf;
}

inline void write_fas(const FasResult& fas, const DirectedGraph& g, std::ostream& out) {
  out << "# size=" << fas.size << " pct=" << format_percentage(fas.size, g.edge_count())
      << '\n';
  auto sorted = fas.edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) out << g.tail(e).value << ' ' << g.head(e).value << '\n';
  if (!out) throw std::runtime_error("write failure");
}

// Reads a FAS file back into edge ids of `g`. Throws GraphError when a listed
// edge does not exist in `g`.
inline std::vector<EdgeId> read_fas(const DirectedGraph& g, std::istream& in) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, EdgeId> index;
  for (EdgeId e : g.edges()) index[{g.tail(e).value, g.head(e).value}] = e;
  std::vector<EdgeId> fas;
  detail::scan_edge_lines(
      in,
      [&](std::size_t line_no, std::uint32_t tail, std::uint32_t head) {
        const auto it = index.find({tail, head});
        if (it == index.end()) {
          throw GraphError("line " + std::to_string(line_no) + ": edge (" +
                           std::to_string(tail) + ", " + std::to_string(head) +
                           ") is not in the graph");
        }
        fas.push_back(it->second);
      },
      [](std::size_t, std::string_view) {});
  std::sort(fas.begin(), fas.end());
  fas.erase(std::unique(fas.begin(), fas.end()), fas.end());
  return fas;
}

// One heuristic run on one instance. `point` groups rows of the same sweep
// point for aggregation and is not serialized.
struct BenchmarkRow {
  std::string algorithm;
  std::size_t point = 0;
  std::uint64_t n = 0;
  double avg_out_degree = 0.0;
  std::optional<double> back_fraction;  // empty for file inputs
  std::uint64_t seed = 0;
  std::uint64_t fas_size = 0;
  double fas_pct = 0.0;
  double elapsed_ms = 0.0;
};

struct AggregateRow {
  std::string algorithm;
  std::uint64_t n = 0;
  double avg_out_degree = 0.0;
  std::optional<double> back_fraction;
  std::size_t runs = 0;
  double mean_fas_size = 0.0;
  double mean_fas_pct = 0.0;
  double mean_elapsed_ms = 0.0;
};

inline constexpr std::string_view benchmark_csv_header =
    "algorithm,n,avg_out_degree,back_fraction,seed,fas_size,fas_pct,elapsed_ms";
inline constexpr std::string_view aggregate_csv_header =
    "algorithm,n,avg_out_degree,back_fraction,runs,mean_fas_size,mean_fas_pct,mean_elapsed_ms";

namespace detail {

// Shortest round-trip decimal form.
inline std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace detail

// Groups rows by (point, algorithm) in first-appearance order and takes
// arithmetic means.
inline std::vector<AggregateRow> aggregate(const std::vector<BenchmarkRow>& rows) {
  std::vector<AggregateRow> out;
  std::map<std::pair<std::size_t, std::string>, std::size_t> slot;
  for (const auto& r : rows) {
    const auto [it, fresh] = slot.try_emplace({r.point, r.algorithm}, out.size());
    if (fresh) out.push_back({r.algorithm, r.n, r.avg_out_degree, r.back_fraction});
    auto& a = out[it->second];
    ++a.runs;
    a.mean_fas_size += static_cast<double>(r.fas_size);
    a.mean_fas_pct += r.fas_pct;
    a.mean_elapsed_ms += r.elapsed_ms;
  }
  for (auto& a : out) {
    const auto k = static_cast<double>(a.runs);
    a.mean_fas_size /= k;
    a.mean_fas_pct /= k;
    a.mean_elapsed_ms /= k;
  }
  return out;
}

inline void write_benchmark_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out) {
  out << benchmark_csv_header << '\n';
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << detail::format_real(r.avg_out_degree) << ','
        << (r.back_fraction ? detail::format_real(*r.back_fraction) : "") << ',' << r.seed
        << ',' << r.fas_size << ',' << detail::format_fixed(r.fas_pct, 4) << ','
        << detail::format_fixed(r.elapsed_ms, 3) << '\n';
  }
  if (!out) throw std::runtime_error("write failure");
}

inline void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
  out << aggregate_csv_header << '\n';
  for (const auto& a : rows) {
    out << a.algorithm << ',' << a.n << ',' << detail::format_real(a.avg_out_degree) << ','
        << (a.back_fraction ? detail::format_real(*a.back_fraction) : "") << ',' << a.runs
        << ',' << detail::format_fixed(a.mean_fas_size, 4) << ','
        << detail::format_fixed(a.mean_fas_pct, 4) << ','
        << detail::format_fixed(a.mean_elapsed_ms, 3) << '\n';
  }
  if (!out) throw std::runtime_error("write failure");
}

}  // namespace prfas
