#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gtrans/graph.hpp"

namespace gtrans {

enum class GraphFamily { path, cycle, grid, complete, star, erdos_renyi, geometric };

/// Accepts the family names plus the short alias "erdos".
GraphFamily parse_graph_family(std::string_view name);
std::string_view to_string(GraphFamily family);

struct GeneratorParams {
  int n = 0;
  int rows = 0;
  int cols = 0;
  /// Edge probability (erdos_renyi).
  double p = 0.0;
  /// Connection radius in the unit square (geometric).
  double radius = 0.0;
  /// Uniform edge weights in [lo, hi]; unit weights when empty.
  std::optional<std::pair<double, double>> weight_range;
  int max_retries = 100;
};

/// Deterministic generator. Random families draw from std::mt19937_64 seeded
/// with `seed`; disconnected draws are retried with seed+1, seed+2, ... up to
/// `max_retries` times. Weights, when requested, are drawn from the same
/// stream after the structure.
Graph generate(GraphFamily family, const GeneratorParams& params, std::uint64_t seed);

/// One-line `key=value` description of a generator call, used as the edge
/// list header comment.
std::string describe(GraphFamily family, const GeneratorParams& params, std::uint64_t seed);

}  // namespace gtrans
