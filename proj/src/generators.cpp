#include "gtrans/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gtrans/error.hpp"
#include "gtrans/io.hpp"

namespace gtrans {

GraphFamily parse_graph_family(std::string_view name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "grid") return GraphFamily::grid;
  if (name == "complete") return GraphFamily::complete;
  if (name == "star") return GraphFamily::star;
  if (name == "erdos_renyi" || name == "erdos") return GraphFamily::erdos_renyi;
  if (name == "geometric") return GraphFamily::geometric;
  throw ValidationError("unknown graph type '" + std::string(name) + "'");
}

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::grid: return "grid";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
    case GraphFamily::erdos_renyi: return "erdos_renyi";
    case GraphFamily::geometric: return "geometric";
  }
  return "?";
}

namespace {

// Library-independent uniform draw in [0,1): top 53 bits of the engine output.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::vector<Edge> structure(GraphFamily family, const GeneratorParams& p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  const int n = p.n;
  switch (family) {
    case GraphFamily::path:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
      break;
    case GraphFamily::cycle:
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
      break;
    case GraphFamily::grid:
      for (int r = 0; r < p.rows; ++r) {
        for (int c = 0; c < p.cols; ++c) {
          const int v = r * p.cols + c;
          if (c + 1 < p.cols) edges.push_back({v, v + 1, 1.0});
          if (r + 1 < p.rows) edges.push_back({v, v + p.cols, 1.0});
        }
      }
      break;
    case GraphFamily::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
      break;
    case GraphFamily::star:
      for (int i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
      break;
    case GraphFamily::erdos_renyi:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (uniform01(rng) < p.p) edges.push_back({i, j, 1.0});
      break;
    case GraphFamily::geometric: {
      std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = uniform01(rng);
        ys[static_cast<std::size_t>(i)] = uniform01(rng);
      }
      const double r2 = p.radius * p.radius;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double dx = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
          const double dy = ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
          if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
        }
      }
      break;
    }
  }
  return edges;
}

}  // namespace

Graph generate(GraphFamily family, const GeneratorParams& params, std::uint64_t seed) {
  GeneratorParams p = params;
  if (family == GraphFamily::grid) {
    require(p.rows >= 1 && p.cols >= 1 && p.rows * p.cols >= 2, "grid needs rows, cols >= 1 and at least 2 vertices");
    p.n = p.rows * p.cols;
  } else {
    require(p.n >= 2, "graph needs n >= 2");
  }
  if (family == GraphFamily::cycle) require(p.n >= 3, "cycle needs n >= 3");
  if (family == GraphFamily::erdos_renyi) require(p.p > 0.0 && p.p <= 1.0, "erdos_renyi needs 0 < p <= 1");
  if (family == GraphFamily::geometric) require(p.radius > 0.0 && std::isfinite(p.radius), "geometric needs radius > 0");
  if (p.weight_range) {
    const auto [lo, hi] = *p.weight_range;
    require(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo <= hi, "weight range needs 0 < lo <= hi");
  }
  require(p.max_retries >= 1, "max_retries must be >= 1");

  const bool random = family == GraphFamily::erdos_renyi || family == GraphFamily::geometric;
  const int attempts = random ? p.max_retries : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    auto edges = structure(family, p, rng);
    if (p.weight_range) {
      const auto [lo, hi] = *p.weight_range;
      for (auto& e : edges) e.w = lo + (hi - lo) * uniform01(rng);
    }
    Graph g(p.n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw ValidationError("no connected " + std::string(to_string(family)) + " graph after " +
                        std::to_string(attempts) + " attempts; parameters too sparse?");
}

std::string describe(GraphFamily family, const GeneratorParams& p, std::uint64_t seed) {
  std::ostringstream out;
  out << "gen type=" << to_string(family);
  if (family == GraphFamily::grid) {
    out << " rows=" << p.rows << " cols=" << p.cols;
  } else {
    out << " n=" << p.n;
  }
  if (family == GraphFamily::erdos_renyi) out << " p=" << format_double(p.p);
  if (family == GraphFamily::geometric) out << " radius=" << format_double(p.radius);
  if (p.weight_range) out << " wmin=" << format_double(p.weight_range->first) << " wmax=" << format_double(p.weight_range->second);
  out << " seed=" << seed;
  return out.str();
}

}  // namespace gtrans
