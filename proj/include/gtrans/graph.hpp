#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gtrans {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;

  auto operator<=>(const Edge&) const = default;
};

struct Neighbor {
  int vertex;
  double weight;
};

/// Undirected simple graph with strictly positive edge weights.
///
/// Edges are canonicalized on construction (u < v, sorted), so two graphs
/// built from the same edge set in any order compare equal. The graph is
/// immutable once built. Connectivity is not required here; operations that
/// need it check `is_connected()`.
class Graph {
 public:
  /// Throws ValidationError on n < 2, out-of-range ids, self-loops,
  /// duplicate edges, or nonpositive / non-finite weights.
  Graph(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int i) const { return adj_.at(static_cast<std::size_t>(i)); }

  /// Weight of edge {i, j}; 0 when absent.
  double weight(int i, int j) const;
  bool is_connected() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

struct DegreeData {
  std::vector<double> degree;
  /// sum_j A_ij d_j / d_i; zero for isolated vertices.
  std::vector<double> neighbor_average;
};

DegreeData degree_data(const Graph& g);

/// Parse an edge list: "u v [w]" per line, `#` comments, optional `n <count>` header.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

/// Serialize as an edge list with an `n <count>` header. Each line of
/// `comment` is written as a leading `#` line.
std::string to_edge_list(const Graph& g, std::string_view comment = {});

/// Laplacian scaling constant sqrt(max_i 2 d_i (d_i + dbar_i)), an upper
/// bound on the largest Laplacian eigenvalue. Throws ValidationError if any
/// vertex is isolated.
double laplacian_scale(const Graph& g);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);
/// D^{-1/2} L D^{-1/2}; throws ValidationError on a zero-degree vertex.
Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g);

/// Unweighted breadth-first hop counts from `source`; unreachable vertices get -1.
std::vector<int> hop_distances(const Graph& g, int source);

}  // namespace gtrans
