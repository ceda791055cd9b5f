#include "gtrans/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>

#include "gtrans/error.hpp"
#include "gtrans/io.hpp"

namespace gtrans {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 2) throw ValidationError("graph needs at least 2 vertices, got " + std::to_string(n_));
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has a vertex id outside [0," + std::to_string(n_) + ")");
    }
    if (e.u == e.v) throw ValidationError("self-loop on vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w <= 0.0) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has nonpositive or non-finite weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw ValidationError("duplicate edge (" + std::to_string(edges_[k].u) + "," +
                            std::to_string(edges_[k].v) + ")");
    }
  }
  adj_.resize(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

double Graph::weight(int i, int j) const {
  for (const auto& nb : neighbors(i)) {
    if (nb.vertex == j) return nb.weight;
  }
  return 0.0;
}

bool Graph::is_connected() const {
  const auto dist = hop_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DegreeData degree_data(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  DegreeData out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& nb : g.neighbors(static_cast<int>(i))) out.degree[i] += nb.weight;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.degree[i] == 0.0) continue;
    double s = 0.0;
    for (const auto& nb : g.neighbors(static_cast<int>(i))) {
      s += nb.weight * out.degree[static_cast<std::size_t>(nb.vertex)];
    }
    out.neighbor_average[i] = s / out.degree[i];
  }
  return out;
}

namespace {

int parse_vertex(const std::string& token, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0 || value > 100'000'000) {
    throw ValidationError("line " + std::to_string(line_no) + ": invalid vertex id '" + token + "'");
  }
  return static_cast<int>(value);
}

double parse_weight(const std::string& token, int line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw ValidationError("line " + std::to_string(line_no) + ": invalid weight '" + token + "'");
  }
  return value;
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  int max_id = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 2 || declared_n >= 0) {
        throw ValidationError("line " + std::to_string(line_no) + ": malformed or repeated 'n <count>' header");
      }
      declared_n = parse_vertex(tok[1], line_no);
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'u v [w]'");
    }
    Edge e{parse_vertex(tok[0], line_no), parse_vertex(tok[1], line_no), 1.0};
    if (tok.size() == 3) e.w = parse_weight(tok[2], line_no);
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
  }
  const int n = declared_n >= 0 ? declared_n : max_id + 1;
  return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::filesystem::path& path) { return load_graph(read_text_file(path)); }

std::string to_edge_list(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  out << "n " << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
  return out.str();
}

double laplacian_scale(const Graph& g) {
  const auto deg = degree_data(g);
  double best = 0.0;
  for (std::size_t i = 0; i < deg.degree.size(); ++i) {
    const double d = deg.degree[i];
    if (d <= 0.0) throw ValidationError("vertex " + std::to_string(i) + " is isolated");
    best = std::max(best, 2.0 * d * (d + deg.neighbor_average[i]));
  }
  return std::sqrt(best);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.size(), g.size());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  const auto deg = degree_data(g);
  for (int i = 0; i < g.size(); ++i) l(i, i) = deg.degree[static_cast<std::size_t>(i)];
  return l;
}

Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g) {
  const auto deg = degree_data(g);
  for (int i = 0; i < g.size(); ++i) {
    if (deg.degree[static_cast<std::size_t>(i)] <= 0.0) {
      throw ValidationError("vertex " + std::to_string(i) + " has zero degree");
    }
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(g.size(), g.size());
  for (const auto& e : g.edges()) {
    const double v = -e.w / std::sqrt(deg.degree[static_cast<std::size_t>(e.u)] * deg.degree[static_cast<std::size_t>(e.v)]);
    l(e.u, e.v) = v;
    l(e.v, e.u) = v;
  }
  return l;
}

std::vector<int> hop_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.size()) throw ValidationError("vertex " + std::to_string(source) + " out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(v)) {
      auto& d = dist[static_cast<std::size_t>(nb.vertex)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(nb.vertex);
      }
    }
  }
  return dist;
}

}  // namespace gtrans
