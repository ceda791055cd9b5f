#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtrans/approx.hpp"
#include "gtrans/bounds.hpp"
#include "gtrans/error.hpp"
#include "gtrans/generators.hpp"
#include "gtrans/graph.hpp"
#include "gtrans/localization.hpp"
#include "gtrans/spectral.hpp"
#include "gtrans/translation.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

gtrans::BaseKind kind_arg(const std::string& name) { return gtrans::parse_base_kind(name); }

}  // namespace

PYBIND11_MODULE(_gtrans, m) {
  m.doc() = "Graph translation operators, polynomial approximations, error bounds and localization";

  py::register_exception<gtrans::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<gtrans::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<gtrans::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges) {
             std::vector<gtrans::Edge> es;
             for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
             return gtrans::Graph(n, std::move(es));
           }),
           "n"_a, "edges"_a)
      .def_property_readonly("n", &gtrans::Graph::size)
      .def_property_readonly("edges",
                             [](const gtrans::Graph& g) {
                               std::vector<std::tuple<int, int, double>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
                               return out;
                             })
      .def("weight", &gtrans::Graph::weight)
      .def("is_connected", &gtrans::Graph::is_connected)
      .def("__eq__", &gtrans::Graph::operator==)
      .def("__repr__", [](const gtrans::Graph& g) {
        return "<Graph n=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edges().size()) + ">";
      });

  m.def("load_graph", &gtrans::load_graph, "text"_a);
  m.def("to_edge_list", &gtrans::to_edge_list, "graph"_a, "comment"_a = "");
  m.def(
      "generate",
      [](const std::string& family, int n, int rows, int cols, double p, double radius, std::uint64_t seed,
         std::optional<std::pair<double, double>> weight_range) {
        gtrans::GeneratorParams params;
        params.n = n;
        params.rows = rows;
        params.cols = cols;
        params.p = p;
        params.radius = radius;
        params.weight_range = weight_range;
        return gtrans::generate(gtrans::parse_graph_family(family), params, seed);
      },
      "family"_a, "n"_a = 0, "rows"_a = 0, "cols"_a = 0, "p"_a = 0.0, "radius"_a = 0.0, "seed"_a = 0,
      "weight_range"_a = py::none());
  m.def("laplacian_scale", &gtrans::laplacian_scale, "graph"_a);
  m.def("adjacency_matrix", &gtrans::adjacency_matrix, "graph"_a);
  m.def("laplacian_matrix", &gtrans::laplacian_matrix, "graph"_a);
  m.def("normalized_laplacian_matrix", &gtrans::normalized_laplacian_matrix, "graph"_a);
  m.def("hop_distances", &gtrans::hop_distances, "graph"_a, "source"_a);

  py::class_<gtrans::SpectralBasis>(m, "SpectralBasis")
      .def_property_readonly("kind", [](const gtrans::SpectralBasis& b) { return std::string(gtrans::to_string(b.kind)); })
      .def_readonly("eigenvalues", &gtrans::SpectralBasis::eigenvalues)
      .def_readonly("eigenvectors", &gtrans::SpectralBasis::eigenvectors)
      .def_readonly("scale", &gtrans::SpectralBasis::scale);

  m.def(
      "eig_sym",
      [](const Eigen::MatrixXd& mat) {
        auto e = gtrans::eig_sym(mat);
        return py::make_tuple(e.values, e.vectors);
      },
      "matrix"_a);
  m.def("make_basis", [](const gtrans::Graph& g, const std::string& kind) { return gtrans::make_basis(g, kind_arg(kind)); },
        "graph"_a, "kind"_a);
  m.def("gft", &gtrans::gft, "basis"_a, "x"_a);
  m.def("igft", &gtrans::igft, "basis"_a, "xhat"_a);
  m.def(
      "frequencies",
      [](const gtrans::SpectralBasis& b) {
        auto f = gtrans::frequencies(b);
        return py::make_tuple(f.nu, f.theta);
      },
      "basis"_a);
  m.def("scaled_eigenvalues", &gtrans::scaled_eigenvalues, "basis"_a);
  m.def(
      "spectral_gap",
      [](const gtrans::SpectralBasis& b) {
        auto s = gtrans::spectral_gap(b);
        return py::make_tuple(s.gap, s.epsilon);
      },
      "basis"_a);

  py::class_<gtrans::ExactTranslation>(m, "ExactTranslation")
      .def_property_readonly("alpha", &gtrans::ExactTranslation::alpha)
      .def_property_readonly("phases", &gtrans::ExactTranslation::phases)
      .def_property_readonly("basis", &gtrans::ExactTranslation::basis)
      .def("apply", &gtrans::ExactTranslation::apply, "x"_a)
      .def("matrix", &gtrans::ExactTranslation::matrix, "cap"_a = 512);
  m.def(
      "build_exact",
      [](const gtrans::Graph& g, const std::string& kind, double alpha) {
        return gtrans::build_exact(g, kind_arg(kind), alpha);
      },
      "graph"_a, "kind"_a, "alpha"_a = 1.0);

  m.def(
      "apply_adjacency_approx",
      [](const gtrans::Graph& g, int K, double alpha, const Eigen::VectorXcd& x) {
        return gtrans::apply_adjacency_approx(g, K, alpha, x);
      },
      "graph"_a, "K"_a, "alpha"_a, "x"_a);
  m.def(
      "apply_laplacian_approx",
      [](const gtrans::Graph& g, const std::string& kind, int P, int Q, double alpha, const Eigen::VectorXcd& x) {
        return gtrans::apply_laplacian_approx(g, kind_arg(kind), P, Q, alpha, x);
      },
      "graph"_a, "kind"_a, "P"_a, "Q"_a, "alpha"_a, "x"_a);

  m.def("kappa_C", &gtrans::kappa_C, "P"_a, "alpha"_a);
  m.def("kappa_S", &gtrans::kappa_S, "P"_a, "alpha"_a);
  m.def("kappa_R", &gtrans::kappa_R, "Q"_a, "epsilon"_a);
  m.def("corrected_kappa_R", &gtrans::corrected_kappa_R, "Q"_a, "epsilon"_a);
  m.def("lagrange_remainder_bound", &gtrans::lagrange_remainder_bound, "max_derivative"_a, "max_distance"_a, "K"_a);
  m.def("product_bound", &gtrans::product_bound, "kg"_a, "kh"_a, "max_g"_a, "max_h"_a);
  m.def("total_bound_adjacency", &gtrans::total_bound_adjacency, "K"_a, "alpha"_a);
  m.def("dc_error_term", &gtrans::dc_error_term, "P"_a, "Q"_a, "alpha"_a, "epsilon"_a);

  py::class_<gtrans::BoundReport>(m, "BoundReport")
      .def_readonly("P", &gtrans::BoundReport::P)
      .def_readonly("Q", &gtrans::BoundReport::Q)
      .def_readonly("alpha", &gtrans::BoundReport::alpha)
      .def_readonly("gap", &gtrans::BoundReport::gap)
      .def_readonly("epsilon", &gtrans::BoundReport::epsilon)
      .def_readonly("kappa_C", &gtrans::BoundReport::kappa_C)
      .def_readonly("kappa_S", &gtrans::BoundReport::kappa_S)
      .def_readonly("kappa_R", &gtrans::BoundReport::kappa_R)
      .def_readonly("kappa_RS", &gtrans::BoundReport::kappa_RS)
      .def_readonly("total_paper", &gtrans::BoundReport::total_paper)
      .def_readonly("dc_term", &gtrans::BoundReport::dc_term)
      .def_readonly("corrected_kappa_R", &gtrans::BoundReport::corrected_kappa_R)
      .def_readonly("corrected_total", &gtrans::BoundReport::corrected_total)
      .def_readonly("alternating_regime", &gtrans::BoundReport::alternating_regime)
      .def_readonly("oracle", &gtrans::BoundReport::oracle);
  m.def(
      "total_bound_laplacian",
      [](int P, int Q, double alpha, double epsilon, std::optional<Eigen::VectorXd> eigenvalues) {
        if (eigenvalues) return gtrans::total_bound_laplacian(P, Q, alpha, epsilon, to_std(*eigenvalues));
        return gtrans::total_bound_laplacian(P, Q, alpha, epsilon);
      },
      "P"_a, "Q"_a, "alpha"_a, "epsilon"_a, "scaled_eigenvalues"_a = py::none());
  m.def(
      "empirical_sup_error_laplacian",
      [](int P, int Q, double alpha, double epsilon, const Eigen::VectorXd& x, bool include_zero_mode) {
        return gtrans::empirical_sup_error_laplacian(P, Q, alpha, epsilon, to_std(x), include_zero_mode);
      },
      "P"_a, "Q"_a, "alpha"_a, "epsilon"_a, "scaled_eigenvalues"_a, "include_zero_mode"_a = true);
  m.def(
      "empirical_sup_error_adjacency",
      [](int K, double alpha, const Eigen::VectorXd& x) { return gtrans::empirical_sup_error_adjacency(K, alpha, to_std(x)); },
      "K"_a, "alpha"_a, "scaled_eigenvalues"_a);
  m.def(
      "min_order_search",
      [](double xi, double alpha, double gap, int max_order) -> py::object {
        auto r = gtrans::min_order_search(xi, alpha, gap, max_order);
        if (!r) return py::none();
        return py::make_tuple(r->P, r->Q, r->total);
      },
      "xi"_a, "alpha"_a, "gap"_a, "max_order"_a = 512);

  py::class_<gtrans::LocalizationProfile>(m, "LocalizationProfile")
      .def_readonly("center", &gtrans::LocalizationProfile::center)
      .def_readonly("hop_energy", &gtrans::LocalizationProfile::hop_energy)
      .def_readonly("cumulative_fraction", &gtrans::LocalizationProfile::cumulative_fraction)
      .def_readonly("envelope_oracle", &gtrans::LocalizationProfile::envelope_oracle)
      .def_readonly("envelope_paper", &gtrans::LocalizationProfile::envelope_paper);
  m.def(
      "impulse_profile",
      [](const gtrans::Graph& g, const std::string& kind, double alpha, int vertex) {
        return gtrans::impulse_profile(g, kind_arg(kind), alpha, vertex);
      },
      "graph"_a, "kind"_a, "alpha"_a, "vertex"_a);
  m.def("support_radius", &gtrans::support_radius, "graph"_a, "signal"_a, "center"_a, "tol"_a = 0.0);
}
