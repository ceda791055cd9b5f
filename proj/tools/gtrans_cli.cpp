// gtrans: command-line front end for graph translation analyses.
//
// Exit codes: 0 success, 2 input/validation error, 3 numeric failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gtrans/approx.hpp"
#include "gtrans/bounds.hpp"
#include "gtrans/error.hpp"
#include "gtrans/generators.hpp"
#include "gtrans/graph.hpp"
#include "gtrans/io.hpp"
#include "gtrans/localization.hpp"
#include "gtrans/spectral.hpp"
#include "gtrans/translation.hpp"

namespace {

using gtrans::format_double;
using gtrans::ValidationError;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    gtrans::write_text_file(out_path, text);
  }
}

std::pair<int, int> parse_range(const std::string& spec, const char* flag) {
  int lo = 0;
  int hi = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%d:%d%c", &lo, &hi, &tail) != 2 || lo < 0 || hi < lo) {
    throw ValidationError(std::string(flag) + " expects 'lo:hi' with 0 <= lo <= hi, got '" + spec + "'");
  }
  return {lo, hi};
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string type;
  int n = 0;
  int rows = 0;
  int cols = 0;
  double p = 0.0;
  double radius = 0.0;
  std::optional<double> wmin;
  std::optional<double> wmax;
  std::uint64_t seed = 0;
  int max_retries = 100;
  std::string out;
};

void run_gen(const GenOptions& o) {
  gtrans::GeneratorParams params;
  params.n = o.n;
  params.rows = o.rows;
  params.cols = o.cols;
  params.p = o.p;
  params.radius = o.radius;
  params.max_retries = o.max_retries;
  if (o.wmin || o.wmax) {
    if (!o.wmin || !o.wmax) throw ValidationError("--wmin and --wmax must be given together");
    params.weight_range = std::make_pair(*o.wmin, *o.wmax);
  }
  const auto family = gtrans::parse_graph_family(o.type);
  const auto g = gtrans::generate(family, params, o.seed);
  emit(o.out, gtrans::to_edge_list(g, gtrans::describe(family, params, o.seed)));
}

// ---------------------------------------------------------- translate

struct TranslateOptions {
  std::string graph;
  std::string kind = "laplacian";
  double alpha = 1.0;
  bool exact = false;
  std::string orders;
  std::optional<int> order;
  std::string signal;
  std::optional<int> impulse;
  std::string out;
};

void run_translate(const TranslateOptions& o) {
  const auto g = gtrans::load_graph_file(o.graph);
  const auto kind = gtrans::parse_base_kind(o.kind);
  if (o.signal.empty() == !o.impulse.has_value()) throw ValidationError("give exactly one of --signal or --impulse");
  if (!o.exact && o.orders.empty() && !o.order) throw ValidationError("give --exact, --orders P,Q or --order K");
  if (!o.orders.empty() && o.order) throw ValidationError("--orders and --order are exclusive");
  if (!o.orders.empty() && !gtrans::is_laplacian_kind(kind)) throw ValidationError("--orders applies to laplacian kinds");
  if (o.order && gtrans::is_laplacian_kind(kind)) throw ValidationError("--order applies to the adjacency kind");

  Eigen::VectorXcd x;
  if (o.impulse) {
    if (*o.impulse < 0 || *o.impulse >= g.size()) throw ValidationError("--impulse vertex out of range");
    x = Eigen::VectorXcd::Zero(g.size());
    x(*o.impulse) = 1.0;
  } else {
    x = gtrans::signal_from_csv(gtrans::read_text_file(o.signal));
    if (x.size() != g.size()) throw ValidationError("signal length does not match graph size");
  }

  const auto op = gtrans::build_exact(g, kind, o.alpha);
  if (o.orders.empty() && !o.order) {
    emit(o.out, gtrans::signal_to_csv(op.apply(x)));
    return;
  }

  const auto scaled = to_std(gtrans::scaled_eigenvalues(op.basis()));
  Eigen::VectorXcd approx;
  double oracle = 0.0;
  std::optional<double> oracle_dc_free;
  std::optional<double> closed_form;
  if (o.order) {
    if (*o.order < 0) throw ValidationError("--order must be nonnegative");
    approx = gtrans::apply_adjacency_approx(gtrans::ScaledMatrix(g, kind, op.basis().scale), *o.order, o.alpha, x);
    oracle = gtrans::empirical_sup_error_adjacency(*o.order, o.alpha, scaled);
    closed_form = gtrans::total_bound_adjacency(*o.order, o.alpha);
  } else {
    int P = -1;
    int Q = -1;
    char tail = 0;
    if (std::sscanf(o.orders.c_str(), "%d,%d%c", &P, &Q, &tail) != 2 || P < 0 || Q < 0) {
      throw ValidationError("--orders expects 'P,Q' with nonnegative integers");
    }
    const double eps = gtrans::spectral_gap(op.basis()).epsilon;
    approx = gtrans::apply_laplacian_approx(gtrans::ScaledMatrix(g, kind, op.basis().scale), P, Q, o.alpha, eps, x);
    oracle = gtrans::empirical_sup_error_laplacian(P, Q, o.alpha, eps, scaled, true);
    oracle_dc_free = gtrans::empirical_sup_error_laplacian(P, Q, o.alpha, eps, scaled, false);
    closed_form = gtrans::total_bound_laplacian(P, Q, o.alpha, eps).total_paper;
  }
  emit(o.out, gtrans::signal_to_csv(approx));

  if (o.exact) {
    std::ostream& report = o.out.empty() ? std::cerr : std::cout;
    const double norm = x.norm();
    const double err = norm > 0.0 ? (op.apply(x) - approx).norm() / norm : 0.0;
    report << "relative_error " << format_double(err) << '\n';
    report << "oracle_bound " << format_double(oracle) << '\n';
    if (oracle_dc_free) report << "oracle_bound_dc_free " << format_double(*oracle_dc_free) << '\n';
    if (closed_form) report << "closed_form_bound " << format_double(*closed_form) << '\n';
  }
}

// ------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string kind = "laplacian";
  double alpha = 1.0;
  std::optional<double> rho;
  std::string graph;
  std::string p_range = "0:10";
  std::string q_range = "0:4";
  std::string k_range = "0:12";
  std::string out;
};

void run_bounds(const BoundsOptions& o) {
  const auto kind = gtrans::parse_base_kind(o.kind);
  if (!(o.alpha > 0.0)) throw ValidationError("--alpha must be positive");
  if (o.rho && !o.graph.empty()) throw ValidationError("--rho and --graph are exclusive");

  std::optional<std::vector<double>> scaled;
  std::optional<double> gap = o.rho;
  if (!o.graph.empty()) {
    const auto basis = gtrans::make_basis(gtrans::load_graph_file(o.graph), kind);
    scaled = to_std(gtrans::scaled_eigenvalues(basis));
    if (gtrans::is_laplacian_kind(kind)) gap = gtrans::spectral_gap(basis).gap;
  }

  std::ostringstream out;
  if (kind == gtrans::BaseKind::adjacency) {
    const auto [k_lo, k_hi] = parse_range(o.k_range, "--k-range");
    out << "K,alpha,bound" << (scaled ? ",oracle" : "") << '\n';
    for (int K = k_lo; K <= k_hi; ++K) {
      out << K << ',' << format_double(o.alpha) << ',' << format_double(gtrans::total_bound_adjacency(K, o.alpha));
      if (scaled) out << ',' << format_double(gtrans::empirical_sup_error_adjacency(K, o.alpha, *scaled));
      out << '\n';
    }
    emit(o.out, out.str());
    return;
  }

  if (!gap) throw ValidationError("laplacian kinds need --rho or --graph");
  if (!(*gap > 0.0 && *gap <= 1.0)) throw ValidationError("--rho must lie in (0,1]");
  const auto [p_lo, p_hi] = parse_range(o.p_range, "--p-range");
  const auto [q_lo, q_hi] = parse_range(o.q_range, "--q-range");
  const double eps = gtrans::epsilon_from_gap(*gap);
  out << "P,Q,alpha,rho,kappa_C,kappa_S,kappa_R,total_paper,corrected_total,dc_term" << (scaled ? ",oracle" : "") << '\n';
  for (int Q = q_lo; Q <= q_hi; ++Q) {
    for (int P = p_lo; P <= p_hi; ++P) {
      const auto r = scaled ? gtrans::total_bound_laplacian(P, Q, o.alpha, eps, *scaled)
                            : gtrans::total_bound_laplacian(P, Q, o.alpha, eps);
      out << P << ',' << Q << ',' << format_double(o.alpha) << ',' << format_double(*gap) << ','
          << format_double(r.kappa_C) << ',' << format_double(r.kappa_S) << ',' << format_double(r.kappa_R) << ','
          << format_double(r.total_paper) << ',' << format_double(r.corrected_total) << ','
          << format_double(r.dc_term);
      if (r.oracle) out << ',' << format_double(*r.oracle);
      out << '\n';
    }
  }
  emit(o.out, out.str());
}

// ----------------------------------------------------------- minorder

struct MinOrderOptions {
  std::vector<double> xi;
  std::vector<double> alpha{1.0};
  double rho = 0.1;
  int max_order = 512;
  std::string out;
};

void run_minorder(const MinOrderOptions& o) {
  if (!(o.rho > 0.0 && o.rho <= 1.0)) throw ValidationError("--rho must lie in (0,1]");
  for (double xi : o.xi) {
    if (!(xi > 0.0 && xi <= 1.0)) throw ValidationError("--xi values must lie in (0,1]");
  }
  for (double a : o.alpha) {
    if (!(a > 0.0)) throw ValidationError("--alpha values must be positive");
  }
  std::ostringstream out;
  out << "alpha,xi,min_order,P,Q,total\n";
  for (double a : o.alpha) {
    for (double xi : o.xi) {
      out << format_double(a) << ',' << format_double(xi) << ',';
      if (const auto best = gtrans::min_order_search(xi, a, o.rho, o.max_order)) {
        out << best->order() << ',' << best->P << ',' << best->Q << ',' << format_double(best->total) << '\n';
      } else {
        out << "unsolved,,,\n";
      }
    }
  }
  emit(o.out, out.str());
}

// ----------------------------------------------------------- localize

struct LocalizeOptions {
  std::string graph;
  std::string kind = "laplacian";
  double alpha = 1.0;
  int vertex = 0;
  std::string out;
};

void run_localize(const LocalizeOptions& o) {
  const auto g = gtrans::load_graph_file(o.graph);
  const auto profile = gtrans::impulse_profile(g, gtrans::parse_base_kind(o.kind), o.alpha, o.vertex);
  std::ostringstream out;
  out << "hop,energy,cum_fraction,one_minus_cum,envelope_oracle,envelope_paper\n";
  for (const auto& row : gtrans::decay_report(profile)) {
    out << row.hop << ',' << format_double(row.energy) << ',' << format_double(row.cumulative_fraction) << ','
        << format_double(row.one_minus_cumulative) << ',' << format_double(row.envelope_oracle) << ','
        << format_double(row.envelope_paper) << '\n';
  }
  emit(o.out, out.str());
}

// ---------------------------------------------------- spectrum / operator

struct SpectrumOptions {
  std::string graph;
  std::string kind = "laplacian";
  std::string out;
};

struct OperatorOptions {
  std::string graph;
  std::string kind = "laplacian";
  double alpha = 1.0;
  int cap = 512;
  std::string out;
};

constexpr const char* kFormats =
    "\nFile formats:\n"
    "  edge list   'u v [w]' per line, 0-based ids, '#' comments, optional 'n <count>' header\n"
    "  signal CSV  index,re,im\n"
    "  spectrum    l,eigenvalue,nu,theta\n"
    "  operator    i,j,re,im\n"
    "  bounds      P,Q,alpha,rho,kappa_C,kappa_S,kappa_R,total_paper,corrected_total,dc_term[,oracle]\n"
    "              K,alpha,bound[,oracle]   (adjacency)\n"
    "  minorder    alpha,xi,min_order,P,Q,total\n"
    "  localize    hop,energy,cum_fraction,one_minus_cum,envelope_oracle,envelope_paper\n"
    "Exit codes: 0 success, 2 input/validation error, 3 numeric failure.\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph translation operators, polynomial approximations and localization bounds"};
  app.footer(kFormats);
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a connected graph as an edge list");
  gen_cmd->add_option("--type", gen.type, "path, cycle, grid, complete, star, erdos (erdos_renyi), geometric")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("--p", gen.p, "Edge probability (erdos)");
  gen_cmd->add_option("--radius", gen.radius, "Connection radius in the unit square (geometric)");
  gen_cmd->add_option("--wmin", gen.wmin, "Lower edge weight (uniform weights)");
  gen_cmd->add_option("--wmax", gen.wmax, "Upper edge weight (uniform weights)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for std::mt19937_64");
  gen_cmd->add_option("--max-retries", gen.max_retries, "Reseeding attempts until connected");
  gen_cmd->add_option("-o,--output", gen.out, "Output edge list (stdout if omitted)");
  gen_cmd->footer(kFormats);

  TranslateOptions tr;
  auto* tr_cmd = app.add_subcommand("translate", "Apply the exact and/or truncated graph translation to a signal");
  tr_cmd->add_option("graph", tr.graph, "Edge list")->required()->check(CLI::ExistingFile);
  tr_cmd->add_option("--kind", tr.kind, "laplacian, normalized_laplacian or adjacency");
  tr_cmd->add_option("--alpha", tr.alpha, "Vertex-diffusion factor (operator power)");
  tr_cmd->add_flag("--exact", tr.exact, "Exact translation; with an order, also report the approximation error");
  tr_cmd->add_option("--orders", tr.orders, "Laplacian-kind truncation orders 'P,Q'");
  tr_cmd->add_option("--order", tr.order, "Adjacency truncation order K");
  tr_cmd->add_option("--signal", tr.signal, "Input signal CSV")->check(CLI::ExistingFile);
  tr_cmd->add_option("--impulse", tr.impulse, "Use the impulse at this vertex as input");
  tr_cmd->add_option("-o,--output", tr.out, "Output signal CSV (stdout if omitted)");
  tr_cmd->footer(kFormats);

  BoundsOptions bd;
  auto* bd_cmd = app.add_subcommand("bounds", "Tabulate truncation error bounds over order ranges");
  bd_cmd->add_option("--kind", bd.kind, "laplacian, normalized_laplacian or adjacency");
  bd_cmd->add_option("--alpha", bd.alpha, "Vertex-diffusion factor");
  bd_cmd->add_option("--rho", bd.rho, "Hypothetical spectral gap in (0,1]");
  bd_cmd->add_option("--graph", bd.graph, "Edge list; adds the eigenvalue-exact oracle column")->check(CLI::ExistingFile);
  bd_cmd->add_option("--p-range", bd.p_range, "P range lo:hi (inclusive)");
  bd_cmd->add_option("--q-range", bd.q_range, "Q range lo:hi (inclusive)");
  bd_cmd->add_option("--k-range", bd.k_range, "K range lo:hi (inclusive, adjacency)");
  bd_cmd->add_option("-o,--output", bd.out, "Output CSV (stdout if omitted)");
  bd_cmd->footer(kFormats);

  MinOrderOptions mo;
  auto* mo_cmd = app.add_subcommand("minorder", "Minimal P+Q meeting target errors");
  mo_cmd->add_option("--xi", mo.xi, "Target errors in (0,1], comma separated")->required()->delimiter(',');
  mo_cmd->add_option("--alpha", mo.alpha, "Vertex-diffusion factors, comma separated")->delimiter(',');
  mo_cmd->add_option("--rho", mo.rho, "Spectral gap in (0,1]");
  mo_cmd->add_option("--max-order", mo.max_order, "Search cap on P+Q");
  mo_cmd->add_option("-o,--output", mo.out, "Output CSV (stdout if omitted)");
  mo_cmd->footer(kFormats);

  LocalizeOptions lo;
  auto* lo_cmd = app.add_subcommand("localize", "Hop-radius energy profile of a translated impulse");
  lo_cmd->add_option("graph", lo.graph, "Edge list")->required()->check(CLI::ExistingFile);
  lo_cmd->add_option("--kind", lo.kind, "laplacian, normalized_laplacian or adjacency");
  lo_cmd->add_option("--alpha", lo.alpha, "Vertex-diffusion factor");
  lo_cmd->add_option("--vertex", lo.vertex, "Impulse vertex");
  lo_cmd->add_option("-o,--output", lo.out, "Output CSV (stdout if omitted)");
  lo_cmd->footer(kFormats);

  SpectrumOptions sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "Eigenvalues, reduced frequencies and phase angles");
  sp_cmd->add_option("graph", sp.graph, "Edge list")->required()->check(CLI::ExistingFile);
  sp_cmd->add_option("--kind", sp.kind, "laplacian, normalized_laplacian or adjacency");
  sp_cmd->add_option("-o,--output", sp.out, "Output CSV (stdout if omitted)");
  sp_cmd->footer(kFormats);

  OperatorOptions op;
  auto* op_cmd = app.add_subcommand("operator", "Dense exact translation matrix");
  op_cmd->add_option("graph", op.graph, "Edge list")->required()->check(CLI::ExistingFile);
  op_cmd->add_option("--kind", op.kind, "laplacian, normalized_laplacian or adjacency");
  op_cmd->add_option("--alpha", op.alpha, "Vertex-diffusion factor");
  op_cmd->add_option("--cap", op.cap, "Largest n allowed");
  op_cmd->add_option("-o,--output", op.out, "Output CSV (stdout if omitted)");
  op_cmd->footer(kFormats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) run_gen(gen);
    if (*tr_cmd) run_translate(tr);
    if (*bd_cmd) run_bounds(bd);
    if (*mo_cmd) run_minorder(mo);
    if (*lo_cmd) run_localize(lo);
    if (*sp_cmd) {
      emit(sp.out, gtrans::spectrum_to_csv(gtrans::make_basis(gtrans::load_graph_file(sp.graph), gtrans::parse_base_kind(sp.kind))));
    }
    if (*op_cmd) {
      const auto t = gtrans::build_exact(gtrans::load_graph_file(op.graph), gtrans::parse_base_kind(op.kind), op.alpha);
      emit(op.out, gtrans::matrix_to_csv(t.matrix(op.cap)));
    }
  } catch (const gtrans::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gtrans::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
