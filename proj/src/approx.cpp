#include "gtrans/approx.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "gtrans/error.hpp"

namespace gtrans {

using cd = std::complex<double>;

ScaledMatrix::ScaledMatrix(const Graph& g, BaseKind kind, double scale) : kind_(kind), scale_(scale) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) throw ValidationError("matrix scale must be positive and finite");
  const int n = g.size();
  const auto deg = degree_data(g);
  diag_.resize(n);
  row_start_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const double di = deg.degree[static_cast<std::size_t>(i)];
    switch (kind_) {
      case BaseKind::laplacian: diag_(i) = di / scale_; break;
      case BaseKind::normalized_laplacian:
        if (di <= 0.0) throw ValidationError("vertex " + std::to_string(i) + " has zero degree");
        diag_(i) = 0.5;
        break;
      case BaseKind::adjacency: diag_(i) = 1.0; break;
    }
    for (const auto& nb : g.neighbors(i)) {
      const double dj = deg.degree[static_cast<std::size_t>(nb.vertex)];
      double v = -nb.weight / scale_;
      if (kind_ == BaseKind::normalized_laplacian) v = -nb.weight / (scale_ * std::sqrt(di * dj));
      col_.push_back(nb.vertex);
      val_.push_back(v);
    }
    row_start_[static_cast<std::size_t>(i) + 1] = static_cast<int>(col_.size());
  }
}

Eigen::VectorXcd ScaledMatrix::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != size()) throw ValidationError("signal length does not match graph size");
  Eigen::VectorXcd y(x.size());
  for (int i = 0; i < size(); ++i) {
    cd acc = diag_(i) * x(i);
    for (int k = row_start_[static_cast<std::size_t>(i)]; k < row_start_[static_cast<std::size_t>(i) + 1]; ++k) {
      acc += val_[static_cast<std::size_t>(k)] * x(col_[static_cast<std::size_t>(k)]);
    }
    y(i) = acc;
  }
  return y;
}

Eigen::MatrixXd ScaledMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (int i = 0; i < size(); ++i) {
    m(i, i) = diag_(i);
    for (int k = row_start_[static_cast<std::size_t>(i)]; k < row_start_[static_cast<std::size_t>(i) + 1]; ++k) {
      m(i, col_[static_cast<std::size_t>(k)]) = val_[static_cast<std::size_t>(k)];
    }
  }
  return m;
}

ScaledMatrix make_scaled_matrix(const Graph& g, BaseKind kind) {
  switch (kind) {
    case BaseKind::laplacian: return ScaledMatrix(g, kind, laplacian_scale(g));
    case BaseKind::normalized_laplacian: return ScaledMatrix(g, kind, 2.0);
    case BaseKind::adjacency: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) throw NumericError("adjacency eigensolver did not converge");
      return ScaledMatrix(g, kind, solver.eigenvalues().maxCoeff());
    }
  }
  throw ValidationError("unknown kind");
}

LaplacianSeries laplacian_series(int P, int Q, double alpha, double epsilon) {
  if (P < 0 || Q < 0) throw ValidationError("orders must be nonnegative");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in [0,1)");
  const double a2 = (alpha * std::numbers::pi) * (alpha * std::numbers::pi);
  LaplacianSeries s;
  s.epsilon = epsilon;
  s.cos_coeffs.resize(static_cast<std::size_t>(P) + 1);
  s.sinc_coeffs.resize(static_cast<std::size_t>(P) + 1);
  s.cos_coeffs[0] = 1.0;
  s.sinc_coeffs[0] = alpha * std::numbers::pi;
  for (int k = 1; k <= P; ++k) {
    const auto i = static_cast<std::size_t>(k);
    s.cos_coeffs[i] = -s.cos_coeffs[i - 1] * a2 / ((2.0 * k - 1.0) * (2.0 * k));
    s.sinc_coeffs[i] = -s.sinc_coeffs[i - 1] * a2 / ((2.0 * k) * (2.0 * k + 1.0));
  }
  // binomial(1/2, k) scaled by sqrt(1/(1+eps))
  s.sqrt_coeffs.resize(static_cast<std::size_t>(Q) + 1);
  s.sqrt_coeffs[0] = std::sqrt(1.0 / (1.0 + epsilon));
  for (int k = 1; k <= Q; ++k) {
    const auto i = static_cast<std::size_t>(k);
    s.sqrt_coeffs[i] = s.sqrt_coeffs[i - 1] * (0.5 - (k - 1)) / k;
  }
  return s;
}

namespace {

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double eval_cos_series(const LaplacianSeries& s, double x) { return horner(s.cos_coeffs, x); }
double eval_sinc_series(const LaplacianSeries& s, double x) { return horner(s.sinc_coeffs, x); }
double eval_sqrt_series(const LaplacianSeries& s, double x) {
  return horner(s.sqrt_coeffs, (1.0 + s.epsilon) * x - 1.0);
}

cd laplacian_symbol_exact(double x, double alpha) {
  return std::polar(1.0, -alpha * std::numbers::pi * std::sqrt(std::max(x, 0.0)));
}

cd laplacian_symbol_approx(double x, const LaplacianSeries& s) {
  return {eval_cos_series(s, x), -eval_sqrt_series(s, x) * eval_sinc_series(s, x)};
}

cd adjacency_symbol_exact(double x, double alpha) { return std::polar(1.0, -alpha * std::numbers::pi * x); }

cd adjacency_symbol_approx(double x, int K, double alpha) {
  if (K < 0) throw ValidationError("order K must be nonnegative");
  const cd step(0.0, -alpha * std::numbers::pi * x);
  cd term = 1.0;
  cd acc = term;
  for (int m = 1; m <= 2 * K + 1; ++m) {
    term *= step / static_cast<double>(m);
    acc += term;
  }
  return acc;
}

Eigen::VectorXcd apply_adjacency_approx(const ScaledMatrix& m, int K, double alpha, const Eigen::VectorXcd& x) {
  if (m.kind() != BaseKind::adjacency) throw ValidationError("adjacency approximation needs the adjacency scaled matrix");
  if (K < 0) throw ValidationError("order K must be nonnegative");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (x.size() != m.size()) throw ValidationError("signal length does not match graph size");
  const double a = alpha * std::numbers::pi;
  Eigen::VectorXcd power = x;
  Eigen::VectorXcd acc = x;
  double coeff = 1.0;  // (a^m / m!) with the (-i)^m phase applied below
  for (int k = 1; k <= 2 * K + 1; ++k) {
    power = m.apply(power);
    coeff *= a / k;
    // (-i)^m cycles through -i, -1, i, 1
    switch (k % 4) {
      case 1: acc += cd(0.0, -coeff) * power; break;
      case 2: acc -= coeff * power; break;
      case 3: acc += cd(0.0, coeff) * power; break;
      default: acc += coeff * power; break;
    }
  }
  return acc;
}

Eigen::VectorXcd apply_adjacency_approx(const Graph& g, int K, double alpha, const Eigen::VectorXcd& x) {
  return apply_adjacency_approx(make_scaled_matrix(g, BaseKind::adjacency), K, alpha, x);
}

Eigen::VectorXcd apply_laplacian_approx(const ScaledMatrix& m, int P, int Q, double alpha, double epsilon,
                                        const Eigen::VectorXcd& x) {
  if (!is_laplacian_kind(m.kind())) throw ValidationError("laplacian approximation needs a laplacian-kind scaled matrix");
  if (x.size() != m.size()) throw ValidationError("signal length does not match graph size");
  const auto s = laplacian_series(P, Q, alpha, epsilon);

  Eigen::VectorXcd c = s.cos_coeffs[static_cast<std::size_t>(P)] * x;
  Eigen::VectorXcd sn = s.sinc_coeffs[static_cast<std::size_t>(P)] * x;
  for (int k = P - 1; k >= 0; --k) {
    c = m.apply(c) + s.cos_coeffs[static_cast<std::size_t>(k)] * x;
    sn = m.apply(sn) + s.sinc_coeffs[static_cast<std::size_t>(k)] * x;
  }
  // Horner in B = (1+eps) M - I
  Eigen::VectorXcd r = s.sqrt_coeffs[static_cast<std::size_t>(Q)] * sn;
  for (int k = Q - 1; k >= 0; --k) {
    r = (1.0 + epsilon) * m.apply(r) - r + s.sqrt_coeffs[static_cast<std::size_t>(k)] * sn;
  }
  return c - cd(0.0, 1.0) * r;
}

Eigen::VectorXcd apply_laplacian_approx(const Graph& g, BaseKind kind, int P, int Q, double alpha,
                                        const Eigen::VectorXcd& x) {
  if (!is_laplacian_kind(kind)) throw ValidationError("laplacian approximation needs a laplacian kind");
  const auto basis = make_basis(g, kind);
  const auto gap = spectral_gap(basis);
  return apply_laplacian_approx(ScaledMatrix(g, kind, basis.scale), P, Q, alpha, gap.epsilon, x);
}

}  // namespace gtrans
