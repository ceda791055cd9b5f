#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "gtrans/graph.hpp"
#include "gtrans/spectral.hpp"

namespace gtrans {

/// Matrix-free view of M = L/rho_G, Lnorm/2 or I - A/gamma_max.
///
/// Application only touches graph neighbors, so entries beyond one hop of
/// the input support stay exactly zero.
class ScaledMatrix {
 public:
  /// `scale` is rho_G, 2 or gamma_max depending on `kind`.
  ScaledMatrix(const Graph& g, BaseKind kind, double scale);

  BaseKind kind() const { return kind_; }
  double scale() const { return scale_; }
  int size() const { return static_cast<int>(diag_.size()); }
  /// Upper end of the eigenvalue interval: 1 for laplacian kinds, 2 for adjacency.
  double interval_upper() const { return is_laplacian_kind(kind_) ? 1.0 : 2.0; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  Eigen::MatrixXd dense() const;

 private:
  BaseKind kind_;
  double scale_;
  Eigen::VectorXd diag_;
  // CSR over the off-diagonal entries
  std::vector<int> row_start_;
  std::vector<int> col_;
  std::vector<double> val_;
};

/// Builds the scale from the graph (needs the adjacency spectrum for gamma_max).
ScaledMatrix make_scaled_matrix(const Graph& g, BaseKind kind);

struct LaplacianSeries {
  std::vector<double> cos_coeffs;   ///< C^(P): (-1)^k (a pi)^{2k} / (2k)!
  std::vector<double> sinc_coeffs;  ///< S^(P): (-1)^k (a pi)^{2k+1} / (2k+1)!
  std::vector<double> sqrt_coeffs;  ///< R^(Q) in y = (1+eps)x - 1, prefactor folded in
  double epsilon = 0.0;
};

/// Coefficients of C^(P), S^(P) (powers of x) and R^(Q) (powers of (1+eps)x - 1).
LaplacianSeries laplacian_series(int P, int Q, double alpha, double epsilon);

double eval_cos_series(const LaplacianSeries& s, double x);
double eval_sinc_series(const LaplacianSeries& s, double x);
double eval_sqrt_series(const LaplacianSeries& s, double x);

/// exp(-i alpha pi sqrt(x)), the laplacian-kind translation symbol on M's spectrum.
std::complex<double> laplacian_symbol_exact(double x, double alpha);
/// C^(P)(x) - i R^(Q)(x) S^(P)(x).
std::complex<double> laplacian_symbol_approx(double x, const LaplacianSeries& s);

/// exp(-i alpha pi x), the adjacency-kind symbol.
std::complex<double> adjacency_symbol_exact(double x, double alpha);
/// Truncated cosine/sine series through degree 2K+1.
std::complex<double> adjacency_symbol_approx(double x, int K, double alpha);

/// Truncated adjacency translation via 2K+1 successive mat-vecs with M = I - A/gamma_max.
Eigen::VectorXcd apply_adjacency_approx(const ScaledMatrix& m, int K, double alpha,
                                        const Eigen::VectorXcd& x);
Eigen::VectorXcd apply_adjacency_approx(const Graph& g, int K, double alpha, const Eigen::VectorXcd& x);

/// C^(P)(M)x - i R^(Q)(M) S^(P)(M)x, all by Horner in M (P + Q mat-vecs of reach).
Eigen::VectorXcd apply_laplacian_approx(const ScaledMatrix& m, int P, int Q, double alpha, double epsilon,
                                        const Eigen::VectorXcd& x);
/// Convenience overload computing the spectral gap of `kind` from the graph.
Eigen::VectorXcd apply_laplacian_approx(const Graph& g, BaseKind kind, int P, int Q, double alpha,
                                        const Eigen::VectorXcd& x);

}  // namespace gtrans
