#pragma once

#include <string_view>

#include <Eigen/Core>

#include "gtrans/graph.hpp"

namespace gtrans {

/// Base matrix a graph Fourier transform is built on.
enum class BaseKind { laplacian, normalized_laplacian, adjacency };

BaseKind parse_base_kind(std::string_view name);
std::string_view to_string(BaseKind kind);
inline bool is_laplacian_kind(BaseKind kind) { return kind != BaseKind::adjacency; }

struct Eigendecomposition {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< column l is the eigenvector of values(l)
};

/// Symmetric eigendecomposition with ascending eigenvalues. Each eigenvector
/// is signed so its first largest-magnitude entry is positive.
/// Throws ValidationError if `m` is not square and symmetric to 1e-12
/// relative, NumericError if the solver does not converge.
Eigendecomposition eig_sym(const Eigen::MatrixXd& m);

struct SpectralBasis {
  BaseKind kind = BaseKind::laplacian;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  /// rho_G for laplacian, 2 for normalized_laplacian, gamma_max for adjacency.
  double scale = 1.0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Decompose the base matrix of `kind` for a connected graph. For laplacian
/// kinds the smallest eigenvalue is snapped to exactly 0.
SpectralBasis make_basis(const Graph& g, BaseKind kind);

Eigen::VectorXcd gft(const SpectralBasis& basis, const Eigen::VectorXcd& x);
Eigen::VectorXcd igft(const SpectralBasis& basis, const Eigen::VectorXcd& xhat);

struct FrequencySet {
  Eigen::VectorXd nu;     ///< reduced frequencies
  Eigen::VectorXd theta;  ///< translation phase angles (radians)
};

/// Reduced graph frequencies and phase angles.
///   laplacian:  nu = sqrt(lambda/rho)/2,  theta = pi*sqrt(lambda/rho)
///   normalized: nu = sqrt(mu/2)/2,        theta = pi*sqrt(mu/2)
///   adjacency:  nu = 1 - gamma/gamma_max, theta = pi*nu
FrequencySet frequencies(const SpectralBasis& basis);

/// Eigenvalues of the scaled matrix M (L/rho, Lnorm/2 or I - A/gamma_max),
/// clamped into [0,1] or [0,2]. Same ordering as basis.eigenvalues.
Eigen::VectorXd scaled_eigenvalues(const SpectralBasis& basis);

struct SpectralGap {
  double gap;      ///< smallest nonzero eigenvalue of M
  double epsilon;  ///< (1 - gap) / (1 + gap)
};

/// Only defined for laplacian kinds; throws ValidationError if the graph is
/// effectively disconnected (lambda_1 <= 1e-12 lambda_max).
SpectralGap spectral_gap(const SpectralBasis& basis);

inline double epsilon_from_gap(double gap) { return (1.0 - gap) / (1.0 + gap); }

}  // namespace gtrans
