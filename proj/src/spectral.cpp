#include "gtrans/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "gtrans/error.hpp"

namespace gtrans {

BaseKind parse_base_kind(std::string_view name) {
  if (name == "laplacian") return BaseKind::laplacian;
  if (name == "normalized_laplacian" || name == "normalized") return BaseKind::normalized_laplacian;
  if (name == "adjacency") return BaseKind::adjacency;
  throw ValidationError("unknown kind '" + std::string(name) + "' (laplacian, normalized_laplacian, adjacency)");
}

std::string_view to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::laplacian: return "laplacian";
    case BaseKind::normalized_laplacian: return "normalized_laplacian";
    case BaseKind::adjacency: return "adjacency";
  }
  return "?";
}

Eigendecomposition eig_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw ValidationError("eig_sym needs a nonempty square matrix");
  const double magnitude = m.cwiseAbs().maxCoeff();
  const double asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * magnitude) throw ValidationError("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");

  Eigendecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index l = 0; l < out.vectors.cols(); ++l) {
    auto col = out.vectors.col(l);
    const double peak = col.cwiseAbs().maxCoeff();
    // first entry within round-off of the peak decides the sign
    Eigen::Index lead = 0;
    while (std::abs(col(lead)) < peak * (1.0 - 1e-12)) ++lead;
    if (col(lead) < 0.0) col = -col;
  }
  return out;
}

SpectralBasis make_basis(const Graph& g, BaseKind kind) {
  if (!g.is_connected()) throw ValidationError("graph is disconnected; translation needs a connected graph");
  SpectralBasis basis;
  basis.kind = kind;
  Eigendecomposition eig;
  switch (kind) {
    case BaseKind::laplacian:
      eig = eig_sym(laplacian_matrix(g));
      basis.scale = laplacian_scale(g);
      break;
    case BaseKind::normalized_laplacian:
      eig = eig_sym(normalized_laplacian_matrix(g));
      basis.scale = 2.0;
      break;
    case BaseKind::adjacency:
      eig = eig_sym(adjacency_matrix(g));
      basis.scale = eig.values(eig.values.size() - 1);
      if (!(basis.scale > 0.0)) throw NumericError("largest adjacency eigenvalue is not positive");
      break;
  }
  basis.eigenvalues = std::move(eig.values);
  basis.eigenvectors = std::move(eig.vectors);
  if (is_laplacian_kind(kind)) {
    const double top = basis.eigenvalues(basis.size() - 1);
    if (std::abs(basis.eigenvalues(0)) > 1e-10 * top) {
      throw NumericError("smallest Laplacian eigenvalue is not zero within tolerance");
    }
    basis.eigenvalues(0) = 0.0;
  }
  return basis;
}

Eigen::VectorXcd gft(const SpectralBasis& basis, const Eigen::VectorXcd& x) {
  if (x.size() != basis.size()) throw ValidationError("signal length does not match graph size");
  return basis.eigenvectors.transpose().cast<std::complex<double>>() * x;
}

Eigen::VectorXcd igft(const SpectralBasis& basis, const Eigen::VectorXcd& xhat) {
  if (xhat.size() != basis.size()) throw ValidationError("spectrum length does not match graph size");
  return basis.eigenvectors.cast<std::complex<double>>() * xhat;
}

Eigen::VectorXd scaled_eigenvalues(const SpectralBasis& basis) {
  const auto& ev = basis.eigenvalues;
  Eigen::VectorXd x(ev.size());
  if (basis.kind == BaseKind::adjacency) {
    if (!(basis.scale > 0.0)) throw ValidationError("gamma_max must be positive");
    for (Eigen::Index l = 0; l < ev.size(); ++l) x(l) = std::clamp(1.0 - ev(l) / basis.scale, 0.0, 2.0);
    return x;
  }
  const double top = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index l = 0; l < ev.size(); ++l) {
    double v = ev(l);
    if (v < -1e-12 * top) throw NumericError("negative Laplacian eigenvalue " + std::to_string(v));
    v = std::max(v, 0.0) / basis.scale;
    if (v > 1.0 + 1e-9) {
      throw NumericError("eigenvalue exceeds the scale (lambda/scale = " + std::to_string(v) + ")");
    }
    x(l) = std::min(v, 1.0);
  }
  return x;
}

FrequencySet frequencies(const SpectralBasis& basis) {
  const Eigen::VectorXd x = scaled_eigenvalues(basis);
  FrequencySet out{Eigen::VectorXd(x.size()), Eigen::VectorXd(x.size())};
  for (Eigen::Index l = 0; l < x.size(); ++l) {
    if (basis.kind == BaseKind::adjacency) {
      out.nu(l) = x(l);
      out.theta(l) = std::numbers::pi * x(l);
    } else {
      const double root = std::sqrt(x(l));
      out.nu(l) = 0.5 * root;
      out.theta(l) = std::numbers::pi * root;
    }
  }
  return out;
}

SpectralGap spectral_gap(const SpectralBasis& basis) {
  if (!is_laplacian_kind(basis.kind)) throw ValidationError("spectral gap is defined for laplacian kinds only");
  if (basis.size() < 2) throw ValidationError("spectral gap needs at least 2 modes");
  const double top = basis.eigenvalues(basis.size() - 1);
  const double lambda1 = basis.eigenvalues(1);
  if (lambda1 <= 1e-12 * top) throw ValidationError("graph is effectively disconnected (lambda_1 ~ 0)");
  const double gap = std::min(lambda1 / basis.scale, 1.0);
  return {gap, epsilon_from_gap(gap)};
}

}  // namespace gtrans
