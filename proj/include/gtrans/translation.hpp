#pragma once

#include <complex>

#include <Eigen/Core>

#include "gtrans/graph.hpp"
#include "gtrans/spectral.hpp"

namespace gtrans {

/// Exact graph translation raised to the power alpha, held in spectral form:
/// T^alpha = U diag(exp(-i alpha theta_l)) U^T.
class ExactTranslation {
 public:
  ExactTranslation(SpectralBasis basis, double alpha);

  BaseKind kind() const { return basis_.kind; }
  double alpha() const { return alpha_; }
  const SpectralBasis& basis() const { return basis_; }
  const Eigen::VectorXcd& phases() const { return phases_; }
  int size() const { return basis_.size(); }

  /// Throws ValidationError on length mismatch.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  /// Dense unitary matrix; ValidationError when size() exceeds `cap`.
  Eigen::MatrixXcd matrix(int cap = 512) const;

 private:
  SpectralBasis basis_;
  double alpha_;
  Eigen::VectorXcd phases_;
};

ExactTranslation build_exact(const Graph& g, BaseKind kind, double alpha);

}  // namespace gtrans
