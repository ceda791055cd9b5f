#include "gtrans/translation.hpp"

#include <cmath>
#include <string>

#include "gtrans/error.hpp"

namespace gtrans {

ExactTranslation::ExactTranslation(SpectralBasis basis, double alpha) : basis_(std::move(basis)), alpha_(alpha) {
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) throw ValidationError("alpha must be a positive finite real");
  const auto freq = frequencies(basis_);
  phases_.resize(freq.theta.size());
  for (Eigen::Index l = 0; l < freq.theta.size(); ++l) phases_(l) = std::polar(1.0, -alpha_ * freq.theta(l));
}

Eigen::VectorXcd ExactTranslation::apply(const Eigen::VectorXcd& x) const {
  Eigen::VectorXcd xhat = gft(basis_, x);
  xhat.array() *= phases_.array();
  return igft(basis_, xhat);
}

Eigen::MatrixXcd ExactTranslation::matrix(int cap) const {
  if (size() > cap) {
    throw ValidationError("operator matrix for n=" + std::to_string(size()) + " exceeds the cap of " + std::to_string(cap));
  }
  const Eigen::MatrixXcd u = basis_.eigenvectors.cast<std::complex<double>>();
  return u * phases_.asDiagonal() * u.transpose();
}

ExactTranslation build_exact(const Graph& g, BaseKind kind, double alpha) {
  return ExactTranslation(make_basis(g, kind), alpha);
}

}  // namespace gtrans
