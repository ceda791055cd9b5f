#include "gtrans/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gtrans/bounds.hpp"
#include "gtrans/error.hpp"

namespace gtrans {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

double clamp_energy(double norm_bound) { return std::min(1.0, norm_bound * norm_bound); }

}  // namespace

double oracle_envelope(const SpectralBasis& basis, double alpha, int radius, double dc_weight) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const auto x = to_std(scaled_eigenvalues(basis));
  double best = std::numeric_limits<double>::infinity();
  if (basis.kind == BaseKind::adjacency) {
    for (int K = 0; 2 * K + 1 <= radius; ++K) best = std::min(best, empirical_sup_error_adjacency(K, alpha, x));
  } else {
    const double epsilon = spectral_gap(basis).epsilon;
    for (int order = 0; order <= radius; ++order) {
      for (int Q = 0; Q <= order; ++Q) {
        const int P = order - Q;
        const double err = empirical_sup_error_laplacian(P, Q, alpha, epsilon, x, false) +
                           dc_error_term(P, Q, alpha, epsilon) * dc_weight;
        best = std::min(best, err);
      }
    }
  }
  return std::isinf(best) ? 1.0 : clamp_energy(best);
}

double paper_envelope(BaseKind kind, double alpha, double epsilon, int radius) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  double best = std::numeric_limits<double>::infinity();
  if (kind == BaseKind::adjacency) {
    for (int K = 0; 2 * K + 1 <= radius; ++K) best = std::min(best, total_bound_adjacency(K, alpha));
  } else {
    for (int order = 0; order <= radius; ++order) {
      for (int Q = 0; Q <= order; ++Q) {
        best = std::min(best, total_bound_laplacian(order - Q, Q, alpha, epsilon).total_paper);
      }
    }
  }
  return std::isinf(best) ? 1.0 : clamp_energy(best);
}

LocalizationProfile signal_profile(const Graph& g, const ExactTranslation& op, int center, const Eigen::VectorXcd& x) {
  if (x.size() != g.size() || op.size() != g.size()) throw ValidationError("signal length does not match graph size");
  const double x_norm = x.norm();
  if (x_norm == 0.0) throw ValidationError("cannot profile a zero signal");

  const auto dist = hop_distances(g, center);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw ValidationError("graph is disconnected");
  }
  const int eccentricity = *std::max_element(dist.begin(), dist.end());

  const Eigen::VectorXcd y = op.apply(x);
  LocalizationProfile prof;
  prof.center = center;
  prof.kind = op.kind();
  prof.alpha = op.alpha();
  prof.hop_energy.assign(static_cast<std::size_t>(eccentricity) + 1, 0.0);
  for (int j = 0; j < g.size(); ++j) prof.hop_energy[static_cast<std::size_t>(dist[static_cast<std::size_t>(j)])] += std::norm(y(j));

  const double total = y.squaredNorm();
  double running = 0.0;
  for (double e : prof.hop_energy) {
    running += e;
    prof.cumulative_fraction.push_back(running / total);
  }

  double dc_weight = 0.0;
  double epsilon = 0.0;
  if (is_laplacian_kind(op.kind())) {
    dc_weight = std::abs(gft(op.basis(), x)(0)) / x_norm;
    epsilon = spectral_gap(op.basis()).epsilon;
  }
  for (int r = 0; r <= eccentricity; ++r) {
    prof.envelope_oracle.push_back(oracle_envelope(op.basis(), op.alpha(), r, dc_weight));
    prof.envelope_paper.push_back(paper_envelope(op.kind(), op.alpha(), epsilon, r));
  }
  return prof;
}

LocalizationProfile impulse_profile(const Graph& g, BaseKind kind, double alpha, int vertex) {
  if (vertex < 0 || vertex >= g.size()) throw ValidationError("vertex " + std::to_string(vertex) + " out of range");
  const auto op = build_exact(g, kind, alpha);
  Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(g.size());
  delta(vertex) = 1.0;
  return signal_profile(g, op, vertex, delta);
}

int support_radius(const Graph& g, const Eigen::VectorXcd& signal, int center, double tol) {
  if (signal.size() != g.size()) throw ValidationError("signal length does not match graph size");
  if (!(tol >= 0.0)) throw ValidationError("tolerance must be nonnegative");
  const auto dist = hop_distances(g, center);
  // unreachable vertices count as farther than any radius
  std::vector<double> energy(static_cast<std::size_t>(g.size()) + 1, 0.0);
  for (int j = 0; j < g.size(); ++j) {
    const int d = dist[static_cast<std::size_t>(j)];
    energy[static_cast<std::size_t>(d < 0 ? g.size() : d)] += std::norm(signal(j));
  }
  double beyond = 0.0;
  int radius = g.size();
  for (int r = g.size(); r >= 0; --r) {
    // beyond holds the energy strictly farther than r
    if (beyond > tol) break;
    radius = r;
    beyond += energy[static_cast<std::size_t>(r)];
  }
  return radius;
}

std::vector<DecayRow> decay_report(const LocalizationProfile& profile) {
  std::vector<DecayRow> rows;
  for (std::size_t r = 0; r < profile.hop_energy.size(); ++r) {
    DecayRow row;
    row.hop = static_cast<int>(r);
    row.energy = profile.hop_energy[r];
    row.cumulative_fraction = profile.cumulative_fraction[r];
    row.one_minus_cumulative = std::max(0.0, 1.0 - profile.cumulative_fraction[r]);
    row.envelope_oracle = profile.envelope_oracle[r];
    row.envelope_paper = profile.envelope_paper[r];
    if (r > 0) {
      const double prev = profile.envelope_oracle[r - 1];
      if (prev > 0.0 && prev < 1.0 && row.envelope_oracle < 1.0) row.decay_ratio = row.envelope_oracle / prev;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gtrans
