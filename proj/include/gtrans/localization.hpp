#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gtrans/graph.hpp"
#include "gtrans/spectral.hpp"
#include "gtrans/translation.hpp"

namespace gtrans {

/// Hop-radius energy profile of a translated signal around a center vertex.
struct LocalizationProfile {
  int center = 0;
  BaseKind kind = BaseKind::laplacian;
  double alpha = 1.0;
  /// E(r): energy of the output at hop distance exactly r, r = 0..eccentricity.
  std::vector<double> hop_energy;
  /// C(r) = sum_{s <= r} E(s) / ||y||^2
  std::vector<double> cumulative_fraction;
  /// Squared operator-error bounds on the energy outside the r-hop ball,
  /// clamped to 1; the oracle column is provable, the other uses the
  /// closed-form totals.
  std::vector<double> envelope_oracle;
  std::vector<double> envelope_paper;
};

/// Oracle envelope at radius r for a unit-norm input whose zero mode has
/// magnitude `dc_weight` (|xhat(0)| / ||x||). Laplacian kinds minimize over
/// P+Q <= r, adjacency over 2K+1 <= r; 1 when no order fits.
double oracle_envelope(const SpectralBasis& basis, double alpha, int radius, double dc_weight);

/// Closed-form envelope: squared minimum of total_paper over P+Q <= r
/// (laplacian kinds) or 2K+1 <= r (adjacency), clamped to 1.
double paper_envelope(BaseKind kind, double alpha, double epsilon, int radius);

/// Profile of the exact translation of an arbitrary nonzero signal.
LocalizationProfile signal_profile(const Graph& g, const ExactTranslation& op, int center,
                                   const Eigen::VectorXcd& x);

/// Profile of the exact translation of the impulse at `vertex`.
LocalizationProfile impulse_profile(const Graph& g, BaseKind kind, double alpha, int vertex);

/// Smallest r such that the signal energy beyond hop r from `center` is at most tol.
int support_radius(const Graph& g, const Eigen::VectorXcd& signal, int center, double tol);

struct DecayRow {
  int hop = 0;
  double energy = 0.0;
  double cumulative_fraction = 0.0;
  double one_minus_cumulative = 0.0;
  double envelope_oracle = 1.0;
  double envelope_paper = 1.0;
  /// envelope_oracle(r) / envelope_oracle(r-1) when both are informative (< 1, > 0).
  std::optional<double> decay_ratio;
};

std::vector<DecayRow> decay_report(const LocalizationProfile& profile);

}  // namespace gtrans
