#pragma once

#include <optional>
#include <span>

namespace gtrans {

// Closed-form truncation bounds. All factorial/power terms are evaluated in
// the log domain so large orders and alpha do not overflow.

/// (alpha pi)^{2P+2} / (2P+2)!
double kappa_C(int P, double alpha);
/// (alpha pi)^{2P+3} / (2P+3)!
double kappa_S(int P, double alpha);

/// Square-root series bound in its closed form, indexed so that
/// kappa_R(Q) is the bound for R^(Q):
///   sqrt(1/(1-eps^2)) (2q)! / ((2q-1)(q!)^2 4^q) (eps(1-eps))^q,  q = Q+1.
/// Throws ValidationError unless 0 <= eps < 1.
double kappa_R(int Q, double epsilon);

/// Lagrange remainder bound for R^(Q) on [gap, 1]:
///   sqrt(1/(1+eps)) |binom(1/2, q)| sqrt(1-eps) (eps/(1-eps))^q,  q = Q+1.
/// Returns +infinity for eps >= 1/2, where the geometric factor is >= 1 and
/// the bound does not decay with Q.
double corrected_kappa_R(int Q, double epsilon);

/// Tail bounds for C^(P) and S^(P) on [0,1] that hold for every order: the
/// first omitted term when the alternating terms decrease from there on,
/// otherwise the sum of absolute tail terms.
double corrected_kappa_C(int P, double alpha);
double corrected_kappa_S(int P, double alpha);

/// True when the terms of both the cosine and sine series decrease
/// monotonically from the first omitted one, i.e. the alternating-series
/// bound is justified.
bool laplacian_alternating_regime(int P, double alpha);

/// maxDeriv * maxDist^{K+1} / (K+1)!
double lagrange_remainder_bound(double max_derivative, double max_distance, int K);

/// kg * maxH + kh * (maxG + kg)
double product_bound(double kg, double kh, double max_g, double max_h);

struct BoundReport {
  int P = 0;
  int Q = 0;
  double alpha = 1.0;
  double gap = 1.0;
  double epsilon = 0.0;

  double kappa_C = 0.0;
  double kappa_S = 0.0;
  double kappa_R = 0.0;
  /// kappa_R + kappa_S (1 + kappa_R)
  double kappa_RS = 0.0;
  /// kappa_C + kappa_S + kappa_R (1 + 2 kappa_S)
  double total_paper = 0.0;

  /// Zero-mode error |R^(Q)(0)| |S^(P)(0)|.
  double dc_term = 0.0;

  double corrected_kappa_R = 0.0;
  /// corrected_kappa_C + corrected_kappa_R max|S| + corrected_kappa_S (1 + corrected_kappa_R),
  /// with max|S| = min(alpha pi, 1/sqrt(gap)); +infinity when corrected_kappa_R is.
  double corrected_total = 0.0;

  bool alternating_regime = true;

  /// Eigenvalue-exact sup error on the nonzero spectrum; only set when a
  /// concrete spectrum is supplied.
  std::optional<double> oracle;
};

/// Bound report for the laplacian-kind approximation at orders (P, Q). The
/// same formulas serve the normalized kind.
BoundReport total_bound_laplacian(int P, int Q, double alpha, double epsilon);

/// As above, adding the oracle column computed on the scaled eigenvalues.
BoundReport total_bound_laplacian(int P, int Q, double alpha, double epsilon,
                                  std::span<const double> scaled_eigenvalues);

/// (2 alpha pi)^{2K+2} / (2K+2)! (1 + 2 alpha pi / (2K+3))
double total_bound_adjacency(int K, double alpha);

/// 2K+3 >= 2 alpha pi: the terms of the adjacency series decrease from the
/// first omitted one on all of [0,2].
bool adjacency_alternating_regime(int K, double alpha);

/// |R^(Q)(0)| * |S^(P)(0)|, the approximation error on the zero-eigenvalue mode.
double dc_error_term(int P, int Q, double alpha, double epsilon);

/// max_l |exact(x_l) - approx(x_l)| over eigenvalues of M. With
/// include_zero_mode = false, eigenvalues within 1e-12 of zero are skipped.
/// Throws ValidationError for eigenvalues outside [0,1] (tolerance 1e-9).
double empirical_sup_error_laplacian(int P, int Q, double alpha, double epsilon,
                                     std::span<const double> scaled_eigenvalues, bool include_zero_mode);

/// Same for the adjacency kind; eigenvalues must lie in [0,2].
double empirical_sup_error_adjacency(int K, double alpha, std::span<const double> scaled_eigenvalues);

struct MinOrder {
  int P = 0;
  int Q = 0;
  double total = 0.0;
  int order() const { return P + Q; }
};

/// Smallest P+Q with total_paper <= xi, scanning P+Q = 0, 1, ...; among
/// equal sums the smallest total wins, then the smaller Q. Returns nullopt
/// when nothing is found up to `max_order`.
std::optional<MinOrder> min_order_search(double xi, double alpha, double gap, int max_order = 512);

}  // namespace gtrans
