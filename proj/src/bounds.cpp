#include "gtrans/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gtrans/approx.hpp"
#include "gtrans/error.hpp"

namespace gtrans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(int order) {
  if (order < 0) throw ValidationError("orders must be nonnegative");
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be a positive finite real");
}

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in [0,1)");
}

// log |binomial(1/2, q)| = log((2q)! / ((2q-1) (q!)^2 4^q)), q >= 1
double log_sqrt_coeff(int q) {
  return std::lgamma(2.0 * q + 1.0) - std::log(2.0 * q - 1.0) - 2.0 * std::lgamma(q + 1.0) - q * std::log(4.0);
}

// sum_{k > order} a^(2k + shift) / (2k + shift)!, the absolute tail of the
// cos (shift 0) or sinc (shift 1) series at x = 1
double absolute_tail(int order, double a, int shift) {
  double acc = 0.0;
  double prev = kInf;
  for (int k = order + 1;; ++k) {
    const int m = 2 * k + shift;
    const double term = std::exp(m * std::log(a) - std::lgamma(m + 1.0));
    acc += term;
    if (term < prev && term <= 1e-17 * acc) break;
    prev = term;
  }
  return acc;
}

}  // namespace

double kappa_C(int P, double alpha) {
  require_order(P);
  require_alpha(alpha);
  const int m = 2 * P + 2;
  return std::exp(m * std::log(alpha * std::numbers::pi) - std::lgamma(m + 1.0));
}

double kappa_S(int P, double alpha) {
  require_order(P);
  require_alpha(alpha);
  const int m = 2 * P + 3;
  return std::exp(m * std::log(alpha * std::numbers::pi) - std::lgamma(m + 1.0));
}

double kappa_R(int Q, double epsilon) {
  require_order(Q);
  require_epsilon(epsilon);
  if (epsilon == 0.0) return 0.0;
  const int q = Q + 1;
  return std::exp(-0.5 * std::log1p(-epsilon * epsilon) + log_sqrt_coeff(q) + q * std::log(epsilon * (1.0 - epsilon)));
}

double corrected_kappa_R(int Q, double epsilon) {
  require_order(Q);
  require_epsilon(epsilon);
  if (epsilon == 0.0) return 0.0;
  if (epsilon >= 0.5) return kInf;
  const int q = Q + 1;
  return std::exp(-0.5 * std::log1p(epsilon) + log_sqrt_coeff(q) + 0.5 * std::log1p(-epsilon) +
                  q * (std::log(epsilon) - std::log1p(-epsilon)));
}

bool laplacian_alternating_regime(int P, double alpha) {
  require_order(P);
  const double a2 = (alpha * std::numbers::pi) * (alpha * std::numbers::pi);
  return a2 <= (2.0 * P + 3.0) * (2.0 * P + 4.0);
}

double corrected_kappa_C(int P, double alpha) {
  if (laplacian_alternating_regime(P, alpha)) return kappa_C(P, alpha);
  return absolute_tail(P, alpha * std::numbers::pi, 0);
}

double corrected_kappa_S(int P, double alpha) {
  require_order(P);
  require_alpha(alpha);
  const double a2 = (alpha * std::numbers::pi) * (alpha * std::numbers::pi);
  if (a2 <= (2.0 * P + 4.0) * (2.0 * P + 5.0)) return kappa_S(P, alpha);
  return absolute_tail(P, alpha * std::numbers::pi, 1);
}

double lagrange_remainder_bound(double max_derivative, double max_distance, int K) {
  require_order(K);
  if (!(max_derivative >= 0.0) || !(max_distance >= 0.0)) throw ValidationError("bound inputs must be nonnegative");
  if (max_derivative == 0.0 || max_distance == 0.0) return 0.0;
  return std::exp(std::log(max_derivative) + (K + 1.0) * std::log(max_distance) - std::lgamma(K + 2.0));
}

double product_bound(double kg, double kh, double max_g, double max_h) {
  if (!(kg >= 0.0 && kh >= 0.0 && max_g >= 0.0 && max_h >= 0.0)) {
    throw ValidationError("bound inputs must be nonnegative");
  }
  return kg * max_h + kh * (max_g + kg);
}

double dc_error_term(int P, int Q, double alpha, double epsilon) {
  const auto s = laplacian_series(P, Q, alpha, epsilon);
  return std::abs(eval_sqrt_series(s, 0.0)) * std::abs(eval_sinc_series(s, 0.0));
}

BoundReport total_bound_laplacian(int P, int Q, double alpha, double epsilon) {
  BoundReport r;
  r.P = P;
  r.Q = Q;
  r.alpha = alpha;
  r.epsilon = epsilon;
  r.gap = (1.0 - epsilon) / (1.0 + epsilon);
  r.kappa_C = kappa_C(P, alpha);
  r.kappa_S = kappa_S(P, alpha);
  r.kappa_R = kappa_R(Q, epsilon);
  r.kappa_RS = product_bound(r.kappa_R, r.kappa_S, 1.0, 1.0);
  r.total_paper = r.kappa_C + r.kappa_S + r.kappa_R * (1.0 + 2.0 * r.kappa_S);
  r.dc_term = dc_error_term(P, Q, alpha, epsilon);
  r.alternating_regime = laplacian_alternating_regime(P, alpha);

  r.corrected_kappa_R = corrected_kappa_R(Q, epsilon);
  if (std::isinf(r.corrected_kappa_R)) {
    r.corrected_total = kInf;
  } else {
    // |sin(a pi sqrt x)/sqrt x| <= min(a pi, 1/sqrt x) on [gap, 1]
    const double max_sinc = std::min(alpha * std::numbers::pi, 1.0 / std::sqrt(r.gap));
    r.corrected_total = corrected_kappa_C(P, alpha) +
                        product_bound(r.corrected_kappa_R, corrected_kappa_S(P, alpha), 1.0, max_sinc);
  }
  return r;
}

BoundReport total_bound_laplacian(int P, int Q, double alpha, double epsilon,
                                  std::span<const double> scaled_eigenvalues) {
  auto r = total_bound_laplacian(P, Q, alpha, epsilon);
  r.oracle = empirical_sup_error_laplacian(P, Q, alpha, epsilon, scaled_eigenvalues, false);
  return r;
}

double total_bound_adjacency(int K, double alpha) {
  require_order(K);
  require_alpha(alpha);
  const double a = 2.0 * alpha * std::numbers::pi;
  const int m = 2 * K + 2;
  return std::exp(m * std::log(a) - std::lgamma(m + 1.0)) * (1.0 + a / (2.0 * K + 3.0));
}

bool adjacency_alternating_regime(int K, double alpha) {
  require_order(K);
  return 2.0 * K + 3.0 >= 2.0 * alpha * std::numbers::pi;
}

namespace {

double checked_eigenvalue(double x, double upper) {
  if (!(x >= -1e-9 && x <= upper + 1e-9)) {
    throw ValidationError("eigenvalue " + std::to_string(x) + " outside [0," + std::to_string(upper) + "]");
  }
  return std::clamp(x, 0.0, upper);
}

}  // namespace

double empirical_sup_error_laplacian(int P, int Q, double alpha, double epsilon,
                                     std::span<const double> scaled_eigenvalues, bool include_zero_mode) {
  const auto s = laplacian_series(P, Q, alpha, epsilon);
  double worst = 0.0;
  for (double raw : scaled_eigenvalues) {
    const double x = checked_eigenvalue(raw, 1.0);
    if (!include_zero_mode && x <= 1e-12) continue;
    worst = std::max(worst, std::abs(laplacian_symbol_exact(x, alpha) - laplacian_symbol_approx(x, s)));
  }
  return worst;
}

double empirical_sup_error_adjacency(int K, double alpha, std::span<const double> scaled_eigenvalues) {
  require_order(K);
  require_alpha(alpha);
  double worst = 0.0;
  for (double raw : scaled_eigenvalues) {
    const double x = checked_eigenvalue(raw, 2.0);
    worst = std::max(worst, std::abs(adjacency_symbol_exact(x, alpha) - adjacency_symbol_approx(x, K, alpha)));
  }
  return worst;
}

std::optional<MinOrder> min_order_search(double xi, double alpha, double gap, int max_order) {
  if (!(xi > 0.0)) throw ValidationError("target error must be positive");
  if (!(gap > 0.0 && gap <= 1.0)) throw ValidationError("spectral gap must lie in (0,1]");
  require_alpha(alpha);
  const double epsilon = epsilon_from_gap(gap);
  for (int order = 0; order <= max_order; ++order) {
    std::optional<MinOrder> best;
    for (int Q = 0; Q <= order; ++Q) {
      const int P = order - Q;
      const double ks = kappa_S(P, alpha);
      const double total = kappa_C(P, alpha) + ks + kappa_R(Q, epsilon) * (1.0 + 2.0 * ks);
      // strict comparison keeps the smaller Q on ties
      if (total <= xi && (!best || total < best->total)) best = MinOrder{P, Q, total};
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace gtrans
