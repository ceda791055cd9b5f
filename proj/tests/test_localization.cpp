#include <doctest.h>

#include <cmath>
#include <random>

#include "gtrans/approx.hpp"
#include "gtrans/bounds.hpp"
#include "gtrans/error.hpp"
#include "gtrans/localization.hpp"
#include "test_support.hpp"

using namespace gtrans;
using namespace gtrans::testing;
using doctest::Approx;

namespace {

// outside-ball energy fraction of y around center at radius r, computed directly
double outside_fraction(const Graph& g, const Eigen::VectorXcd& y, int center, int r) {
  const auto d = hop_distances(g, center);
  double out = 0.0;
  for (int j = 0; j < g.size(); ++j)
    if (d[j] > r) out += std::norm(y(j));
  return out / y.squaredNorm();
}

void check_profile_invariants(const LocalizationProfile& p, double total) {
  double sum = 0.0;
  for (double e : p.hop_energy) sum += e;
  CHECK(sum == Approx(total).epsilon(1e-10));
  for (std::size_t r = 1; r < p.cumulative_fraction.size(); ++r)
    CHECK(p.cumulative_fraction[r] >= p.cumulative_fraction[r - 1] - 1e-15);
  CHECK(p.cumulative_fraction.back() == Approx(1.0).epsilon(1e-10));
  CHECK(p.envelope_oracle.size() == p.hop_energy.size());
  CHECK(p.envelope_paper.size() == p.hop_energy.size());
  for (double v : p.envelope_oracle) CHECK((v >= 0.0 && v <= 1.0));
  for (double v : p.envelope_paper) CHECK((v >= 0.0 && v <= 1.0));
}

}  // namespace

TEST_CASE("impulse profiles on the 2-vertex path") {
  const auto lap = impulse_profile(path2(), BaseKind::laplacian, 1.0, 0);
  REQUIRE(lap.hop_energy.size() == 2);
  CHECK(lap.hop_energy[0] == Approx(0.0).epsilon(1e-15));
  CHECK(lap.hop_energy[1] == Approx(1.0).epsilon(1e-15));
  CHECK(lap.center == 0);

  const auto adj = impulse_profile(path2(), BaseKind::adjacency, 1.0, 0);
  CHECK(adj.hop_energy[0] == Approx(1.0).epsilon(1e-15));
  CHECK(adj.hop_energy[1] == Approx(0.0).epsilon(1e-15));
  CHECK(adj.cumulative_fraction[0] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("profile invariants and envelope validity for impulses") {
  for (const auto& g : small_corpus()) {
    for (auto kind : {BaseKind::laplacian, BaseKind::normalized_laplacian, BaseKind::adjacency}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        for (int v = 0; v < g.size(); v += 2) {
          const auto p = impulse_profile(g, kind, alpha, v);
          check_profile_invariants(p, 1.0);
          for (std::size_t r = 0; r < p.hop_energy.size(); ++r)
            CHECK(1.0 - p.cumulative_fraction[r] <= p.envelope_oracle[r] + 1e-10);
        }
      }
    }
  }
}

TEST_CASE("envelope validity for DC-removed impulses") {
  for (const auto& g : small_corpus()) {
    for (auto kind : {BaseKind::laplacian, BaseKind::normalized_laplacian}) {
      const auto op = build_exact(g, kind, 1.0);
      const auto& b = op.basis();
      const Eigen::VectorXcd u0 = b.eigenvectors.col(0).cast<std::complex<double>>();
      for (int v = 0; v < g.size(); ++v) {
        Eigen::VectorXcd x = impulse(g.size(), v);
        x -= u0 * u0.dot(x);
        if (x.norm() < 1e-12) continue;
        x /= x.norm();
        const auto p = signal_profile(g, op, v, x);
        check_profile_invariants(p, 1.0);
        for (int r = 0; r < static_cast<int>(p.hop_energy.size()); ++r) {
          const double env = oracle_envelope(b, 1.0, r, 0.0);
          CHECK(env <= p.envelope_oracle[r] + 1e-15);
          CHECK(1.0 - p.cumulative_fraction[r] <= env + 1e-10);
          CHECK(outside_fraction(g, op.apply(x), v, r) <= env + 1e-10);
        }
      }
    }
  }
}

TEST_CASE("envelopes against explicit minimization") {
  const auto g = grid(4, 4);
  const auto b = make_basis(g, BaseKind::laplacian);
  const double eps = spectral_gap(b).epsilon;
  const auto xv = scaled_eigenvalues(b);
  const std::vector<double> xs(xv.data(), xv.data() + xv.size());
  const double dc = 0.25;
  for (int r = 0; r <= 8; ++r) {
    double best = 1e300, best_closed = 1e300;
    for (int P = 0; P <= r; ++P) {
      const int Q = r - P;
      for (int q = 0; q <= Q; ++q) {
        const double e = empirical_sup_error_laplacian(P, q, 1.0, eps, xs, false) + dc * dc_error_term(P, q, 1.0, eps);
        best = std::min(best, e);
        best_closed = std::min(best_closed, total_bound_laplacian(P, q, 1.0, eps).total_paper);
      }
    }
    CHECK(oracle_envelope(b, 1.0, r, dc) == Approx(std::min(1.0, best * best)).epsilon(1e-12));
    CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, r) == Approx(std::min(1.0, best_closed * best_closed)).epsilon(1e-12));
  }
  // adjacency: radius 2K+1, nothing fits at r = 0
  const auto ab = make_basis(g, BaseKind::adjacency);
  CHECK(oracle_envelope(ab, 1.0, 0, 0.0) == 1.0);
  CHECK(paper_envelope(BaseKind::adjacency, 1.0, 0.0, 0) == 1.0);
  CHECK(paper_envelope(BaseKind::adjacency, 1.0, 0.0, 17) == Approx(std::pow(total_bound_adjacency(8, 1.0), 2)));
  CHECK(paper_envelope(BaseKind::adjacency, 1.0, 0.0, 18) == paper_envelope(BaseKind::adjacency, 1.0, 0.0, 17));
}

TEST_CASE("closed-form envelope at three, five and six hops") {
  const double eps = 9.0 / 11.0;
  CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, 6) == Approx(7.211492672324396e-3 * 7.211492672324396e-3).epsilon(1e-9));
  CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, 6) <= 0.01 * 0.01);
  CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, 5) <= 0.1 * 0.1);
  CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, 3) <= 0.5 * 0.5);
  CHECK(paper_envelope(BaseKind::laplacian, 1.0, eps, 2) > 0.5 * 0.5);
}

TEST_CASE("oracle envelope decays geometrically on complete graphs") {
  for (int m : {3, 4}) {
    const auto b = make_basis(complete(m), BaseKind::laplacian);
    REQUIRE(spectral_gap(b).epsilon <= 0.2 + 1e-12);
    std::vector<double> env;
    for (int r = 0; r <= 14; ++r) env.push_back(oracle_envelope(b, 1.0, r, 0.0));
    // successive ratios alternate, so decay is checked across windows of three radii
    int run = 0;
    for (int r = 2; r < static_cast<int>(env.size()); ++r) {
      CHECK(env[r] <= env[r - 1]);
      if (env[r - 2] < 1.0) {
        CHECK(env[r] <= 0.25 * env[r - 2]);
        ++run;
      }
    }
    CHECK(run >= 3);
  }
}

TEST_CASE("support radius") {
  const auto g = path(12);
  CHECK(support_radius(g, Eigen::VectorXcd::Zero(12), 0, 0.0) == 0);
  for (auto [P, Q] : {std::pair{2, 1}, std::pair{5, 1}, std::pair{3, 4}}) {
    const auto y = apply_laplacian_approx(g, BaseKind::laplacian, P, Q, 1.0, impulse(12, 0));
    CHECK(support_radius(g, y, 0, 0.0) <= P + Q);
  }
  const auto exact = build_exact(g, BaseKind::laplacian, 1.0).apply(impulse(12, 0));
  CHECK(support_radius(g, exact, 0, 0.0) == 11);
  // a signal at the center only
  CHECK(support_radius(g, impulse(12, 0), 0, 0.0) == 0);
  CHECK(support_radius(g, impulse(12, 5), 0, 0.0) == 5);
  CHECK(support_radius(g, impulse(12, 5), 0, 2.0) == 0);
  CHECK_THROWS_AS(support_radius(g, impulse(12, 5), 0, -1.0), ValidationError);
  CHECK_THROWS_AS(support_radius(g, impulse(11, 5), 0, 0.0), ValidationError);
}

TEST_CASE("decay report") {
  const auto p = impulse_profile(grid(5, 5), BaseKind::laplacian, 1.0, 12);
  const auto rows = decay_report(p);
  REQUIRE(rows.size() == p.hop_energy.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CHECK(rows[r].hop == static_cast<int>(r));
    CHECK(rows[r].energy == p.hop_energy[r]);
    CHECK(rows[r].one_minus_cumulative >= 0.0);
    if (r > 0) CHECK(rows[r].one_minus_cumulative <= rows[r - 1].one_minus_cumulative + 1e-15);
    if (rows[r].decay_ratio) CHECK(*rows[r].decay_ratio == Approx(rows[r].envelope_oracle / rows[r - 1].envelope_oracle));
  }
  CHECK(rows.back().one_minus_cumulative == Approx(0.0).epsilon(1e-10));

  const auto k4 = decay_report(impulse_profile(complete(4), BaseKind::laplacian, 1.0, 0));
  REQUIRE(k4.size() == 2);
  CHECK(k4[1].one_minus_cumulative < k4[0].one_minus_cumulative);
  CHECK(k4[1].one_minus_cumulative == Approx(0.0).epsilon(1e-10));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(impulse_profile(path(4), BaseKind::laplacian, 1.0, 4), ValidationError);
  CHECK_THROWS_AS(impulse_profile(path(4), BaseKind::laplacian, 0.0, 0), ValidationError);
  const auto op = build_exact(path(4), BaseKind::laplacian, 1.0);
  CHECK_THROWS_AS(signal_profile(path(4), op, 0, Eigen::VectorXcd::Zero(4)), ValidationError);
  CHECK_THROWS_AS(oracle_envelope(op.basis(), 1.0, -1, 0.0), ValidationError);
}
