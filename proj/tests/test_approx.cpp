#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gtrans/approx.hpp"
#include "gtrans/bounds.hpp"
#include "gtrans/error.hpp"
#include "gtrans/translation.hpp"
#include "test_support.hpp"

using namespace gtrans;
using namespace gtrans::testing;
using cd = std::complex<double>;

namespace {

std::vector<double> scaled(const SpectralBasis& b) {
  const auto x = scaled_eigenvalues(b);
  return {x.data(), x.data() + x.size()};
}

Eigen::VectorXcd remove_dc(const SpectralBasis& b, Eigen::VectorXcd x) {
  const Eigen::VectorXcd u0 = b.eigenvectors.col(0).cast<cd>();
  return x - u0 * u0.dot(x);
}

}  // namespace

TEST_CASE("scaled matrix agrees with the dense construction") {
  auto corpus = small_corpus();
  corpus.push_back(erdos(64, 0.1, 17, true));
  for (const auto& g : corpus) {
    const double rho = laplacian_scale(g);
    const auto ab = make_basis(g, BaseKind::adjacency);
    const int n = g.size();
    const Eigen::MatrixXd expected[] = {
        laplacian_matrix(g) / rho,
        normalized_laplacian_matrix(g) / 2.0,
        Eigen::MatrixXd::Identity(n, n) - adjacency_matrix(g) / ab.scale,
    };
    const ScaledMatrix ms[] = {ScaledMatrix(g, BaseKind::laplacian, rho),
                               ScaledMatrix(g, BaseKind::normalized_laplacian, 2.0),
                               make_scaled_matrix(g, BaseKind::adjacency)};
    for (int k = 0; k < 3; ++k) {
      CHECK((ms[k].dense() - expected[k]).cwiseAbs().maxCoeff() <= 1e-12);
      for (int i = 0; i < n; i += 3) {
        const auto col = ms[k].apply(impulse(n, i));
        CHECK((col - expected[k].col(i).cast<cd>()).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(ScaledMatrix(path2(), BaseKind::laplacian, 0.0), ValidationError);
}

TEST_CASE("adjacency approximation: order 0 on the 2-vertex path") {
  // M = I - A on K2, so (I - i pi M) delta_0 = delta_0 - i pi (delta_0 - delta_1)
  const auto y = apply_adjacency_approx(path2(), 0, 1.0, impulse(2, 0));
  CHECK(std::abs(y(0) - cd(1.0, -std::numbers::pi)) < 1e-15);
  CHECK(std::abs(y(1) - cd(0.0, std::numbers::pi)) < 1e-15);
}

TEST_CASE("adjacency approximation converges to the exact translation") {
  std::mt19937_64 rng(5);
  for (const auto& g : small_corpus()) {
    const auto exact = build_exact(g, BaseKind::adjacency, 1.0);
    const auto m = ScaledMatrix(g, BaseKind::adjacency, exact.basis().scale);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_signal(g.size(), rng);
      CHECK((apply_adjacency_approx(m, 40, 1.0, x) - exact.apply(x)).norm() <= 1e-10 * x.norm());
    }
  }
}

TEST_CASE("adjacency approximation has the scalar symbol on each eigenvector") {
  const auto g = erdos(10, 0.4, 12);
  const auto b = make_basis(g, BaseKind::adjacency);
  const auto m = ScaledMatrix(g, BaseKind::adjacency, b.scale);
  const auto x = scaled_eigenvalues(b);
  for (int l = 0; l < g.size(); ++l) {
    const Eigen::VectorXcd ul = b.eigenvectors.col(l).cast<cd>();
    const auto y = apply_adjacency_approx(m, 3, 0.8, ul);
    CHECK((y - adjacency_symbol_approx(x(l), 3, 0.8) * ul).norm() <= 1e-12);
  }
}

TEST_CASE("laplacian approximation at order zero") {
  // C^(0) = 1, S^(0) = alpha pi, R^(0) = sqrt(1/(1+eps)):  y = x - i pi sqrt(1/(1+eps)) x
  for (const auto& g : {complete(4), grid(3, 3)}) {
    const auto b = make_basis(g, BaseKind::laplacian);
    const double eps = spectral_gap(b).epsilon;
    std::mt19937_64 rng(1);
    const auto x = random_signal(g.size(), rng);
    const auto y = apply_laplacian_approx(g, BaseKind::laplacian, 0, 0, 1.0, x);
    const cd factor(1.0, -std::numbers::pi * std::sqrt(1.0 / (1.0 + eps)));
    CHECK((y - factor * x).norm() <= 1e-14 * x.norm());
  }
}

TEST_CASE("laplacian approximation on the 2-vertex path converges off the DC mode") {
  const auto g = path2();
  const auto exact = build_exact(g, BaseKind::laplacian, 1.0);
  CHECK(spectral_gap(exact.basis()).epsilon <= 1e-15);
  Eigen::VectorXcd x(2);
  x << 1.0, -1.0;
  const auto y = apply_laplacian_approx(g, BaseKind::laplacian, 30, 30, 1.0, x);
  CHECK((y - exact.apply(x)).norm() <= 1e-10);
}

TEST_CASE("laplacian approximation has the scalar symbol on each eigenvector") {
  for (auto kind : {BaseKind::laplacian, BaseKind::normalized_laplacian}) {
    const auto g = erdos(11, 0.4, 21, true);
    const auto b = make_basis(g, kind);
    const double eps = spectral_gap(b).epsilon;
    const auto m = ScaledMatrix(g, kind, b.scale);
    const auto s = laplacian_series(4, 2, 1.2, eps);
    const auto x = scaled_eigenvalues(b);
    for (int l = 0; l < g.size(); ++l) {
      const Eigen::VectorXcd ul = b.eigenvectors.col(l).cast<cd>();
      const auto y = apply_laplacian_approx(m, 4, 2, 1.2, eps, ul);
      CHECK((y - laplacian_symbol_approx(x(l), s) * ul).norm() <= 1e-12);
    }
  }
}

TEST_CASE("series coefficients") {
  const auto s = laplacian_series(3, 3, 1.0, 0.25);
  const double pi = std::numbers::pi;
  CHECK(s.cos_coeffs[1] == doctest::Approx(-pi * pi / 2.0).epsilon(1e-15));
  CHECK(s.cos_coeffs[2] == doctest::Approx(std::pow(pi, 4) / 24.0).epsilon(1e-15));
  CHECK(s.sinc_coeffs[1] == doctest::Approx(-std::pow(pi, 3) / 6.0).epsilon(1e-15));
  // binomial(1/2, k): 1, 1/2, -1/8, 1/16
  const double pre = std::sqrt(1.0 / 1.25);
  CHECK(s.sqrt_coeffs[0] == doctest::Approx(pre));
  CHECK(s.sqrt_coeffs[1] == doctest::Approx(0.5 * pre));
  CHECK(s.sqrt_coeffs[2] == doctest::Approx(-0.125 * pre));
  CHECK(s.sqrt_coeffs[3] == doctest::Approx(0.0625 * pre));
  // the sums reproduce their functions at high order
  const auto hi = laplacian_series(30, 80, 1.0, 0.25);
  const double gap = (1.0 - 0.25) / 1.25;
  for (double x : {gap, 0.7, 1.0}) {
    CHECK(eval_cos_series(hi, x) == doctest::Approx(std::cos(pi * std::sqrt(x))).epsilon(1e-13));
    CHECK(eval_sinc_series(hi, x) == doctest::Approx(std::sin(pi * std::sqrt(x)) / std::sqrt(x)).epsilon(1e-13));
    CHECK(eval_sqrt_series(hi, x) == doctest::Approx(std::sqrt(x)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(laplacian_series(-1, 0, 1.0, 0.1), ValidationError);
  CHECK_THROWS_AS(laplacian_series(0, 0, 1.0, 1.0), ValidationError);
}

TEST_CASE("compact support of the truncated operators") {
  const auto p9 = path(9);
  const auto y = apply_adjacency_approx(p9, 1, 1.0, impulse(9, 0));
  for (int j = 4; j < 9; ++j) CHECK(y(j) == cd(0.0, 0.0));
  CHECK(y(3) != cd(0.0, 0.0));

  for (const auto& g : {path(30), grid(6, 7), erdos(60, 0.05, 3)}) {
    const auto dist = hop_distances(g, 0);
    const auto lap = apply_laplacian_approx(g, BaseKind::laplacian, 5, 1, 1.0, impulse(g.size(), 0));
    const auto nl = apply_laplacian_approx(g, BaseKind::normalized_laplacian, 2, 3, 1.5, impulse(g.size(), 0));
    const auto adj = apply_adjacency_approx(g, 2, 1.0, impulse(g.size(), 0));
    for (int j = 0; j < g.size(); ++j) {
      if (dist[j] > 6) CHECK(lap(j) == cd(0.0, 0.0));
      if (dist[j] > 5) {
        CHECK(nl(j) == cd(0.0, 0.0));
        CHECK(adj(j) == cd(0.0, 0.0));
      }
    }
  }
}

TEST_CASE("operator error is dominated by the eigenvalue-exact sup error") {
  std::mt19937_64 rng(77);
  for (const auto& g : small_corpus()) {
    for (auto kind : {BaseKind::laplacian, BaseKind::normalized_laplacian}) {
      const auto exact = build_exact(g, kind, 1.0);
      const double eps = spectral_gap(exact.basis()).epsilon;
      const auto m = ScaledMatrix(g, kind, exact.basis().scale);
      const auto xs = scaled(exact.basis());
      for (int P = 0; P <= 6; P += 2) {
        for (int Q = 0; Q <= 3; ++Q) {
          const double sup_all = empirical_sup_error_laplacian(P, Q, 1.0, eps, xs, true);
          const double sup_dc_free = empirical_sup_error_laplacian(P, Q, 1.0, eps, xs, false);
          for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_signal(g.size(), rng);
            const auto err = (exact.apply(x) - apply_laplacian_approx(m, P, Q, 1.0, eps, x)).norm();
            CHECK(err <= sup_all * x.norm() + 1e-10);
            const auto z = remove_dc(exact.basis(), x);
            const auto err_z = (exact.apply(z) - apply_laplacian_approx(m, P, Q, 1.0, eps, z)).norm();
            CHECK(err_z <= sup_dc_free * z.norm() + 1e-10);
          }
        }
      }
    }
    const auto exact = build_exact(g, BaseKind::adjacency, 1.0);
    const auto m = ScaledMatrix(g, BaseKind::adjacency, exact.basis().scale);
    const auto xs = scaled(exact.basis());
    for (int K = 0; K <= 10; ++K) {
      const double sup = empirical_sup_error_adjacency(K, 1.0, xs);
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_signal(g.size(), rng);
        CHECK((exact.apply(x) - apply_adjacency_approx(m, K, 1.0, x)).norm() <= sup * x.norm() + 1e-10);
      }
    }
  }
}

TEST_CASE("high-order laplacian series converge on DC-free signals") {
  std::mt19937_64 rng(8);
  for (const auto& g : {complete(4), complete(3), path2()}) {
    for (auto kind : {BaseKind::laplacian, BaseKind::normalized_laplacian}) {
      const auto exact = build_exact(g, kind, 1.0);
      REQUIRE(spectral_gap(exact.basis()).epsilon <= 0.2 + 1e-12);
      const auto z = remove_dc(exact.basis(), random_signal(g.size(), rng));
      const auto y = apply_laplacian_approx(g, kind, 30, 30, 1.0, z);
      CHECK((y - exact.apply(z)).norm() <= 1e-9 * z.norm());
    }
  }
}

TEST_CASE("argument validation") {
  const auto g = complete(4);
  const auto lm = make_scaled_matrix(g, BaseKind::laplacian);
  const auto am = make_scaled_matrix(g, BaseKind::adjacency);
  CHECK_THROWS_AS(apply_adjacency_approx(lm, 1, 1.0, impulse(4, 0)), ValidationError);
  CHECK_THROWS_AS(apply_laplacian_approx(am, 1, 1, 1.0, 0.2, impulse(4, 0)), ValidationError);
  CHECK_THROWS_AS(apply_adjacency_approx(am, -1, 1.0, impulse(4, 0)), ValidationError);
  CHECK_THROWS_AS(apply_adjacency_approx(am, 1, 1.0, impulse(3, 0)), ValidationError);
  CHECK_THROWS_AS(apply_laplacian_approx(g, BaseKind::adjacency, 1, 1, 1.0, impulse(4, 0)), ValidationError);
  CHECK_THROWS_AS(apply_laplacian_approx(load_graph("n 4\n0 1\n2 3"), BaseKind::laplacian, 1, 1, 1.0, impulse(4, 0)),
                  ValidationError);
}
