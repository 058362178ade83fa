#include <doctest.h>

#include <Eigen/Dense>

#include "corbit/errors.hpp"
#include "corbit/expm.hpp"
#include "test_helpers.hpp"

using corbit::expm;
using Eigen::MatrixXd;

TEST_CASE("expm of the zero matrix is exactly the identity") {
  const MatrixXd z = MatrixXd::Zero(4, 4);
  CHECK((expm(z) - MatrixXd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("expm matches the high-precision series oracle") {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    // Spread norms across the direct-kernel and scaled regimes.
    const double scale = std::pow(10.0, -1.0 + 0.05 * (trial % 40));
    const MatrixXd a = scale * testutil::random_matrix(rng, n, n);
    const MatrixXd ref = testutil::taylor_expm(a);
    worst = std::max(worst, (expm(a) - ref).norm() / ref.norm());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("expm satisfies the one-parameter group law") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXd a = testutil::random_matrix(rng, 5, 5);
    const double s = 0.3 + 0.1 * trial;
    const double t = 1.7 - 0.05 * trial;
    const MatrixXd lhs = expm((s + t) * a);
    const MatrixXd rhs = expm(s * a) * expm(t * a);
    CHECK((lhs - rhs).norm() < 1e-13 * rhs.norm());
  }
}

TEST_CASE("expm of a nilpotent matrix equals its finite series") {
  MatrixXd n = MatrixXd::Zero(4, 4);
  n(0, 1) = 2.0;
  n(1, 2) = -3.0;
  n(2, 3) = 0.5;
  n(0, 2) = 1.0;
  const MatrixXd expected = MatrixXd::Identity(4, 4) + n + (n * n) / 2.0 +
                            (n * n * n) / 6.0;
  CHECK((expm(n) - expected).norm() < 1e-14);
}

TEST_CASE("expm rejects malformed input") {
  CHECK_THROWS_AS(expm(MatrixXd::Zero(2, 3)), corbit::DimensionError);
  MatrixXd bad = MatrixXd::Zero(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(expm(bad), std::invalid_argument);
}
