#include <doctest.h>

#include <cmath>

#include "corbit/orbit.hpp"
#include "test_helpers.hpp"

using namespace corbit;

TEST_CASE("stabilizer at the hyperboloid base point is one-dimensional") {
  const LieAlgebra g = builtin("so21_m");
  DualVector zeta{Vec(3)};
  zeta.coeffs << 1.7, 0.0, 0.0;
  const StabilizerBasis st = stabilizer(g, zeta);
  REQUIRE(st.basis.cols() == 1);
  // Spanned by the first generator.
  CHECK(std::abs(std::abs(st.basis(0, 0)) - 1.0) < 1e-12);
  CHECK(std::abs(st.basis(1, 0)) < 1e-12);
  CHECK(std::abs(st.basis(2, 0)) < 1e-12);
}

TEST_CASE("stabilizer of the origin is the whole algebra") {
  const LieAlgebra g = builtin("so3");
  const StabilizerBasis st = stabilizer(g, DualVector{Vec::Zero(3)});
  CHECK(st.basis.cols() == 3);
}

TEST_CASE("rank and nullity add up with even rank at random points") {
  std::mt19937_64 rng(401);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const LieAlgebra g = builtin(name);
    for (int trial = 0; trial < 50; ++trial) {
      const DualVector zeta{testutil::random_vector(rng, g.dim())};
      const StabilizerBasis st = stabilizer(g, zeta);
      const int nullity = static_cast<int>(st.basis.cols());
      const int rank = g.dim() - nullity;
      CHECK(rank % 2 == 0);
      // Basis columns really annihilate the tensor.
      const Mat b = bracket_matrix(g, zeta);
      CHECK((b * st.basis).norm() < 1e-10 * (1.0 + b.norm()));
    }
  }
}

TEST_CASE("kirillov form is antisymmetric and kills stabilizer directions") {
  std::mt19937_64 rng(402);
  const LieAlgebra g = builtin("so21_m");
  const DualVector zeta{testutil::random_vector(rng, 3)};
  const AlgebraVector xi1{testutil::random_vector(rng, 3)};
  const AlgebraVector xi2{testutil::random_vector(rng, 3)};
  CHECK(kirillov_eval(g, zeta, xi1, xi2) ==
        doctest::Approx(-kirillov_eval(g, zeta, xi2, xi1)).epsilon(1e-13));
  const StabilizerBasis st = stabilizer(g, zeta);
  for (Eigen::Index c = 0; c < st.basis.cols(); ++c) {
    const AlgebraVector fixed{st.basis.col(c)};
    CHECK(std::abs(kirillov_eval(g, zeta, fixed, xi1)) < 1e-11);
  }
}

TEST_CASE("fundamental fields are tangent to the casimir level sets") {
  std::mt19937_64 rng(403);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const LieAlgebra g = builtin(name);
    const DualVector zeta{testutil::random_vector(rng, g.dim())};
    const AlgebraVector xi{testutil::random_vector(rng, g.dim())};
    const Vec v = fundamental_field(g, zeta, xi);
    for (const auto& c : builtin_casimirs(name))
      CHECK(std::abs(c.gradient(zeta.coeffs).dot(v)) < 1e-12);
  }
}

TEST_CASE("kirillov pullback accepts orbit tangents and rejects others") {
  std::mt19937_64 rng(404);
  const LieAlgebra g = builtin("so21_m");
  DualVector zeta{Vec(3)};
  zeta.coeffs << 1.5, 0.3, -0.2;
  const AlgebraVector xi1{testutil::random_vector(rng, 3)};
  const AlgebraVector xi2{testutil::random_vector(rng, 3)};
  const Vec t1 = fundamental_field(g, zeta, xi1);
  const Vec t2 = fundamental_field(g, zeta, xi2);
  CHECK(kirillov_pullback(g, zeta, t1, t2) ==
        doctest::Approx(kirillov_eval(g, zeta, xi1, xi2)).epsilon(1e-10));
  // The casimir gradient is transverse to the orbit.
  const Vec off = builtin_casimirs("so21_m").front().gradient(zeta.coeffs);
  CHECK_THROWS_AS(kirillov_pullback(g, zeta, off, t2), InvalidStateError);
}

TEST_CASE("hyperboloid orbit membership check") {
  const OrbitDescriptor d = hyperboloid_orbit(1.5);
  DualVector on{Vec(3)};
  on.coeffs << 1.5 * std::cosh(0.7), 1.5 * std::sinh(0.7), 0.0;
  CHECK(orbit_check(d, on).pass);

  DualVector lower{Vec(3)};
  lower.coeffs << -1.5, 0.0, 0.0;
  const auto lower_result = orbit_check(d, lower);
  CHECK(!lower_result.pass);

  DualVector off{Vec(3)};
  off.coeffs << 2.0, 0.0, 0.0;
  CHECK(!orbit_check(d, off).pass);

  CHECK_THROWS_AS(hyperboloid_orbit(-1.0), InvalidStateError);
}

TEST_CASE("orbit report combines stabilizer, form and casimirs") {
  const LieAlgebra g = builtin("so21_m");
  DualVector zeta{Vec(3)};
  zeta.coeffs << 2.0, 0.0, 0.0;
  const OrbitReport report = orbit_report(g, "so21_m", zeta);
  CHECK(report.algebra_dim == 3);
  CHECK(report.stabilizer_dim == 1);
  CHECK(report.orbit_dim == 2);
  REQUIRE(report.casimir_values.size() == 1);
  CHECK(report.casimir_values.front().second == doctest::Approx(4.0));
  // The form on the complement is antisymmetric and nondegenerate.
  const Mat& k = report.kirillov_form;
  REQUIRE(k.rows() == 2);
  CHECK((k + k.transpose()).norm() < 1e-12);
  CHECK(std::abs(k(0, 1)) > 1e-8);
  // Bases are orthonormal and mutually orthogonal.
  Mat joined(3, 3);
  joined << report.complement_basis, report.stabilizer_basis;
  CHECK((joined.transpose() * joined - Mat::Identity(3, 3)).norm() < 1e-12);
}
