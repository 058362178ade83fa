#include <doctest.h>

#include <cmath>

#include "corbit/expm.hpp"
#include "corbit/galilei.hpp"
#include "corbit/lie_poisson.hpp"
#include "test_helpers.hpp"

using namespace corbit;

namespace {

ReducedState random_reduced_state(std::mt19937_64& rng, double lambda) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ReducedState st;
  st.lambda = lambda;
  for (int i = 0; i < 3; ++i) st.s[i] = dist(rng);
  st.s.normalize();
  for (int i = 0; i < 3; ++i) st.t[i] = dist(rng);
  st.t -= st.s.dot(st.t) * st.s;
  const double z1 = dist(rng), z2 = dist(rng);
  st.zeta = Vec3(std::sqrt(lambda * lambda + z1 * z1 + z2 * z2), z1, z2);
  for (int i = 0; i < 3; ++i) st.eta[i] = dist(rng);
  const Vec3 zup(st.zeta[0], -st.zeta[1], -st.zeta[2]);
  st.eta -= st.zeta.dot(st.eta) / (lambda * lambda) * zup;
  return st;
}

// 15-dim element coefficients of the carrier block parameters.
AlgebraVector carrier_element(const Mat3& y) {
  Vec xi = Vec::Zero(15);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i) xi[carrier_index(a, i)] = y(a, i);
  return AlgebraVector{xi};
}

const Vec kAlphaFull = [] {
  Vec a = Vec::Zero(15);
  a[noncompact_index(0)] = 1.0;
  a[noncompact_index(1)] = -1.0;
  return a;
}();

}  // namespace

TEST_CASE("base state is constrained and embeds onto the reference point") {
  const ReducedState st = base_state(2.0);
  CHECK(constraint_residual(st) == 0.0);
  const Vec z = embed_reduced(st).coeffs;
  for (int i = 0; i < 15; ++i)
    CHECK(z[i] == (i == carrier_index(0, 2) ? 2.0 : 0.0));
  CHECK_THROWS_AS(base_state(0.0), InvalidStateError);
}

TEST_CASE("random constrained states embed and reduce back") {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 20; ++trial) {
    const double lambda = 0.6 + 0.2 * (trial % 5);
    const ReducedState st = random_reduced_state(rng, lambda);
    REQUIRE(constraint_residual(st) < 1e-13);
    const DualVector z = embed_reduced(st);
    const ReducedState back = reduce_full(z, lambda);
    CHECK((pack_state(back) - pack_state(st)).norm() < 1e-12);
  }
}

TEST_CASE("reduce_full rejects points off the image") {
  std::mt19937_64 rng(602);
  DualVector z{testutil::random_vector(rng, 15)};
  z.coeffs[carrier_index(0, 0)] = 1.0;  // keep the sheet row nonzero
  CHECK_THROWS_AS(reduce_full(z, 1.0), InvalidStateError);
  CHECK_THROWS_AS(reduce_full(DualVector{Vec::Zero(15)}, 1.0),
                  InvalidStateError);
  CHECK_THROWS_AS(reduce_full(DualVector{Vec::Zero(3)}, 1.0), DimensionError);
}

TEST_CASE("state validation and projection") {
  std::mt19937_64 rng(603);
  ReducedState st = random_reduced_state(rng, 1.0);
  CHECK_NOTHROW(validate_state(st));

  ReducedState bad = st;
  bad.zeta[0] = -bad.zeta[0];
  CHECK_THROWS_AS(validate_state(bad), InvalidStateError);

  ReducedState drifted = st;
  drifted.s *= 1.001;
  drifted.t += 0.002 * drifted.s;
  drifted.zeta[1] += 0.003;
  drifted.eta[2] += 0.004;
  CHECK(constraint_residual(drifted) > 1e-4);
  const ReducedState fixed = project_state(drifted);
  CHECK(constraint_residual(fixed) < 1e-13);

  // Projection is idempotent on valid states.
  const ReducedState same = project_state(st);
  CHECK((pack_state(same) - pack_state(st)).norm() < 1e-14);
}

TEST_CASE("reduced bracket is antisymmetric with the constraints central") {
  std::mt19937_64 rng(604);
  const ReducedState st = random_reduced_state(rng, 1.4);
  const Mat12 p = reduced_bracket_matrix(st);
  CHECK((p + p.transpose()).norm() < 1e-14);

  // Gradients of the four constraint functions.
  const Vec3 zup(st.zeta[0], -st.zeta[1], -st.zeta[2]);
  Vec12 g1 = Vec12::Zero(), g2 = Vec12::Zero(), g3 = Vec12::Zero(),
        g4 = Vec12::Zero();
  g1.segment<3>(0) = 2.0 * st.s;
  g2.segment<3>(0) = st.t;
  g2.segment<3>(3) = st.s;
  g3.segment<3>(6) = 2.0 * zup;
  g4.segment<3>(6) = st.eta;
  g4.segment<3>(9) = st.zeta;
  for (const auto& grad : {g1, g2, g3, g4})
    CHECK((p * grad).norm() < 1e-13);
}

TEST_CASE("reduced hamiltonian gradient matches finite differences") {
  std::mt19937_64 rng(605);
  const ReducedState st = random_reduced_state(rng, 0.9);
  const Vec12 grad = reduced_hamiltonian_gradient(st);
  const Vec12 u0 = pack_state(st);
  const double h = 1e-6;
  for (int i = 0; i < 12; ++i) {
    Vec12 up = u0, dn = u0;
    up[i] += h;
    dn[i] -= h;
    const double fd = (reduced_hamiltonian(unpack_state(up, 0.9)) -
                       reduced_hamiltonian(unpack_state(dn, 0.9))) /
                      (2.0 * h);
    CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("equations of motion freeze the geometric block") {
  std::mt19937_64 rng(606);
  const ReducedState st = random_reduced_state(rng, 1.2);
  const Vec12 v = reduced_eom(st);
  CHECK(v.segment<6>(0).norm() == 0.0);

  // Base point: zeta precesses straight down, eta stays zero.
  const Vec12 vb = reduced_eom(base_state(1.5));
  CHECK((vb.segment<3>(6) - Vec3(0.0, 0.0, -1.5)).norm() < 1e-14);
  CHECK(vb.segment<3>(9).norm() == 0.0);
}

TEST_CASE("with eta zero the zeta block follows the linear pullback field") {
  std::mt19937_64 rng(607);
  ReducedState st = random_reduced_state(rng, 1.1);
  st.eta.setZero();
  const Vec12 v = reduced_eom(st);
  const Vec3 expected(-st.zeta[2], -st.zeta[2], st.zeta[1] - st.zeta[0]);
  CHECK((v.segment<3>(6) - expected).norm() < 1e-14);
}

TEST_CASE("embedding is a poisson map for linear observables") {
  std::mt19937_64 rng(608);
  const LieAlgebra g = builtin("galilei_n2_d3");
  const double lambda = 1.3, h = 1e-6;
  for (int trial = 0; trial < 5; ++trial) {
    const ReducedState st = random_reduced_state(rng, lambda);
    const Vec12 u0 = pack_state(st);

    // Finite-difference Jacobian of the embedding (validation off: the
    // perturbed points sit slightly off the constraint set by design).
    Mat jac(15, 12);
    for (int i = 0; i < 12; ++i) {
      Vec12 up = u0, dn = u0;
      up[i] += h;
      dn[i] -= h;
      jac.col(i) = (embed_reduced(unpack_state(up, lambda), 1.0).coeffs -
                    embed_reduced(unpack_state(dn, lambda), 1.0).coeffs) /
                   (2.0 * h);
    }

    const Mat12 p = reduced_bracket_matrix(st);
    const Mat b = bracket_matrix(g, embed_reduced(st));
    const Vec a = testutil::random_vector(rng, 15);
    const Vec c = testutil::random_vector(rng, 15);
    const double downstairs = (jac.transpose() * a).dot(p * (jac.transpose() * c));
    const double upstairs = a.dot(b * c);
    CHECK(downstairs == doctest::Approx(upstairs).epsilon(1e-8));
  }
}

TEST_CASE("reduced flow conserves constraints and energy") {
  std::mt19937_64 rng(609);
  const ReducedState st = random_reduced_state(rng, 1.0);
  const ReducedTrajectory traj = reduced_flow_rk4(st, 1.0, 2000);
  const double e0 = reduced_hamiltonian(st);
  double worst_c = 0.0, worst_e = 0.0;
  for (const auto& state : traj.states) {
    worst_c = std::max(worst_c, constraint_residual(state));
    worst_e = std::max(worst_e, std::abs(reduced_hamiltonian(state) - e0));
  }
  CHECK(worst_c < 1e-10);
  CHECK(worst_e < 1e-10);

  // Projection keeps the residual at roundoff.
  const ReducedTrajectory proj = reduced_flow_rk4(st, 1.0, 2000, true);
  for (const auto& state : proj.states)
    CHECK(constraint_residual(state) < 1e-13);
}

TEST_CASE("reduced flow matches the full linear flow upstairs") {
  std::mt19937_64 rng(610);
  const LieAlgebra g = builtin("galilei_n2_d3");
  for (int trial = 0; trial < 3; ++trial) {
    const ReducedState st = random_reduced_state(rng, 1.0);
    const ReducedState end =
        reduced_flow_rk4(st, 1.0, 2000).states.back();
    const DualVector full_end = flow_exact(g, AlgebraVector{kAlphaFull},
                                           embed_reduced(st), 1.0);
    CHECK((embed_reduced(end).coeffs - full_end.coeffs)
              .lpNorm<Eigen::Infinity>() < 1e-7);
  }
}

TEST_CASE("abelian shifts preserve constraints and match the coadjoint") {
  std::mt19937_64 rng(611);
  const LieAlgebra g = builtin("galilei_n2_d3");
  for (int trial = 0; trial < 5; ++trial) {
    const ReducedState st = random_reduced_state(rng, 1.2);
    const Mat3 z = testutil::random_matrix(rng, 3, 3);
    const ReducedState moved = abelian_action(st, z);
    CHECK(constraint_residual(moved) < 1e-12);
    CHECK((moved.s - st.s).norm() == 0.0);
    CHECK((moved.zeta - st.zeta).norm() == 0.0);

    const DualVector direct =
        coadjoint_exp(g, carrier_element(z), 1.0, embed_reduced(st));
    CHECK((embed_reduced(moved).coeffs - direct.coeffs).norm() < 1e-12);
  }
}

TEST_CASE("factored coadjoint action equals the 15-dim product route") {
  std::mt19937_64 rng(612);
  const LieAlgebra g = builtin("galilei_n2_d3");
  for (int trial = 0; trial < 5; ++trial) {
    const Vec params = testutil::random_vector(rng, 6, -0.5, 0.5);
    const Vec3 omega = params.segment<3>(0);
    const Vec3 rot = params.segment<3>(3);
    const Mat3 y = testutil::random_matrix(rng, 3, 3);
    const DualVector zeta{testutil::random_vector(rng, 15)};

    Vec xi_omega = Vec::Zero(15), xi_rot = Vec::Zero(15);
    xi_omega.segment<3>(3) = omega;
    xi_rot.segment<3>(0) = rot;
    const Mat product = expm(ad_generator(g, AlgebraVector{xi_omega})) *
                        expm(ad_generator(g, AlgebraVector{xi_rot})) *
                        expm(ad_generator(g, carrier_element(y)));
    const DualVector via_product =
        coadjoint_apply(AdjointMatrix{product}, zeta);
    const DualVector via_blocks = coadjoint_factored(omega, rot, y, zeta);
    CHECK((via_product.coeffs - via_blocks.coeffs).norm() < 1e-11);
  }
}

TEST_CASE("reduced flow argument validation") {
  const ReducedState st = base_state(1.0);
  CHECK_THROWS_AS(reduced_flow_rk4(st, 1.0, 0), ConfigError);
  ReducedState bad = st;
  bad.s *= 2.0;
  CHECK_THROWS_AS(reduced_flow_rk4(bad, 1.0, 10), InvalidStateError);
}
