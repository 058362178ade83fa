#pragma once

#include <Eigen/Dense>
#include <vector>

#include "corbit/algebra.hpp"

namespace corbit {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat12 = Eigen::Matrix<double, 12, 12>;

// Generator layout of the 15-dim builtin "galilei_n2_d3": rotations J_1..J_3
// at 0..2, the non-compact block M_0..M_2 at 3..5, carriers X_{alpha i} at
// carrier_index(alpha, i) with alpha in 0..2 and i in 0..2.
constexpr int rot_index(int i) { return i; }
constexpr int noncompact_index(int alpha) { return 3 + alpha; }
constexpr int carrier_index(int alpha, int i) { return 6 + 3 * alpha + i; }

// Point of the reduced phase space. Constraints:
//   s.s = 1,  s.t = 0,
//   zeta_0^2 - zeta_1^2 - zeta_2^2 = lambda^2 with zeta_0 > 0,
//   zeta.eta = 0 (componentwise dot, lower zeta against upper eta).
struct ReducedState {
  Vec3 s = Vec3::Zero();
  Vec3 t = Vec3::Zero();
  Vec3 zeta = Vec3::Zero();
  Vec3 eta = Vec3::Zero();
  double lambda = 1.0;
};

// Packed coordinate order (s, t, zeta, eta).
Vec12 pack_state(const ReducedState& state);
ReducedState unpack_state(const Vec12& u, double lambda);

ReducedState base_state(double lambda);

// Largest constraint violation of the four conditions above.
double constraint_residual(const ReducedState& state);

// Throws InvalidStateError when the residual exceeds tol or lambda <= 0.
void validate_state(const ReducedState& state, double tol = 1e-8);

// Nearest-in-practice point on the constraint set: normalizes s, removes the
// s-component of t, rescales zeta onto its hyperboloid sheet and removes the
// zeta-component of eta. Throws InvalidStateError when the quadratic form of
// zeta is not positive.
ReducedState project_state(ReducedState state);

// Dual-space image: j = s x t, m_alpha = eps_{alpha beta}^gamma eta^beta
// zeta_gamma, x_{alpha i} = zeta_alpha s_i. Validates the state first.
DualVector embed_reduced(const ReducedState& state, double tol = 1e-8);

// Inverse of embed_reduced on its image. Throws InvalidStateError when the
// dual point does not lie on the image (checked by re-embedding).
ReducedState reduce_full(const DualVector& zeta_full, double lambda,
                         double tol = 1e-8);

// 12x12 Poisson tensor in packed order; zeta and eta brackets carry the
// (+,-,-) signature through the raised index.
Mat12 reduced_bracket_matrix(const ReducedState& state);

// Pullback of the linear Hamiltonian m_0 - m_1:
// -(eta^0 + eta^1) zeta_2 + eta^2 (zeta_1 - zeta_0).
double reduced_hamiltonian(const ReducedState& state);
Vec12 reduced_hamiltonian_gradient(const ReducedState& state);

// Bracket flow field of the reduced Hamiltonian; the s and t blocks vanish
// identically.
Vec12 reduced_eom(const ReducedState& state);

struct ReducedTrajectory {
  std::vector<double> times;
  std::vector<ReducedState> states;
};

// Fourth-order Runge-Kutta; with project set the state is reprojected onto
// the constraint set after every step.
ReducedTrajectory reduced_flow_rk4(const ReducedState& state0, double t_final,
                                   int steps, bool project = false);

// Shift by the abelian carrier parameters z(alpha, i); leaves s and zeta
// fixed and preserves all constraints exactly.
ReducedState abelian_action(const ReducedState& state, const Mat3& z);

// Coadjoint action of the factored group element
//   e^{i omega . M} e^{i rot . J} e^{i y . X}
// on a 15-dim dual point, computed blockwise from 3x3 exponentials.
DualVector coadjoint_factored(const Vec3& omega, const Vec3& rot, const Mat3& y,
                              const DualVector& zeta_full);

}  // namespace corbit
