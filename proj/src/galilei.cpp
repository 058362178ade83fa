#include "corbit/galilei.hpp"

#include <cmath>
#include <string>

#include "corbit/expm.hpp"

namespace corbit {

namespace {

double eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i) * (k - i) * (k - j) > 0) ? 1.0 : -1.0;
}

// One index raised with the (+,-,-) metric.
double eps_ud(int a, int b, int g) {
  return eps3(a, b, g) * ((g == 0) ? 1.0 : -1.0);
}

// Raised zeta component vector: (zeta_0, -zeta_1, -zeta_2).
Vec3 raise(const Vec3& zeta) { return Vec3(zeta[0], -zeta[1], -zeta[2]); }

double quadratic_form(const Vec3& zeta) { return zeta.dot(raise(zeta)); }

// Adjoint generators of the two 3-dim blocks, for the factored coadjoint
// action: row k, column j is -v^i c_{ij}^k of the block algebra.
Mat3 rot_block_generator(const Vec3& v) {
  Mat3 g = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g(k, j) -= v[i] * eps3(i, j, k);
  return g;
}

Mat3 noncompact_block_generator(const Vec3& v) {
  Mat3 g = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g(k, j) += v[i] * eps_ud(i, j, k);
  return g;
}

}  // namespace

Vec12 pack_state(const ReducedState& state) {
  Vec12 u;
  u << state.s, state.t, state.zeta, state.eta;
  return u;
}

ReducedState unpack_state(const Vec12& u, double lambda) {
  ReducedState state;
  state.s = u.segment<3>(0);
  state.t = u.segment<3>(3);
  state.zeta = u.segment<3>(6);
  state.eta = u.segment<3>(9);
  state.lambda = lambda;
  return state;
}

ReducedState base_state(double lambda) {
  if (!(lambda > 0.0))
    throw InvalidStateError("base_state: lambda must be positive");
  ReducedState state;
  state.s = Vec3(0.0, 0.0, 1.0);
  state.zeta = Vec3(lambda, 0.0, 0.0);
  state.lambda = lambda;
  return state;
}

double constraint_residual(const ReducedState& state) {
  const double r1 = std::abs(state.s.squaredNorm() - 1.0);
  const double r2 = std::abs(state.s.dot(state.t));
  const double r3 =
      std::abs(quadratic_form(state.zeta) - state.lambda * state.lambda);
  const double r4 = std::abs(state.zeta.dot(state.eta));
  return std::max(std::max(r1, r2), std::max(r3, r4));
}

void validate_state(const ReducedState& state, double tol) {
  if (!(state.lambda > 0.0))
    throw InvalidStateError("reduced state: lambda must be positive");
  if (!(state.zeta[0] > 0.0))
    throw InvalidStateError("reduced state: zeta_0 must be positive");
  const double r = constraint_residual(state);
  if (!(r <= tol))
    throw InvalidStateError("reduced state: constraint residual " +
                            std::to_string(r) + " exceeds tolerance");
}

ReducedState project_state(ReducedState state) {
  const double sn = state.s.norm();
  if (!(sn > 0.0))
    throw InvalidStateError("project_state: s must be nonzero");
  state.s /= sn;
  state.t -= state.s.dot(state.t) * state.s;
  const double q = quadratic_form(state.zeta);
  if (!(q > 0.0) || !(state.zeta[0] > 0.0))
    throw InvalidStateError("project_state: zeta off the sheet");
  state.zeta *= state.lambda / std::sqrt(q);
  state.eta -= state.zeta.dot(state.eta) * raise(state.zeta) /
               (state.lambda * state.lambda);
  return state;
}

DualVector embed_reduced(const ReducedState& state, double tol) {
  validate_state(state, tol);
  Vec z = Vec::Zero(15);
  const Vec3 j = state.s.cross(state.t);
  for (int i = 0; i < 3; ++i) z[rot_index(i)] = j[i];
  for (int a = 0; a < 3; ++a) {
    double m = 0.0;
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g)
        m += eps_ud(a, b, g) * state.eta[b] * state.zeta[g];
    z[noncompact_index(a)] = m;
    for (int i = 0; i < 3; ++i)
      z[carrier_index(a, i)] = state.zeta[a] * state.s[i];
  }
  return DualVector{z};
}

ReducedState reduce_full(const DualVector& zeta_full, double lambda,
                         double tol) {
  if (zeta_full.coeffs.size() != 15)
    throw DimensionError("reduce_full: expected 15 components");
  if (!(lambda > 0.0))
    throw InvalidStateError("reduce_full: lambda must be positive");
  const Vec& z = zeta_full.coeffs;

  Vec3 j, m;
  Mat3 x;  // rows alpha, columns i
  for (int i = 0; i < 3; ++i) j[i] = z[rot_index(i)];
  for (int a = 0; a < 3; ++a) {
    m[a] = z[noncompact_index(a)];
    for (int i = 0; i < 3; ++i) x(a, i) = z[carrier_index(a, i)];
  }

  ReducedState state;
  state.lambda = lambda;
  const double zeta0 = x.row(0).norm();
  if (!(zeta0 > 0.0))
    throw InvalidStateError("reduce_full: first carrier row vanishes");
  state.s = x.row(0).transpose() / zeta0;
  state.zeta = x * state.s;
  state.t = j.cross(state.s);
  // eta^d = eps^{d r g} zeta_r m_g / lambda^2; all indices up, so the symbol
  // is the plain one.
  for (int d = 0; d < 3; ++d) {
    double v = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int g = 0; g < 3; ++g) v += eps3(d, r, g) * state.zeta[r] * m[g];
    state.eta[d] = v / (lambda * lambda);
  }

  const Vec back = embed_reduced(state, tol).coeffs;
  if ((back - z).norm() > tol * (1.0 + z.norm()))
    throw InvalidStateError("reduce_full: dual point is not on the image");
  return state;
}

Mat12 reduced_bracket_matrix(const ReducedState& state) {
  const Vec3& s = state.s;
  const Vec3& t = state.t;
  const Vec3& zeta = state.zeta;
  const Vec3& eta = state.eta;
  const double l2 = state.lambda * state.lambda;
  const Vec3 zup = raise(zeta);

  Mat12 p = Mat12::Zero();
  const Mat3 st = Mat3::Identity() - s * s.transpose();
  const Mat3 tt = t * s.transpose() - s * t.transpose();
  const Mat3 ze = Mat3::Identity() - zeta * zup.transpose() / l2;
  const Mat3 ee = (eta * zup.transpose() - zup * eta.transpose()) / l2;

  p.block<3, 3>(0, 3) = st;
  p.block<3, 3>(3, 0) = -st.transpose();
  p.block<3, 3>(3, 3) = tt;
  p.block<3, 3>(6, 9) = ze;
  p.block<3, 3>(9, 6) = -ze.transpose();
  p.block<3, 3>(9, 9) = ee;
  return p;
}

double reduced_hamiltonian(const ReducedState& state) {
  const Vec3& z = state.zeta;
  const Vec3& e = state.eta;
  return -(e[0] + e[1]) * z[2] + e[2] * (z[1] - z[0]);
}

Vec12 reduced_hamiltonian_gradient(const ReducedState& state) {
  const Vec3& z = state.zeta;
  const Vec3& e = state.eta;
  Vec12 grad = Vec12::Zero();
  grad.segment<3>(6) = Vec3(-e[2], e[2], -(e[0] + e[1]));
  grad.segment<3>(9) = Vec3(-z[2], -z[2], z[1] - z[0]);
  return grad;
}

Vec12 reduced_eom(const ReducedState& state) {
  return reduced_bracket_matrix(state) * reduced_hamiltonian_gradient(state);
}

ReducedTrajectory reduced_flow_rk4(const ReducedState& state0, double t_final,
                                   int steps, bool project) {
  if (steps < 1) throw ConfigError("reduced_flow_rk4: steps must be positive");
  validate_state(state0);
  const double h = t_final / steps;
  const double lambda = state0.lambda;
  auto field = [lambda](const Vec12& u) {
    return reduced_eom(unpack_state(u, lambda));
  };

  ReducedTrajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  Vec12 u = pack_state(state0);
  traj.times.push_back(0.0);
  traj.states.push_back(state0);
  for (int n = 0; n < steps; ++n) {
    const Vec12 k1 = field(u);
    const Vec12 k2 = field(u + 0.5 * h * k1);
    const Vec12 k3 = field(u + 0.5 * h * k2);
    const Vec12 k4 = field(u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!u.allFinite())
      throw IntegrationError(
          "reduced_flow_rk4: state became non-finite at step " +
          std::to_string(n + 1));
    ReducedState state = unpack_state(u, lambda);
    if (project) {
      state = project_state(state);
      u = pack_state(state);
    }
    traj.times.push_back(h * (n + 1));
    traj.states.push_back(state);
  }
  return traj;
}

ReducedState abelian_action(const ReducedState& state, const Mat3& z) {
  ReducedState out = state;
  // Row-mixes of z: zeta against the alpha index for the t shift, s against
  // the i index for the eta shift; both shifts land tangentially.
  const Vec3 v = z.transpose() * state.zeta;
  const Vec3 w = z * state.s;
  out.t += v - state.s.dot(v) * state.s;
  out.eta += w - state.zeta.dot(w) * raise(state.zeta) /
                     (state.lambda * state.lambda);
  return out;
}

DualVector coadjoint_factored(const Vec3& omega, const Vec3& rot, const Mat3& y,
                              const DualVector& zeta_full) {
  if (zeta_full.coeffs.size() != 15)
    throw DimensionError("coadjoint_factored: expected 15 components");
  const Vec& zf = zeta_full.coeffs;

  Vec3 j, m;
  Mat3 x;
  for (int i = 0; i < 3; ++i) j[i] = zf[rot_index(i)];
  for (int a = 0; a < 3; ++a) {
    m[a] = zf[noncompact_index(a)];
    for (int i = 0; i < 3; ++i) x(a, i) = zf[carrier_index(a, i)];
  }

  // Innermost factor e^{i y . X}: carrier translations shift j and m.
  Vec3 dj = Vec3::Zero(), dm = Vec3::Zero();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l)
        for (int a = 0; a < 3; ++a) dj[k] -= eps3(k, i, l) * y(a, i) * x(a, l);
  for (int b = 0; b < 3; ++b)
    for (int g = 0; g < 3; ++g)
      for (int r = 0; r < 3; ++r)
        for (int i = 0; i < 3; ++i) dm[b] += eps_ud(b, g, r) * y(g, i) * x(r, i);
  j += dj;
  m += dm;

  // Outer factors act blockwise through the inverse-transpose of their 3x3
  // adjoint blocks; the carrier block transforms on both indices.
  const Mat3 rinv = expm(-rot_block_generator(rot));
  const Mat3 linv = expm(-noncompact_block_generator(omega));
  j = rinv.transpose() * j;
  m = linv.transpose() * m;
  x = linv.transpose() * x * rinv;

  Vec out = Vec::Zero(15);
  for (int i = 0; i < 3; ++i) out[rot_index(i)] = j[i];
  for (int a = 0; a < 3; ++a) {
    out[noncompact_index(a)] = m[a];
    for (int i = 0; i < 3; ++i) out[carrier_index(a, i)] = x(a, i);
  }
  return DualVector{out};
}

}  // namespace corbit
