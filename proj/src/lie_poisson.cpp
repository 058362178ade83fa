#include "corbit/lie_poisson.hpp"

#include <cmath>

#include "corbit/expm.hpp"

namespace corbit {

Mat bracket_matrix(const LieAlgebra& g, const DualVector& zeta) {
  const int n = g.dim();
  if (zeta.coeffs.size() != n)
    throw DimensionError("bracket_matrix: size mismatch");
  Mat b = Mat::Zero(n, n);
  for (const auto& e : g.entries()) {
    const double v = e.value * zeta.coeffs[e.k];
    b(e.i, e.j) += v;
    b(e.j, e.i) -= v;
  }
  return b;
}

double lie_poisson_bracket(const LieAlgebra& g, const DualVector& zeta,
                           const Vec& grad_f, const Vec& grad_g) {
  if (grad_f.size() != g.dim() || grad_g.size() != g.dim())
    throw DimensionError("lie_poisson_bracket: size mismatch");
  return grad_f.dot(bracket_matrix(g, zeta) * grad_g);
}

Vec hamiltonian_field(const LieAlgebra& g, const DualVector& zeta,
                      const Vec& grad_h) {
  if (grad_h.size() != g.dim())
    throw DimensionError("hamiltonian_field: size mismatch");
  return bracket_matrix(g, zeta) * grad_h;
}

Observable linear_observable(std::string name, const AlgebraVector& alpha) {
  const Vec a = alpha.coeffs;
  return Observable{
      std::move(name),
      [a](const Vec& z) { return a.dot(z); },
      [a](const Vec&) { return a; },
  };
}

std::vector<Observable> builtin_casimirs(std::string_view algebra_name) {
  std::vector<Observable> out;
  if (algebra_name == "sl2r_hkd") {
    out.push_back({"quadratic",
                   [](const Vec& z) { return z[0] * z[1] - z[2] * z[2]; },
                   [](const Vec& z) {
                     Vec grad(3);
                     grad << z[1], z[0], -2.0 * z[2];
                     return grad;
                   }});
  } else if (algebra_name == "so21_m") {
    out.push_back({"quadratic",
                   [](const Vec& z) {
                     return z[0] * z[0] - z[1] * z[1] - z[2] * z[2];
                   },
                   [](const Vec& z) {
                     Vec grad(3);
                     grad << 2.0 * z[0], -2.0 * z[1], -2.0 * z[2];
                     return grad;
                   }});
  } else if (algebra_name == "so3") {
    out.push_back({"quadratic", [](const Vec& z) { return z.squaredNorm(); },
                   [](const Vec& z) { return Vec(2.0 * z); }});
  } else if (algebra_name == "galilei_n2_d3") {
    // Signature (+,-,-) quadratic form on each carrier column, summed.
    out.push_back({"carrier_quadratic",
                   [](const Vec& z) {
                     double v = 0.0;
                     for (int i = 0; i < 3; ++i)
                       v += z[6 + i] * z[6 + i] - z[9 + i] * z[9 + i] -
                            z[12 + i] * z[12 + i];
                     return v;
                   },
                   [](const Vec& z) {
                     Vec grad = Vec::Zero(15);
                     for (int i = 0; i < 3; ++i) {
                       grad[6 + i] = 2.0 * z[6 + i];
                       grad[9 + i] = -2.0 * z[9 + i];
                       grad[12 + i] = -2.0 * z[12 + i];
                     }
                     return grad;
                   }});
  }
  return out;
}

namespace {

void check_flow_args(const LieAlgebra& g, const AlgebraVector& alpha,
                     const DualVector& zeta0, int steps) {
  if (alpha.coeffs.size() != g.dim() || zeta0.coeffs.size() != g.dim())
    throw DimensionError("flow: size mismatch");
  if (steps < 1) throw ConfigError("flow: steps must be positive");
}

}  // namespace

DualVector flow_exact(const LieAlgebra& g, const AlgebraVector& alpha,
                      const DualVector& zeta0, double t) {
  check_flow_args(g, alpha, zeta0, 1);
  return DualVector{expm(t * ad_generator(g, alpha)).transpose() *
                    zeta0.coeffs};
}

Trajectory flow_exact_trajectory(const LieAlgebra& g,
                                 const AlgebraVector& alpha,
                                 const DualVector& zeta0, double t_final,
                                 int steps) {
  check_flow_args(g, alpha, zeta0, steps);
  const Mat gen = ad_generator(g, alpha);
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = t_final * static_cast<double>(k) / steps;
    traj.times.push_back(t);
    traj.states.push_back(DualVector{expm(t * gen).transpose() * zeta0.coeffs});
  }
  return traj;
}

Trajectory flow_rk4(const LieAlgebra& g, const AlgebraVector& alpha,
                    const DualVector& zeta0, double t_final, int steps) {
  check_flow_args(g, alpha, zeta0, steps);
  const Mat l = ad_generator(g, alpha).transpose();  // zeta_dot = L zeta
  const double h = t_final / steps;

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  Vec z = zeta0.coeffs;
  traj.times.push_back(0.0);
  traj.states.push_back(DualVector{z});
  for (int k = 0; k < steps; ++k) {
    const Vec k1 = l * z;
    const Vec k2 = l * (z + 0.5 * h * k1);
    const Vec k3 = l * (z + 0.5 * h * k2);
    const Vec k4 = l * (z + h * k3);
    z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!z.allFinite())
      throw IntegrationError("flow_rk4: state became non-finite at step " +
                             std::to_string(k + 1));
    traj.times.push_back(h * (k + 1));
    traj.states.push_back(DualVector{z});
  }
  return traj;
}

Vec time_dep_generators(const LieAlgebra& g, const AlgebraVector& alpha,
                        double t, const DualVector& zeta) {
  if (alpha.coeffs.size() != g.dim() || zeta.coeffs.size() != g.dim())
    throw DimensionError("time_dep_generators: size mismatch");
  return expm(-t * ad_generator(g, alpha)).transpose() * zeta.coeffs;
}

DualVector symmetry_transform(const LieAlgebra& g, const AlgebraVector& alpha,
                              const AdjointMatrix& inv_adjoint, double t,
                              const DualVector& zeta_t) {
  const int n = g.dim();
  if (alpha.coeffs.size() != n || zeta_t.coeffs.size() != n ||
      inv_adjoint.entries.rows() != n || inv_adjoint.entries.cols() != n)
    throw DimensionError("symmetry_transform: size mismatch");
  // Conjugate the symmetry to time t along the flow: both A and A^{-1} come
  // from expm so the result is deterministic with no linear solve.
  const Mat gen = ad_generator(g, alpha);
  const Mat a = expm(t * gen);
  const Mat a_inv = expm(-t * gen);
  return DualVector{(a_inv * inv_adjoint.entries * a).transpose() *
                    zeta_t.coeffs};
}

DualVector symmetry_transform(const LieAlgebra& g, const AlgebraVector& alpha,
                              const AlgebraVector& lambda, double t,
                              const DualVector& zeta_t) {
  if (lambda.coeffs.size() != g.dim())
    throw DimensionError("symmetry_transform: size mismatch");
  const AdjointMatrix inv{expm(-ad_generator(g, lambda))};
  return symmetry_transform(g, alpha, inv, t, zeta_t);
}

}  // namespace corbit
