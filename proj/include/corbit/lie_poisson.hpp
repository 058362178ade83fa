#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "corbit/algebra.hpp"

namespace corbit {

// Poisson tensor B_ij(zeta) = c_{ij}^k zeta_k.
Mat bracket_matrix(const LieAlgebra& g, const DualVector& zeta);

// {f, g}(zeta) evaluated from the two gradients.
double lie_poisson_bracket(const LieAlgebra& g, const DualVector& zeta,
                           const Vec& grad_f, const Vec& grad_g);

// Right-hand side zeta_dot = B(zeta) grad_h.
Vec hamiltonian_field(const LieAlgebra& g, const DualVector& zeta,
                      const Vec& grad_h);

// Scalar function on the dual space with its analytic gradient.
struct Observable {
  std::string name;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
};

// The linear observable <zeta, alpha>.
Observable linear_observable(std::string name, const AlgebraVector& alpha);

// Casimir catalog for the built-in algebras; empty for anything else.
std::vector<Observable> builtin_casimirs(std::string_view algebra_name);

struct Trajectory {
  std::vector<double> times;
  std::vector<DualVector> states;
};

// Endpoint of the flow of the linear Hamiltonian <zeta, alpha>:
// zeta(t) = exp(t G_alpha)^T zeta(0).
DualVector flow_exact(const LieAlgebra& g, const AlgebraVector& alpha,
                      const DualVector& zeta0, double t);

// Sampled exact flow. Every sample is computed directly from zeta0, so the
// output is a pure function of the arguments with no accumulation between
// samples (identical reruns are bit-identical).
Trajectory flow_exact_trajectory(const LieAlgebra& g, const AlgebraVector& alpha,
                                 const DualVector& zeta0, double t_final,
                                 int steps);

// Classic fourth-order Runge-Kutta on the same linear field, kept as an
// independent route for cross-checks. Throws IntegrationError if the state
// stops being finite.
Trajectory flow_rk4(const LieAlgebra& g, const AlgebraVector& alpha,
                    const DualVector& zeta0, double t_final, int steps);

// Values at (zeta, t) of the explicitly time-dependent generator family
// exp(-t G_alpha)^T zeta. Each component is constant along the flow of alpha,
// and at fixed t their pairwise brackets close on the structure constants.
Vec time_dep_generators(const LieAlgebra& g, const AlgebraVector& alpha,
                        double t, const DualVector& zeta);

// Finite symmetry applied to a trajectory point at time t. Commutes with the
// flow of alpha and reduces to the coadjoint action of e^{i lambda} at t = 0.
// The AdjointMatrix overload takes the adjoint of the *inverse* group element,
// which is what composition multiplies.
DualVector symmetry_transform(const LieAlgebra& g, const AlgebraVector& alpha,
                              const AlgebraVector& lambda, double t,
                              const DualVector& zeta_t);
DualVector symmetry_transform(const LieAlgebra& g, const AlgebraVector& alpha,
                              const AdjointMatrix& inv_adjoint, double t,
                              const DualVector& zeta_t);

}  // namespace corbit
