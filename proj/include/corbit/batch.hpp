#pragma once

#include <vector>

#include "corbit/algebra.hpp"
#include "corbit/galilei.hpp"
#include "corbit/lie_poisson.hpp"

namespace corbit {

enum class FlowMethod { kExact, kRk4 };

// Single-state dispatcher over the two flow routes.
Trajectory flow(const LieAlgebra& g, const AlgebraVector& alpha,
                const DualVector& zeta0, double t_final, int steps,
                FlowMethod method);

// Batched kernels. The *_serial functions are the reference implementations;
// the unsuffixed ones parallelize the loop over initial states with OpenMP.
// Per-state arithmetic is identical (exact-method grid matrices are
// precomputed up front in both variants), so the two must agree bitwise.

std::vector<Trajectory> flow_trajectory_batch_serial(
    const LieAlgebra& g, const AlgebraVector& alpha,
    const std::vector<DualVector>& inits, double t_final, int steps,
    FlowMethod method);
std::vector<Trajectory> flow_trajectory_batch(
    const LieAlgebra& g, const AlgebraVector& alpha,
    const std::vector<DualVector>& inits, double t_final, int steps,
    FlowMethod method);

std::vector<ReducedTrajectory> reduced_flow_batch_serial(
    const std::vector<ReducedState>& inits, double t_final, int steps,
    bool project);
std::vector<ReducedTrajectory> reduced_flow_batch(
    const std::vector<ReducedState>& inits, double t_final, int steps,
    bool project);

// Largest |f(sample) - f(first sample)| over all samples of all trajectories.
double max_observable_drift_serial(const Observable& f,
                                   const std::vector<Trajectory>& trajs);
double max_observable_drift(const Observable& f,
                            const std::vector<Trajectory>& trajs);

// Largest constraint residual over all samples of all reduced trajectories.
double max_constraint_drift_serial(const std::vector<ReducedTrajectory>& trajs);
double max_constraint_drift(const std::vector<ReducedTrajectory>& trajs);

}  // namespace corbit
