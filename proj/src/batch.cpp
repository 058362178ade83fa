#include "corbit/batch.hpp"

#include <algorithm>

#include "corbit/expm.hpp"

namespace corbit {

Trajectory flow(const LieAlgebra& g, const AlgebraVector& alpha,
                const DualVector& zeta0, double t_final, int steps,
                FlowMethod method) {
  return method == FlowMethod::kExact
             ? flow_exact_trajectory(g, alpha, zeta0, t_final, steps)
             : flow_rk4(g, alpha, zeta0, t_final, steps);
}

namespace {

// Transposed grid propagators for the exact method, shared by all states so
// serial and parallel runs apply identical matrices.
std::vector<Mat> exact_propagators(const LieAlgebra& g,
                                   const AlgebraVector& alpha, double t_final,
                                   int steps) {
  const Mat gen = ad_generator(g, alpha);
  std::vector<Mat> props;
  props.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = t_final * static_cast<double>(k) / steps;
    props.push_back(expm(t * gen).transpose());
  }
  return props;
}

Trajectory apply_propagators(const std::vector<Mat>& props,
                             const std::vector<double>& times,
                             const DualVector& zeta0) {
  Trajectory traj;
  traj.times = times;
  traj.states.reserve(props.size());
  for (const Mat& p : props) traj.states.push_back(DualVector{p * zeta0.coeffs});
  return traj;
}

template <bool Parallel>
std::vector<Trajectory> flow_trajectory_batch_impl(
    const LieAlgebra& g, const AlgebraVector& alpha,
    const std::vector<DualVector>& inits, double t_final, int steps,
    FlowMethod method) {
  if (steps < 1) throw ConfigError("flow batch: steps must be positive");
  const int count = static_cast<int>(inits.size());
  for (const auto& z : inits)
    if (z.coeffs.size() != g.dim())
      throw DimensionError("flow batch: initial state size mismatch");
  std::vector<Trajectory> out(count);

  if (method == FlowMethod::kExact) {
    const std::vector<Mat> props = exact_propagators(g, alpha, t_final, steps);
    std::vector<double> times(steps + 1);
    for (int k = 0; k <= steps; ++k)
      times[k] = t_final * static_cast<double>(k) / steps;
#pragma omp parallel for schedule(static) if (Parallel)
    for (int k = 0; k < count; ++k)
      out[k] = apply_propagators(props, times, inits[k]);
  } else {
#pragma omp parallel for schedule(static) if (Parallel)
    for (int k = 0; k < count; ++k)
      out[k] = flow_rk4(g, alpha, inits[k], t_final, steps);
  }
  return out;
}

template <bool Parallel>
std::vector<ReducedTrajectory> reduced_flow_batch_impl(
    const std::vector<ReducedState>& inits, double t_final, int steps,
    bool project) {
  const int count = static_cast<int>(inits.size());
  std::vector<ReducedTrajectory> out(count);
#pragma omp parallel for schedule(static) if (Parallel)
  for (int k = 0; k < count; ++k)
    out[k] = reduced_flow_rk4(inits[k], t_final, steps, project);
  return out;
}

}  // namespace

std::vector<Trajectory> flow_trajectory_batch_serial(
    const LieAlgebra& g, const AlgebraVector& alpha,
    const std::vector<DualVector>& inits, double t_final, int steps,
    FlowMethod method) {
  return flow_trajectory_batch_impl<false>(g, alpha, inits, t_final, steps,
                                           method);
}

std::vector<Trajectory> flow_trajectory_batch(
    const LieAlgebra& g, const AlgebraVector& alpha,
    const std::vector<DualVector>& inits, double t_final, int steps,
    FlowMethod method) {
  return flow_trajectory_batch_impl<true>(g, alpha, inits, t_final, steps,
                                          method);
}

std::vector<ReducedTrajectory> reduced_flow_batch_serial(
    const std::vector<ReducedState>& inits, double t_final, int steps,
    bool project) {
  return reduced_flow_batch_impl<false>(inits, t_final, steps, project);
}

std::vector<ReducedTrajectory> reduced_flow_batch(
    const std::vector<ReducedState>& inits, double t_final, int steps,
    bool project) {
  return reduced_flow_batch_impl<true>(inits, t_final, steps, project);
}

namespace {

double trajectory_drift(const Observable& f, const Trajectory& traj) {
  if (traj.states.empty()) return 0.0;
  const double f0 = f.value(traj.states.front().coeffs);
  double drift = 0.0;
  for (const auto& z : traj.states)
    drift = std::max(drift, std::abs(f.value(z.coeffs) - f0));
  return drift;
}

double reduced_drift(const ReducedTrajectory& traj) {
  double drift = 0.0;
  for (const auto& state : traj.states)
    drift = std::max(drift, constraint_residual(state));
  return drift;
}

}  // namespace

double max_observable_drift_serial(const Observable& f,
                                   const std::vector<Trajectory>& trajs) {
  double drift = 0.0;
  for (const auto& traj : trajs)
    drift = std::max(drift, trajectory_drift(f, traj));
  return drift;
}

double max_observable_drift(const Observable& f,
                            const std::vector<Trajectory>& trajs) {
  const int count = static_cast<int>(trajs.size());
  double drift = 0.0;
  // max-reduction is order-independent, so this stays bitwise equal to the
  // serial version.
#pragma omp parallel for schedule(static) reduction(max : drift)
  for (int k = 0; k < count; ++k)
    drift = std::max(drift, trajectory_drift(f, trajs[k]));
  return drift;
}

double max_constraint_drift_serial(
    const std::vector<ReducedTrajectory>& trajs) {
  double drift = 0.0;
  for (const auto& traj : trajs) drift = std::max(drift, reduced_drift(traj));
  return drift;
}

double max_constraint_drift(const std::vector<ReducedTrajectory>& trajs) {
  const int count = static_cast<int>(trajs.size());
  double drift = 0.0;
#pragma omp parallel for schedule(static) reduction(max : drift)
  for (int k = 0; k < count; ++k)
    drift = std::max(drift, reduced_drift(trajs[k]));
  return drift;
}

}  // namespace corbit
