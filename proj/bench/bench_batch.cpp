// Compares the parallel batch kernels against the serial reference on a
// fixed workload and prints wall-clock timings plus the speedup.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corbit/batch.hpp"
#include "corbit/galilei.hpp"

namespace {

using namespace corbit;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename F>
double time_best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              name, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled, both columns run the serial path\n");
#endif

  const LieAlgebra algebra = builtin("galilei_n2_d3");
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  Vec alpha_vec(15);
  for (int i = 0; i < 15; ++i) alpha_vec[i] = dist(rng);
  const AlgebraVector alpha{alpha_vec};

  const int batch = 64;
  std::vector<DualVector> inits;
  for (int k = 0; k < batch; ++k) {
    Vec z(15);
    for (int i = 0; i < 15; ++i) z[i] = dist(rng);
    inits.push_back(DualVector{z});
  }

  const double t_final = 1.0;
  const int steps = 400;
  const int repeats = 5;

  const double rk4_serial = time_best_of(repeats, [&] {
    flow_trajectory_batch_serial(algebra, alpha, inits, t_final, steps,
                                 FlowMethod::kRk4);
  });
  const double rk4_parallel = time_best_of(repeats, [&] {
    flow_trajectory_batch(algebra, alpha, inits, t_final, steps,
                          FlowMethod::kRk4);
  });
  report("flow batch (rk4)", rk4_serial, rk4_parallel);

  const double exact_serial = time_best_of(repeats, [&] {
    flow_trajectory_batch_serial(algebra, alpha, inits, t_final, steps,
                                 FlowMethod::kExact);
  });
  const double exact_parallel = time_best_of(repeats, [&] {
    flow_trajectory_batch(algebra, alpha, inits, t_final, steps,
                          FlowMethod::kExact);
  });
  report("flow batch (exact)", exact_serial, exact_parallel);

  std::vector<ReducedState> reduced_inits;
  for (int k = 0; k < batch; ++k) {
    Mat3 z;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) z(r, c) = dist(rng);
    reduced_inits.push_back(abelian_action(base_state(1.0), z));
  }
  const double red_serial = time_best_of(repeats, [&] {
    reduced_flow_batch_serial(reduced_inits, t_final, steps, false);
  });
  const double red_parallel = time_best_of(repeats, [&] {
    reduced_flow_batch(reduced_inits, t_final, steps, false);
  });
  report("reduced flow batch", red_serial, red_parallel);

  return 0;
}
