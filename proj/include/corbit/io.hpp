#pragma once

#include <string>
#include <vector>

#include "corbit/galilei.hpp"
#include "corbit/lie_poisson.hpp"

namespace corbit {

// Shortest representation that round-trips a double (17 significant digits).
std::string format_sig17(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// CSV with a header row; every value rendered by format_sig17, so rerunning
// the same computation produces byte-identical output.
std::string to_csv(const Table& table);

// Columns: t, then one per generator name.
Table trajectory_table(const Trajectory& traj,
                       const std::vector<std::string>& names);

// Columns: t, s1..s3, t1..t3, zeta0..zeta2, eta0..eta2, energy,
// constraint_residual_max.
Table reduced_trajectory_table(const ReducedTrajectory& traj);

// Throws ConfigError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace corbit
