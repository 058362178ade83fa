#include "corbit/io.hpp"

#include <cstdio>
#include <fstream>

#include "corbit/errors.hpp"

namespace corbit {

std::string format_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw DimensionError("to_csv: row width does not match header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_sig17(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table trajectory_table(const Trajectory& traj,
                       const std::vector<std::string>& names) {
  Table table;
  table.columns.push_back("t");
  table.columns.insert(table.columns.end(), names.begin(), names.end());
  table.rows.reserve(traj.times.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Vec& z = traj.states[k].coeffs;
    if (z.size() != static_cast<Eigen::Index>(names.size()))
      throw DimensionError("trajectory_table: name count mismatch");
    std::vector<double> row;
    row.reserve(names.size() + 1);
    row.push_back(traj.times[k]);
    row.insert(row.end(), z.data(), z.data() + z.size());
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table reduced_trajectory_table(const ReducedTrajectory& traj) {
  Table table;
  table.columns = {"t",     "s1",    "s2",    "s3",   "t1",   "t2",
                   "t3",    "zeta0", "zeta1", "zeta2", "eta0", "eta1",
                   "eta2",  "energy", "constraint_residual_max"};
  table.rows.reserve(traj.times.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const ReducedState& st = traj.states[k];
    std::vector<double> row = {traj.times[k]};
    const Vec12 u = pack_state(st);
    row.insert(row.end(), u.data(), u.data() + 12);
    row.push_back(reduced_hamiltonian(st));
    row.push_back(constraint_residual(st));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace corbit
