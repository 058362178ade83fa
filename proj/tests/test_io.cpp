#include <doctest.h>

#include <cstdio>

#include "corbit/batch.hpp"
#include "corbit/io.hpp"

using namespace corbit;

TEST_CASE("doubles are rendered with 17 significant digits") {
  CHECK(format_sig17(0.0) == "0");
  CHECK(format_sig17(1.0) == "1");
  CHECK(format_sig17(0.1) == "0.10000000000000001");
  // Round trip through parsing is exact.
  const double x = 0.123456789012345678;
  CHECK(std::stod(format_sig17(x)) == x);
}

TEST_CASE("csv output carries the header and all rows") {
  Table t;
  t.columns = {"t", "a"};
  t.rows = {{0.0, 1.5}, {0.5, -2.0}};
  CHECK(to_csv(t) == "t,a\n0,1.5\n0.5,-2\n");

  t.rows.push_back({1.0});
  CHECK_THROWS_AS(to_csv(t), DimensionError);
}

TEST_CASE("trajectory tables use generator names as columns") {
  const LieAlgebra g = builtin("so21_m");
  AlgebraVector alpha{(Vec(3) << 1.0, -1.0, 0.0).finished()};
  DualVector zeta{(Vec(3) << 1.0, 0.0, 0.0).finished()};
  const Trajectory traj = flow_exact_trajectory(g, alpha, zeta, 1.0, 4);
  const Table table = trajectory_table(traj, g.names());
  CHECK(table.columns ==
        std::vector<std::string>{"t", "M0", "M1", "M2"});
  CHECK(table.rows.size() == 5);
  CHECK(table.rows.front().front() == 0.0);
  CHECK(table.rows.front()[1] == 1.0);
}

TEST_CASE("reduced trajectory tables carry energy and residual columns") {
  const ReducedTrajectory traj = reduced_flow_rk4(base_state(1.0), 0.5, 8);
  const Table table = reduced_trajectory_table(traj);
  REQUIRE(table.columns.size() == 15);
  CHECK(table.columns.front() == "t");
  CHECK(table.columns[13] == "energy");
  CHECK(table.columns.back() == "constraint_residual_max");
  for (const auto& row : table.rows) CHECK(row.back() < 1e-10);
}

TEST_CASE("exact-method csv output is bit-stable across reruns") {
  const LieAlgebra g = builtin("sl2r_hkd");
  AlgebraVector alpha{(Vec(3) << 0.3, -0.7, 0.4).finished()};
  DualVector zeta{(Vec(3) << 1.0, 2.0, -0.5).finished()};
  const auto run = [&] {
    return to_csv(trajectory_table(
        flow_exact_trajectory(g, alpha, zeta, 3.0, 64), g.names()));
  };
  CHECK(run() == run());
}

TEST_CASE("file writing fails loudly on bad paths") {
  CHECK_THROWS_AS(write_text_file("/nonexistent_dir/x.csv", "data"),
                  ConfigError);
  const std::string path = "io_test_tmp.csv";
  write_text_file(path, "a,b\n");
  std::remove(path.c_str());
}
