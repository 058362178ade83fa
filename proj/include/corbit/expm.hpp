#pragma once

#include <Eigen/Dense>

namespace corbit {

// Dense matrix exponential, scaling-and-squaring with a [13/13] Pade kernel.
// Tuned for the small generator matrices used throughout (n <= ~20); accuracy
// is at the unit-roundoff level for moderate norms.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

}  // namespace corbit
