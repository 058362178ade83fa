#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corbit/algebra.hpp"
#include "corbit/lie_poisson.hpp"

namespace corbit {

// Basis of the stabilizer subalgebra at zeta: all xi with B(zeta) xi = 0.
// Columns of `basis` are coefficient vectors, orthonormal, from an SVD of
// B(zeta)^T with relative threshold sigma <= tol * sigma_max.
struct StabilizerBasis {
  Mat basis;  // dim x nullity
  std::vector<double> singular_values;
};
StabilizerBasis stabilizer(const LieAlgebra& g, const DualVector& zeta,
                           double tol = 1e-10);

// Orbit two-form on algebra elements: omega_zeta(xi1, xi2) = xi1^T B(zeta) xi2.
double kirillov_eval(const LieAlgebra& g, const DualVector& zeta,
                     const AlgebraVector& xi1, const AlgebraVector& xi2);

// Tangent vector to the orbit generated by xi at zeta: v = -B(zeta) xi.
Vec fundamental_field(const LieAlgebra& g, const DualVector& zeta,
                      const AlgebraVector& xi);

// Orbit two-form evaluated on two orbit-tangent vectors. Solves the
// fundamental-field equation for each tangent in the least-squares sense
// (gauge freedom in the stabilizer direction drops out) and throws
// InvalidStateError when a tangent is not actually tangent to the orbit.
double kirillov_pullback(const LieAlgebra& g, const DualVector& zeta,
                         const Vec& tangent1, const Vec& tangent2,
                         double tol = 1e-8);

// One defining invariant of an orbit; strict_positive marks a sheet condition
// checked as value > 0 instead of |value - target| <= tol.
struct OrbitInvariant {
  std::string name;
  std::function<double(const Vec&)> value;
  double target = 0.0;
  bool strict_positive = false;
};

struct OrbitDescriptor {
  std::vector<OrbitInvariant> invariants;
};

// Upper-sheet orbit of the 3-dim non-compact algebra "so21_m": quadratic
// invariant pinned to lambda^2 on the zeta_0 > 0 sheet.
OrbitDescriptor hyperboloid_orbit(double lambda);

struct OrbitCheckItem {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double residual = 0.0;
  bool strict_positive = false;
  bool pass = false;
};
struct OrbitCheckResult {
  bool pass = true;
  std::vector<OrbitCheckItem> items;
};
OrbitCheckResult orbit_check(const OrbitDescriptor& d, const DualVector& zeta,
                             double tol = 1e-10);

// Pointwise orbit summary: stabilizer and tangent complement bases, the orbit
// two-form on the complement, and Casimir values (the catalog is looked up by
// algebra name; unknown names get none).
struct OrbitReport {
  int algebra_dim = 0;
  int stabilizer_dim = 0;
  int orbit_dim = 0;
  std::vector<double> singular_values;
  Mat stabilizer_basis;   // dim x stabilizer_dim, orthonormal columns
  Mat complement_basis;   // dim x orbit_dim, orthonormal columns
  Mat kirillov_form;      // orbit_dim x orbit_dim, antisymmetric
  std::vector<std::pair<std::string, double>> casimir_values;
};
OrbitReport orbit_report(const LieAlgebra& g, std::string_view algebra_name,
                         const DualVector& zeta, double tol = 1e-10);

}  // namespace corbit
