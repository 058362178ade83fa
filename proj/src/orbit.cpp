#include "corbit/orbit.hpp"

#include <cmath>

namespace corbit {

StabilizerBasis stabilizer(const LieAlgebra& g, const DualVector& zeta,
                           double tol) {
  const int n = g.dim();
  const Mat m = bracket_matrix(g, zeta).transpose();
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec sv = svd.singularValues();

  StabilizerBasis out;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  if (smax == 0.0) {
    // Zero tensor: everything stabilizes.
    out.basis = Mat::Identity(n, n);
    return out;
  }
  int rank = 0;
  while (rank < sv.size() && sv[rank] > tol * smax) ++rank;
  out.basis = svd.matrixV().rightCols(n - rank);
  return out;
}

double kirillov_eval(const LieAlgebra& g, const DualVector& zeta,
                     const AlgebraVector& xi1, const AlgebraVector& xi2) {
  if (xi1.coeffs.size() != g.dim() || xi2.coeffs.size() != g.dim())
    throw DimensionError("kirillov_eval: size mismatch");
  return xi1.coeffs.dot(bracket_matrix(g, zeta) * xi2.coeffs);
}

Vec fundamental_field(const LieAlgebra& g, const DualVector& zeta,
                      const AlgebraVector& xi) {
  if (xi.coeffs.size() != g.dim())
    throw DimensionError("fundamental_field: size mismatch");
  return -bracket_matrix(g, zeta) * xi.coeffs;
}

double kirillov_pullback(const LieAlgebra& g, const DualVector& zeta,
                         const Vec& tangent1, const Vec& tangent2, double tol) {
  const int n = g.dim();
  if (tangent1.size() != n || tangent2.size() != n)
    throw DimensionError("kirillov_pullback: size mismatch");
  const Mat b = bracket_matrix(g, zeta);
  Eigen::JacobiSVD<Mat> svd(-b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec xi1 = svd.solve(tangent1);
  const Vec xi2 = svd.solve(tangent2);
  const double scale1 = tangent1.norm() + 1.0;
  const double scale2 = tangent2.norm() + 1.0;
  if ((-b * xi1 - tangent1).norm() > tol * scale1 ||
      (-b * xi2 - tangent2).norm() > tol * scale2)
    throw InvalidStateError("kirillov_pullback: vector not tangent to orbit");
  return xi1.dot(b * xi2);
}

OrbitDescriptor hyperboloid_orbit(double lambda) {
  if (!(lambda > 0.0))
    throw InvalidStateError("hyperboloid_orbit: lambda must be positive");
  OrbitDescriptor d;
  d.invariants.push_back(
      {"quadratic",
       [](const Vec& z) { return z[0] * z[0] - z[1] * z[1] - z[2] * z[2]; },
       lambda * lambda, false});
  d.invariants.push_back(
      {"upper_sheet", [](const Vec& z) { return z[0]; }, 0.0, true});
  return d;
}

OrbitCheckResult orbit_check(const OrbitDescriptor& d, const DualVector& zeta,
                             double tol) {
  OrbitCheckResult result;
  for (const auto& inv : d.invariants) {
    OrbitCheckItem item;
    item.name = inv.name;
    item.value = inv.value(zeta.coeffs);
    item.target = inv.target;
    item.strict_positive = inv.strict_positive;
    if (inv.strict_positive) {
      item.residual = std::min(item.value, 0.0);
      item.pass = item.value > 0.0;
    } else {
      item.residual = std::abs(item.value - inv.target);
      item.pass = item.residual <= tol;
    }
    result.pass = result.pass && item.pass;
    result.items.push_back(std::move(item));
  }
  return result;
}

OrbitReport orbit_report(const LieAlgebra& g, std::string_view algebra_name,
                         const DualVector& zeta, double tol) {
  const int n = g.dim();
  const Mat b = bracket_matrix(g, zeta);
  Eigen::JacobiSVD<Mat> svd(b.transpose(), Eigen::ComputeFullV);
  const Vec sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  int rank = 0;
  if (smax > 0.0)
    while (rank < sv.size() && sv[rank] > tol * smax) ++rank;

  OrbitReport report;
  report.algebra_dim = n;
  report.stabilizer_dim = n - rank;
  report.orbit_dim = rank;
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  report.stabilizer_basis = svd.matrixV().rightCols(n - rank);
  report.complement_basis = svd.matrixV().leftCols(rank);
  report.kirillov_form =
      report.complement_basis.transpose() * b * report.complement_basis;
  for (const auto& c : builtin_casimirs(algebra_name))
    report.casimir_values.emplace_back(c.name, c.value(zeta.coeffs));
  return report;
}

}  // namespace corbit
