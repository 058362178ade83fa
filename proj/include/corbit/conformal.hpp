#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "corbit/algebra.hpp"

namespace corbit {

// Coset chart (w1, w2) on the upper-sheet hyperboloid orbit, dual components
// ordered to match the builtin "so21_m". The chart point (0, 0) sits at
// (lambda, 0, 0).
struct CosetCoords {
  double w1 = 0.0;
  double w2 = 0.0;
};

// Dual point of a chart point on the orbit labeled by lambda > 0.
// Throws InvalidStateError for lambda <= 0 and ChartBoundaryError when
// |w2| is large enough to overflow the exponentials.
DualVector embed_chart(const CosetCoords& w, double lambda);

// 3x2 Jacobian d(zeta)/d(w1, w2) of embed_chart, closed form.
Mat embed_chart_jacobian(const CosetCoords& w, double lambda);

// Chart Poisson bracket {w1, w2} = -(1/lambda) e^{-w2}.
double chart_bracket(const CosetCoords& w, double lambda);

// Pullback of the linear Hamiltonian zeta_0 - zeta_1:
// lambda (w1^2 e^{w2} + e^{-w2}).
double chart_hamiltonian(const CosetCoords& w, double lambda);

// (dw1/dt, dw2/dt) = (e^{-2 w2} - w1^2, 2 w1); lambda drops out.
std::array<double, 2> chart_eom(const CosetCoords& w);

struct ChartTrajectory {
  std::vector<double> times;
  std::vector<CosetCoords> points;
};

// Fourth-order Runge-Kutta on the chart equations of motion from time t0.
ChartTrajectory chart_flow_rk4(const CosetCoords& w0, double t0,
                               double t_final, int steps);

// Solution curve through the chart point (c1, c2), parametrized by tau with
// physical time t(tau). Only the window |tau| <= pi - 0.1 is served; outside
// it the parametrization degenerates and ChartBoundaryError is thrown.
struct ChartCurvePoint {
  double w1 = 0.0;
  double w2 = 0.0;
  double t = 0.0;
};
ChartCurvePoint closed_form_curve(double c1, double c2, double tau);

// Darboux coordinates x = sqrt(2 lambda) e^{w2/2}, p = sqrt(2 lambda) w1
// e^{w2/2}: {x, p} = 1 and the chart Hamiltonian becomes the inverse-square
// one-particle form below.
struct CanonicalCoords {
  double x = 0.0;
  double p = 0.0;
};
CanonicalCoords chart_to_canonical(const CosetCoords& w, double lambda);
double canonical_hamiltonian(const CanonicalCoords& c, double lambda);

// Pulled-back invariant forms in the chart. omega_dw1/omega_dw2 hold the
// algebra components of the Maurer-Cartan form of the section over dw1 and
// dw2; the scalar potential is its pairing with the orbit base point, and
// symplectic_area is the dw1 ^ dw2 coefficient of the potential's exterior
// derivative (equal to the orbit two-form pulled back through the chart).
struct ChartForms {
  Eigen::Vector3d omega_dw1;
  Eigen::Vector3d omega_dw2;
  double potential_dw1 = 0.0;  // the dw2 component vanishes identically
  double symplectic_area = 0.0;
};
ChartForms chart_forms(const CosetCoords& w, double lambda);

// Group element in the defining 2x2 representation, unit determinant.
class Sl2Element {
 public:
  static Sl2Element identity();
  // One-parameter factors of the chart decomposition g = e^{itH} e^{iw1 K}
  // e^{iw2 D}:
  static Sl2Element time_translation(double t);   // [[1, -t], [0, 1]]
  static Sl2Element special_conformal(double w);  // [[1, 0], [w, 1]]
  static Sl2Element dilation(double a);           // diag(e^{a/2}, e^{-a/2})
  // Validates unit determinant to 1e-10; throws InvalidStateError otherwise.
  static Sl2Element from_matrix(const Eigen::Matrix2d& m);

  const Eigen::Matrix2d& matrix() const { return m_; }
  Sl2Element inverse() const;
  friend Sl2Element operator*(const Sl2Element& a, const Sl2Element& b);

 private:
  explicit Sl2Element(const Eigen::Matrix2d& m) : m_(m) {}
  Eigen::Matrix2d m_;
};

// Left action of g on the decomposed element e^{itH} e^{iw1 K} e^{iw2 D},
// refactored into the same product. The chart covers only part of the group:
// when the image has non-positive lower-right entry the decomposition does
// not exist and ChartBoundaryError is thrown.
struct ChartAction {
  double t = 0.0;
  CosetCoords w;
};
ChartAction sl2_action(const Sl2Element& g, double t, const CosetCoords& w);

}  // namespace corbit
