#include "corbit/conformal.hpp"

#include <cmath>
#include <string>

namespace corbit {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0))
    throw InvalidStateError("chart: lambda must be positive");
}

void check_w2(double w2) {
  if (!(std::abs(w2) <= 700.0))
    throw ChartBoundaryError("chart: w2 out of range, exponent overflows");
}

}  // namespace

DualVector embed_chart(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  check_w2(w.w2);
  const double e = std::exp(w.w2);
  const double q = 0.5 * w.w1 * w.w1 * e;
  Vec z(3);
  z << lambda * (std::cosh(w.w2) + q), lambda * (std::sinh(w.w2) - q),
      -lambda * w.w1 * e;
  return DualVector{z};
}

Mat embed_chart_jacobian(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  check_w2(w.w2);
  const double e = std::exp(w.w2);
  const double q = 0.5 * w.w1 * w.w1 * e;
  Mat jac(3, 2);
  jac(0, 0) = lambda * w.w1 * e;
  jac(1, 0) = -lambda * w.w1 * e;
  jac(2, 0) = -lambda * e;
  jac(0, 1) = lambda * (std::sinh(w.w2) + q);
  jac(1, 1) = lambda * (std::cosh(w.w2) - q);
  jac(2, 1) = -lambda * w.w1 * e;
  return jac;
}

double chart_bracket(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  return -std::exp(-w.w2) / lambda;
}

double chart_hamiltonian(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  return lambda * (w.w1 * w.w1 * std::exp(w.w2) + std::exp(-w.w2));
}

std::array<double, 2> chart_eom(const CosetCoords& w) {
  return {std::exp(-2.0 * w.w2) - w.w1 * w.w1, 2.0 * w.w1};
}

ChartTrajectory chart_flow_rk4(const CosetCoords& w0, double t0,
                               double t_final, int steps) {
  if (steps < 1) throw ConfigError("chart_flow_rk4: steps must be positive");
  const double h = (t_final - t0) / steps;
  auto field = [](const CosetCoords& w) { return chart_eom(w); };
  auto step = [&](CosetCoords w, const std::array<double, 2>& k, double f) {
    w.w1 += f * k[0];
    w.w2 += f * k[1];
    return w;
  };

  ChartTrajectory traj;
  traj.times.reserve(steps + 1);
  traj.points.reserve(steps + 1);
  CosetCoords w = w0;
  traj.times.push_back(t0);
  traj.points.push_back(w);
  for (int n = 0; n < steps; ++n) {
    const auto k1 = field(w);
    const auto k2 = field(step(w, k1, 0.5 * h));
    const auto k3 = field(step(w, k2, 0.5 * h));
    const auto k4 = field(step(w, k3, h));
    w.w1 += (h / 6.0) * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    w.w2 += (h / 6.0) * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    if (!std::isfinite(w.w1) || !std::isfinite(w.w2))
      throw IntegrationError("chart_flow_rk4: state became non-finite at step " +
                             std::to_string(n + 1));
    traj.times.push_back(t0 + h * (n + 1));
    traj.points.push_back(w);
  }
  return traj;
}

ChartCurvePoint closed_form_curve(double c1, double c2, double tau) {
  if (!(std::abs(tau) <= M_PI - 0.1))
    throw ChartBoundaryError("closed_form_curve: tau outside served window");
  check_w2(c2);
  const double u = std::exp(c2);
  const double k = 1.0 / u + c1 * c1 * u;  // energy / lambda, conserved
  ChartCurvePoint p;
  p.w1 = 0.5 * k * std::sin(tau);
  p.w2 = -2.0 * std::log(std::cos(0.5 * tau)) - std::log(k);
  p.t = std::tan(0.5 * tau) / k + c1 * u * u / (1.0 + c1 * c1 * u * u);
  return p;
}

CanonicalCoords chart_to_canonical(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  check_w2(w.w2);
  const double r = std::sqrt(2.0 * lambda) * std::exp(0.5 * w.w2);
  return {r, w.w1 * r};
}

double canonical_hamiltonian(const CanonicalCoords& c, double lambda) {
  check_lambda(lambda);
  if (c.x == 0.0)
    throw InvalidStateError("canonical_hamiltonian: x must be nonzero");
  return 0.5 * c.p * c.p + 2.0 * lambda * lambda / (c.x * c.x);
}

ChartForms chart_forms(const CosetCoords& w, double lambda) {
  check_lambda(lambda);
  check_w2(w.w2);
  const double e = std::exp(w.w2);
  ChartForms f;
  f.omega_dw1 = Eigen::Vector3d(e, e, 0.0);
  f.omega_dw2 = Eigen::Vector3d(0.0, 0.0, 1.0);
  f.potential_dw1 = lambda * e;
  f.symplectic_area = -lambda * e;
  return f;
}

Sl2Element Sl2Element::identity() {
  return Sl2Element(Eigen::Matrix2d::Identity());
}

Sl2Element Sl2Element::time_translation(double t) {
  Eigen::Matrix2d m;
  m << 1.0, -t, 0.0, 1.0;
  return Sl2Element(m);
}

Sl2Element Sl2Element::special_conformal(double w) {
  Eigen::Matrix2d m;
  m << 1.0, 0.0, w, 1.0;
  return Sl2Element(m);
}

Sl2Element Sl2Element::dilation(double a) {
  Eigen::Matrix2d m;
  m << std::exp(0.5 * a), 0.0, 0.0, std::exp(-0.5 * a);
  return Sl2Element(m);
}

Sl2Element Sl2Element::from_matrix(const Eigen::Matrix2d& m) {
  if (!m.allFinite() || std::abs(m.determinant() - 1.0) > 1e-10)
    throw InvalidStateError("Sl2Element: matrix must have unit determinant");
  return Sl2Element(m);
}

Sl2Element Sl2Element::inverse() const {
  Eigen::Matrix2d inv;
  // Unit determinant: the adjugate is the inverse.
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return Sl2Element(inv);
}

Sl2Element operator*(const Sl2Element& a, const Sl2Element& b) {
  return Sl2Element(a.m_ * b.m_);
}

ChartAction sl2_action(const Sl2Element& g, double t, const CosetCoords& w) {
  const Eigen::Matrix2d m =
      g.matrix() * (Sl2Element::time_translation(t) *
                    Sl2Element::special_conformal(w.w1) *
                    Sl2Element::dilation(w.w2))
                       .matrix();
  const double d = m(1, 1);
  // Decomposition t' = -b/d, w1' = c d, w2' = -2 ln d needs d > 0.
  if (!(d > 0.0))
    throw ChartBoundaryError("sl2_action: image leaves the chart");
  ChartAction out;
  out.t = -m(0, 1) / d;
  out.w.w1 = m(1, 0) * d;
  out.w.w2 = -2.0 * std::log(d);
  return out;
}

}  // namespace corbit
