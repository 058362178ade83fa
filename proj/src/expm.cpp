#include "corbit/expm.hpp"

#include <cmath>

#include "corbit/errors.hpp"

namespace corbit {

namespace {

// Pade [13/13] numerator coefficients; the denominator uses the same set with
// alternating signs. Largest norm for which one kernel evaluation suffices:
constexpr double kTheta13 = 5.371920351148152;
constexpr double kB[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DimensionError("expm: matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("expm: non-finite entries");
  const Eigen::Index n = a.rows();
  if (n == 0) return Eigen::MatrixXd(0, 0);

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  if (norm == 0.0) return Eigen::MatrixXd::Identity(n, n);
  int s = 0;
  if (norm > kTheta13) {
    s = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const Eigen::MatrixXd as = a / std::ldexp(1.0, s);

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd a2 = as * as;
  const Eigen::MatrixXd a4 = a2 * a2;
  const Eigen::MatrixXd a6 = a4 * a2;

  const Eigen::MatrixXd u =
      as * (a6 * (kB[13] * a6 + kB[11] * a4 + kB[9] * a2) +
            kB[7] * a6 + kB[5] * a4 + kB[3] * a2 + kB[1] * id);
  const Eigen::MatrixXd v = a6 * (kB[12] * a6 + kB[10] * a4 + kB[8] * a2) +
                            kB[6] * a6 + kB[4] * a4 + kB[2] * a2 + kB[0] * id;

  Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

}  // namespace corbit
