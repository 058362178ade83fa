#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "corbit/errors.hpp"

namespace corbit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Coefficients xi^i of an algebra element xi = xi^i X_i.
struct AlgebraVector {
  Vec coeffs;
};

// Components zeta_i of a point in the dual space.
struct DualVector {
  Vec coeffs;
};

// Adjoint representation matrix D^i_j: row = output index, column = input
// index, so composition of group elements is matrix multiplication.
struct AdjointMatrix {
  Mat entries;
};

// One structure constant c_{ij}^k, stored canonically with i < j; the i > j
// values follow by antisymmetry.
struct StructureEntry {
  int i = 0, j = 0, k = 0;
  double value = 0.0;
};

struct IdentityViolation {
  std::string identity;  // "antisymmetry" or "jacobi"
  int i = 0, j = 0, k = 0, l = 0;
  double residual = 0.0;
};

struct ValidationReport {
  bool pass = false;
  double max_antisymmetry = 0.0;
  double max_jacobi = 0.0;
  std::vector<IdentityViolation> violations;
};

// Real structure constants of a finite-dimensional Lie algebra, convention
// [X_i, X_j] = i c_{ij}^k X_k. All numerics stay real: the basis is treated
// as anti-hermitian generators times i, so adjoint matrices are real and the
// one-parameter family Ad(e^{it xi}) is exp(t G) with G from ad_generator.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> names,
             std::vector<StructureEntry> entries);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<StructureEntry>& entries() const { return entries_; }

  // Full antisymmetric lookup, any index order.
  double structure(int i, int j, int k) const;

  // Antisymmetry and Jacobi residuals against tol; the report lists every
  // violating index tuple (capped at 16), worst first.
  ValidationReport validate(double tol = 1e-12) const;

 private:
  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<StructureEntry> entries_;  // canonical i < j
  std::vector<double> dense_;            // full tensor incl. sign partners
};

// Natural pairing <zeta, xi> = zeta_i xi^i.
double pairing(const DualVector& zeta, const AlgebraVector& xi);

// Generator of the one-parameter adjoint family: G^j_i = -xi^k c_{ki}^j, so
// that exp_adjoint(g, xi, t).entries == expm(t * G).
Mat ad_generator(const LieAlgebra& g, const AlgebraVector& xi);

// Adjoint matrix of the group element e^{it xi}.
AdjointMatrix exp_adjoint(const LieAlgebra& g, const AlgebraVector& xi,
                          double t);

// Coadjoint action on dual components, zeta'_i = (D^{-1})^j_i zeta_j; keeps
// pairing(zeta', D xi) == pairing(zeta, xi). Throws SingularMatrixError when
// D is not invertible.
DualVector coadjoint_apply(const AdjointMatrix& d, const DualVector& zeta);

// Coadjoint action of e^{it xi}; the inverse adjoint is exp(-t G), so no
// linear solve is involved.
DualVector coadjoint_exp(const LieAlgebra& g, const AlgebraVector& xi,
                         double t, const DualVector& zeta);

// Structure constants in the new basis X'_a = T^i_a X_i. Resulting entries
// with |value| <= prune_tol are dropped from canonical storage.
LieAlgebra basis_change(const LieAlgebra& g, const Mat& t,
                        std::vector<std::string> new_names,
                        double prune_tol = 1e-13);

// Built-in algebras: "sl2r_hkd", "so21_m", "so3", "galilei_n2_d3".
LieAlgebra builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// Text format: `dim = N`, then `names = [a, b, ...]`, then one
// `bracket = [i, j, k, value]` line per canonical entry (0-based, i < j
// required). '#' starts a comment; blank lines are ignored.
LieAlgebra load_algebra(std::istream& in);
LieAlgebra load_algebra_file(const std::string& path);

}  // namespace corbit
