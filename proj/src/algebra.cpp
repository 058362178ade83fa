#include "corbit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "corbit/expm.hpp"

namespace corbit {

namespace {

std::size_t dense_index(int n, int i, int j, int k) {
  return (static_cast<std::size_t>(i) * n + j) * n + k;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> names,
                       std::vector<StructureEntry> entries)
    : dim_(dim), names_(std::move(names)), entries_(std::move(entries)) {
  if (dim_ <= 0) throw DimensionError("algebra dimension must be positive");
  if (static_cast<int>(names_.size()) != dim_)
    throw DimensionError("name count does not match dimension");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries_) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim_ || e.j >= dim_ ||
        e.k >= dim_)
      throw DimensionError("structure constant index out of range");
    if (e.i >= e.j)
      throw DimensionError("structure constants must be stored with i < j");
    if (!std::isfinite(e.value))
      throw DimensionError("structure constant value must be finite");
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw DimensionError("duplicate structure constant entry");
  }
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  dense_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
  for (const auto& e : entries_) {
    dense_[dense_index(dim_, e.i, e.j, e.k)] = e.value;
    dense_[dense_index(dim_, e.j, e.i, e.k)] = -e.value;
  }
}

double LieAlgebra::structure(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw DimensionError("structure index out of range");
  return dense_[dense_index(dim_, i, j, k)];
}

ValidationReport LieAlgebra::validate(double tol) const {
  ValidationReport report;
  const int n = dim_;
  auto c = [&](int i, int j, int k) { return dense_[dense_index(n, i, j, k)]; };

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double r = std::abs(c(i, j, k) + c(j, i, k));
        report.max_antisymmetry = std::max(report.max_antisymmetry, r);
        if (r > tol && report.violations.size() < 16)
          report.violations.push_back({"antisymmetry", i, j, k, -1, r});
      }

  // Jacobi: cyclic sum of c_{ij}^m c_{mk}^l over the free indices i<j<k, l.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = 0.0;
          for (int m = 0; m < n; ++m) {
            r += c(i, j, m) * c(m, k, l);
            r += c(j, k, m) * c(m, i, l);
            r += c(k, i, m) * c(m, j, l);
          }
          report.max_jacobi = std::max(report.max_jacobi, std::abs(r));
          if (std::abs(r) > tol && report.violations.size() < 16)
            report.violations.push_back({"jacobi", i, j, k, l, std::abs(r)});
        }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const auto& a, const auto& b) {
                     return a.residual > b.residual;
                   });
  report.pass = report.max_antisymmetry <= tol && report.max_jacobi <= tol;
  return report;
}

double pairing(const DualVector& zeta, const AlgebraVector& xi) {
  if (zeta.coeffs.size() != xi.coeffs.size())
    throw DimensionError("pairing: size mismatch");
  return zeta.coeffs.dot(xi.coeffs);
}

Mat ad_generator(const LieAlgebra& g, const AlgebraVector& xi) {
  const int n = g.dim();
  if (xi.coeffs.size() != n) throw DimensionError("ad_generator: size mismatch");
  // Row j, column i: G^j_i = -xi^k c_{ki}^j; each canonical entry contributes
  // with both index orders.
  Mat gen = Mat::Zero(n, n);
  for (const auto& e : g.entries()) {
    gen(e.k, e.j) -= xi.coeffs[e.i] * e.value;
    gen(e.k, e.i) += xi.coeffs[e.j] * e.value;
  }
  return gen;
}

AdjointMatrix exp_adjoint(const LieAlgebra& g, const AlgebraVector& xi,
                          double t) {
  return AdjointMatrix{expm(t * ad_generator(g, xi))};
}

DualVector coadjoint_apply(const AdjointMatrix& d, const DualVector& zeta) {
  if (d.entries.rows() != d.entries.cols())
    throw DimensionError("coadjoint_apply: matrix must be square");
  if (d.entries.rows() != zeta.coeffs.size())
    throw DimensionError("coadjoint_apply: size mismatch");
  // zeta' = D^{-T} zeta, via LU of D^T so failure is detected.
  Eigen::FullPivLU<Mat> lu(d.entries.transpose());
  if (!lu.isInvertible())
    throw SingularMatrixError("coadjoint_apply: adjoint matrix is singular");
  return DualVector{lu.solve(zeta.coeffs)};
}

DualVector coadjoint_exp(const LieAlgebra& g, const AlgebraVector& xi, double t,
                         const DualVector& zeta) {
  if (zeta.coeffs.size() != g.dim())
    throw DimensionError("coadjoint_exp: size mismatch");
  const Mat inv = expm(-t * ad_generator(g, xi));
  return DualVector{inv.transpose() * zeta.coeffs};
}

LieAlgebra basis_change(const LieAlgebra& g, const Mat& t,
                        std::vector<std::string> new_names, double prune_tol) {
  const int n = g.dim();
  if (t.rows() != n || t.cols() != n)
    throw DimensionError("basis_change: matrix size mismatch");
  Eigen::FullPivLU<Mat> lu(t);
  if (!lu.isInvertible())
    throw SingularMatrixError("basis_change: transition matrix is singular");
  const Mat tinv = lu.inverse();

  // c'_{ab}^c = T^i_a T^j_b c_{ij}^k (T^{-1})^c_k, accumulated sparsely from
  // the canonical entries and their antisymmetric partners.
  std::vector<double> dense(static_cast<std::size_t>(n) * n * n, 0.0);
  auto accumulate = [&](int i, int j, int k, double v) {
    for (int a = 0; a < n; ++a) {
      const double ta = t(i, a);
      if (ta == 0.0) continue;
      for (int b = 0; b < n; ++b) {
        const double w = ta * t(j, b) * v;
        if (w == 0.0) continue;
        for (int c = 0; c < n; ++c)
          dense[dense_index(n, a, b, c)] += w * tinv(c, k);
      }
    }
  };
  for (const auto& e : g.entries()) {
    accumulate(e.i, e.j, e.k, e.value);
    accumulate(e.j, e.i, e.k, -e.value);
  }

  std::vector<StructureEntry> entries;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double v = dense[dense_index(n, a, b, c)];
        if (std::abs(v) > prune_tol) entries.push_back({a, b, c, v});
      }
  return LieAlgebra(n, std::move(new_names), std::move(entries));
}

namespace {

// Totally antisymmetric symbol on three indices, eps(0,1,2) = +1.
double eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i) * (k - i) * (k - j) > 0) ? 1.0 : -1.0;
}

// One index raised with the (+,-,-) metric: eps_{ab}^g = eps_{abd} g^{dg}.
double eps_ud(int a, int b, int g) {
  const double metric = (g == 0) ? 1.0 : -1.0;
  return eps3(a, b, g) * metric;
}

LieAlgebra make_sl2r_hkd() {
  std::vector<StructureEntry> e = {
      {0, 1, 2, 2.0},   // [H, K] = 2i D
      {0, 2, 0, 1.0},   // [H, D] = i H
      {1, 2, 1, -1.0},  // [K, D] = -i K
  };
  return LieAlgebra(3, {"H", "K", "D"}, std::move(e));
}

LieAlgebra make_so21_m() {
  std::vector<StructureEntry> e = {
      {0, 1, 2, 1.0},
      {0, 2, 1, -1.0},
      {1, 2, 0, -1.0},
  };
  return LieAlgebra(3, {"M0", "M1", "M2"}, std::move(e));
}

LieAlgebra make_so3() {
  std::vector<StructureEntry> e = {
      {0, 1, 2, 1.0},
      {0, 2, 1, -1.0},
      {1, 2, 0, 1.0},
  };
  return LieAlgebra(3, {"J1", "J2", "J3"}, std::move(e));
}

LieAlgebra make_galilei_n2_d3() {
  const int n = 15;
  auto jx = [](int i) { return i; };
  auto mx = [](int a) { return 3 + a; };
  auto xx = [](int a, int i) { return 6 + 3 * a + i; };

  std::vector<double> dense(static_cast<std::size_t>(n) * n * n, 0.0);
  auto set = [&](int i, int j, int k, double v) {
    if (v != 0.0) dense[dense_index(n, i, j, k)] = v;
  };

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // Rotations among themselves and on each carrier triple.
        set(jx(i), jx(j), jx(k), eps3(i, j, k));
        for (int a = 0; a < 3; ++a)
          set(jx(i), xx(a, j), xx(a, k), eps3(i, j, k));
        // The non-compact block and its action on the carrier label.
        set(mx(i), mx(j), mx(k), -eps_ud(i, j, k));
        for (int l = 0; l < 3; ++l)
          set(mx(i), xx(j, l), xx(k, l), -eps_ud(i, j, k));
      }

  std::vector<StructureEntry> entries;
  std::vector<std::string> names = {"J1", "J2", "J3", "M0", "M1", "M2"};
  for (int a = 0; a < 3; ++a)
    for (int i = 1; i <= 3; ++i)
      names.push_back("X" + std::to_string(a) + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = dense[dense_index(n, i, j, k)];
        if (v != 0.0) entries.push_back({i, j, k, v});
      }
  return LieAlgebra(n, std::move(names), std::move(entries));
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"sl2r_hkd", "so21_m", "so3",
                                                 "galilei_n2_d3"};
  return names;
}

LieAlgebra builtin(std::string_view name) {
  if (name == "sl2r_hkd") return make_sl2r_hkd();
  if (name == "so21_m") return make_so21_m();
  if (name == "so3") return make_so3();
  if (name == "galilei_n2_d3") return make_galilei_n2_d3();
  throw ParseError("unknown builtin algebra: " + std::string(name));
}

namespace {

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("algebra file, line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& s, int line) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    fail(line, "expected integer, got '" + s + "'");
  }
  if (pos != s.size()) fail(line, "trailing characters after integer '" + s + "'");
  return v;
}

double parse_double(const std::string& s, int line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    fail(line, "expected number, got '" + s + "'");
  }
  if (pos != s.size()) fail(line, "trailing characters after number '" + s + "'");
  return v;
}

// "[a, b, c]" -> trimmed items; empty brackets give an empty list.
std::vector<std::string> parse_list(const std::string& s, int line) {
  std::string body = trim(s);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    fail(line, "expected a [...] list");
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> items;
  if (trim(body).empty()) return items;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line, "empty list item");
    items.push_back(item);
  }
  return items;
}

}  // namespace

LieAlgebra load_algebra(std::istream& in) {
  int dim = -1;
  std::vector<std::string> names;
  std::vector<StructureEntry> entries;
  bool have_names = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "dim") {
      if (dim >= 0) fail(lineno, "duplicate dim");
      dim = parse_int(value, lineno);
      if (dim <= 0) fail(lineno, "dim must be positive");
    } else if (key == "names") {
      if (dim < 0) fail(lineno, "names must come after dim");
      if (have_names) fail(lineno, "duplicate names");
      names = parse_list(value, lineno);
      if (static_cast<int>(names.size()) != dim)
        fail(lineno, "expected " + std::to_string(dim) + " names, got " +
                         std::to_string(names.size()));
      have_names = true;
    } else if (key == "bracket") {
      if (!have_names) fail(lineno, "bracket must come after names");
      const auto items = parse_list(value, lineno);
      if (items.size() != 4)
        fail(lineno, "bracket needs [i, j, k, value]");
      StructureEntry e;
      e.i = parse_int(items[0], lineno);
      e.j = parse_int(items[1], lineno);
      e.k = parse_int(items[2], lineno);
      e.value = parse_double(items[3], lineno);
      if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim ||
          e.k >= dim)
        fail(lineno, "bracket index out of range");
      if (e.i >= e.j) fail(lineno, "bracket entries require i < j");
      entries.push_back(e);
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (dim < 0) throw ParseError("algebra file: missing dim");
  if (!have_names) throw ParseError("algebra file: missing names");
  try {
    return LieAlgebra(dim, std::move(names), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  return load_algebra(in);
}

}  // namespace corbit
