#ifndef SBRST_CATALOG_HPP
#define SBRST_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "sbrst/brst.hpp"
#include "sbrst/grading.hpp"
#include "sbrst/supercore.hpp"

namespace sbrst {

/// gl(m|n) with I_0 = {1..m}, I_1 = {m+1..m+n}; basis E_ij in row-major order.
struct GLmnSpec {
  int m = 1;
  int n = 1;

  int size() const { return m + n; }
  Parity index_parity(int i) const { return Parity(i > m ? 1 : 0); }
  /// Basis id of E_ij (1-based i, j).
  int index(int i, int j) const { return (i - 1) * size() + (j - 1); }
  std::string unit_label(int i, int j) const;
};

AlgebraPtr build_glmn(int m, int n);
AlgebraPtr build_sl2();
/// [e1, e2] = e2.
AlgebraPtr build_affine2();
AlgebraPtr build_abelian(int even, int odd);

enum class ParabolicVariant { kA, kB };

/// A: u = span{E_ij : i in I_0, j in I_1}, Levi gl_m + gl_n.
/// B: u = span{E_ij : i <= m1 < j}, Levi gl_{m1} + gl_{m-m1|n}.
struct ParabolicChoice {
  ParabolicVariant variant = ParabolicVariant::kA;
  int m1 = 0;
};

struct Nilradical {
  GLmnSpec spec;
  ParabolicChoice choice;
  AlgebraPtr gl;
  AlgebraPtr algebra;
  /// (i, j) of each basis element of u.
  std::vector<std::pair<int, int>> units;

  int index_of(int i, int j) const;
};

Nilradical build_nilradical(const GLmnSpec& spec, const ParabolicChoice& choice);

Representation natural_module(const GLmnSpec& spec, AlgebraPtr gl);
Representation natural_module(const Nilradical& u);
/// Free U(u)-module: Grassmann algebra on the (odd) u-basis tensor a multiplicity space of
/// dimension lowest_dim; basis index mask * lowest_dim + t. Variant A only.
Representation kac_module(const Nilradical& u, int lowest_dim = 1);

/// Levi elements E_kl acting on u by the bracket and on the natural module.
std::vector<ActingOperator> levi_action(const Nilradical& u);

/// Weight of the monomial X_ij under the diagonal Cartan: e_j - e_i.
std::vector<Weight> generator_weights(const GLmnSpec& spec);
std::vector<Weight> generator_weights(const Nilradical& u);
std::vector<Weight> natural_weights(const GLmnSpec& spec);
/// Weight of E_{i1j1} ... E_{ikjk} (x) w: the sum of the roots e_i - e_j.
std::vector<Weight> kac_weights(const Nilradical& u, int lowest_dim = 1);
std::vector<Weight> adjoint_weights(const GLmnSpec& spec);

/// Variant A mixed set: D spanned by x_kj with m1 < k <= m.
MixingSet mixed_rows(const Nilradical& u, int m1);

/// The gl(1|1)-operators on C[x, E] (standard) or C[y, E] (dual), restricted to the monomials
/// x^alpha E_S with |alpha| <= window; terms of higher degree are dropped.
///   standard: e = sum x E, f = sum d_x d_E, h1 = mn + sum x d_x, h2 = sum E d_E
///   dual:     e = sum E d_y, f = sum y d_E, h1 = sum E d_E, h2 = sum y d_y
struct Gl11Operators {
  bool dual = false;
  int window = 0;
  /// (alpha, S as a bit mask over the u-basis).
  std::vector<std::pair<std::vector<int>, int>> basis;
  SparseRationalMatrix e, f, h1, h2;

  int index_of(const std::vector<int>& alpha, int mask) const;
};

Gl11Operators gl11_operators(const Nilradical& u, bool dual, int window);

struct Gl11WitnessReport {
  bool dual = false;
  int window = 0;
  /// ef + fe = h1 -+ h2 on every column whose images stay in the window.
  bool relation_ok = false;
  long relation_columns = 0;
  bool delta_ok = false;
  /// delta = delta_sign * e (x) id on the window.
  int delta_sign = 0;
  long delta_columns = 0;
  std::string relation;
};

/// Throws std::invalid_argument for variant B or window < 1.
Gl11WitnessReport gl11_witness(const Nilradical& u, bool dual, int window, int lowest_dim = 1);

/// gl(1|2), u = span{E_12, E_13}, natural module, D = C x_13, cochains truncated to total
/// degree <= order.
struct CompletionRow {
  int p = 0;
  long columns = 0;
  long kernel_dim = 0;
  long expected = 0;
  bool image_in_v1 = false;
  bool image_covers = false;
};

struct CompletionReport {
  int order = 0;
  std::vector<CompletionRow> rows;
  bool ok = false;
};

/// Number of independent truncated solutions in Z-degree p of the P/Q families.
long completion_family_dimension(int p, int order);

CompletionReport gl12_completion_demo(int order);

}  // namespace sbrst

#endif  // SBRST_CATALOG_HPP
