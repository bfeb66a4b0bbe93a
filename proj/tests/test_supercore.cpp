#include <gtest/gtest.h>

#include "sbrst/catalog.hpp"
#include "sbrst/supercore.hpp"

using namespace sbrst;

namespace {

// Dense (m+n)x(m+n) supermatrix oracle: [A, B] = AB - (-1)^{|A||B|} BA on matrix units.
using Dense = std::vector<std::vector<long>>;

Dense unit(int size, int i, int j) {
  Dense d(size, std::vector<long>(size, 0));
  d[i][j] = 1;
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  const int n = static_cast<int>(a.size());
  Dense c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void check_against_supermatrices(int m, int n) {
  const AlgebraPtr g = build_glmn(m, n);
  const int s = m + n;
  auto par = [&](int i, int j) { return ((i >= m) + (j >= m)) % 2; };
  for (int a = 0; a < s * s; ++a) {
    for (int b = 0; b < s * s; ++b) {
      const int i = a / s, j = a % s, k = b / s, l = b % s;
      const Dense ab = mul(unit(s, i, j), unit(s, k, l));
      const Dense ba = mul(unit(s, k, l), unit(s, i, j));
      const int sign = par(i, j) * par(k, l) ? -1 : 1;
      SparseVector expected;
      for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
          const long v = ab[r][c] - sign * ba[r][c];
          if (v) expected[r * s + c] = v;
        }
      EXPECT_EQ(g->bracket(a, b), expected) << g->label(a) << "," << g->label(b);
    }
  }
}

bool has_kind(const JacobiReport& r, JacobiViolation::Kind k) {
  for (const auto& v : r.violations) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST(Glmn, DimensionsAndParities) {
  const AlgebraPtr g = build_glmn(1, 1);
  ASSERT_EQ(g->dim(), 4);
  EXPECT_EQ(g->parity(0), Parity::even());
  EXPECT_EQ(g->parity(1), Parity::odd());
  EXPECT_EQ(g->parity(2), Parity::odd());
  EXPECT_EQ(g->parity(3), Parity::even());
  const AlgebraPtr gl2 = build_glmn(2, 0);
  ASSERT_EQ(gl2->dim(), 4);
  for (int a = 0; a < 4; ++a) EXPECT_FALSE(gl2->parity(a).is_odd());
}

TEST(Glmn, RejectsEmpty) { EXPECT_THROW(build_glmn(0, 0), std::invalid_argument); }

TEST(Glmn, OddAnticommutator) {
  const AlgebraPtr g = build_glmn(1, 1);
  const SparseVector e11_plus_e22{{0, 1}, {3, 1}};
  EXPECT_EQ(g->bracket(*g->find("E_12"), *g->find("E_21")), e11_plus_e22);
}

TEST(Glmn, MatchesSupermatrixCommutators) {
  check_against_supermatrices(1, 1);
  check_against_supermatrices(1, 2);
  check_against_supermatrices(2, 1);
  check_against_supermatrices(2, 2);
}

TEST(Jacobi, CatalogAlgebrasPass) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {2, 0}}) {
    EXPECT_TRUE(validate_superjacobi(*build_glmn(m, n)).ok) << m << "|" << n;
  }
  EXPECT_TRUE(validate_superjacobi(*build_sl2()).ok);
  EXPECT_TRUE(validate_superjacobi(*build_affine2()).ok);
  EXPECT_TRUE(validate_superjacobi(*build_abelian(2, 3)).ok);
}

TEST(Jacobi, MutatedConstantFails) {
  const AlgebraPtr g = build_glmn(1, 2);
  auto br = g->brackets();
  const int a = *g->find("E_12"), b = *g->find("E_21");
  // Keep super antisymmetry, break Jacobi.
  br[{a, b}][*g->find("E_22")] *= 3;
  br[{b, a}][*g->find("E_22")] *= 3;
  const JacobiReport r = validate_superjacobi(LieSuperalgebra("mut", g->basis(), br));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_kind(r, JacobiViolation::Kind::kJacobi));
}

TEST(Jacobi, AntisymmetryAndParityViolations) {
  const AlgebraPtr g = build_glmn(1, 1);
  auto br = g->brackets();
  br[{1, 2}][0] = 5;  // only one ordering changed
  const JacobiReport anti = validate_superjacobi(LieSuperalgebra("anti", g->basis(), br));
  ASSERT_FALSE(anti.ok);
  EXPECT_TRUE(has_kind(anti, JacobiViolation::Kind::kAntisymmetry));

  LieSuperalgebra::Brackets odd;
  odd[{0, 3}] = SparseVector{{1, 1}};  // [even, even] with an odd component
  odd[{3, 0}] = SparseVector{{1, -1}};
  const JacobiReport par = validate_superjacobi(LieSuperalgebra("par", g->basis(), odd));
  ASSERT_FALSE(par.ok);
  EXPECT_TRUE(has_kind(par, JacobiViolation::Kind::kParity));
}

TEST(Representation, CatalogModulesPass) {
  const AlgebraPtr g = build_glmn(1, 2);
  const Representation nat = natural_module(GLmnSpec{1, 2}, g);
  EXPECT_TRUE(validate_representation(nat).ok);
  EXPECT_TRUE(validate_representation(adjoint_module(g)).ok);
  EXPECT_TRUE(validate_representation(dual_module(nat)).ok);
  EXPECT_TRUE(validate_representation(parity_reverse_module(nat)).ok);
  EXPECT_TRUE(validate_representation(trivial_module(g, Parity::odd())).ok);
  EXPECT_TRUE(validate_representation(adjoint_module(build_sl2())).ok);
}

TEST(Representation, BrokenActionFails) {
  const AlgebraPtr g = build_glmn(1, 1);
  const Representation nat = natural_module(GLmnSpec{1, 1}, g);
  auto action = nat.actions();
  action[0] *= Rational(2);
  EXPECT_FALSE(validate_representation(Representation(g, nat.carrier(), action)).ok);
}

TEST(Representation, ShapeMismatchThrows) {
  const AlgebraPtr g = build_glmn(1, 1);
  std::vector<SparseRationalMatrix> action(4, SparseRationalMatrix(2, 3));
  const std::vector<BasisIndex> carrier{{0, Parity::even(), "a"}, {1, Parity::odd(), "b"}};
  EXPECT_THROW(validate_representation(Representation(g, carrier, action)), StructuralError);
}

TEST(Representation, AdjointIsBracket) {
  const AlgebraPtr g = build_glmn(2, 1);
  const Representation adj = adjoint_module(g);
  for (int a = 0; a < g->dim(); ++a) {
    for (int b = 0; b < g->dim(); ++b) EXPECT_EQ(adj.action(a).apply({{b, 1}}), g->bracket(a, b));
  }
}
