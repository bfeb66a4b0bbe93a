#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "sbrst/catalog.hpp"

using namespace sbrst;

TEST(Nilradical, VariantA) {
  const Nilradical u = build_nilradical({2, 2}, {});
  ASSERT_EQ(u.algebra->dim(), 4);
  for (int a = 0; a < 4; ++a) EXPECT_TRUE(u.algebra->parity(a).is_odd());
  EXPECT_EQ(u.units.size(), 4u);
  for (const auto& [i, j] : u.units) {
    EXPECT_LE(i, 2);
    EXPECT_GT(j, 2);
  }
  EXPECT_TRUE(validate_superjacobi(*u.algebra).ok);
}

TEST(Nilradical, VariantB) {
  const Nilradical u = build_nilradical({2, 1}, {ParabolicVariant::kB, 1});
  ASSERT_EQ(u.algebra->dim(), 2);
  EXPECT_FALSE(u.algebra->parity(u.index_of(1, 2)).is_odd());
  EXPECT_TRUE(u.algebra->parity(u.index_of(1, 3)).is_odd());
  EXPECT_EQ(u.index_of(2, 3), -1);
}

TEST(Nilradical, InvalidChoices) {
  EXPECT_THROW(build_nilradical({2, 1}, {ParabolicVariant::kB, 0}), std::invalid_argument);
  EXPECT_THROW(build_nilradical({2, 1}, {ParabolicVariant::kB, 2}), std::invalid_argument);
  EXPECT_THROW(build_nilradical({2, 0}, {}), std::invalid_argument);
  const Nilradical u = build_nilradical({2, 2}, {});
  EXPECT_THROW(mixed_rows(u, 0), std::invalid_argument);
  EXPECT_EQ(mixed_rows(u, 1).members().size(), 2u);
}

TEST(Natural, ActionOnBasis) {
  const Nilradical u = build_nilradical({1, 2}, {});
  const Representation v = natural_module(u);
  ASSERT_EQ(v.dim(), 3);
  EXPECT_TRUE(validate_representation(v).ok);
  // E_12 v2 = v1, E_13 v3 = v1, everything else zero.
  EXPECT_EQ(v.action(u.index_of(1, 2)).apply({{1, 1}}), (SparseVector{{0, 1}}));
  EXPECT_EQ(v.action(u.index_of(1, 3)).apply({{2, 1}}), (SparseVector{{0, 1}}));
  EXPECT_TRUE(v.action(u.index_of(1, 2)).apply({{2, 1}}).empty());
  EXPECT_TRUE(v.action(u.index_of(1, 3)).apply({{0, 1}}).empty());
}

TEST(Natural, LeviNormalisesU) {
  const Nilradical u = build_nilradical({2, 1}, {});
  const auto ops = levi_action(u);
  EXPECT_EQ(ops.size(), 5u);  // gl_2 + gl_1
  for (const auto& op : ops) {
    EXPECT_EQ(op.on_algebra.rows(), u.algebra->dim());
    EXPECT_EQ(op.on_module.rows(), 3);
  }
}

TEST(Kac, DimensionsAndRelations) {
  for (auto [m, n, dim] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 2, 4}, {2, 2, 16}}) {
    const Nilradical u = build_nilradical({m, n}, {});
    const Representation k = kac_module(u);
    ASSERT_EQ(k.dim(), dim);
    EXPECT_TRUE(validate_representation(k).ok);
    const int r = u.algebra->dim();
    for (int a = 0; a < r; ++a) {
      EXPECT_TRUE((k.action(a) * k.action(a)).is_zero());
      for (int b = a + 1; b < r; ++b) EXPECT_TRUE((k.action(a) * k.action(b) + k.action(b) * k.action(a)).is_zero());
    }
    EXPECT_EQ(kac_weights(u).size(), static_cast<std::size_t>(dim));
  }
  EXPECT_EQ(kac_module(build_nilradical({1, 1}, {}), 3).dim(), 6);
  EXPECT_THROW(kac_module(build_nilradical({2, 1}, {ParabolicVariant::kB, 1})), std::invalid_argument);
}

TEST(Kac, FreeOverExteriorAlgebra) {
  // Applying every basis element once to the lowest vector reaches the top.
  const Nilradical u = build_nilradical({1, 2}, {});
  const Representation k = kac_module(u);
  SparseVector v{{0, 1}};
  for (int a = 0; a < u.algebra->dim(); ++a) v = k.action(a).apply(v);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.begin()->first, k.dim() - 1);
}

TEST(Weights, Examples) {
  const GLmnSpec s{1, 2};
  const auto g = generator_weights(s);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g[s.index(1, 2)], (Weight{-1, 1, 0}));
  EXPECT_EQ(natural_weights(s)[2], (Weight{0, 0, 1}));
  const Nilradical u = build_nilradical(s, {});
  const auto kw = kac_weights(u);
  EXPECT_EQ(kw.front(), (Weight{0, 0, 0}));
  EXPECT_EQ(kw.back(), (Weight{2, -1, -1}));
}

TEST(Witness, Operators) {
  const Nilradical u = build_nilradical({1, 1}, {});
  const Gl11Operators s = gl11_operators(u, false, 3);
  const int vac = s.index_of({0}, 0);
  ASSERT_GE(vac, 0);
  EXPECT_EQ(s.h1.at(vac, vac), 1);
  EXPECT_EQ(s.h2.at(vac, vac), 0);
  // x^0 E: ef + fe = h1 - h2 = 1 - 1 = 0.
  const int line = s.index_of({0}, 1);
  ASSERT_GE(line, 0);
  const SparseRationalMatrix anti = s.e * s.f + s.f * s.e;
  EXPECT_TRUE(anti.column(line).empty());
  EXPECT_EQ(anti.at(vac, vac), 1);

  const Gl11Operators d = gl11_operators(u, true, 3);
  EXPECT_EQ(d.h1.at(d.index_of({0}, 1), d.index_of({0}, 1)), 1);
  EXPECT_EQ(d.h2.at(d.index_of({2}, 0), d.index_of({2}, 0)), 2);
}

TEST(Witness, Reports) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    const Nilradical u = build_nilradical({m, n}, {});
    const Gl11WitnessReport s = gl11_witness(u, false, 3);
    EXPECT_TRUE(s.relation_ok && s.delta_ok) << m << "|" << n;
    EXPECT_EQ(s.delta_sign, -1);
    EXPECT_GT(s.relation_columns, 0);
    const Gl11WitnessReport d = gl11_witness(u, true, 3);
    EXPECT_TRUE(d.relation_ok && d.delta_ok) << m << "|" << n;
    EXPECT_EQ(d.delta_sign, 1);
  }
  const Nilradical u = build_nilradical({1, 1}, {});
  EXPECT_THROW(gl11_witness(u, false, 0), std::invalid_argument);
  EXPECT_THROW(gl11_witness(build_nilradical({2, 1}, {ParabolicVariant::kB, 1}), false, 2), std::invalid_argument);
}

TEST(Completion, FamilyDimensions) {
  EXPECT_EQ(completion_family_dimension(0, 4), 3);
  const CompletionReport r = gl12_completion_demo(4);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.order, 4);
  ASSERT_FALSE(r.rows.empty());
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.kernel_dim, row.expected) << row.p;
    EXPECT_EQ(row.expected, completion_family_dimension(row.p, 4));
    EXPECT_TRUE(row.image_in_v1 && row.image_covers) << row.p;
  }
  EXPECT_THROW(gl12_completion_demo(1), std::invalid_argument);
}

// Direct count for x f2 = d/dybar f3, f2 and f3 of x-degree minus ybar-degree p and total degree
// <= N. Every unknown monomial maps to a single monomial (or to zero), so the rank is the number of
// distinct images.
TEST(Completion, CountsAgainstMonomialImages) {
  for (int order : {3, 4, 5, 6}) {
    const CompletionReport r = gl12_completion_demo(order);
    for (const auto& row : r.rows) {
      long unknowns = 0;
      std::set<std::pair<int, int>> images;
      for (int a = 0; a <= order; ++a) {
        for (int b = 0; a + b <= order; ++b) {
          if (a - b != row.p) continue;
          unknowns += 2;
          images.insert({a + 1, b});                // x f2 with f2 = x^a ybar^b
          if (b > 0) images.insert({a, b - 1});     // d/dybar f3 with f3 = x^a ybar^b
        }
      }
      EXPECT_EQ(row.kernel_dim, unknowns - static_cast<long>(images.size())) << "N=" << order << " p=" << row.p;
    }
  }
}
