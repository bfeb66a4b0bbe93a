#include <gtest/gtest.h>

#include <random>

#include "sbrst/catalog.hpp"
#include "sbrst/weyl.hpp"

using namespace sbrst;

namespace {

// Rank-3 Weyl superalgebra with generators of parity even, odd, even.
WeylSuperalgebra mixed_weyl() { return WeylSuperalgebra({Parity::even(), Parity::odd(), Parity::even()}); }

WeylElement gen_x(const WeylSuperalgebra& w, int a) { return w.generator(WeylGenerator::x(a)); }
WeylElement gen_d(const WeylSuperalgebra& w, int a) { return w.generator(WeylGenerator::d(a)); }

WeylElement random_element(const WeylSuperalgebra& w, std::mt19937& rng, int terms, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 2 * w.rank() - 1), coef(-3, 3);
  WeylElement e;
  for (int t = 0; t < terms; ++t) {
    std::vector<WeylGenerator> word;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int g = gen(rng);
      word.push_back(g < w.rank() ? WeylGenerator::x(g) : WeylGenerator::d(g - w.rank()));
    }
    e += normal_order(w, word, coef(rng));
  }
  return e;
}

// Expansion of a monomial as a product of its generators, as Weyl elements.
WeylElement product(const WeylSuperalgebra& w, const std::vector<WeylGenerator>& word) {
  WeylElement r = w.one();
  for (const auto& g : word) r = w.multiply(r, w.generator(g));
  return r;
}

}  // namespace

TEST(Weyl, DefiningRelations) {
  const WeylSuperalgebra w = mixed_weyl();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(graded_commutator(w, gen_d(w, a), gen_x(w, b)), a == b ? w.one() : WeylElement()) << a << b;
      EXPECT_TRUE(graded_commutator(w, gen_x(w, a), gen_x(w, b)).is_zero());
      EXPECT_TRUE(graded_commutator(w, gen_d(w, a), gen_d(w, b)).is_zero());
    }
  }
}

TEST(Weyl, NormalOrderExamples) {
  const WeylSuperalgebra w = mixed_weyl();
  const auto x0 = WeylGenerator::x(0), d0 = WeylGenerator::d(0);
  const auto x1 = WeylGenerator::x(1), d1 = WeylGenerator::d(1);
  // d X = X d + 1 (even), d X = -X d + 1 (odd)
  EXPECT_EQ(normal_order(w, {d0, x0}), normal_order(w, {x0, d0}) + w.one());
  EXPECT_EQ(normal_order(w, {d1, x1}), normal_order(w, {x1, d1}) * Rational(-1) + w.one());
  // d X^2 = X^2 d + 2 X
  EXPECT_EQ(normal_order(w, {d0, x0, x0}), normal_order(w, {x0, x0, d0}) + gen_x(w, 0) * Rational(2));
  // odd generators square to zero
  EXPECT_TRUE(normal_order(w, {x1, x1}).is_zero());
  EXPECT_TRUE(normal_order(w, {d1, d1}).is_zero());
}

TEST(Weyl, NormalFormIsClosedUnderProducts) {
  const WeylSuperalgebra w = mixed_weyl();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const WeylElement a = random_element(w, rng, 3, 3), b = random_element(w, rng, 3, 3);
    const WeylElement ab = w.multiply(a, b);
    for (const auto& [m, c] : ab.terms()) EXPECT_TRUE(w.is_normal(m));
  }
}

TEST(Weyl, NormalOrderIsMultiplicative) {
  const WeylSuperalgebra w = mixed_weyl();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 4), gen(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<WeylGenerator> u, v;
    for (auto* word : {&u, &v}) {
      const int n = len(rng);
      for (int i = 0; i < n; ++i) {
        const int g = gen(rng);
        word->push_back(g < 3 ? WeylGenerator::x(g) : WeylGenerator::d(g - 3));
      }
    }
    std::vector<WeylGenerator> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    EXPECT_EQ(normal_order(w, uv), w.multiply(normal_order(w, u), normal_order(w, v)));
    EXPECT_EQ(normal_order(w, uv), product(w, uv));
  }
}

TEST(Weyl, Associative) {
  const WeylSuperalgebra w = mixed_weyl();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const WeylElement a = random_element(w, rng, 2, 3), b = random_element(w, rng, 2, 3),
                      c = random_element(w, rng, 2, 3);
    EXPECT_EQ(w.multiply(w.multiply(a, b), c), w.multiply(a, w.multiply(b, c)));
  }
}

TEST(Weyl, WordRoundTrip) {
  const WeylSuperalgebra w = mixed_weyl();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const WeylElement e = random_element(w, rng, 3, 4);
    for (const auto& [m, c] : e.terms()) EXPECT_EQ(product(w, w.word(m)), w.monomial(m));
  }
}

TEST(Weyl, NonHomogeneousCommutatorRejected) {
  const WeylSuperalgebra w = mixed_weyl();
  EXPECT_THROW(graded_commutator(w, gen_x(w, 0) + gen_x(w, 1), gen_x(w, 2)), std::invalid_argument);
}

TEST(Gamma, HomomorphismExhaustive) {
  std::vector<AlgebraPtr> algs = {build_glmn(1, 1), build_glmn(1, 2), build_glmn(2, 1), build_sl2(),
                                  build_affine2()};
  for (const auto& g : algs) {
    const WeylSuperalgebra w = WeylSuperalgebra::over_dual(*g);
    for (int a = 0; a < g->dim(); ++a) {
      for (int b = 0; b < g->dim(); ++b) {
        EXPECT_EQ(graded_commutator(w, gamma(w, *g, a), gamma(w, *g, b)), gamma(w, *g, g->bracket(a, b)))
            << g->name() << " " << g->label(a) << "," << g->label(b);
      }
    }
  }
}

TEST(Gamma, AbelianIsZero) {
  const AlgebraPtr g = build_abelian(2, 2);
  const WeylSuperalgebra w = WeylSuperalgebra::over_dual(*g);
  for (int a = 0; a < g->dim(); ++a) EXPECT_TRUE(gamma(w, *g, a).is_zero());
}

// [Gamma(A), X_b] is linear in the X's: the action on Pi g^* dual to ad, with the
// coefficient of X_c equal to -(-1)^{[A][E_c]} ad(A)_{bc}.
TEST(Gamma, ActsOnGeneratorsByCoadjoint) {
  const AlgebraPtr g = build_glmn(1, 1);
  const WeylSuperalgebra w = WeylSuperalgebra::over_dual(*g);
  for (int a = 0; a < g->dim(); ++a) {
    const SparseRationalMatrix ad = g->ad(a);
    for (int b = 0; b < g->dim(); ++b) {
      WeylElement expected;
      for (int c = 0; c < g->dim(); ++c) {
        const Rational v = ad.at(b, c);
        if (v == 0) continue;
        WeylMonomial m = w.unit_monomial();
        m.x[c] = 1;
        expected.add_term(m, -koszul(g->parity(a), g->parity(c)) * v);
      }
      EXPECT_EQ(graded_commutator(w, gamma(w, *g, a), gen_x(w, b)), expected) << g->label(a) << " on X" << b;
    }
  }
}

TEST(Gamma, DegreeZero) {
  const AlgebraPtr g = build_glmn(1, 2);
  const WeylSuperalgebra w = WeylSuperalgebra::over_dual(*g);
  for (int a = 0; a < g->dim(); ++a) {
    const WeylElement ga = gamma(w, *g, a);
    for (const auto& [m, c] : ga.terms()) EXPECT_EQ(m.degree(), 0);
  }
}

TEST(GAction, LeibnizAndUnit) {
  const AlgebraPtr g = build_glmn(1, 1);
  const WeylSuperalgebra w = WeylSuperalgebra::over_dual(*g);
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> len(1, 3), gen(0, 2 * w.rank() - 1);
  auto random_monomial = [&] {
    std::vector<WeylGenerator> word;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int k = gen(rng);
      word.push_back(k < w.rank() ? WeylGenerator::x(k) : WeylGenerator::d(k - w.rank()));
    }
    return normal_order(w, word);
  };
  for (int a = 0; a < g->dim(); ++a) {
    const SparseVector A{{a, 1}};
    EXPECT_TRUE(g_action_on_weyl(w, *g, A, w.one()).is_zero());
    for (int trial = 0; trial < 20; ++trial) {
      const WeylElement f = random_monomial(), h = random_monomial();
      if (f.is_zero() || h.is_zero()) continue;
      const Parity pf = *w.parity(f);
      const WeylElement lhs = g_action_on_weyl(w, *g, A, w.multiply(f, h));
      const WeylElement rhs = w.multiply(g_action_on_weyl(w, *g, A, f), h) +
                              w.multiply(f, g_action_on_weyl(w, *g, A, h)) * Rational(koszul(g->parity(a), pf));
      EXPECT_EQ(lhs, rhs);
    }
  }
}
