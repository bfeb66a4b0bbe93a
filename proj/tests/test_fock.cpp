#include <gtest/gtest.h>

#include <random>

#include "sbrst/fock.hpp"

using namespace sbrst;

namespace {

FockSpace space(std::vector<Parity> parities, std::vector<int> mixed) {
  const int rank = static_cast<int>(parities.size());
  return FockSpace(WeylSuperalgebra(std::move(parities)), MixingSet(rank, std::move(mixed)));
}

FockVector single(const FockMonomial& m, const Rational& c) { return FockVector{{m, c}}; }

}  // namespace

TEST(Fock, AnnihilatorOnMixedEvenDirection) {
  const FockSpace f = space({Parity::even()}, {0});
  const WeylSuperalgebra& w = f.weyl();
  FockMonomial d1 = f.vacuum(), d2 = f.vacuum();
  d1.d[0] = 1;
  d2.d[0] = 2;
  // X d^2 vac = -2 d vac
  EXPECT_EQ(f.apply(w.generator(WeylGenerator::x(0)), d2), single(d1, -2));
  EXPECT_TRUE(f.apply(w.generator(WeylGenerator::x(0)), f.vacuum()).empty());
}

TEST(Fock, AnnihilatorOnMixedOddDirection) {
  const FockSpace f = space({Parity::odd()}, {0});
  const WeylSuperalgebra& w = f.weyl();
  FockMonomial d1 = f.vacuum();
  d1.d[0] = 1;
  EXPECT_EQ(f.apply(w.generator(WeylGenerator::x(0)), d1), single(f.vacuum(), 1));
  EXPECT_TRUE(f.apply(w.generator(WeylGenerator::d(0)), d1).empty());
}

TEST(Fock, StandardFockDerivation) {
  const FockSpace f = space({Parity::even()}, {});
  FockMonomial x2 = f.vacuum();
  x2.x[0] = 2;
  // d X^3 vac = 3 X^2 vac
  const WeylElement dx3 = normal_order(f.weyl(), {WeylGenerator::d(0), WeylGenerator::x(0), WeylGenerator::x(0),
                                                  WeylGenerator::x(0)});
  EXPECT_EQ(f.apply(dx3, f.vacuum()), single(x2, 3));
}

TEST(Fock, VacuumKilledByAnnihilators) {
  const FockSpace f = space({Parity::even(), Parity::odd(), Parity::odd(), Parity::even()}, {1, 3});
  for (int a = 0; a < 4; ++a) {
    const WeylGenerator ann = f.mixing().contains(a) ? WeylGenerator::x(a) : WeylGenerator::d(a);
    EXPECT_TRUE(f.apply(f.weyl().generator(ann), f.vacuum()).empty()) << a;
  }
}

TEST(Fock, IsAModule) {
  const FockSpace f = space({Parity::even(), Parity::odd(), Parity::even(), Parity::odd()}, {2, 3});
  const WeylSuperalgebra& w = f.weyl();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 3), gen(0, 7), coef(-2, 2);
  auto random_word = [&] {
    std::vector<WeylGenerator> word;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int g = gen(rng);
      word.push_back(g < 4 ? WeylGenerator::x(g) : WeylGenerator::d(g - 4));
    }
    return word;
  };
  // Random basis vectors reached from the vacuum by creators.
  auto random_state = [&] {
    FockMonomial m = f.vacuum();
    for (int a = 0; a < 4; ++a) {
      const int e = w.generator_parity(a).is_odd() ? coef(rng) & 1 : std::abs(coef(rng));
      (f.mixing().contains(a) ? m.d : m.x)[a] = e;
    }
    return m;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const WeylElement a = normal_order(w, random_word(), coef(rng));
    const WeylElement b = normal_order(w, random_word(), coef(rng));
    const FockMonomial m = random_state();
    ASSERT_TRUE(f.is_legal(m));
    EXPECT_EQ(f.apply(w.multiply(a, b), m), f.apply(a, f.apply(b, m)));
  }
}

TEST(Fock, IllegalMonomialThrows) {
  const FockSpace f = space({Parity::even(), Parity::even()}, {1});
  FockMonomial bad = f.vacuum();
  bad.x[1] = 1;  // X_1 is an annihilator here
  EXPECT_FALSE(f.is_legal(bad));
  EXPECT_THROW(f.apply(f.weyl().one(), bad), std::invalid_argument);
}

TEST(Fock, Degrees) {
  const FockSpace f = space({Parity::even(), Parity::odd()}, {1});
  FockMonomial m = f.vacuum();
  m.x[0] = 3;
  m.d[1] = 1;
  EXPECT_EQ(m.degree(), 2);
  EXPECT_EQ(m.total_degree(), 4);
  EXPECT_EQ(f.creator(0).degree_step, 1);
  EXPECT_EQ(f.creator(1).degree_step, -1);
}
