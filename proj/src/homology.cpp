#include "sbrst/homology.hpp"

#include <optional>
#include <stdexcept>

namespace sbrst {

namespace {

using IntColumn = std::map<int, Integer>;

struct Eliminator {
  bool track = false;
  int cols = 0;
  // Leading row -> (reduced column, combination of original columns).
  std::map<int, std::pair<IntColumn, IntColumn>> pivots;

  static IntColumn to_integer(const SparseVector& v, Integer& scale) {
    scale = 1;
    for (const auto& [i, x] : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    IntColumn out;
    for (const auto& [i, x] : v) {
      Rational s = x * scale;
      out[i] = s.get_num();
    }
    return out;
  }

  static void remove_content(IntColumn& v, IntColumn& comb) {
    Integer g = 0;
    for (const auto& [i, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (const auto& [i, x] : comb) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g <= 1) return;
    for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& [i, x] : comb) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  // v <- a*v - b*w
  static void combine(IntColumn& v, const Integer& a, const Integer& b, const IntColumn& w) {
    if (a != 1) {
      for (auto& [i, x] : v) x *= a;
    }
    for (const auto& [i, y] : w) {
      auto [it, inserted] = v.try_emplace(i, 0);
      it->second -= b * y;
      if (it->second == 0) v.erase(it);
    }
  }

  // Reduces column j. Returns the combination when it reduced to zero.
  std::optional<IntColumn> push(int j, const SparseVector& column) {
    Integer scale;
    IntColumn v = to_integer(column, scale);
    IntColumn comb;
    if (track) comb[j] = scale;
    while (!v.empty()) {
      auto it = pivots.find(v.begin()->first);
      if (it == pivots.end()) break;
      const auto& [pv, pc] = it->second;
      const Integer a = pv.begin()->second;
      const Integer b = v.begin()->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer aa = a / g, bb = b / g;
      combine(v, aa, bb, pv);
      if (track) combine(comb, aa, bb, pc);
      remove_content(v, comb);
    }
    if (v.empty()) return comb;
    const int lead = v.begin()->first;
    pivots.emplace(lead, std::make_pair(std::move(v), std::move(comb)));
    return std::nullopt;
  }
};

}  // namespace

RankKernel rank_kernel(const SparseRationalMatrix& m) {
  Eliminator e;
  e.track = true;
  e.cols = m.cols();
  RankKernel r;
  for (int j = 0; j < m.cols(); ++j) {
    auto dep = e.push(j, m.column(j));
    if (!dep) {
      r.pivot_columns.push_back(j);
      continue;
    }
    // The combination involves j and earlier pivot columns only; normalise the j entry to 1.
    const Integer lead = dep->at(j);
    SparseVector k;
    for (const auto& [i, x] : *dep) k[i] = Rational(x) / Rational(lead);
    r.kernel.push_back(std::move(k));
  }
  r.rank = static_cast<long>(r.pivot_columns.size());
  return r;
}

long rank(const SparseRationalMatrix& m) {
  Eliminator e;
  long r = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (!e.push(j, m.column(j))) ++r;
  }
  return r;
}

long quotient_dimension(const std::vector<SparseVector>& vectors, const SparseRationalMatrix& boundaries) {
  SparseRationalMatrix both(boundaries.rows(), boundaries.cols() + static_cast<int>(vectors.size()));
  for (int j = 0; j < boundaries.cols(); ++j) both.set_column(j, boundaries.column(j));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    both.set_column(boundaries.cols() + static_cast<int>(j), vectors[j]);
  }
  return rank(both) - rank(boundaries);
}

}  // namespace sbrst
