#include "sbrst/cone.hpp"

#include <stdexcept>

#include "sbrst/rational.hpp"

namespace sbrst {

long dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<IntVector> positive_functional(const std::vector<IntVector>& generators, int dim) {
  const int k = static_cast<int>(generators.size());
  if (k == 0) return IntVector(dim, 0);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("generator dimension mismatch");
  }
  // Variables: u (dim), w (dim), slack s (k), artificial t (k). Rows: G(u - w) - s + t = 1.
  const int nvars = 2 * dim + 2 * k;
  const int rhs = nvars;
  std::vector<std::vector<Rational>> tab(k, std::vector<Rational>(nvars + 1));
  std::vector<int> basis(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < dim; ++j) {
      tab[i][j] = generators[i][j];
      tab[i][dim + j] = -generators[i][j];
    }
    tab[i][2 * dim + i] = -1;
    tab[i][2 * dim + k + i] = 1;
    tab[i][rhs] = 1;
    basis[i] = 2 * dim + k + i;
  }
  // Reduced costs of min sum(t), expressed in the nonbasic variables.
  std::vector<Rational> cost(nvars + 1);
  for (int j = 0; j <= nvars; ++j) {
    if (j >= 2 * dim + k && j < nvars) continue;
    for (int i = 0; i < k; ++i) cost[j] -= tab[i][j];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < nvars; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < k; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][rhs] / tab[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur for a Phase-I objective bounded below
    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (int i = 0; i < k; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (int j = 0; j <= nvars; ++j) tab[i][j] -= f * tab[leave][j];
    }
    const Rational f = cost[enter];
    for (int j = 0; j <= nvars; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  if (cost[rhs] != 0) return std::nullopt;  // -cost[rhs] is the optimal sum of artificials

  std::vector<Rational> y(dim);
  for (int i = 0; i < k; ++i) {
    if (basis[i] < dim) y[basis[i]] += tab[i][rhs];
    else if (basis[i] < 2 * dim) y[basis[i] - dim] -= tab[i][rhs];
  }
  Integer l = 1;
  for (const auto& v : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntVector out(dim);
  for (int j = 0; j < dim; ++j) {
    Rational s = y[j] * l;
    out[j] = s.get_num().get_si();
  }
  for (const auto& g : generators) {
    if (dot(out, g) < 1) throw std::logic_error("positive_functional: certificate check failed");
  }
  return out;
}

}  // namespace sbrst
