#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sbrst/catalog.hpp"
#include "sbrst/homology.hpp"

namespace sbrst {

namespace {

// x^alpha E_S (standard) or y^alpha E_S (dual) in the polynomial model of the cochains.
struct PolyKey {
  std::vector<int> alpha;
  int mask = 0;
  auto operator<=>(const PolyKey&) const = default;
};

using Poly = std::map<PolyKey, Rational>;

void add(Poly& p, const PolyKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly times_var(const Poly& p, int a) {
  Poly r;
  for (const auto& [key, c] : p) {
    PolyKey k = key;
    ++k.alpha[a];
    add(r, k, c);
  }
  return r;
}

Poly d_var(const Poly& p, int a) {
  Poly r;
  for (const auto& [key, c] : p) {
    PolyKey k = key;
    if (k.alpha[a] == 0) continue;
    const int e = k.alpha[a]--;
    add(r, k, c * e);
  }
  return r;
}

int below(int mask, int a) { return std::popcount(static_cast<unsigned>(mask & ((1 << a) - 1))); }

Poly times_grassmann(const Poly& p, int a) {
  Poly r;
  for (const auto& [key, c] : p) {
    PolyKey k = key;
    if (k.mask >> a & 1) continue;
    const int s = sign_of(below(k.mask, a));
    k.mask |= 1 << a;
    add(r, k, c * s);
  }
  return r;
}

Poly d_grassmann(const Poly& p, int a) {
  Poly r;
  for (const auto& [key, c] : p) {
    PolyKey k = key;
    if (!(k.mask >> a & 1)) continue;
    const int s = sign_of(below(k.mask, a));
    k.mask &= ~(1 << a);
    add(r, k, c * s);
  }
  return r;
}

Poly sum(Poly a, const Poly& b, int sign = 1) {
  for (const auto& [k, c] : b) add(a, k, sign * c);
  return a;
}

struct Gl11 {
  bool dual;
  int r;

  Poly e(const Poly& p) const {
    Poly out;
    for (int a = 0; a < r; ++a) {
      out = sum(std::move(out), dual ? times_grassmann(d_var(p, a), a) : times_var(times_grassmann(p, a), a));
    }
    return out;
  }
  Poly f(const Poly& p) const {
    Poly out;
    for (int a = 0; a < r; ++a) {
      out = sum(std::move(out), dual ? times_var(d_grassmann(p, a), a) : d_var(d_grassmann(p, a), a));
    }
    return out;
  }
  Rational h1(const PolyKey& k) const {
    return dual ? std::popcount(static_cast<unsigned>(k.mask)) : r + std::accumulate(k.alpha.begin(), k.alpha.end(), 0);
  }
  Rational h2(const PolyKey& k) const {
    return dual ? std::accumulate(k.alpha.begin(), k.alpha.end(), 0) : std::popcount(static_cast<unsigned>(k.mask));
  }
};

void monomials(int r, int max_degree, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out) {
  if (pos == r) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= max_degree; ++e) {
    cur[pos] = e;
    monomials(r, max_degree - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

int degree(const std::vector<int>& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

}  // namespace

int Gl11Operators::index_of(const std::vector<int>& alpha, int mask) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), std::make_pair(alpha, mask));
  return it != basis.end() && it->first == alpha && it->second == mask ? static_cast<int>(it - basis.begin()) : -1;
}

Gl11Operators gl11_operators(const Nilradical& u, bool dual, int window) {
  if (u.choice.variant != ParabolicVariant::kA) throw std::invalid_argument("the gl(1|1) witness needs variant A");
  if (window < 0) throw std::invalid_argument("gl(1|1) operators: negative window");
  const int r = static_cast<int>(u.units.size());
  const Gl11 ops{dual, r};
  Gl11Operators g;
  g.dual = dual;
  g.window = window;
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur(r, 0);
  monomials(r, window, cur, 0, alphas);
  for (const auto& alpha : alphas) {
    for (int mask = 0; mask < (1 << r); ++mask) g.basis.emplace_back(alpha, mask);
  }
  std::sort(g.basis.begin(), g.basis.end());
  const int n = static_cast<int>(g.basis.size());
  g.e = g.f = g.h1 = g.h2 = SparseRationalMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const PolyKey k{g.basis[j].first, g.basis[j].second};
    const Poly v{{k, 1}};
    for (const auto& [kk, x] : ops.e(v)) {
      if (const int i = g.index_of(kk.alpha, kk.mask); i >= 0) g.e.set(i, j, x);
    }
    for (const auto& [kk, x] : ops.f(v)) {
      if (const int i = g.index_of(kk.alpha, kk.mask); i >= 0) g.f.set(i, j, x);
    }
    if (ops.h1(k) != 0) g.h1.set(j, j, ops.h1(k));
    if (ops.h2(k) != 0) g.h2.set(j, j, ops.h2(k));
  }
  return g;
}

Gl11WitnessReport gl11_witness(const Nilradical& u, bool dual, int window, int lowest_dim) {
  if (u.choice.variant != ParabolicVariant::kA) throw std::invalid_argument("the gl(1|1) witness needs variant A");
  if (window < 1) {
    throw std::invalid_argument("gl(1|1) witness: window " + std::to_string(window) +
                                " cannot hold both sides of [e,f]; need a bound of at least 1");
  }
  const Gl11Operators g = gl11_operators(u, dual, window);
  Gl11WitnessReport rep;
  rep.dual = dual;
  rep.window = window;
  rep.relation = dual ? "ef + fe = h1 + h2" : "ef + fe = h1 - h2";

  // Columns of degree < window: e and f move the degree by at most one, so nothing is dropped.
  SparseRationalMatrix lhs = g.e * g.f;
  lhs += g.f * g.e;
  SparseRationalMatrix rhs = g.h2;
  if (!dual) rhs *= Rational(-1);
  rhs += g.h1;
  rep.relation_ok = true;
  for (int j = 0; j < static_cast<int>(g.basis.size()); ++j) {
    if (degree(g.basis[j].first) >= window) continue;
    ++rep.relation_columns;
    if (lhs.column(j) != rhs.column(j)) rep.relation_ok = false;
  }

  // delta against e (x) id on the BRST cochains of polynomial degree <= window.
  const Representation kac = kac_module(u, lowest_dim);
  const int r = static_cast<int>(u.units.size());
  const BrstComplex c(kac, dual ? MixingSet::all(r) : MixingSet::none(r));
  const GradingScheme w = GradingScheme::degree_window(window);
  rep.delta_ok = true;
  for (int q = 0; q <= window; ++q) {
    const CochainBlock block = enumerate_block(c, dual ? -q : q, w);
    for (const auto& b : block.basis) {
      const int j = g.index_of(dual ? b.mono.d : b.mono.x, b.module_index / lowest_dim);
      const int t = b.module_index % lowest_dim;
      CochainVector expected;
      for (const auto& [i, v] : g.e.column(j)) {
        FockMonomial m = c.fock().vacuum();
        (dual ? m.d : m.x) = g.basis[i].first;
        expected[{m, g.basis[i].second * lowest_dim + t}] = v;
      }
      // e raises the x-degree past the window on the top standard columns; compare only inside.
      CochainVector got;
      for (const auto& [k, v] : c.delta(b)) {
        if (degree(dual ? k.mono.d : k.mono.x) <= window) got[k] = v;
      }
      ++rep.delta_columns;
      if (got.empty() && expected.empty()) continue;
      if (rep.delta_sign == 0 && !expected.empty()) {
        rep.delta_sign = got == expected ? 1 : -1;
      }
      CochainVector scaled = expected;
      for (auto& [kk, v] : scaled) v *= rep.delta_sign;
      if (got != scaled) rep.delta_ok = false;
    }
  }
  if (rep.delta_sign == 0) rep.delta_ok = false;
  return rep;
}

long completion_family_dimension(int p, int order) {
  long count = 0;
  if (p >= 0) {
    // f3 = x^p (x ybar)^k, k >= 0
    for (int k = 0; p + 2 * k <= order; ++k) ++count;
  } else {
    // f3 = ybar^{-p} (x ybar)^j, j >= 1
    for (int j = 1; 2 * j - p <= order; ++j) ++count;
  }
  return count;
}

CompletionReport gl12_completion_demo(int order) {
  if (order < 2) throw std::invalid_argument("completion demo needs order >= 2");
  const Nilradical u = build_nilradical({1, 2}, {});
  const Representation v = natural_module(u);
  const int y = u.index_of(1, 3);
  const BrstComplex c(v, MixingSet(2, {y}));
  const GradingScheme w = GradingScheme::degree_window(order);

  CompletionReport rep;
  rep.order = order;
  rep.ok = true;
  for (int p = -order; p <= order; ++p) {
    const CochainBlock src = enumerate_block(c, p, w);
    // Rows: every image term, keyed exactly (no truncation of the target).
    std::map<CochainIndex, int> rows;
    std::vector<CochainVector> images;
    for (const auto& b : src.basis) {
      images.push_back(c.delta(b));
      for (const auto& [k, x] : images.back()) rows.try_emplace(k, 0);
    }
    int next = 0;
    for (auto& [k, i] : rows) i = next++;
    SparseRationalMatrix all(next, src.size());
    for (int j = 0; j < src.size(); ++j) {
      SparseVector col;
      for (const auto& [k, x] : images[j]) col[rows.at(k)] = x;
      all.set_column(j, col);
    }

    CompletionRow row;
    row.p = p;
    std::vector<int> f_cols;
    for (int j = 0; j < src.size(); ++j) {
      if (src.basis[j].module_index != 0) f_cols.push_back(j);
    }
    row.columns = static_cast<long>(f_cols.size());
    SparseRationalMatrix f(next, static_cast<int>(f_cols.size()));
    for (std::size_t j = 0; j < f_cols.size(); ++j) f.set_column(static_cast<int>(j), all.column(f_cols[j]));
    row.kernel_dim = row.columns - rank(f);
    row.expected = completion_family_dimension(p, order);

    row.image_in_v1 = true;
    for (const auto& [k, i] : rows) {
      if (k.module_index != 0) row.image_in_v1 = false;
    }
    // Every v1 monomial of total degree <= order - 1 in Z-degree p+1 is hit.
    std::vector<SparseVector> targets;
    for (int a = 0; a < order; ++a) {
      for (int b = 0; a + b < order; ++b) {
        if (a - b != p + 1) continue;
        CochainIndex k{c.fock().vacuum(), 0};
        k.mono.x[u.index_of(1, 2)] = a;
        k.mono.d[y] = b;
        auto it = rows.find(k);
        if (it == rows.end()) {
          targets.push_back({{next, 1}});  // outside every image: forces a failure below
        } else {
          targets.push_back({{it->second, 1}});
        }
      }
    }
    SparseRationalMatrix padded(next + 1, all.cols());
    for (int j = 0; j < all.cols(); ++j) padded.set_column(j, all.column(j));
    row.image_covers = quotient_dimension(targets, padded) == 0;
    if (row.kernel_dim != row.expected || !row.image_in_v1 || !row.image_covers) rep.ok = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace sbrst
