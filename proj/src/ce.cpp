#include "sbrst/ce.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "sbrst/homology.hpp"

namespace sbrst {

namespace {

int tuple_parity(const LieSuperalgebra& alg, const std::vector<int>& t) {
  int n = 0;
  for (int a : t) n += alg.parity(a).value();
  return n;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Value of the basis cochain (t, k) on its own sorted tuple.
Rational own(const Representation& module, const std::vector<int>& t, int k) {
  const LieSuperalgebra& alg = module.algebra();
  Integer mult = 1;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    mult *= factorial(static_cast<int>(j - i));
    i = j;
  }
  // Sign carried by iota: one factor per pair (odd E before even E) in the sorted tuple, and
  // (-1)^{[v] #odd} from moving the value past the arguments.
  int odd = 0, swaps = 0;
  for (int a : t) {
    if (alg.parity(a).is_odd()) ++odd;
    else swaps += odd;
  }
  const int e = swaps + module.parity(k).value() * odd;
  return Rational(mult) * sign_of(e);
}

// Sorts a tuple of basis elements by adjacent transpositions, each contributing
// -(-1)^{[x][y]}. nullopt when the cochain must vanish (a repeated even element).
std::optional<std::pair<int, std::vector<int>>> sort_tuple(const LieSuperalgebra& alg, std::vector<int> t) {
  int sign = 1;
  for (std::size_t n = t.size(); n > 1; --n) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (t[i] > t[i + 1]) {
        sign *= -koszul(alg.parity(t[i]), alg.parity(t[i + 1]));
        std::swap(t[i], t[i + 1]);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] == t[i + 1] && !alg.parity(t[i]).is_odd()) return std::nullopt;
  }
  return std::make_pair(sign, std::move(t));
}

void sorted_tuples(const LieSuperalgebra& alg, int p, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int a = start; a < alg.dim(); ++a) {
    cur.push_back(a);
    sorted_tuples(alg, p, alg.parity(a).is_odd() ? a : a + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> sorted_tuples(const LieSuperalgebra& alg, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  sorted_tuples(alg, p, 0, cur, out);
  return out;
}

}  // namespace

std::vector<CeIndex> ce_basis(const Representation& module, int p) {
  if (p < 0) return {};
  std::vector<CeIndex> out;
  for (auto& t : sorted_tuples(module.algebra(), p)) {
    for (int k = 0; k < module.dim(); ++k) out.push_back({t, k});
  }
  return out;
}

Rational ce_evaluate(const Representation& module, const CeIndex& b, const std::vector<int>& args) {
  auto s = sort_tuple(module.algebra(), args);
  if (!s || s->second != b.tuple) return 0;
  return own(module, b.tuple, b.module_index) * s->first;
}

SparseRationalMatrix ce_differential_matrix(const Representation& module, int p, DeltaPart part) {
  if (p < 0) throw std::invalid_argument("ce_differential_matrix: p must be nonnegative");
  const LieSuperalgebra& alg = module.algebra();
  const auto src = ce_basis(module, p);
  const auto tgt = ce_basis(module, p + 1);
  std::map<CeIndex, int> src_pos;
  for (int i = 0; i < static_cast<int>(src.size()); ++i) src_pos[src[i]] = i;
  SparseRationalMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));

  // (d phi)(t') is accumulated row by row: entry (t', k'), (s, k) is the v_{k'} component of
  // (d phi_{s,k})(t') divided by own(t', k').
  for (int row = 0; row < static_cast<int>(tgt.size()); ++row) {
    const auto& [t, kt] = tgt[row];
    SparseVector acc;
    std::vector<int> prefix(t.size() + 1, 0);
    for (std::size_t i = 0; i < t.size(); ++i) prefix[i + 1] = prefix[i] + alg.parity(t[i]).value();
    if (part != DeltaPart::kDelta2) {
      for (std::size_t r = 0; r < t.size(); ++r) {
        std::vector<int> s = t;
        s.erase(s.begin() + static_cast<long>(r));
        const int ar = alg.parity(t[r]).value();
        const auto& act = module.action(t[r]);
        for (int k = 0; k < module.dim(); ++k) {
          const Rational val = act.at(kt, k);
          if (val == 0) continue;
          const int g = tuple_parity(alg, s) + module.parity(k).value();
          const int e = static_cast<int>(r) + ar * (g + prefix[r]);
          axpy(acc, own(module, s, k) * val * sign_of(e), SparseVector{{src_pos.at({s, k}), 1}});
        }
      }
    }
    if (part != DeltaPart::kDelta1) {
      for (std::size_t r = 0; r < t.size(); ++r) {
        for (std::size_t s = r + 1; s < t.size(); ++s) {
          const int as = alg.parity(t[s]).value();
          // Sigma_{r,s} - Sigma_{s-1,s} = -[A_s] (sum_{i=r+1}^{s-1} [A_i]); [g] cancels.
          const int e = static_cast<int>(s) + as * (prefix[s] - prefix[r + 1]);
          for (const auto& [c, beta] : alg.bracket(t[r], t[s])) {
            std::vector<int> u = t;
            u[r] = c;
            u.erase(u.begin() + static_cast<long>(s));
            auto sorted = sort_tuple(alg, u);
            if (!sorted) continue;
            const CeIndex b{sorted->second, kt};
            axpy(acc, own(module, b.tuple, kt) * beta * (sorted->first * sign_of(e)),
                 SparseVector{{src_pos.at(b), 1}});
          }
        }
      }
    }
    const Rational norm = own(module, t, kt);
    for (const auto& [col, v] : acc) m.set(row, col, v / norm);
  }
  return m;
}

IotaReport iota_compare(const BrstComplex& c, int p) {
  if (!c.mixing().empty()) throw std::invalid_argument("iota_compare needs D = 0");
  if (p < 0) throw std::invalid_argument("iota_compare: p must be nonnegative");
  IotaReport report;
  report.p = p;
  const GradingScheme window = GradingScheme::degree_window(p + 1);
  const CochainBlock src = enumerate_block(c, p, window);
  const CochainBlock tgt = enumerate_block(c, p + 1, window);

  const auto ce_src = ce_basis(c.module(), p);
  const auto ce_tgt = ce_basis(c.module(), p + 1);
  auto iota = [](const CochainIndex& b) {
    CeIndex r;
    r.module_index = b.module_index;
    for (int a = 0; a < static_cast<int>(b.mono.x.size()); ++a) {
      for (int e = 0; e < b.mono.x[a]; ++e) r.tuple.push_back(a);
    }
    return r;
  };
  std::map<CeIndex, int> src_pos, tgt_pos;
  for (int i = 0; i < static_cast<int>(ce_src.size()); ++i) src_pos[ce_src[i]] = i;
  for (int i = 0; i < static_cast<int>(ce_tgt.size()); ++i) tgt_pos[ce_tgt[i]] = i;
  if (src_pos.size() != static_cast<std::size_t>(src.size()) ||
      tgt_pos.size() != static_cast<std::size_t>(tgt.size())) {
    throw ConsistencyError("iota_compare: cochain dimensions differ between the two models");
  }

  const DeltaPart parts[2] = {DeltaPart::kDelta1, DeltaPart::kDelta2};
  for (int i = 0; i < 2; ++i) {
    const DifferentialMatrix d = differential_matrix(c, src, tgt, parts[i]);
    if (d.any_escape()) throw ConsistencyError("iota_compare: delta left the degree window");
    const SparseRationalMatrix ce = ce_differential_matrix(c.module(), p, parts[i]);
    SparseRationalMatrix conj(tgt.size(), src.size());
    for (int col = 0; col < src.size(); ++col) {
      const int cc = src_pos.at(iota(src.basis[col]));
      for (int row = 0; row < tgt.size(); ++row) {
        const Rational v = ce.at(tgt_pos.at(iota(tgt.basis[row])), cc);
        if (v != 0) conj.set(row, col, v);
      }
    }
    SparseRationalMatrix diff = d.matrix;
    diff -= conj;
    for (int col = 0; col < diff.cols(); ++col) {
      for (const auto& [row, v] : diff.column(col)) {
        ++report.mismatched_entries;
        const Rational a = abs(v);
        if (a > report.max_discrepancy[i]) report.max_discrepancy[i] = a;
      }
    }
  }
  report.ok = report.mismatched_entries == 0;
  return report;
}

std::vector<long> ce_betti(const Representation& module, int pmax) {
  std::vector<long> ranks;
  for (int p = 0; p <= pmax; ++p) ranks.push_back(rank(ce_differential_matrix(module, p)));
  std::vector<long> betti;
  for (int p = 0; p <= pmax; ++p) {
    const long dim = static_cast<long>(ce_basis(module, p).size());
    betti.push_back(dim - ranks[p] - (p > 0 ? ranks[p - 1] : 0));
  }
  return betti;
}

}  // namespace sbrst
