#include "sbrst/catalog.hpp"

#include <bit>
#include <stdexcept>

namespace sbrst {

namespace {

Weight unit_weight(int size, int i, int j) {
  Weight w(size, 0);
  --w[j - 1];
  ++w[i - 1];
  return w;  // e_i - e_j
}

Weight negate(Weight w) {
  for (auto& v : w) v = -v;
  return w;
}

SparseVector gl_bracket(const GLmnSpec& s, int i, int j, int k, int l) {
  SparseVector r;
  if (j == k) add_entry(r, s.index(i, l), 1);
  if (l == i) {
    const Parity a = s.index_parity(i) + s.index_parity(j);
    const Parity b = s.index_parity(k) + s.index_parity(l);
    add_entry(r, s.index(k, j), -koszul(a, b));
  }
  return r;
}

}  // namespace

std::string GLmnSpec::unit_label(int i, int j) const {
  if (size() < 10) return "E_" + std::to_string(i) + std::to_string(j);
  return "E_" + std::to_string(i) + "_" + std::to_string(j);
}

AlgebraPtr build_glmn(int m, int n) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("gl(m|n) needs m + n >= 1");
  const GLmnSpec s{m, n};
  std::vector<BasisIndex> basis;
  for (int i = 1; i <= s.size(); ++i) {
    for (int j = 1; j <= s.size(); ++j) {
      basis.push_back({s.index(i, j), s.index_parity(i) + s.index_parity(j), s.unit_label(i, j)});
    }
  }
  LieSuperalgebra::Brackets br;
  for (int i = 1; i <= s.size(); ++i) {
    for (int j = 1; j <= s.size(); ++j) {
      for (int k = 1; k <= s.size(); ++k) {
        for (int l = 1; l <= s.size(); ++l) {
          SparseVector v = gl_bracket(s, i, j, k, l);
          if (!v.empty()) br[{s.index(i, j), s.index(k, l)}] = std::move(v);
        }
      }
    }
  }
  const std::string name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return std::make_shared<const LieSuperalgebra>(name, std::move(basis), std::move(br));
}

AlgebraPtr build_sl2() {
  const Parity e = Parity::even();
  std::vector<BasisIndex> basis{{0, e, "e"}, {1, e, "h"}, {2, e, "f"}};
  LieSuperalgebra::Brackets upper;
  upper[{0, 1}] = {{0, -2}};
  upper[{0, 2}] = {{1, 1}};
  upper[{1, 2}] = {{2, -2}};
  return std::make_shared<const LieSuperalgebra>(LieSuperalgebra::from_upper_brackets("sl2", basis, upper));
}

AlgebraPtr build_affine2() {
  const Parity e = Parity::even();
  std::vector<BasisIndex> basis{{0, e, "e1"}, {1, e, "e2"}};
  LieSuperalgebra::Brackets upper;
  upper[{0, 1}] = {{1, 1}};
  return std::make_shared<const LieSuperalgebra>(LieSuperalgebra::from_upper_brackets("aff2", basis, upper));
}

AlgebraPtr build_abelian(int even, int odd) {
  if (even < 0 || odd < 0 || even + odd == 0) throw std::invalid_argument("abelian algebra needs a basis");
  std::vector<BasisIndex> basis;
  for (int a = 0; a < even; ++a) basis.push_back({a, Parity::even(), "a" + std::to_string(a + 1)});
  for (int a = 0; a < odd; ++a) basis.push_back({even + a, Parity::odd(), "b" + std::to_string(a + 1)});
  return std::make_shared<const LieSuperalgebra>(
      "abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")", std::move(basis),
      LieSuperalgebra::Brackets{});
}

int Nilradical::index_of(int i, int j) const {
  for (int a = 0; a < static_cast<int>(units.size()); ++a) {
    if (units[a] == std::make_pair(i, j)) return a;
  }
  return -1;
}

Nilradical build_nilradical(const GLmnSpec& spec, const ParabolicChoice& choice) {
  if (spec.m < 1 || spec.n < 0) throw std::invalid_argument("nilradical needs m >= 1");
  Nilradical u;
  u.spec = spec;
  u.choice = choice;
  u.gl = build_glmn(spec.m, spec.n);
  int split = spec.m;
  if (choice.variant == ParabolicVariant::kB) {
    if (choice.m1 < 1 || choice.m1 >= spec.m) {
      throw std::invalid_argument("variant B needs 1 <= m1 < m (got m1 = " + std::to_string(choice.m1) + ")");
    }
    split = choice.m1;
  } else if (spec.n < 1) {
    throw std::invalid_argument("variant A needs n >= 1");
  }
  std::vector<BasisIndex> basis;
  for (int i = 1; i <= split; ++i) {
    for (int j = split + 1; j <= spec.size(); ++j) {
      const int id = static_cast<int>(u.units.size());
      u.units.emplace_back(i, j);
      basis.push_back({id, spec.index_parity(i) + spec.index_parity(j), spec.unit_label(i, j)});
    }
  }
  LieSuperalgebra::Brackets br;
  for (int a = 0; a < static_cast<int>(u.units.size()); ++a) {
    for (int b = 0; b < static_cast<int>(u.units.size()); ++b) {
      const auto [i, j] = u.units[a];
      const auto [k, l] = u.units[b];
      SparseVector v;
      for (const auto& [c, x] : gl_bracket(spec, i, j, k, l)) {
        const int ic = u.index_of(c / spec.size() + 1, c % spec.size() + 1);
        if (ic < 0) throw StructuralError("nilradical is not closed under the bracket");
        add_entry(v, ic, x);
      }
      if (!v.empty()) throw StructuralError("nilradical is expected to be abelian");
    }
  }
  const std::string name = "u(" + std::to_string(spec.m) + "|" + std::to_string(spec.n) +
                           (choice.variant == ParabolicVariant::kA ? ",A" : ",B" + std::to_string(choice.m1)) + ")";
  u.algebra = std::make_shared<const LieSuperalgebra>(name, std::move(basis), std::move(br));
  return u;
}

Representation natural_module(const GLmnSpec& spec, AlgebraPtr gl) {
  std::vector<BasisIndex> carrier;
  for (int k = 1; k <= spec.size(); ++k) carrier.push_back({k - 1, spec.index_parity(k), "v" + std::to_string(k)});
  std::vector<SparseRationalMatrix> action;
  for (int i = 1; i <= spec.size(); ++i) {
    for (int j = 1; j <= spec.size(); ++j) {
      SparseRationalMatrix m(spec.size(), spec.size());
      m.set(i - 1, j - 1, 1);
      action.push_back(std::move(m));
    }
  }
  return Representation(std::move(gl), std::move(carrier), std::move(action));
}

Representation natural_module(const Nilradical& u) {
  const Representation full = natural_module(u.spec, u.gl);
  std::vector<SparseRationalMatrix> action;
  for (const auto& [i, j] : u.units) action.push_back(full.action(u.spec.index(i, j)));
  return Representation(u.algebra, full.carrier(), std::move(action));
}

Representation kac_module(const Nilradical& u, int lowest_dim) {
  if (u.choice.variant != ParabolicVariant::kA) throw std::invalid_argument("Kac modules need variant A");
  if (lowest_dim < 1) throw std::invalid_argument("Kac module needs a positive lowest component dimension");
  const int r = static_cast<int>(u.units.size());
  if (r > 20) throw std::invalid_argument("Kac module too large");
  const int masks = 1 << r;
  std::vector<BasisIndex> carrier;
  for (int mask = 0; mask < masks; ++mask) {
    std::string label = "K[";
    for (int a = 0, first = 1; a < r; ++a) {
      if (!(mask >> a & 1)) continue;
      if (!first) label += ",";
      first = 0;
      label += std::to_string(u.units[a].first) + std::to_string(u.units[a].second);
    }
    label += "]";
    for (int t = 0; t < lowest_dim; ++t) {
      const std::string full = lowest_dim == 1 ? label : label + "#" + std::to_string(t);
      carrier.push_back({mask * lowest_dim + t, Parity(std::popcount(static_cast<unsigned>(mask))), full});
    }
  }
  const int dim = masks * lowest_dim;
  std::vector<SparseRationalMatrix> action;
  for (int a = 0; a < r; ++a) {
    SparseRationalMatrix m(dim, dim);
    for (int mask = 0; mask < masks; ++mask) {
      if (mask >> a & 1) continue;
      const int before = std::popcount(static_cast<unsigned>(mask & ((1 << a) - 1)));
      for (int t = 0; t < lowest_dim; ++t) {
        m.set((mask | (1 << a)) * lowest_dim + t, mask * lowest_dim + t, sign_of(before));
      }
    }
    action.push_back(std::move(m));
  }
  return Representation(u.algebra, std::move(carrier), std::move(action));
}

std::vector<ActingOperator> levi_action(const Nilradical& u) {
  const GLmnSpec& s = u.spec;
  const int split = u.choice.variant == ParabolicVariant::kA ? s.m : u.choice.m1;
  const Representation nat = natural_module(s, u.gl);
  const int r = static_cast<int>(u.units.size());
  std::vector<ActingOperator> ops;
  for (int k = 1; k <= s.size(); ++k) {
    for (int l = 1; l <= s.size(); ++l) {
      if ((k <= split) != (l <= split)) continue;
      SparseRationalMatrix on_u(r, r);
      for (int b = 0; b < r; ++b) {
        const auto [i, j] = u.units[b];
        for (const auto& [c, x] : gl_bracket(s, k, l, i, j)) {
          const int ic = u.index_of(c / s.size() + 1, c % s.size() + 1);
          if (ic < 0) throw StructuralError("Levi factor does not normalise u");
          on_u.add(ic, b, x);
        }
      }
      ops.push_back({s.unit_label(k, l), s.index_parity(k) + s.index_parity(l), std::move(on_u),
                     nat.action(s.index(k, l))});
    }
  }
  return ops;
}

std::vector<Weight> generator_weights(const GLmnSpec& spec) {
  std::vector<Weight> w;
  for (int i = 1; i <= spec.size(); ++i) {
    for (int j = 1; j <= spec.size(); ++j) w.push_back(negate(unit_weight(spec.size(), i, j)));
  }
  return w;
}

std::vector<Weight> generator_weights(const Nilradical& u) {
  std::vector<Weight> w;
  for (const auto& [i, j] : u.units) w.push_back(negate(unit_weight(u.spec.size(), i, j)));
  return w;
}

std::vector<Weight> natural_weights(const GLmnSpec& spec) {
  std::vector<Weight> w;
  for (int k = 1; k <= spec.size(); ++k) {
    Weight e(spec.size(), 0);
    e[k - 1] = 1;
    w.push_back(std::move(e));
  }
  return w;
}

std::vector<Weight> kac_weights(const Nilradical& u, int lowest_dim) {
  const int r = static_cast<int>(u.units.size());
  std::vector<Weight> w;
  for (int mask = 0; mask < (1 << r); ++mask) {
    Weight sum(u.spec.size(), 0);
    for (int a = 0; a < r; ++a) {
      if (!(mask >> a & 1)) continue;
      const Weight root = unit_weight(u.spec.size(), u.units[a].first, u.units[a].second);
      for (int t = 0; t < u.spec.size(); ++t) sum[t] += root[t];
    }
    for (int t = 0; t < lowest_dim; ++t) w.push_back(sum);
  }
  return w;
}

std::vector<Weight> adjoint_weights(const GLmnSpec& spec) {
  std::vector<Weight> w;
  for (int i = 1; i <= spec.size(); ++i) {
    for (int j = 1; j <= spec.size(); ++j) w.push_back(unit_weight(spec.size(), i, j));
  }
  return w;
}

MixingSet mixed_rows(const Nilradical& u, int m1) {
  if (u.choice.variant != ParabolicVariant::kA) throw std::invalid_argument("mixed rows need variant A");
  if (m1 < 1 || m1 >= u.spec.m) {
    throw std::invalid_argument("mixed rows need 1 <= m1 < m (got m1 = " + std::to_string(m1) + ")");
  }
  std::vector<int> members;
  for (int a = 0; a < static_cast<int>(u.units.size()); ++a) {
    if (u.units[a].first > m1) members.push_back(a);
  }
  return MixingSet(static_cast<int>(u.units.size()), std::move(members));
}

}  // namespace sbrst
