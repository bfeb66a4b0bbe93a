#include "sbrst/brst.hpp"

#include <algorithm>
#include <set>

namespace sbrst {

namespace {

void add_to(CochainVector& v, const CochainIndex& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

// Gamma^A together with its vacuum eigenvalue (Gamma^A vac = lambda vac).
struct PreparedOperator {
  const ActingOperator* op;
  WeylElement gamma;
  Rational vacuum_eigenvalue;
};

PreparedOperator prepare(const BrstComplex& c, const ActingOperator& a) {
  if (a.on_algebra.rows() != c.algebra().dim() || a.on_algebra.cols() != c.algebra().dim() ||
      a.on_module.rows() != c.module().dim() || a.on_module.cols() != c.module().dim()) {
    throw std::invalid_argument("acting operator " + a.label + " has the wrong shape");
  }
  PreparedOperator p{&a, gamma_from_matrix(c.weyl(), a.on_algebra, a.parity), 0};
  const FockMonomial vac = c.fock().vacuum();
  for (const auto& [m, v] : c.fock().apply(p.gamma, vac)) {
    if (m != vac) throw ConsistencyError("Gamma(" + a.label + ") does not preserve the vacuum line");
    p.vacuum_eigenvalue = v;
  }
  return p;
}

CochainVector act_prepared(const BrstComplex& c, const PreparedOperator& p, const CochainIndex& b) {
  CochainVector out;
  const Parity pm = c.fock().parity(b.mono);
  const int s = koszul(p.op->parity, pm);
  for (const auto& [m, v] : c.fock().apply(p.gamma, b.mono)) add_to(out, {m, b.module_index}, v);
  add_to(out, b, -s * p.vacuum_eigenvalue);
  for (const auto& [i, v] : p.op->on_module.column(b.module_index)) add_to(out, {b.mono, i}, s * v);
  return out;
}

Weight add_weights(Weight a, const Weight& b, long scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

}  // namespace

std::string BlockId::to_string() const {
  if (weight) return sbrst::to_string(*weight);
  return "window<=" + std::to_string(window_bound);
}

int CochainBlock::index_of(const CochainIndex& b) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), b);
  if (it == basis.end() || *it != b) return -1;
  return static_cast<int>(it - basis.begin());
}

SparseRationalMatrix DifferentialMatrix::stacked() const {
  SparseRationalMatrix s(matrix.rows() + escaped.rows(), matrix.cols());
  for (int j = 0; j < matrix.cols(); ++j) {
    SparseVector col = matrix.column(j);
    for (const auto& [i, v] : escaped.column(j)) col[matrix.rows() + i] = v;
    s.set_column(j, col);
  }
  return s;
}

std::vector<ActingOperator> self_action(const Representation& module) {
  const LieSuperalgebra& alg = module.algebra();
  std::vector<ActingOperator> ops;
  for (int a = 0; a < alg.dim(); ++a) ops.push_back({alg.label(a), alg.parity(a), alg.ad(a), module.action(a)});
  return ops;
}

BrstComplex::BrstComplex(Representation module, MixingSet mixing)
    : module_(std::move(module)),
      fock_(WeylSuperalgebra::over_dual(module_.algebra()), std::move(mixing)) {
  const LieSuperalgebra& alg = algebra();
  if (static_cast<int>(module_.actions().size()) != alg.dim()) {
    throw StructuralError("module has the wrong number of action matrices");
  }
  const WeylSuperalgebra& w = weyl();
  for (int a = 0; a < alg.dim(); ++a) {
    const WeylElement term = w.multiply(w.generator(WeylGenerator::x(a)), gamma(w, alg, a));
    delta2_ += term * Rational(parity_sign(alg.parity(a)), 2);
  }
}

Parity BrstComplex::parity(const CochainIndex& b) const {
  return fock_.parity(b.mono) + module_.parity(b.module_index);
}

Weight BrstComplex::fock_weight(const FockMonomial& m, const GradingScheme& scheme) const {
  Weight w(scheme.torus_rank(), 0);
  for (int a = 0; a < fock_.rank(); ++a) {
    const int e = m.x[a] - m.d[a];
    if (e != 0) w = add_weights(std::move(w), scheme.generator_weights.at(a), e);
  }
  return w;
}

Weight BrstComplex::weight(const CochainIndex& b, const GradingScheme& scheme) const {
  return add_weights(fock_weight(b.mono, scheme), scheme.module_weights.at(b.module_index));
}

CochainVector BrstComplex::delta1(const CochainIndex& b) const {
  CochainVector out;
  const Parity pm = fock_.parity(b.mono);
  for (int a = 0; a < algebra().dim(); ++a) {
    const SparseVector& col = module_.action(a).column(b.module_index);
    if (col.empty()) continue;
    auto moved = fock_.apply_generator(WeylGenerator::x(a), b.mono);
    if (!moved) continue;
    const Parity pa = algebra().parity(a);
    const Rational s = moved->first * (parity_sign(pa) * koszul(pa, pm));
    for (const auto& [i, v] : col) add_to(out, {moved->second, i}, s * v);
  }
  return out;
}

CochainVector BrstComplex::delta2(const CochainIndex& b) const {
  CochainVector out;
  for (const auto& [m, v] : fock_.apply(delta2_, b.mono)) add_to(out, {m, b.module_index}, v);
  return out;
}

CochainVector BrstComplex::delta(const CochainIndex& b, DeltaPart part) const {
  if (part == DeltaPart::kDelta1) return delta1(b);
  if (part == DeltaPart::kDelta2) return delta2(b);
  CochainVector out = delta1(b);
  for (const auto& [k, v] : delta2(b)) add_to(out, k, v);
  return out;
}

CochainVector BrstComplex::delta(const CochainVector& v, DeltaPart part) const {
  CochainVector out;
  for (const auto& [b, c] : v) {
    for (const auto& [k, w] : delta(b, part)) add_to(out, k, c * w);
  }
  return out;
}

CochainVector BrstComplex::act(const ActingOperator& a, const CochainIndex& b) const {
  return act_prepared(*this, prepare(*this, a), b);
}

CochainVector BrstComplex::act(const ActingOperator& a, const CochainVector& v) const {
  const PreparedOperator p = prepare(*this, a);
  CochainVector out;
  for (const auto& [b, c] : v) {
    for (const auto& [k, w] : act_prepared(*this, p, b)) add_to(out, k, c * w);
  }
  return out;
}

std::string BrstComplex::to_string(const CochainIndex& b) const {
  return fock_.to_string(b.mono) + " (x) " + module_.label(b.module_index);
}

std::vector<FockMonomial> enumerate_monomials(const BrstComplex& c, const GradingScheme& scheme,
                                              const MonomialFilter& filter) {
  const FockSpace& fock = c.fock();
  const int n = fock.rank();
  const bool weighted = scheme.weighted();
  if ((filter.weight || filter.functional) && !weighted) {
    throw std::invalid_argument("weight filters need a weight-block grading");
  }
  if (filter.functional && (!filter.weight || (filter.functional_uses_degree && !filter.degree))) {
    throw std::invalid_argument("a budget functional needs a fixed weight (and degree)");
  }

  std::vector<Creator> creators;
  std::vector<long> cost(n, 0);
  for (int a = 0; a < n; ++a) {
    creators.push_back(fock.creator(a));
    if (!filter.functional) continue;
    IntVector ext = scheme.generator_weights.at(a);
    if (creators[a].degree_step < 0) {
      for (auto& v : ext) v = -v;
    }
    if (filter.functional_uses_degree) ext.push_back(creators[a].degree_step);
    cost[a] = dot(*filter.functional, ext);
    if (!creators[a].parity.is_odd() && cost[a] < 1) {
      throw std::invalid_argument("budget functional is not positive on an even creator");
    }
  }
  long target = 0;
  if (filter.functional) {
    IntVector t = *filter.weight;
    if (filter.functional_uses_degree) t.push_back(*filter.degree);
    target = dot(*filter.functional, t);
  }
  // Most negative cost still reachable from odd creators at positions >= pos.
  std::vector<long> suffix_min(n + 1, 0);
  for (int a = n - 1; a >= 0; --a) {
    suffix_min[a] = suffix_min[a + 1] + (creators[a].parity.is_odd() ? std::min(0L, cost[a]) : 0);
  }
  if (!filter.functional && !filter.max_total) {
    for (const auto& cr : creators) {
      if (!cr.parity.is_odd()) throw std::invalid_argument("unbounded monomial enumeration");
    }
  }

  std::vector<FockMonomial> out;
  FockMonomial cur = fock.vacuum();
  auto exponent = [&](int a) -> int& {
    return creators[a].degree_step > 0 ? cur.x[a] : cur.d[a];
  };
  auto recurse = [&](auto&& self, int pos, int total, long used) -> void {
    if (pos == n) {
      if (filter.functional && used != target) return;
      if (filter.degree && cur.degree() != *filter.degree) return;
      if (filter.weight && c.fock_weight(cur, scheme) != *filter.weight) return;
      out.push_back(cur);
      return;
    }
    const bool odd = creators[pos].parity.is_odd();
    for (int e = 0;; ++e) {
      if (odd && e > 1) break;
      if (filter.max_total && total + e > *filter.max_total) break;
      const long u = used + e * cost[pos];
      if (filter.functional && u + suffix_min[pos + 1] > target) {
        if (odd) continue;
        break;
      }
      exponent(pos) = e;
      self(self, pos + 1, total + e, u);
    }
    exponent(pos) = 0;
  };
  recurse(recurse, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Pointedness {
  std::optional<IntVector> weight_only;
  std::optional<IntVector> extended;
};

Pointedness pointedness(const BrstComplex& c, const GradingScheme& scheme) {
  std::vector<IntVector> plain, ext;
  for (int a = 0; a < c.fock().rank(); ++a) {
    const Creator cr = c.fock().creator(a);
    if (cr.parity.is_odd()) continue;
    IntVector w = scheme.generator_weights.at(a);
    if (cr.degree_step < 0) {
      for (auto& v : w) v = -v;
    }
    plain.push_back(w);
    w.push_back(cr.degree_step);
    ext.push_back(std::move(w));
  }
  const int r = scheme.torus_rank();
  Pointedness p;
  p.weight_only = positive_functional(plain, r);
  if (!p.weight_only) p.extended = positive_functional(ext, r + 1);
  return p;
}

std::vector<CochainIndex> tensor_basis(const BrstComplex& c, const GradingScheme& scheme,
                                       const Weight& block_weight, const MonomialFilter& base) {
  std::vector<CochainIndex> basis;
  for (int k = 0; k < c.module().dim(); ++k) {
    MonomialFilter f = base;
    f.weight = add_weights(block_weight, scheme.module_weights.at(k), -1);
    for (auto& m : enumerate_monomials(c, scheme, f)) basis.push_back({std::move(m), k});
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

CochainBlock window_cell(const BrstComplex& c, const GradingScheme& scheme, int p, int bound) {
  CochainBlock b;
  b.id.window_bound = bound;
  b.degree = p;
  MonomialFilter f;
  f.max_total = bound;
  f.degree = p;
  GradingScheme plain = GradingScheme::degree_window(bound);
  (void)scheme;
  for (const auto& m : enumerate_monomials(c, plain, f)) {
    for (int k = 0; k < c.module().dim(); ++k) b.basis.push_back({m, k});
  }
  std::sort(b.basis.begin(), b.basis.end());
  return b;
}

void require_torus(const BrstComplex& c, const GradingScheme& scheme) { check_torus(c.module(), scheme); }

}  // namespace

CochainBlock enumerate_block(const BrstComplex& c, int p, const GradingScheme& scheme,
                             const std::optional<Weight>& block_weight) {
  if (!scheme.weighted()) return window_cell(c, scheme, p, scheme.bound);
  if (!block_weight) throw std::invalid_argument("weight-block enumeration needs a block weight");
  require_torus(c, scheme);
  const Pointedness pt = pointedness(c, scheme);
  MonomialFilter f;
  f.degree = p;
  if (pt.weight_only) {
    f.functional = pt.weight_only;
  } else if (pt.extended) {
    f.functional = pt.extended;
    f.functional_uses_degree = true;
  } else {
    throw NotPointedError("creator weights are not pointed; use the degree-window grading");
  }
  CochainBlock b;
  b.id.weight = block_weight;
  b.degree = p;
  b.basis = tensor_basis(c, scheme, *block_weight, f);
  return b;
}

std::vector<Weight> block_weights(const BrstComplex& c, const GradingScheme& scheme, int pmin, int pmax) {
  MonomialFilter f;
  f.max_total = scheme.bound;
  std::set<Weight> seen;
  for (const auto& m : enumerate_monomials(c, scheme, f)) {
    const int p = m.degree();
    if (p < pmin || p > pmax) continue;
    const Weight fw = c.fock_weight(m, scheme);
    for (int k = 0; k < c.module().dim(); ++k) seen.insert(add_weights(fw, scheme.module_weights.at(k)));
  }
  return {seen.begin(), seen.end()};
}

BlockComplex block_complex(const BrstComplex& c, const GradingScheme& scheme, const std::optional<Weight>& weight,
                           int pmin, int pmax) {
  BlockComplex bc;
  if (!scheme.weighted()) {
    bc.id.window_bound = scheme.bound;
    for (int p = pmin - 1; p <= pmax + 1; ++p) bc.cells[p] = window_cell(c, scheme, p, scheme.bound);
    return bc;
  }
  if (!weight) throw std::invalid_argument("weight-block complex needs a weight");
  bc.id.weight = weight;
  const Pointedness pt = pointedness(c, scheme);
  if (pt.weight_only) {
    bc.complete = true;
    MonomialFilter f;
    f.functional = pt.weight_only;
    for (auto& b : tensor_basis(c, scheme, *weight, f)) {
      const int p = b.mono.degree();
      CochainBlock& cell = bc.cells[p];
      cell.id = bc.id;
      cell.degree = p;
      cell.basis.push_back(std::move(b));
    }
    for (int p = pmin; p <= pmax; ++p) {
      CochainBlock& cell = bc.cells[p];
      cell.id = bc.id;
      cell.degree = p;
    }
    return bc;
  }
  if (!pt.extended) throw NotPointedError("creator weights are not pointed; use the degree-window grading");
  for (int p = pmin - 1; p <= pmax + 1; ++p) {
    MonomialFilter f;
    f.degree = p;
    f.functional = pt.extended;
    f.functional_uses_degree = true;
    CochainBlock& cell = bc.cells[p];
    cell.id = bc.id;
    cell.degree = p;
    cell.basis = tensor_basis(c, scheme, *weight, f);
  }
  return bc;
}

std::vector<BlockComplex> enumerate_complexes(const BrstComplex& c, const GradingScheme& scheme, int pmin,
                                              int pmax) {
  if (pmin > pmax) throw std::invalid_argument("empty degree range");
  std::vector<BlockComplex> out;
  if (!scheme.weighted()) {
    out.push_back(block_complex(c, scheme, std::nullopt, pmin, pmax));
    return out;
  }
  require_torus(c, scheme);
  for (const auto& w : block_weights(c, scheme, pmin, pmax)) out.push_back(block_complex(c, scheme, w, pmin, pmax));
  return out;
}

DifferentialMatrix differential_matrix(const BrstComplex& c, const CochainBlock& src, const CochainBlock& tgt,
                                       DeltaPart part) {
  if (tgt.degree != src.degree + 1) throw std::invalid_argument("differential target must have degree p+1");
  DifferentialMatrix d;
  d.source_degree = src.degree;
  d.matrix = SparseRationalMatrix(tgt.size(), src.size());
  d.column_escapes.assign(src.size(), false);
  std::map<CochainIndex, int> escaped_index;
  std::vector<SparseVector> escaped_cols(src.size());
  for (int j = 0; j < src.size(); ++j) {
    SparseVector col;
    for (const auto& [b, v] : c.delta(src.basis[j], part)) {
      const int i = tgt.index_of(b);
      if (i >= 0) {
        col[i] = v;
        continue;
      }
      if (tgt.id.weight) {
        throw ConsistencyError("delta leaves weight block " + tgt.id.to_string() + " at " + c.to_string(b));
      }
      auto [it, inserted] = escaped_index.try_emplace(b, static_cast<int>(escaped_index.size()));
      if (inserted) d.escaped_rows.push_back(b);
      escaped_cols[j][it->second] = v;
      d.column_escapes[j] = true;
    }
    d.matrix.set_column(j, col);
  }
  d.escaped = SparseRationalMatrix(static_cast<int>(d.escaped_rows.size()), src.size());
  for (int j = 0; j < src.size(); ++j) d.escaped.set_column(j, escaped_cols[j]);
  return d;
}

void check_square_zero(const BrstComplex& c, const std::vector<BlockComplex>& blocks) {
  for (const auto& bc : blocks) {
    for (const auto& [p, cell] : bc.cells) {
      for (const auto& b : cell.basis) {
        const CochainVector dd = c.delta(c.delta(b));
        if (!dd.empty()) {
          throw ConsistencyError("delta^2 != 0 on " + c.to_string(b) + " in block " + bc.id.to_string());
        }
      }
    }
  }
}

std::vector<std::string> ideal_violations(const BrstComplex& c, const std::vector<ActingOperator>& ops) {
  std::vector<std::string> bad;
  const WeylSuperalgebra& w = c.weyl();
  const MixingSet& s = c.mixing();
  for (const auto& op : ops) {
    const WeylElement g = gamma_from_matrix(w, op.on_algebra, op.parity);
    bool ok = true;
    for (int a = 0; a < w.rank() && ok; ++a) {
      const bool in_d = s.contains(a);
      const WeylGenerator gen = in_d ? WeylGenerator::x(a) : WeylGenerator::d(a);
      const WeylElement comm = graded_commutator(w, g, w.generator(gen));
      for (const auto& [m, v] : comm.terms()) {
        for (int b = 0; b < w.rank(); ++b) {
          // J(D) is spanned by X_b (b in D) and d_b (b not in D).
          if ((in_d && (m.d[b] != 0 || (m.x[b] != 0 && !s.contains(b)))) ||
              (!in_d && (m.x[b] != 0 || (m.d[b] != 0 && s.contains(b))))) {
            ok = false;
          }
        }
      }
    }
    if (!ok) bad.push_back(op.label);
  }
  return bad;
}

EquivarianceReport equivariance_check(const BrstComplex& c, const std::vector<ActingOperator>& ops,
                                      const std::vector<BlockComplex>& blocks) {
  EquivarianceReport r;
  r.ideal_violations = ideal_violations(c, ops);
  for (const auto& op : ops) {
    const PreparedOperator p = prepare(c, op);
    const int s = parity_sign(op.parity);
    bool ok = true;
    for (const auto& bc : blocks) {
      for (const auto& [deg, cell] : bc.cells) {
        for (const auto& b : cell.basis) {
          ++r.checked_columns;
          CochainVector lhs;
          for (const auto& [k, v] : c.delta(b)) {
            for (const auto& [kk, vv] : act_prepared(c, p, k)) add_to(lhs, kk, v * vv);
          }
          for (const auto& [k, v] : act_prepared(c, p, b)) {
            for (const auto& [kk, vv] : c.delta(k)) add_to(lhs, kk, -s * v * vv);
          }
          if (!lhs.empty()) ok = false;
        }
      }
    }
    if (!ok) r.commutator_violations.push_back(op.label);
  }
  r.ok = r.ideal_violations.empty() && r.commutator_violations.empty();
  return r;
}

EquivarianceReport equivariance_check(const BrstComplex& c, const std::vector<ActingOperator>& ops,
                                      const GradingScheme& scheme, int pmin, int pmax) {
  return equivariance_check(c, ops, enumerate_complexes(c, scheme, pmin, pmax));
}

}  // namespace sbrst
