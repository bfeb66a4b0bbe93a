#include "sbrst/supercore.hpp"

#include <sstream>

namespace sbrst {

namespace {

const SparseVector kEmpty;

}  // namespace

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<BasisIndex> basis, Brackets brackets)
    : name_(std::move(name)), basis_(std::move(basis)), brackets_(std::move(brackets)) {
  for (int i = 0; i < dim(); ++i) {
    if (basis_[i].id != i) throw StructuralError("basis ids must be dense and ordered");
  }
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    const auto [a, b] = it->first;
    if (a < 0 || a >= dim() || b < 0 || b >= dim()) throw StructuralError("bracket index out of range");
    for (auto e = it->second.begin(); e != it->second.end();) {
      if (e->first < 0 || e->first >= dim()) throw StructuralError("bracket result index out of range");
      e = e->second == 0 ? it->second.erase(e) : std::next(e);
    }
    it = it->second.empty() ? brackets_.erase(it) : std::next(it);
  }
}

LieSuperalgebra LieSuperalgebra::from_upper_brackets(std::string name, std::vector<BasisIndex> basis,
                                                     const Brackets& upper) {
  Brackets full;
  for (const auto& [key, vec] : upper) {
    full[key] = vec;
    if (key.first != key.second) {
      const int s = -koszul(basis.at(key.first).parity, basis.at(key.second).parity);
      SparseVector mirrored;
      axpy(mirrored, s, vec);
      full[{key.second, key.first}] = mirrored;
    }
  }
  return LieSuperalgebra(std::move(name), std::move(basis), std::move(full));
}

std::optional<int> LieSuperalgebra::find(const std::string& label) const {
  for (const auto& b : basis_) {
    if (b.label == label) return b.id;
  }
  return std::nullopt;
}

const SparseVector& LieSuperalgebra::bracket(int a, int b) const {
  auto it = brackets_.find({a, b});
  return it == brackets_.end() ? kEmpty : it->second;
}

SparseVector LieSuperalgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector r;
  for (const auto& [a, xa] : x) {
    for (const auto& [b, yb] : y) axpy(r, xa * yb, bracket(a, b));
  }
  return r;
}

SparseRationalMatrix LieSuperalgebra::ad(int a) const {
  SparseRationalMatrix m(dim(), dim());
  for (int b = 0; b < dim(); ++b) m.set_column(b, bracket(a, b));
  return m;
}

SparseRationalMatrix LieSuperalgebra::ad(const SparseVector& x) const {
  SparseRationalMatrix m(dim(), dim());
  for (const auto& [a, xa] : x) m += ad(a) * xa;
  return m;
}

std::optional<Parity> LieSuperalgebra::homogeneous_parity(const SparseVector& x) const {
  std::optional<Parity> p;
  for (const auto& [a, v] : x) {
    if (v == 0) continue;
    if (p && *p != parity(a)) return std::nullopt;
    p = parity(a);
  }
  return p.value_or(Parity::even());
}

Representation::Representation(AlgebraPtr algebra, std::vector<BasisIndex> carrier,
                               std::vector<SparseRationalMatrix> action)
    : algebra_(std::move(algebra)), carrier_(std::move(carrier)), action_(std::move(action)) {
  if (!algebra_) throw StructuralError("representation without algebra");
  for (int i = 0; i < dim(); ++i) {
    if (carrier_[i].id != i) throw StructuralError("carrier ids must be dense and ordered");
  }
}

std::string JacobiViolation::describe(const LieSuperalgebra& alg) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kParity:
      os << "parity: [" << alg.label(a) << "," << alg.label(b) << "] has component " << alg.label(c);
      break;
    case Kind::kAntisymmetry:
      os << "antisymmetry: [" << alg.label(a) << "," << alg.label(b) << "] component " << alg.label(c);
      break;
    case Kind::kJacobi:
      os << "jacobi: (" << alg.label(a) << "," << alg.label(b) << "," << alg.label(c) << ")";
      break;
  }
  return os.str();
}

JacobiReport validate_superjacobi(const LieSuperalgebra& alg) {
  JacobiReport report;
  const int n = alg.dim();
  auto flag = [&](JacobiViolation v) {
    report.ok = false;
    report.violations.push_back(v);
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Parity pab = alg.parity(a) + alg.parity(b);
      const SparseVector& ab = alg.bracket(a, b);
      const SparseVector& ba = alg.bracket(b, a);
      for (const auto& [c, v] : ab) {
        if (alg.parity(c) != pab) flag({JacobiViolation::Kind::kParity, a, b, c});
      }
      SparseVector sum = ab;
      axpy(sum, koszul(alg.parity(a), alg.parity(b)), ba);
      for (const auto& [c, v] : sum) flag({JacobiViolation::Kind::kAntisymmetry, a, b, c});
    }
  }
  // [a,[b,c]] = [[a,b],c] + (-1)^{ab} [b,[a,c]]
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        SparseVector lhs = alg.bracket(SparseVector{{a, 1}}, alg.bracket(b, c));
        SparseVector rhs = alg.bracket(alg.bracket(a, b), SparseVector{{c, 1}});
        axpy(rhs, koszul(alg.parity(a), alg.parity(b)),
             alg.bracket(SparseVector{{b, 1}}, alg.bracket(a, c)));
        axpy(lhs, -1, rhs);
        if (!lhs.empty()) flag({JacobiViolation::Kind::kJacobi, a, b, c});
      }
    }
  }
  return report;
}

std::string RepresentationViolation::describe(const LieSuperalgebra& alg) const {
  if (kind == Kind::kParity) return "parity: action of " + alg.label(a) + " is not homogeneous";
  return "relation: (" + alg.label(a) + "," + alg.label(b) + ")";
}

RepresentationReport validate_representation(const Representation& rep) {
  const LieSuperalgebra& alg = rep.algebra();
  if (static_cast<int>(rep.actions().size()) != alg.dim()) {
    throw StructuralError("representation has " + std::to_string(rep.actions().size()) +
                          " action matrices for an algebra of dimension " + std::to_string(alg.dim()));
  }
  for (const auto& m : rep.actions()) {
    if (m.rows() != rep.dim() || m.cols() != rep.dim()) {
      throw StructuralError("action matrix shape does not match carrier dimension " +
                            std::to_string(rep.dim()));
    }
  }
  RepresentationReport report;
  for (int a = 0; a < alg.dim(); ++a) {
    const auto& m = rep.action(a);
    bool homogeneous = true;
    for (int j = 0; j < m.cols(); ++j) {
      for (const auto& [i, v] : m.column(j)) {
        if (rep.parity(i) != rep.parity(j) + alg.parity(a)) homogeneous = false;
      }
    }
    if (!homogeneous) {
      report.ok = false;
      report.violations.push_back({RepresentationViolation::Kind::kParity, a, a});
    }
  }
  for (int a = 0; a < alg.dim(); ++a) {
    for (int b = 0; b < alg.dim(); ++b) {
      SparseRationalMatrix lhs = rep.action(a) * rep.action(b);
      lhs -= rep.action(b) * rep.action(a) * Rational(koszul(alg.parity(a), alg.parity(b)));
      SparseRationalMatrix rhs(rep.dim(), rep.dim());
      for (const auto& [c, v] : alg.bracket(a, b)) rhs += rep.action(c) * v;
      if (!(lhs == rhs)) {
        report.ok = false;
        report.violations.push_back({RepresentationViolation::Kind::kRelation, a, b});
      }
    }
  }
  return report;
}

Representation dual_module(const Representation& rep) {
  const LieSuperalgebra& alg = rep.algebra();
  std::vector<BasisIndex> carrier;
  for (const auto& b : rep.carrier()) carrier.push_back({b.id, b.parity, b.label + "*"});
  // (A f_j)(v_i) = -(-1)^{[A][f_j]} f_j(A v_i) = -(-1)^{[A][j]} rho(A)_{ji}
  std::vector<SparseRationalMatrix> action;
  for (int a = 0; a < alg.dim(); ++a) {
    const auto& m = rep.action(a);
    SparseRationalMatrix d(rep.dim(), rep.dim());
    for (int i = 0; i < m.cols(); ++i) {
      for (const auto& [j, v] : m.column(i)) {
        d.set(i, j, -koszul(alg.parity(a), rep.parity(j)) * v);
      }
    }
    action.push_back(std::move(d));
  }
  return Representation(rep.algebra_ptr(), std::move(carrier), std::move(action));
}

Representation parity_reverse_module(const Representation& rep) {
  const LieSuperalgebra& alg = rep.algebra();
  std::vector<BasisIndex> carrier;
  for (const auto& b : rep.carrier()) {
    carrier.push_back({b.id, b.parity + Parity::odd(), "pi(" + b.label + ")"});
  }
  std::vector<SparseRationalMatrix> action;
  for (int a = 0; a < alg.dim(); ++a) {
    action.push_back(rep.action(a) * Rational(parity_sign(alg.parity(a))));
  }
  return Representation(rep.algebra_ptr(), std::move(carrier), std::move(action));
}

Representation trivial_module(AlgebraPtr alg, Parity parity) {
  std::vector<SparseRationalMatrix> action(alg->dim(), SparseRationalMatrix(1, 1));
  return Representation(std::move(alg), {{0, parity, "1"}}, std::move(action));
}

Representation adjoint_module(AlgebraPtr alg) {
  std::vector<SparseRationalMatrix> action;
  for (int a = 0; a < alg->dim(); ++a) action.push_back(alg->ad(a));
  std::vector<BasisIndex> carrier = alg->basis();
  return Representation(std::move(alg), std::move(carrier), std::move(action));
}

}  // namespace sbrst
