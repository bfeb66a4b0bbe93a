#include "sbrst/weyl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sbrst {

int WeylMonomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
int WeylMonomial::d_degree() const { return std::accumulate(d.begin(), d.end(), 0); }

WeylElement::WeylElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational WeylElement::coefficient(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= s;
  }
  return *this;
}

WeylSuperalgebra::WeylSuperalgebra(std::vector<Parity> generator_parity, std::vector<std::string> labels)
    : parity_(std::move(generator_parity)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (int a = 0; a < rank(); ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != rank()) throw std::invalid_argument("label count mismatch");
}

WeylSuperalgebra WeylSuperalgebra::over_dual(const LieSuperalgebra& alg) {
  std::vector<Parity> parity;
  std::vector<std::string> labels;
  for (const auto& b : alg.basis()) {
    parity.push_back(b.parity + Parity::odd());
    labels.push_back(b.label);
  }
  return WeylSuperalgebra(std::move(parity), std::move(labels));
}

WeylMonomial WeylSuperalgebra::unit_monomial() const {
  return {std::vector<int>(rank(), 0), std::vector<int>(rank(), 0)};
}

WeylElement WeylSuperalgebra::one() const { return monomial(unit_monomial()); }

WeylElement WeylSuperalgebra::generator(WeylGenerator g) const {
  WeylMonomial m = unit_monomial();
  (g.kind == GeneratorKind::kX ? m.x : m.d).at(g.index) = 1;
  return monomial(m);
}

WeylElement WeylSuperalgebra::monomial(const WeylMonomial& m, const Rational& c) const {
  WeylElement e;
  e.add_term(m, c);
  return e;
}

Parity WeylSuperalgebra::parity(const WeylMonomial& m) const {
  int odd = 0;
  for (int a = 0; a < rank(); ++a) {
    if (parity_[a].is_odd()) odd += m.x[a] + m.d[a];
  }
  return Parity(odd);
}

std::optional<Parity> WeylSuperalgebra::parity(const WeylElement& e) const {
  std::optional<Parity> p;
  for (const auto& [m, c] : e.terms()) {
    const Parity q = parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even());
}

bool WeylSuperalgebra::is_normal(const WeylMonomial& m) const {
  if (static_cast<int>(m.x.size()) != rank() || static_cast<int>(m.d.size()) != rank()) return false;
  for (int a = 0; a < rank(); ++a) {
    if (m.x[a] < 0 || m.d[a] < 0) return false;
    if (parity_[a].is_odd() && (m.x[a] > 1 || m.d[a] > 1)) return false;
  }
  return true;
}

std::vector<WeylGenerator> WeylSuperalgebra::word(const WeylMonomial& m) const {
  std::vector<WeylGenerator> w;
  for (int a = 0; a < rank(); ++a) {
    for (int k = 0; k < m.x[a]; ++k) w.push_back(WeylGenerator::x(a));
  }
  for (int a = 0; a < rank(); ++a) {
    for (int k = 0; k < m.d[a]; ++k) w.push_back(WeylGenerator::d(a));
  }
  return w;
}

void WeylSuperalgebra::left_multiply_into(WeylGenerator g, const WeylMonomial& m, const Rational& c,
                                          WeylElement& out) const {
  const int a = g.index;
  const bool odd = parity_.at(a).is_odd();
  // Number of odd X factors strictly left of position a.
  int odd_x_before = 0;
  for (int b = 0; b < a; ++b) {
    if (parity_[b].is_odd()) odd_x_before += m.x[b];
  }
  if (g.kind == GeneratorKind::kX) {
    if (odd && m.x[a] >= 1) return;
    WeylMonomial r = m;
    ++r.x[a];
    out.add_term(r, odd ? c * sign_of(odd_x_before) : c);
    return;
  }
  // d_a X^x d^d: contract against X_a, then carry d_a past all X factors into the d block.
  if (m.x[a] > 0) {
    WeylMonomial r = m;
    --r.x[a];
    out.add_term(r, odd ? c * sign_of(odd_x_before) : c * m.x[a]);
  }
  if (odd && m.d[a] >= 1) return;
  int passed = 0;
  if (odd) {
    for (int b = 0; b < rank(); ++b) {
      if (parity_[b].is_odd()) passed += m.x[b];
    }
    for (int b = 0; b < a; ++b) {
      if (parity_[b].is_odd()) passed += m.d[b];
    }
  }
  WeylMonomial r = m;
  ++r.d[a];
  out.add_term(r, c * sign_of(passed));
}

WeylElement WeylSuperalgebra::left_multiply(WeylGenerator g, const WeylElement& e) const {
  WeylElement out;
  for (const auto& [m, c] : e.terms()) left_multiply_into(g, m, c, out);
  return out;
}

WeylElement WeylSuperalgebra::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement result;
  for (const auto& [m, c] : a.terms()) {
    const auto w = word(m);
    WeylElement acc = b;
    for (auto it = w.rbegin(); it != w.rend() && !acc.is_zero(); ++it) acc = left_multiply(*it, acc);
    result += acc * c;
  }
  return result;
}

std::string WeylSuperalgebra::to_string(const WeylMonomial& m) const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char* name, int a, int e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name << '_' << labels_[a];
    if (e > 1) os << '^' << e;
  };
  for (int a = 0; a < rank(); ++a) put("X", a, m.x[a]);
  for (int a = 0; a < rank(); ++a) put("d", a, m.d[a]);
  if (first) os << '1';
  return os.str();
}

std::string WeylSuperalgebra::to_string(const WeylElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << '*' << to_string(m);
  }
  return os.str();
}

WeylElement normal_order(const WeylSuperalgebra& w, const std::vector<WeylGenerator>& word,
                         const Rational& coeff) {
  WeylElement acc = w.one() * coeff;
  for (auto it = word.rbegin(); it != word.rend() && !acc.is_zero(); ++it) acc = w.left_multiply(*it, acc);
  return acc;
}

WeylElement graded_commutator(const WeylSuperalgebra& w, const WeylElement& a, const WeylElement& b) {
  const auto pa = w.parity(a);
  const auto pb = w.parity(b);
  if (!pa || !pb) throw std::invalid_argument("graded_commutator: non-homogeneous argument");
  WeylElement r = w.multiply(a, b);
  r -= w.multiply(b, a) * Rational(koszul(*pa, *pb));
  return r;
}

WeylElement gamma_from_matrix(const WeylSuperalgebra& w, const SparseRationalMatrix& m, Parity parity) {
  if (m.rows() != w.rank() || m.cols() != w.rank()) {
    throw std::invalid_argument("gamma_from_matrix: matrix does not match Weyl rank");
  }
  WeylElement g;
  for (int c = 0; c < m.cols(); ++c) {
    const int s = -koszul(parity, w.base_parity(c));
    for (const auto& [b, v] : m.column(c)) {
      WeylMonomial mono = w.unit_monomial();
      mono.x[c] = 1;
      mono.d[b] = 1;
      g.add_term(mono, s * v);
    }
  }
  return g;
}

WeylElement gamma(const WeylSuperalgebra& w, const LieSuperalgebra& alg, const SparseVector& a) {
  const auto p = alg.homogeneous_parity(a);
  if (!p) throw std::invalid_argument("gamma: argument is not parity-homogeneous");
  return gamma_from_matrix(w, alg.ad(a), *p);
}

WeylElement gamma(const WeylSuperalgebra& w, const LieSuperalgebra& alg, int basis_index) {
  return gamma_from_matrix(w, alg.ad(basis_index), alg.parity(basis_index));
}

WeylElement g_action_on_weyl(const WeylSuperalgebra& w, const LieSuperalgebra& alg,
                             const SparseVector& a, const WeylElement& f) {
  return graded_commutator(w, gamma(w, alg, a), f);
}

}  // namespace sbrst
