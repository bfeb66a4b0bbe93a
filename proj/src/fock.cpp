#include "sbrst/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sbrst {

MixingSet::MixingSet(int rank, std::vector<int> members) : in_(rank, false) {
  for (int a : members) {
    if (a < 0 || a >= rank) throw std::invalid_argument("mixing set member out of range");
    in_[a] = true;
  }
  for (int a = 0; a < rank; ++a) {
    if (in_[a]) members_.push_back(a);
  }
}

MixingSet MixingSet::all(int rank) {
  std::vector<int> m(rank);
  std::iota(m.begin(), m.end(), 0);
  return MixingSet(rank, std::move(m));
}

int FockMonomial::degree() const {
  return std::accumulate(x.begin(), x.end(), 0) - std::accumulate(d.begin(), d.end(), 0);
}

int FockMonomial::total_degree() const {
  return std::accumulate(x.begin(), x.end(), 0) + std::accumulate(d.begin(), d.end(), 0);
}

FockSpace::FockSpace(WeylSuperalgebra weyl, MixingSet mixing)
    : weyl_(std::move(weyl)), mixing_(std::move(mixing)) {
  if (mixing_.rank() != weyl_.rank()) throw std::invalid_argument("mixing set rank mismatch");
}

Creator FockSpace::creator(int a) const {
  if (mixing_.contains(a)) return {WeylGenerator::d(a), weyl_.generator_parity(a), -1};
  return {WeylGenerator::x(a), weyl_.generator_parity(a), +1};
}

FockMonomial FockSpace::vacuum() const {
  return {std::vector<int>(rank(), 0), std::vector<int>(rank(), 0)};
}

bool FockSpace::is_legal(const FockMonomial& m) const {
  if (static_cast<int>(m.x.size()) != rank() || static_cast<int>(m.d.size()) != rank()) return false;
  for (int a = 0; a < rank(); ++a) {
    const int e = mixing_.contains(a) ? m.d[a] : m.x[a];
    const int other = mixing_.contains(a) ? m.x[a] : m.d[a];
    if (other != 0 || e < 0) return false;
    if (weyl_.generator_parity(a).is_odd() && e > 1) return false;
  }
  return true;
}

Parity FockSpace::parity(const FockMonomial& m) const { return weyl_.parity(m.as_weyl()); }

std::optional<std::pair<Rational, FockMonomial>> FockSpace::apply_generator(WeylGenerator g,
                                                                            const FockMonomial& m) const {
  const int a = g.index;
  const Parity p = weyl_.generator_parity(a);
  const bool odd = p.is_odd();
  const bool in_d = mixing_.contains(a);

  // Odd creators to the left of the slot of index a: X creators come first, then d creators.
  auto odd_before = [&](bool include_all_x) {
    int n = 0;
    for (int b = 0; b < rank(); ++b) {
      if (!weyl_.generator_parity(b).is_odd()) continue;
      if (include_all_x || b < a) n += m.x[b];
      if (include_all_x && b < a) n += m.d[b];
    }
    return n;
  };

  const bool is_x = g.kind == GeneratorKind::kX;
  const bool creates = is_x != in_d;
  FockMonomial r = m;
  if (creates) {
    int& e = in_d ? r.d[a] : r.x[a];
    if (odd && e >= 1) return std::nullopt;
    ++e;
    const int sign = odd ? sign_of(odd_before(in_d)) : 1;
    return std::make_pair(Rational(sign), std::move(r));
  }
  int& e = in_d ? r.d[a] : r.x[a];
  if (e == 0) return std::nullopt;
  const int sign = odd ? sign_of(odd_before(in_d)) : 1;
  // [d_a, X_a] = 1 outside D; inside D the annihilator X_a meets d_a with constant -(-1)^{[X_a]}.
  const int contraction = in_d ? -parity_sign(p) : 1;
  const Rational coeff = Rational(sign * contraction * e);
  --e;
  return std::make_pair(coeff, std::move(r));
}

std::optional<std::pair<Rational, FockMonomial>> FockSpace::apply_monomial(const WeylMonomial& w,
                                                                           const FockMonomial& m) const {
  Rational coeff = 1;
  FockMonomial cur = m;
  const auto word = weyl_.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto r = apply_generator(*it, cur);
    if (!r) return std::nullopt;
    coeff *= r->first;
    cur = std::move(r->second);
  }
  return std::make_pair(coeff, std::move(cur));
}

FockVector FockSpace::apply(const WeylElement& w, const FockMonomial& m) const {
  if (!is_legal(m)) throw std::invalid_argument("fock_apply: monomial is not a basis vector of F(D)");
  FockVector out;
  for (const auto& [mono, c] : w.terms()) {
    auto r = apply_monomial(mono, m);
    if (!r) continue;
    auto [it, inserted] = out.try_emplace(r->second, c * r->first);
    if (!inserted) {
      it->second += c * r->first;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

FockVector FockSpace::apply(const WeylElement& w, const FockVector& v) const {
  FockVector out;
  for (const auto& [m, c] : v) {
    for (const auto& [r, rc] : apply(w, m)) {
      auto [it, inserted] = out.try_emplace(r, c * rc);
      if (!inserted) {
        it->second += c * rc;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

std::string FockSpace::to_string(const FockMonomial& m) const {
  std::string s = weyl_.to_string(m.as_weyl());
  return s == "1" ? "vac" : s + " vac";
}

FockVector fock_apply(const FockSpace& space, const WeylElement& w, const FockMonomial& m) {
  return space.apply(w, m);
}

}  // namespace sbrst
