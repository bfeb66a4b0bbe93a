#ifndef SBRST_FOCK_HPP
#define SBRST_FOCK_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbrst/weyl.hpp"

namespace sbrst {

/// Coordinate mixing set: D = span{X_a : a in members}.
class MixingSet {
 public:
  MixingSet() = default;
  MixingSet(int rank, std::vector<int> members);

  static MixingSet none(int rank) { return MixingSet(rank, {}); }
  static MixingSet all(int rank);

  int rank() const { return static_cast<int>(in_.size()); }
  bool contains(int a) const { return in_.at(a); }
  const std::vector<int>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool full() const { return static_cast<int>(members_.size()) == rank(); }

  friend bool operator==(const MixingSet& a, const MixingSet& b) { return a.in_ == b.in_; }

 private:
  std::vector<bool> in_;
  std::vector<int> members_;
};

/// Basis vector of F(D): the class of a normal-ordered product of creators (X_a for a not in D,
/// d_a for a in D) applied to the vacuum.
struct FockMonomial {
  std::vector<int> x;
  std::vector<int> d;

  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;

  int degree() const;
  int total_degree() const;
  WeylMonomial as_weyl() const { return {x, d}; }
};

using FockVector = std::map<FockMonomial, Rational>;

/// A creator generator together with its Z-degree step (+1 for X, -1 for d).
struct Creator {
  WeylGenerator generator;
  Parity parity;
  int degree_step = 0;
};

class FockSpace {
 public:
  FockSpace() = default;
  FockSpace(WeylSuperalgebra weyl, MixingSet mixing);

  const WeylSuperalgebra& weyl() const { return weyl_; }
  const MixingSet& mixing() const { return mixing_; }
  int rank() const { return weyl_.rank(); }

  Creator creator(int a) const;
  FockMonomial vacuum() const;
  bool is_legal(const FockMonomial& m) const;
  Parity parity(const FockMonomial& m) const;

  /// Single-term result of one generator acting on a basis monomial, or nullopt when it is zero.
  std::optional<std::pair<Rational, FockMonomial>> apply_generator(WeylGenerator g,
                                                                   const FockMonomial& m) const;
  std::optional<std::pair<Rational, FockMonomial>> apply_monomial(const WeylMonomial& w,
                                                                  const FockMonomial& m) const;

  /// The class of w.m in F(D). Throws std::invalid_argument for an illegal monomial.
  FockVector apply(const WeylElement& w, const FockMonomial& m) const;
  FockVector apply(const WeylElement& w, const FockVector& v) const;

  std::string to_string(const FockMonomial& m) const;

 private:
  WeylSuperalgebra weyl_;
  MixingSet mixing_;
};

FockVector fock_apply(const FockSpace& space, const WeylElement& w, const FockMonomial& m);

}  // namespace sbrst

#endif  // SBRST_FOCK_HPP
