#ifndef SBRST_SUPERCORE_HPP
#define SBRST_SUPERCORE_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbrst/rational.hpp"
#include "sbrst/sparse_matrix.hpp"

namespace sbrst {

/// Element of Z/2Z.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : value_(((v % 2) + 2) % 2) {}

  static constexpr Parity even() { return Parity(0); }
  static constexpr Parity odd() { return Parity(1); }

  constexpr int value() const { return value_; }
  constexpr bool is_odd() const { return value_ == 1; }

  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.value_ + b.value_); }
  friend constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }
  friend constexpr bool operator==(Parity a, Parity b) = default;

 private:
  int value_ = 0;
};

/// (-1)^(a*b): the Koszul sign for exchanging homogeneous elements of parities a, b.
constexpr int koszul(Parity a, Parity b) { return (a.is_odd() && b.is_odd()) ? -1 : 1; }

/// (-1)^a.
constexpr int parity_sign(Parity a) { return a.is_odd() ? -1 : 1; }

struct BasisIndex {
  int id = 0;
  Parity parity;
  std::string label;
};

/// Thrown on shape or index errors in algebraic data.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie superalgebra given by sparse structure constants on a homogeneous
/// basis: bracket(a, b) holds the coefficients c of [E_a, E_b] = sum_c c_ab^c E_c.
class LieSuperalgebra {
 public:
  using Brackets = std::map<std::pair<int, int>, SparseVector>;

  LieSuperalgebra() = default;
  LieSuperalgebra(std::string name, std::vector<BasisIndex> basis, Brackets brackets);

  /// Builds the full table from brackets given for a <= b, filling [E_b, E_a] by super
  /// antisymmetry.
  static LieSuperalgebra from_upper_brackets(std::string name, std::vector<BasisIndex> basis,
                                             const Brackets& upper);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  Parity parity(int a) const { return basis_.at(a).parity; }
  const std::string& label(int a) const { return basis_.at(a).label; }
  std::optional<int> find(const std::string& label) const;

  const SparseVector& bracket(int a, int b) const;
  const Brackets& brackets() const { return brackets_; }

  /// [x, y] for coefficient vectors.
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  /// Matrix of ad(E_a): entry (c, b) is the coefficient of E_c in [E_a, E_b].
  SparseRationalMatrix ad(int a) const;
  SparseRationalMatrix ad(const SparseVector& x) const;

  /// Parity of a coefficient vector, or nullopt when it mixes parities. Zero is even.
  std::optional<Parity> homogeneous_parity(const SparseVector& x) const;

 private:
  std::string name_;
  std::vector<BasisIndex> basis_;
  Brackets brackets_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// Representation of a Lie superalgebra on a finite homogeneous carrier basis.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr algebra, std::vector<BasisIndex> carrier,
                 std::vector<SparseRationalMatrix> action);

  const LieSuperalgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int dim() const { return static_cast<int>(carrier_.size()); }
  const std::vector<BasisIndex>& carrier() const { return carrier_; }
  Parity parity(int i) const { return carrier_.at(i).parity; }
  const std::string& label(int i) const { return carrier_.at(i).label; }
  const SparseRationalMatrix& action(int a) const { return action_.at(a); }
  const std::vector<SparseRationalMatrix>& actions() const { return action_; }

 private:
  AlgebraPtr algebra_;
  std::vector<BasisIndex> carrier_;
  std::vector<SparseRationalMatrix> action_;
};

struct JacobiViolation {
  enum class Kind { kParity, kAntisymmetry, kJacobi } kind;
  int a = 0, b = 0, c = 0;
  std::string describe(const LieSuperalgebra& alg) const;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport validate_superjacobi(const LieSuperalgebra& alg);

struct RepresentationViolation {
  enum class Kind { kParity, kRelation } kind;
  int a = 0, b = 0;
  std::string describe(const LieSuperalgebra& alg) const;
};

struct RepresentationReport {
  bool ok = true;
  std::vector<RepresentationViolation> violations;
};

/// Throws StructuralError when matrix shapes do not match the carrier or algebra.
RepresentationReport validate_representation(const Representation& rep);

/// (A f)(v) = -(-1)^{[A][f]} f(A v) on the dual basis.
Representation dual_module(const Representation& rep);

/// Carrier parities flipped, E_a acting by (-1)^{[a]} times the original matrix.
Representation parity_reverse_module(const Representation& rep);

Representation trivial_module(AlgebraPtr alg, Parity parity = Parity::even());
Representation adjoint_module(AlgebraPtr alg);

}  // namespace sbrst

#endif  // SBRST_SUPERCORE_HPP
