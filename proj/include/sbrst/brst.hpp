#ifndef SBRST_BRST_HPP
#define SBRST_BRST_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbrst/fock.hpp"
#include "sbrst/grading.hpp"
#include "sbrst/sparse_matrix.hpp"
#include "sbrst/supercore.hpp"
#include "sbrst/weyl.hpp"

namespace sbrst {

/// Internal-consistency failure such as a nonzero square of the differential.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis tensor m (x) v_k of F(D) (x) V.
struct CochainIndex {
  FockMonomial mono;
  int module_index = 0;

  friend auto operator<=>(const CochainIndex&, const CochainIndex&) = default;
  friend bool operator==(const CochainIndex&, const CochainIndex&) = default;
};

using CochainVector = std::map<CochainIndex, Rational>;

struct BlockId {
  std::optional<Weight> weight;
  int window_bound = -1;

  friend auto operator<=>(const BlockId&, const BlockId&) = default;
  friend bool operator==(const BlockId&, const BlockId&) = default;
  std::string to_string() const;
};

struct CochainBlock {
  BlockId id;
  int degree = 0;
  std::vector<CochainIndex> basis;  // sorted

  int size() const { return static_cast<int>(basis.size()); }
  /// Position of b in the basis, or -1.
  int index_of(const CochainIndex& b) const;
};

/// All cells of one block, keyed by Z-degree. A complete block holds every nonzero cell.
struct BlockComplex {
  BlockId id;
  bool complete = false;
  std::map<int, CochainBlock> cells;
};

enum class DeltaPart { kFull, kDelta1, kDelta2 };

struct DifferentialMatrix {
  int source_degree = 0;
  SparseRationalMatrix matrix;  // rows indexed by the target block
  /// Window mode: image terms outside the target block, as extra rows below `matrix`.
  std::vector<CochainIndex> escaped_rows;
  SparseRationalMatrix escaped;
  std::vector<bool> column_escapes;

  bool any_escape() const { return !escaped_rows.empty(); }
  /// matrix stacked on escaped.
  SparseRationalMatrix stacked() const;
};

/// An operator acting on g by a (super)derivation and on V compatibly: either a basis element
/// of g itself (ad, rho) or an element of a Levi factor acting on a nilradical.
struct ActingOperator {
  std::string label;
  Parity parity;
  SparseRationalMatrix on_algebra;
  SparseRationalMatrix on_module;
};

std::vector<ActingOperator> self_action(const Representation& module);

/// The cochain space C_D(g, V) = F(D) (x) V with its differential.
class BrstComplex {
 public:
  BrstComplex(Representation module, MixingSet mixing);

  const LieSuperalgebra& algebra() const { return module_.algebra(); }
  const Representation& module() const { return module_; }
  const WeylSuperalgebra& weyl() const { return fock_.weyl(); }
  const FockSpace& fock() const { return fock_; }
  const MixingSet& mixing() const { return fock_.mixing(); }
  /// (1/2) sum_a (-1)^{[E_a]} X_a Gamma_a, normal ordered.
  const WeylElement& delta2_element() const { return delta2_; }

  Parity parity(const CochainIndex& b) const;
  Weight weight(const CochainIndex& b, const GradingScheme& scheme) const;
  Weight fock_weight(const FockMonomial& m, const GradingScheme& scheme) const;

  CochainVector delta1(const CochainIndex& b) const;
  CochainVector delta2(const CochainIndex& b) const;
  CochainVector delta(const CochainIndex& b, DeltaPart part = DeltaPart::kFull) const;
  CochainVector delta(const CochainVector& v, DeltaPart part = DeltaPart::kFull) const;

  /// rho(A)(m (x) v) = ([Gamma^A, m] vac) (x) v + (-1)^{[A][m]} m (x) A v.
  CochainVector act(const ActingOperator& a, const CochainIndex& b) const;
  CochainVector act(const ActingOperator& a, const CochainVector& v) const;

  std::string to_string(const CochainIndex& b) const;

 private:
  Representation module_;
  FockSpace fock_;
  WeylElement delta2_;
};

/// Filter for monomial enumeration. When `functional` is set it must satisfy y.g >= 1 on the
/// extended weight (weight, and the degree step if `functional_uses_degree`) of each even
/// creator; `weight` (and `degree`) must then be fixed.
struct MonomialFilter {
  std::optional<int> max_total;
  std::optional<int> degree;
  std::optional<Weight> weight;
  std::optional<IntVector> functional;
  bool functional_uses_degree = false;
};

std::vector<FockMonomial> enumerate_monomials(const BrstComplex& c, const GradingScheme& scheme,
                                              const MonomialFilter& filter);

/// The block of Z-degree p. Weight mode: block_weight is required and the creator monoid must be
/// pointed (NotPointedError otherwise). Window mode: all monomials of total degree <= bound.
CochainBlock enumerate_block(const BrstComplex& c, int p, const GradingScheme& scheme,
                             const std::optional<Weight>& block_weight = std::nullopt);

/// Every block meeting Z-degrees [pmin, pmax]: complete blocks when the weights alone bound the
/// even creators, otherwise the cells pmin-1 .. pmax+1.
std::vector<BlockComplex> enumerate_complexes(const BrstComplex& c, const GradingScheme& scheme, int pmin,
                                              int pmax);

/// Weights of the blocks met by monomials of total degree <= scheme.bound in [pmin, pmax].
std::vector<Weight> block_weights(const BrstComplex& c, const GradingScheme& scheme, int pmin, int pmax);
/// One block; weight is ignored (and may be nullopt) in window mode.
BlockComplex block_complex(const BrstComplex& c, const GradingScheme& scheme, const std::optional<Weight>& weight,
                           int pmin, int pmax);

DifferentialMatrix differential_matrix(const BrstComplex& c, const CochainBlock& src, const CochainBlock& tgt,
                                       DeltaPart part = DeltaPart::kFull);
inline DifferentialMatrix delta1_matrix(const BrstComplex& c, const CochainBlock& src, const CochainBlock& tgt) {
  return differential_matrix(c, src, tgt, DeltaPart::kDelta1);
}
inline DifferentialMatrix delta2_matrix(const BrstComplex& c, const CochainBlock& src, const CochainBlock& tgt) {
  return differential_matrix(c, src, tgt, DeltaPart::kDelta2);
}
inline DifferentialMatrix delta_matrix(const BrstComplex& c, const CochainBlock& src, const CochainBlock& tgt) {
  return differential_matrix(c, src, tgt, DeltaPart::kFull);
}

/// Applies delta twice to every basis vector of every cell; throws ConsistencyError on a
/// nonzero result.
void check_square_zero(const BrstComplex& c, const std::vector<BlockComplex>& blocks);

struct EquivarianceReport {
  bool ok = true;
  /// Operators under which J(D) is not stable.
  std::vector<std::string> ideal_violations;
  /// Operators whose graded commutator with delta is nonzero on some enumerated column.
  std::vector<std::string> commutator_violations;
  long checked_columns = 0;
};

EquivarianceReport equivariance_check(const BrstComplex& c, const std::vector<ActingOperator>& ops,
                                      const std::vector<BlockComplex>& blocks);
EquivarianceReport equivariance_check(const BrstComplex& c, const std::vector<ActingOperator>& ops,
                                      const GradingScheme& scheme, int pmin, int pmax);

/// Only the J(D) stability scan.
std::vector<std::string> ideal_violations(const BrstComplex& c, const std::vector<ActingOperator>& ops);

}  // namespace sbrst

#endif  // SBRST_BRST_HPP
