#ifndef SBRST_CE_HPP
#define SBRST_CE_HPP

#include <compare>
#include <string>
#include <vector>

#include "sbrst/brst.hpp"

namespace sbrst {

/// Basis cochain of C^p(g, V): the super-antisymmetric function supported on the sorted tuple
/// (odd basis elements may repeat) with value on that tuple fixed by the normalisation below.
struct CeIndex {
  std::vector<int> tuple;
  int module_index = 0;

  friend auto operator<=>(const CeIndex&, const CeIndex&) = default;
  friend bool operator==(const CeIndex&, const CeIndex&) = default;
};

std::vector<CeIndex> ce_basis(const Representation& module, int p);

/// Matrix of d^p (or of d_1 / d_2 alone) on ce_basis(p) -> ce_basis(p+1), computed by evaluating
/// cochains on tuples of basis elements. Requires p >= 0.
SparseRationalMatrix ce_differential_matrix(const Representation& module, int p,
                                            DeltaPart part = DeltaPart::kFull);

/// Value of the basis cochain b on the tuple of basis elements `args` (coefficient of v_k).
Rational ce_evaluate(const Representation& module, const CeIndex& b, const std::vector<int>& args);

struct IotaReport {
  bool ok = true;
  int p = 0;
  /// Largest |delta_i - iota d_i iota^{-1}| entry, i = 1, 2.
  Rational max_discrepancy[2];
  long mismatched_entries = 0;
};

/// Compares delta_1 and delta_2 on F_p (x) V with the CE parts transported by iota:
/// X_{a_1}...X_{a_p} (sorted) (x) v  <->  the basis cochain on (a_1, ..., a_p) with v.
/// Throws std::invalid_argument when D is not empty.
IotaReport iota_compare(const BrstComplex& c, int p);

/// dim H^p of the CE complex for p = 0..pmax.
std::vector<long> ce_betti(const Representation& module, int pmax);

}  // namespace sbrst

#endif  // SBRST_CE_HPP
