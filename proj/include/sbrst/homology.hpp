#ifndef SBRST_HOMOLOGY_HPP
#define SBRST_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "sbrst/rational.hpp"
#include "sbrst/sparse_matrix.hpp"

namespace sbrst {

struct RankKernel {
  long rank = 0;
  /// Pivot (independent) columns in increasing order.
  std::vector<int> pivot_columns;
  /// One vector per free column j: coefficient 1 at j, 0 at the other free columns.
  std::vector<SparseVector> kernel;
};

/// Exact rank and kernel. Columns are scaled to integers and eliminated fraction-free with
/// content removal; the kernel is read off in reduced echelon form.
RankKernel rank_kernel(const SparseRationalMatrix& m);
long rank(const SparseRationalMatrix& m);

/// dim (span(vectors) + im B) / im B, with vectors living in the row space of B.
long quotient_dimension(const std::vector<SparseVector>& vectors, const SparseRationalMatrix& boundaries);

}  // namespace sbrst

#endif  // SBRST_HOMOLOGY_HPP
