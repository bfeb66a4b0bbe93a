#ifndef SBRST_PIPELINE_HPP
#define SBRST_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "sbrst/brst.hpp"
#include "sbrst/homology.hpp"

namespace sbrst {

struct BettiEntry {
  int p = 0;
  long dim_c = 0;
  long rank_out = 0;  // rank delta^p
  long rank_in = 0;   // rank delta^{p-1}
  /// dim H^p; for an unstable window entry the interval [dim_h, dim_h_upper].
  long dim_h = 0;
  long dim_h_upper = 0;
  bool stable = true;
};

struct BlockReport {
  BlockId id;
  bool complete = false;
  std::vector<BettiEntry> entries;
  bool euler_checked = false;
  bool euler_ok = true;
  long euler_c = 0;
  long euler_h = 0;
};

struct BettiReport {
  std::string descriptor;
  bool weighted = false;
  int pmin = 0;
  int pmax = 0;
  std::vector<BlockReport> blocks;

  /// Sum of dim H^p over blocks; only meaningful when stable(p).
  long total(int p) const;
  bool stable(int p) const;
};

struct CohomologyOptions {
  int pmin = -6;
  int pmax = 6;
  int threads = 1;
  /// Recompute every stable dim H^p as dim(ker / im) from an explicit kernel basis.
  bool cross_check = false;
};

/// Cohomology of one block from its differential matrices. Throws ConsistencyError on a nonzero
/// composite delta^{p+1} delta^p or a failed cross check.
BlockReport block_cohomology(const BrstComplex& c, const BlockComplex& block, const GradingScheme& scheme,
                             const CohomologyOptions& options);

/// Betti numbers of a finite complex given by dimensions and matrices (delta^p keyed by p).
BlockReport betti(const BlockId& id, const std::map<int, long>& dims,
                  const std::map<int, SparseRationalMatrix>& differentials);

BettiReport compute_cohomology(const BrstComplex& c, const GradingScheme& scheme, const CohomologyOptions& options);

using WeightCharacter = std::map<Weight, long>;

/// Torus weights of H^p with multiplicities. Rejects window-mode reports.
WeightCharacter weight_character(const BettiReport& report, int p);

}  // namespace sbrst

#endif  // SBRST_PIPELINE_HPP
