#ifndef SBRST_CONE_HPP
#define SBRST_CONE_HPP

#include <optional>
#include <vector>

namespace sbrst {

using IntVector = std::vector<long>;

/// An integer functional y with y.g >= 1 for every generator g, or nullopt when some nontrivial
/// nonnegative combination of the generators vanishes (the cone they span is not pointed).
/// Exact Phase-I simplex with Bland's rule.
std::optional<IntVector> positive_functional(const std::vector<IntVector>& generators, int dim);

long dot(const IntVector& a, const IntVector& b);

}  // namespace sbrst

#endif  // SBRST_CONE_HPP
