#ifndef SBRST_GRADING_HPP
#define SBRST_GRADING_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sbrst/cone.hpp"
#include "sbrst/supercore.hpp"

namespace sbrst {

using Weight = IntVector;

std::string to_string(const Weight& w);

/// Raised when a weight-block enumeration is asked for on a non-pointed creator monoid.
class NotPointedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How cochains are cut into finite pieces.
///  - weight blocks: simultaneous eigenspaces of a torus; generator_weights[a] is the weight of
///    X_a (minus the root of E_a), module_weights[i] the weight of v_i. `bound` limits the total
///    degree of the monomials used to discover which blocks are reported.
///  - degree window: all monomials of total degree <= bound.
struct GradingScheme {
  enum class Mode { kWeightBlock, kDegreeWindow };

  Mode mode = Mode::kDegreeWindow;
  std::vector<Weight> generator_weights;
  std::vector<Weight> module_weights;
  int bound = 6;

  static GradingScheme weight_blocks(std::vector<Weight> generator_weights,
                                     std::vector<Weight> module_weights, int seed_bound = 6);
  static GradingScheme degree_window(int bound);

  bool weighted() const { return mode == Mode::kWeightBlock; }
  int torus_rank() const;
};

/// Throws std::invalid_argument unless the torus weights are compatible with the brackets and
/// the module action (so that delta preserves weight).
void check_torus(const Representation& module, const GradingScheme& scheme);

}  // namespace sbrst

#endif  // SBRST_GRADING_HPP
