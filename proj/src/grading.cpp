#include "sbrst/grading.hpp"

#include <sstream>

namespace sbrst {

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

GradingScheme GradingScheme::weight_blocks(std::vector<Weight> generator_weights,
                                           std::vector<Weight> module_weights, int seed_bound) {
  GradingScheme s;
  s.mode = Mode::kWeightBlock;
  s.generator_weights = std::move(generator_weights);
  s.module_weights = std::move(module_weights);
  s.bound = seed_bound;
  return s;
}

GradingScheme GradingScheme::degree_window(int bound) {
  if (bound < 0) throw std::invalid_argument("window bound must be nonnegative");
  GradingScheme s;
  s.bound = bound;
  return s;
}

int GradingScheme::torus_rank() const {
  if (!generator_weights.empty()) return static_cast<int>(generator_weights.front().size());
  if (!module_weights.empty()) return static_cast<int>(module_weights.front().size());
  return 0;
}

void check_torus(const Representation& module, const GradingScheme& scheme) {
  if (!scheme.weighted()) return;
  const LieSuperalgebra& alg = module.algebra();
  if (static_cast<int>(scheme.generator_weights.size()) != alg.dim()) {
    throw std::invalid_argument("torus: need one weight per algebra basis element");
  }
  if (static_cast<int>(scheme.module_weights.size()) != module.dim()) {
    throw std::invalid_argument("torus: need one weight per module basis element");
  }
  const int r = scheme.torus_rank();
  for (const auto& w : scheme.generator_weights) {
    if (static_cast<int>(w.size()) != r) throw std::invalid_argument("torus: ragged weights");
  }
  for (const auto& w : scheme.module_weights) {
    if (static_cast<int>(w.size()) != r) throw std::invalid_argument("torus: ragged weights");
  }
  // root(E_a) = -wt(X_a)
  auto root = [&](int a) {
    Weight w = scheme.generator_weights[a];
    for (auto& c : w) c = -c;
    return w;
  };
  for (const auto& [key, vec] : alg.brackets()) {
    Weight sum = root(key.first);
    const Weight rb = root(key.second);
    for (int i = 0; i < r; ++i) sum[i] += rb[i];
    for (const auto& [c, v] : vec) {
      if (root(c) != sum) {
        throw std::invalid_argument("torus: bracket [" + alg.label(key.first) + "," +
                                    alg.label(key.second) + "] is not weight-homogeneous");
      }
    }
  }
  for (int a = 0; a < alg.dim(); ++a) {
    const Weight ra = root(a);
    const auto& m = module.action(a);
    for (int j = 0; j < m.cols(); ++j) {
      for (const auto& [i, v] : m.column(j)) {
        for (int t = 0; t < r; ++t) {
          if (scheme.module_weights[i][t] != scheme.module_weights[j][t] + ra[t]) {
            throw std::invalid_argument("torus: action of " + alg.label(a) + " on " + module.label(j) +
                                        " is not weight-homogeneous");
          }
        }
      }
    }
  }
}

}  // namespace sbrst
