#include "sbrst/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace sbrst {

namespace {

void check_composite(const SparseRationalMatrix& first, const SparseRationalMatrix& second, int p,
                     const BlockId& id) {
  if (first.cols() == 0 || second.cols() == 0) return;
  if (!(second * first).is_zero()) {
    throw ConsistencyError("delta^" + std::to_string(p + 1) + " delta^" + std::to_string(p) + " != 0 on block " +
                           id.to_string());
  }
}

void cross_check(const SparseRationalMatrix& out, const SparseRationalMatrix* in, long dim_h, int p,
                 const BlockId& id) {
  const RankKernel rk = rank_kernel(out);
  SparseRationalMatrix boundaries = in ? *in : SparseRationalMatrix(out.cols(), 0);
  const long q = quotient_dimension(rk.kernel, boundaries);
  if (q != dim_h) {
    throw ConsistencyError("H^" + std::to_string(p) + " on block " + id.to_string() + ": rank count " +
                           std::to_string(dim_h) + " but quotient basis " + std::to_string(q));
  }
}

// Largest total degree in the full cell of degree p, or -1 when the cell is infinite.
int cell_total_bound(const BrstComplex& c, int p) {
  bool even_x = false, even_d = false;
  int odd_x = 0, odd_d = 0;
  for (int a = 0; a < c.fock().rank(); ++a) {
    const Creator cr = c.fock().creator(a);
    const bool odd = cr.parity.is_odd();
    if (cr.degree_step > 0) {
      if (odd) ++odd_x;
      else even_x = true;
    } else {
      if (odd) ++odd_d;
      else even_d = true;
    }
  }
  if (even_x && even_d) return -1;
  // total = #X + #d and p = #X - #d; the side without even creators is bounded by its odd count.
  if (!even_d) return std::max(0, p + 2 * odd_d);
  return std::max(0, -p + 2 * odd_x);
}

bool cell_inside_window(const BrstComplex& c, int p, int bound) {
  const int t = cell_total_bound(c, p);
  if (t < 0) return false;
  if (t <= bound) return true;
  MonomialFilter f;
  f.degree = p;
  f.max_total = t;
  const GradingScheme plain = GradingScheme::degree_window(t);
  for (const auto& m : enumerate_monomials(c, plain, f)) {
    if (m.total_degree() > bound) return false;
  }
  return true;
}

SparseRationalMatrix select_columns(const SparseRationalMatrix& m, const std::vector<bool>& drop) {
  std::vector<int> keep;
  for (int j = 0; j < m.cols(); ++j) {
    if (!drop[j]) keep.push_back(j);
  }
  SparseRationalMatrix r(m.rows(), static_cast<int>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) r.set_column(static_cast<int>(j), m.column(keep[j]));
  return r;
}

BlockReport window_cohomology(const BrstComplex& c, const BlockComplex& block, const GradingScheme& scheme,
                              const CohomologyOptions& options) {
  const int bound = scheme.bound;
  BlockReport r;
  r.id = block.id;
  check_square_zero(c, {block});
  std::map<int, bool> inside;
  for (const auto& [p, cell] : block.cells) inside[p] = cell_inside_window(c, p, bound);
  for (int p = options.pmin; p <= options.pmax; ++p) {
    const CochainBlock& cell = block.cells.at(p);
    const DifferentialMatrix out = differential_matrix(c, cell, block.cells.at(p + 1));
    const DifferentialMatrix in = differential_matrix(c, block.cells.at(p - 1), cell);
    BettiEntry e;
    e.p = p;
    e.dim_c = cell.size();
    e.rank_out = rank(out.stacked());
    e.rank_in = rank(select_columns(in.matrix, in.column_escapes));
    e.stable = inside.at(p - 1) && inside.at(p) && inside.at(p + 1);
    const long k = e.dim_c - e.rank_out;
    e.dim_h_upper = k - e.rank_in;
    if (e.stable) {
      e.dim_h = e.dim_h_upper;
      if (options.cross_check) cross_check(out.matrix, &in.matrix, e.dim_h, p, block.id);
    } else {
      // Image of delta^{p-1} from everything that can reach the window, projected onto it.
      GradingScheme wider = GradingScheme::degree_window(bound + 3);
      const CochainBlock src = enumerate_block(c, p - 1, wider);
      const long proj = rank(differential_matrix(c, src, cell).matrix);
      e.dim_h = std::max(0L, k - proj);
    }
    r.entries.push_back(e);
  }
  return r;
}

}  // namespace

long BettiReport::total(int p) const {
  long t = 0;
  for (const auto& b : blocks) {
    for (const auto& e : b.entries) {
      if (e.p == p) t += e.dim_h;
    }
  }
  return t;
}

bool BettiReport::stable(int p) const {
  for (const auto& b : blocks) {
    for (const auto& e : b.entries) {
      if (e.p == p && !e.stable) return false;
    }
  }
  return true;
}

BlockReport betti(const BlockId& id, const std::map<int, long>& dims,
                  const std::map<int, SparseRationalMatrix>& differentials) {
  for (const auto& [p, m] : differentials) {
    auto next = differentials.find(p + 1);
    if (next != differentials.end()) check_composite(m, next->second, p, id);
  }
  BlockReport r;
  r.id = id;
  for (const auto& [p, dim] : dims) {
    BettiEntry e;
    e.p = p;
    e.dim_c = dim;
    if (auto it = differentials.find(p); it != differentials.end()) e.rank_out = rank(it->second);
    if (auto it = differentials.find(p - 1); it != differentials.end()) e.rank_in = rank(it->second);
    e.dim_h = e.dim_h_upper = dim - e.rank_out - e.rank_in;
    if (e.dim_h < 0) throw ConsistencyError("negative Betti number on block " + id.to_string());
    r.entries.push_back(e);
  }
  return r;
}

BlockReport block_cohomology(const BrstComplex& c, const BlockComplex& block, const GradingScheme& scheme,
                             const CohomologyOptions& options) {
  if (!scheme.weighted()) return window_cohomology(c, block, scheme, options);

  std::map<int, long> dims;
  std::map<int, SparseRationalMatrix> diffs;
  for (const auto& [p, cell] : block.cells) {
    dims[p] = cell.size();
    auto next = block.cells.find(p + 1);
    if (next != block.cells.end()) diffs[p] = differential_matrix(c, cell, next->second).matrix;
  }
  BlockReport full = betti(block.id, dims, diffs);
  BlockReport r;
  r.id = block.id;
  r.complete = block.complete;
  for (const auto& e : full.entries) {
    if (!block.complete && (e.p < options.pmin || e.p > options.pmax)) continue;
    if (options.cross_check) {
      auto out = diffs.find(e.p);
      auto in = diffs.find(e.p - 1);
      SparseRationalMatrix zero(0, static_cast<int>(e.dim_c));
      cross_check(out != diffs.end() ? out->second : zero, in != diffs.end() ? &in->second : nullptr, e.dim_h,
                  e.p, block.id);
    }
    r.entries.push_back(e);
  }
  if (block.complete) {
    r.euler_checked = true;
    for (const auto& e : r.entries) {
      r.euler_c += sign_of(e.p) * e.dim_c;
      r.euler_h += sign_of(e.p) * e.dim_h;
    }
    r.euler_ok = r.euler_c == r.euler_h;
  }
  return r;
}

BettiReport compute_cohomology(const BrstComplex& c, const GradingScheme& scheme, const CohomologyOptions& options) {
  if (options.pmin > options.pmax) throw std::invalid_argument("empty degree range");
  BettiReport report;
  report.weighted = scheme.weighted();
  report.pmin = options.pmin;
  report.pmax = options.pmax;

  std::vector<std::optional<Weight>> ids;
  if (scheme.weighted()) {
    check_torus(c.module(), scheme);
    for (auto& w : block_weights(c, scheme, options.pmin, options.pmax)) ids.emplace_back(std::move(w));
  } else {
    ids.emplace_back(std::nullopt);
  }
  report.blocks.resize(ids.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        const BlockComplex bc = block_complex(c, scheme, ids[i], options.pmin, options.pmax);
        report.blocks[i] = block_cohomology(c, bc, scheme, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = ids.size();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(ids.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

WeightCharacter weight_character(const BettiReport& report, int p) {
  if (!report.weighted) throw std::invalid_argument("weight characters need a weight-block grading");
  WeightCharacter ch;
  for (const auto& b : report.blocks) {
    for (const auto& e : b.entries) {
      if (e.p == p && e.dim_h > 0) ch[*b.id.weight] += e.dim_h;
    }
  }
  return ch;
}

}  // namespace sbrst
