#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "sbrst/ce.hpp"
#include "sbrst/cli.hpp"
#include "sbrst/pipeline.hpp"

namespace sbrst::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

class Table {
 public:
  Table(std::vector<std::string> header, bool label_column = false) : label_column_(label_column) {
    rows_.push_back(std::move(header));
  }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.size() == 1; }

  // Right-aligned columns; a label column goes first, left-aligned.
  void print(std::ostream& out) const {
    std::vector<std::size_t> w(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::string pad(w[i] - r[i].size(), ' ');
        if (i == 0 && label_column_) line += r[i] + pad;
        else line += (i == 0 ? "" : "  ") + pad + r[i];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  bool label_column_;
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

std::string grading_name(const GradingScheme& g) {
  if (g.weighted()) return "weight blocks (torus rank " + std::to_string(g.torus_rank()) + ")";
  return "window<=" + std::to_string(g.bound);
}

class Context {
 public:
  Context(const RunConfig& cfg, const RunOptions& opt, std::ostream& out)
      : cfg_(cfg), opt_(opt), out_(out), complex_(cfg.module, cfg.mixing) {}

  bool table() const { return opt_.format == Format::kTable; }
  std::ostream& out() { return out_; }
  const RunConfig& cfg() const { return cfg_; }
  const RunOptions& options() const { return opt_; }
  const BrstComplex& complex() const { return complex_; }

  void record(const ojson& j) {
    if (!table()) out_ << j.dump() << '\n';
  }

  void heading(Task t) {
    if (!table()) return;
    if (!first_) out_ << '\n';
    first_ = false;
    out_ << "# " << task_name(t) << ": " << cfg_.algebra_name << "  module " << cfg_.module_name << "  D=" << cfg_.mixing_name
         << "  " << grading_name(cfg_.grading) << "  p in [" << cfg_.pmin << ", " << cfg_.pmax << "]\n";
  }

  // A named verdict. Returns ok.
  bool check(Task t, const std::string& name, bool ok, const std::string& detail = "") {
    if (table()) {
      out_ << name << ": " << true_false(ok);
      if (!detail.empty()) out_ << "  (" << detail << ")";
      out_ << '\n';
    }
    ojson j;
    j["record"] = "check";
    j["task"] = task_name(t);
    j["check"] = name;
    j["ok"] = ok;
    if (!detail.empty()) j["detail"] = detail;
    record(j);
    if (!ok) failed_ = true;
    return ok;
  }

  void note(const std::string& s) {
    if (table()) out_ << s << '\n';
  }

  bool failed() const { return failed_; }

 private:
  const RunConfig& cfg_;
  const RunOptions& opt_;
  std::ostream& out_;
  BrstComplex complex_;
  bool first_ = true;
  bool failed_ = false;
};

void task_validate(Context& ctx) {
  const Task t = Task::kValidate;
  const RunConfig& cfg = ctx.cfg();
  const BrstComplex& c = ctx.complex();
  const JacobiReport jr = validate_superjacobi(*cfg.algebra);
  ctx.check(t, "super-Jacobi", jr.ok, std::to_string(jr.violations.size()) + " violations");
  const RepresentationReport rr = validate_representation(cfg.module);
  ctx.check(t, "representation", rr.ok, std::to_string(rr.violations.size()) + " violations");
  if (cfg.grading.weighted()) {
    check_torus(cfg.module, cfg.grading);
    ctx.check(t, "torus preserves delta", true);
  }

  const auto blocks = enumerate_complexes(c, cfg.grading, cfg.pmin, cfg.pmax);
  long columns = 0;
  for (const auto& b : blocks) {
    for (const auto& [p, cell] : b.cells) columns += cell.size();
  }
  bool square_ok = true;
  std::string square_detail = std::to_string(blocks.size()) + " blocks, " + std::to_string(columns) + " columns";
  try {
    check_square_zero(c, blocks);
  } catch (const ConsistencyError& e) {
    square_ok = false;
    square_detail = e.what();
  }
  ctx.check(t, "delta^2 = 0", square_ok, square_detail);

  std::vector<ActingOperator> ops = self_action(cfg.module);
  if (cfg.nilradical && cfg.module_name == "natural") {
    for (auto& op : levi_action(*cfg.nilradical)) ops.push_back(std::move(op));
  }
  const auto bad = ideal_violations(c, ops);
  std::vector<ActingOperator> stable;
  for (auto& op : ops) {
    if (std::find(bad.begin(), bad.end(), op.label) == bad.end()) stable.push_back(std::move(op));
  }
  ctx.note("operators preserving J(D): " + std::to_string(stable.size()) + " of " + std::to_string(ops.size()));
  ojson j;
  j["record"] = "ideal";
  j["task"] = task_name(t);
  j["stable"] = stable.size();
  j["operators"] = ops.size();
  j["unstable"] = bad;
  ctx.record(j);
  const EquivarianceReport er = equivariance_check(c, stable, blocks);
  std::string detail = std::to_string(stable.size()) + " operators, " + std::to_string(er.checked_columns) + " columns";
  for (const auto& s : er.commutator_violations) detail += ", fails for " + s;
  ctx.check(t, "equivariance", er.commutator_violations.empty(), detail);
}

void task_cohomology(Context& ctx) {
  const Task t = Task::kCohomology;
  const RunConfig& cfg = ctx.cfg();
  CohomologyOptions opt;
  opt.pmin = cfg.pmin;
  opt.pmax = cfg.pmax;
  opt.threads = ctx.options().threads;
  const BettiReport rep = compute_cohomology(ctx.complex(), cfg.grading, opt);

  Table table({"block", "p", "dimC", "rank", "dimH", "stable"}, true);
  bool euler_ok = true;
  long euler_blocks = 0;
  for (const auto& b : rep.blocks) {
    const std::string id = b.id.to_string();
    for (const auto& e : b.entries) {
      ojson j;
      j["record"] = "betti";
      j["task"] = task_name(t);
      j["block_id"] = id;
      j["p"] = e.p;
      j["dimC"] = e.dim_c;
      j["rank"] = e.rank_out;
      j["rank_in"] = e.rank_in;
      j["dimH"] = e.dim_h;
      if (!e.stable) j["dimH_upper"] = e.dim_h_upper;
      j["stable"] = e.stable;
      ctx.record(j);
      if (e.dim_c == 0) continue;
      const std::string h =
          e.stable || e.dim_h == e.dim_h_upper ? std::to_string(e.dim_h)
                                                : std::to_string(e.dim_h) + ".." + std::to_string(e.dim_h_upper);
      table.add({id, std::to_string(e.p), std::to_string(e.dim_c), std::to_string(e.rank_out), h, yes_no(e.stable)});
    }
    if (b.euler_checked) {
      ++euler_blocks;
      if (!b.euler_ok) euler_ok = false;
      ojson j;
      j["record"] = "euler";
      j["task"] = task_name(t);
      j["block_id"] = id;
      j["chi_C"] = b.euler_c;
      j["chi_H"] = b.euler_h;
      j["ok"] = b.euler_ok;
      ctx.record(j);
    }
  }
  if (ctx.table()) {
    if (table.empty()) ctx.out() << "(no nonzero cochains in range)\n";
    else table.print(ctx.out());
    Table totals({"p", "dimH"});
    for (int p = cfg.pmin; p <= cfg.pmax; ++p) {
      long lo = 0, hi = 0;
      for (const auto& b : rep.blocks) {
        for (const auto& e : b.entries) {
          if (e.p != p) continue;
          lo += e.dim_h;
          hi += e.stable ? e.dim_h : e.dim_h_upper;
        }
      }
      totals.add({std::to_string(p), lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)});
    }
    ctx.out() << "totals over " << rep.blocks.size() << " block(s):\n";
    totals.print(ctx.out());
  }
  if (euler_blocks > 0) {
    ctx.check(t, "Euler identity", euler_ok, std::to_string(euler_blocks) + " complete blocks");
  }
}

void task_ce_compare(Context& ctx) {
  const Task t = Task::kCeCompare;
  const RunConfig& cfg = ctx.cfg();
  if (!cfg.mixing.empty()) throw ConfigError("ce-compare needs mixing \"none\"");
  const int lo = std::max(0, cfg.pmin);
  const int hi = cfg.pmax;
  if (hi < lo) throw ConfigError("ce-compare needs p_max >= 0");
  const BrstComplex& c = ctx.complex();

  bool all = true;
  for (int p = lo; p <= hi; ++p) {
    const IotaReport r = iota_compare(c, p);
    ojson j;
    j["record"] = "iota";
    j["task"] = task_name(t);
    j["p"] = p;
    j["ok"] = r.ok;
    j["mismatched_entries"] = r.mismatched_entries;
    ctx.record(j);
    ctx.note("p = " + std::to_string(p) + ": " + true_false(r.ok) +
             (r.ok ? "" : " (" + std::to_string(r.mismatched_entries) + " entries differ)"));
    all = all && r.ok;
  }
  ctx.check(t, "iota intertwines", all);

  const std::vector<long> ce = ce_betti(cfg.module, hi);
  CohomologyOptions opt;
  opt.pmin = lo;
  opt.pmax = hi;
  const BettiReport brst = compute_cohomology(c, GradingScheme::degree_window(hi + 1), opt);
  Table table({"p", "CE", "BRST"});
  bool equal = true;
  for (int p = lo; p <= hi; ++p) {
    const bool st = brst.stable(p);
    table.add({std::to_string(p), std::to_string(ce[p]), st ? std::to_string(brst.total(p)) : "n/a"});
    ojson j;
    j["record"] = "betti_compare";
    j["task"] = task_name(t);
    j["p"] = p;
    j["ce"] = ce[p];
    if (st) j["brst"] = brst.total(p);
    j["stable"] = st;
    ctx.record(j);
    if (st && brst.total(p) != ce[p]) equal = false;
  }
  if (ctx.table()) table.print(ctx.out());
  ctx.check(t, "Betti numbers agree", equal);
}

void task_kac_witness(Context& ctx) {
  const Task t = Task::kKacWitness;
  const RunConfig& cfg = ctx.cfg();
  if (cfg.kac_dim == 0) throw ConfigError("kac-witness needs module {\"kac\": d} on the gl preset with parabolic A");
  const int window = cfg.grading.bound;
  ctx.note("witness window: polynomial degree <= " + std::to_string(window) + "; D = none (standard), all (dual)");
  for (bool dual : {false, true}) {
    const Gl11WitnessReport r = gl11_witness(*cfg.nilradical, dual, window, cfg.kac_dim);
    const std::string which = dual ? "dual" : "standard";
    ctx.check(t, which + ": " + r.relation, r.relation_ok, std::to_string(r.relation_columns) + " columns");
    const std::string sign = r.delta_sign > 0 ? "delta = e (x) id" : r.delta_sign < 0 ? "delta = -e (x) id" : "delta = +-e (x) id";
    ctx.check(t, which + ": " + sign, r.delta_ok, std::to_string(r.delta_columns) + " columns");
  }
}

void task_completion_demo(Context& ctx) {
  const Task t = Task::kCompletionDemo;
  const RunConfig& cfg = ctx.cfg();
  const bool shape = cfg.nilradical && cfg.gl->m == 1 && cfg.gl->n == 2 &&
                     cfg.nilradical->choice.variant == ParabolicVariant::kA && cfg.module_name == "natural" &&
                     cfg.mixing == MixingSet(2, {cfg.nilradical->index_of(1, 3)});
  if (!shape) {
    throw ConfigError("completion-demo needs gl(1|2) with parabolic A, the natural module and mixing [\"x_13\"]");
  }
  const int order = ctx.options().order.value_or(cfg.order);
  if (order < 2) throw ConfigError("completion-demo needs order >= 2");
  const CompletionReport rep = gl12_completion_demo(order);
  Table table({"p", "columns", "kernel", "family", "im in v1", "im covers"});
  for (const auto& row : rep.rows) {
    table.add({std::to_string(row.p), std::to_string(row.columns), std::to_string(row.kernel_dim),
               std::to_string(row.expected), yes_no(row.image_in_v1), yes_no(row.image_covers)});
    ojson j;
    j["record"] = "completion";
    j["task"] = task_name(t);
    j["order"] = order;
    j["p"] = row.p;
    j["columns"] = row.columns;
    j["kernel"] = row.kernel_dim;
    j["family"] = row.expected;
    j["image_in_v1"] = row.image_in_v1;
    j["image_covers"] = row.image_covers;
    ctx.record(j);
  }
  ctx.note("order " + std::to_string(order) + ", f = f1 v1 + f2 v2 + f3 v3 in x, ybar");
  if (ctx.table()) table.print(ctx.out());
  ctx.check(t, "kernel matches the P/Q families and im delta = D v1", rep.ok);
}

}  // namespace

int run(const RunConfig& config, const std::vector<Task>& tasks, const RunOptions& options, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string error;
  {
    ojson j;
    j["record"] = "config";
    j["config"] = ojson::parse(config.echo);
    j["algebra"] = config.algebra_name;
    j["module"] = config.module_name;
    j["mixing"] = config.mixing_name;
    j["grading"] = grading_name(config.grading);
    if (options.format == Format::kRecords) out << j.dump() << '\n';
  }
  try {
    Context ctx(config, options, out);
    for (Task t : tasks) {
      ctx.heading(t);
      switch (t) {
        case Task::kValidate: task_validate(ctx); break;
        case Task::kCohomology: task_cohomology(ctx); break;
        case Task::kCeCompare: task_ce_compare(ctx); break;
        case Task::kKacWitness: task_kac_witness(ctx); break;
        case Task::kCompletionDemo: task_completion_demo(ctx); break;
      }
    }
    if (ctx.failed()) code = kExitInconsistent;
  } catch (const ConfigError& e) {
    code = kExitConfig;
    error = e.what();
  } catch (const NotPointedError& e) {
    code = kExitConfig;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    code = kExitConfig;
    error = e.what();
  } catch (const ConsistencyError& e) {
    code = kExitInconsistent;
    error = std::string("internal consistency failure: ") + e.what();
  } catch (const std::exception& e) {
    code = kExitInconsistent;
    error = e.what();
  }
  if (!error.empty()) std::cerr << "error: " << error << '\n';
  if (options.format == Format::kRecords) {
    ojson j;
    j["record"] = "run";
    j["version"] = kVersion;
    j["gmp"] = gmp_version;
    j["exit_code"] = code;
    if (!error.empty()) j["error"] = error;
    j["wall_clock_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << j.dump() << '\n';
  }
  return code;
}

}  // namespace sbrst::cli
