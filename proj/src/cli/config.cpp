#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sbrst/cli.hpp"

namespace sbrst::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) { throw ConfigError(key + ": " + what); }

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) fail(where.empty() ? k : where + "." + k, "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

int get_int(const json& v, const std::string& key, std::optional<int> lo = std::nullopt,
            std::optional<int> hi = std::nullopt) {
  if (!v.is_number_integer()) fail(key, "expected an integer");
  const long long x = v.get<long long>();
  if ((lo && x < *lo) || (hi && x > *hi)) {
    std::string range = "out of range";
    if (lo && hi) range += " [" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]";
    else if (lo) range += " (minimum " + std::to_string(*lo) + ")";
    fail(key, range);
  }
  return static_cast<int>(x);
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

Rational get_rational(const json& v, const std::string& key) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  fail(key, "expected an integer or a string \"p/q\"");
}

Parity get_parity(const json& v, const std::string& key) { return Parity(get_int(v, key, 0, 1)); }

std::vector<BasisIndex> get_basis(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) fail(key, "expected a nonempty array of {label, parity}");
  std::vector<BasisIndex> basis;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string k = key + "[" + std::to_string(i) + "]";
    if (!v[i].is_object()) fail(k, "expected an object");
    allow_keys(v[i], k, {"label", "parity"});
    BasisIndex b;
    b.id = static_cast<int>(i);
    b.label = get_string(require(v[i], k, "label"), k + ".label");
    b.parity = get_parity(require(v[i], k, "parity"), k + ".parity");
    if (!seen.insert(b.label).second) fail(k + ".label", "duplicate label '" + b.label + "'");
    basis.push_back(std::move(b));
  }
  return basis;
}

int find_label(const std::vector<BasisIndex>& basis, const std::string& label, const std::string& key) {
  for (const auto& b : basis) {
    if (b.label == label) return b.id;
  }
  fail(key, "unknown label '" + label + "'");
}

void parse_algebra(const json& v, RunConfig& cfg) {
  const std::string key = "algebra";
  if (!v.is_object()) fail(key, "expected an object");
  if (v.contains("preset")) {
    const std::string preset = get_string(v["preset"], "algebra.preset");
    if (preset == "gl") {
      allow_keys(v, key, {"preset", "m", "n", "parabolic", "m1"});
      GLmnSpec spec;
      spec.m = get_int(require(v, key, "m"), "algebra.m", 0, 8);
      spec.n = get_int(require(v, key, "n"), "algebra.n", 0, 8);
      if (spec.m + spec.n == 0) fail("algebra", "gl(0|0) is empty");
      cfg.gl = spec;
      const std::string par = v.contains("parabolic") ? get_string(v["parabolic"], "algebra.parabolic") : "none";
      const std::string name = "gl(" + std::to_string(spec.m) + "|" + std::to_string(spec.n) + ")";
      if (par == "none") {
        if (v.contains("m1")) fail("algebra.m1", "only meaningful with parabolic B");
        cfg.algebra = build_glmn(spec.m, spec.n);
        cfg.algebra_name = name;
      } else if (par == "A" || par == "B") {
        ParabolicChoice choice;
        if (par == "B") {
          choice.variant = ParabolicVariant::kB;
          choice.m1 = get_int(require(v, key, "m1"), "algebra.m1");
          if (choice.m1 < 1 || choice.m1 >= spec.m) fail("algebra.m1", "variant B needs 1 <= m1 < m");
        } else {
          if (v.contains("m1")) fail("algebra.m1", "only meaningful with parabolic B");
          if (spec.m < 1 || spec.n < 1) fail("algebra.parabolic", "variant A needs m, n >= 1");
        }
        cfg.nilradical = build_nilradical(spec, choice);
        cfg.algebra = cfg.nilradical->algebra;
        cfg.algebra_name = "u(" + name + "," + par + (par == "B" ? std::to_string(choice.m1) : "") + ")";
      } else {
        fail("algebra.parabolic", "expected \"none\", \"A\" or \"B\"");
      }
    } else if (preset == "sl2" || preset == "aff2") {
      allow_keys(v, key, {"preset"});
      cfg.algebra = preset == "sl2" ? build_sl2() : build_affine2();
      cfg.algebra_name = preset;
    } else if (preset == "abelian") {
      allow_keys(v, key, {"preset", "even", "odd"});
      const int even = v.contains("even") ? get_int(v["even"], "algebra.even", 0, 12) : 0;
      const int odd = v.contains("odd") ? get_int(v["odd"], "algebra.odd", 0, 12) : 0;
      if (even + odd == 0) fail("algebra", "abelian algebra of dimension 0");
      cfg.algebra = build_abelian(even, odd);
      cfg.algebra_name = "abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    } else {
      fail("algebra.preset", "unknown preset '" + preset + "' (gl, sl2, aff2, abelian)");
    }
    return;
  }

  allow_keys(v, key, {"name", "basis", "brackets"});
  const std::string name = v.contains("name") ? get_string(v["name"], "algebra.name") : "inline";
  const auto basis = get_basis(require(v, key, "basis"), "algebra.basis");
  LieSuperalgebra::Brackets upper;
  if (v.contains("brackets")) {
    const json& br = v["brackets"];
    if (!br.is_array()) fail("algebra.brackets", "expected an array of {a, b, value}");
    for (std::size_t i = 0; i < br.size(); ++i) {
      const std::string k = "algebra.brackets[" + std::to_string(i) + "]";
      if (!br[i].is_object()) fail(k, "expected an object");
      allow_keys(br[i], k, {"a", "b", "value"});
      int a = find_label(basis, get_string(require(br[i], k, "a"), k + ".a"), k + ".a");
      int b = find_label(basis, get_string(require(br[i], k, "b"), k + ".b"), k + ".b");
      const json& val = require(br[i], k, "value");
      if (!val.is_object()) fail(k + ".value", "expected an object label -> coefficient");
      SparseVector vec;
      for (const auto& [lab, c] : val.items()) {
        const Rational x = get_rational(c, k + ".value." + lab);
        if (x != 0) vec[find_label(basis, lab, k + ".value")] = x;
      }
      if (a > b) {
        // [E_b, E_a] = -(-1)^{[a][b]} [E_a, E_b]
        const int s = -koszul(basis[a].parity, basis[b].parity);
        for (auto& [c, x] : vec) x *= s;
        std::swap(a, b);
      }
      if (upper.count({a, b})) fail(k, "bracket of this pair given twice");
      upper[{a, b}] = std::move(vec);
    }
  }
  try {
    cfg.algebra = std::make_shared<const LieSuperalgebra>(LieSuperalgebra::from_upper_brackets(name, basis, upper));
  } catch (const std::exception& e) {
    fail("algebra", e.what());
  }
  const JacobiReport jr = validate_superjacobi(*cfg.algebra);
  if (!jr.ok) fail("algebra", jr.violations.front().describe(*cfg.algebra));
  cfg.algebra_name = name;
}

Representation inline_module(const json& v, const AlgebraPtr& alg) {
  allow_keys(v, "module", {"basis", "action"});
  const auto carrier = get_basis(require(v, "module", "basis"), "module.basis");
  const int dim = static_cast<int>(carrier.size());
  std::vector<SparseRationalMatrix> action(alg->dim(), SparseRationalMatrix(dim, dim));
  const json& act = require(v, "module", "action");
  if (!act.is_object()) fail("module.action", "expected an object label -> matrix");
  for (const auto& [lab, mat] : act.items()) {
    const std::string k = "module.action." + lab;
    auto a = alg->find(lab);
    if (!a) fail(k, "unknown algebra label '" + lab + "'");
    if (!mat.is_array() || static_cast<int>(mat.size()) != dim) fail(k, "expected " + std::to_string(dim) + " rows");
    for (int i = 0; i < dim; ++i) {
      if (!mat[i].is_array() || static_cast<int>(mat[i].size()) != dim) {
        fail(k + "[" + std::to_string(i) + "]", "expected " + std::to_string(dim) + " entries");
      }
      for (int j = 0; j < dim; ++j) {
        const Rational x = get_rational(mat[i][j], k + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        if (x != 0) action[*a].set(i, j, x);
      }
    }
  }
  return Representation(alg, carrier, std::move(action));
}

void parse_module(const json& v, RunConfig& cfg) {
  const AlgebraPtr& alg = cfg.algebra;
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "natural") {
      if (!cfg.gl) fail("module", "natural module needs the gl preset");
      cfg.module = cfg.nilradical ? natural_module(*cfg.nilradical) : natural_module(*cfg.gl, alg);
    } else if (s == "trivial") {
      cfg.module = trivial_module(alg);
    } else if (s == "adjoint") {
      cfg.module = adjoint_module(alg);
    } else {
      fail("module", "unknown module '" + s + "' (natural, trivial, adjoint, {\"kac\": d}, inline)");
    }
    cfg.module_name = s;
  } else if (v.is_object() && v.contains("kac")) {
    allow_keys(v, "module", {"kac"});
    const int d = get_int(v["kac"], "module.kac", 1, 64);
    if (!cfg.nilradical || cfg.nilradical->choice.variant != ParabolicVariant::kA) {
      fail("module.kac", "Kac modules need the gl preset with parabolic A");
    }
    cfg.module = kac_module(*cfg.nilradical, d);
    cfg.kac_dim = d;
    cfg.module_name = "kac(" + std::to_string(d) + ")";
  } else if (v.is_object() && v.contains("trivial")) {
    allow_keys(v, "module", {"trivial"});
    const Parity p = get_parity(v["trivial"], "module.trivial");
    cfg.module = trivial_module(alg, p);
    cfg.module_name = p.is_odd() ? "trivial(odd)" : "trivial";
  } else if (v.is_object()) {
    cfg.module = inline_module(v, alg);
    cfg.module_name = "inline";
  } else {
    fail("module", "expected a string or an object");
  }
  RepresentationReport rr;
  try {
    rr = validate_representation(cfg.module);
  } catch (const std::exception& e) {
    fail("module", e.what());
  }
  if (!rr.ok) fail("module", rr.violations.front().describe(*alg));
}

// Accepted spellings of generator a: its basis label, "x_<label>", and "x_<suffix>" for
// labels of the form "E_<suffix>".
std::map<std::string, int> generator_names(const LieSuperalgebra& alg) {
  std::map<std::string, int> names;
  for (int a = 0; a < alg.dim(); ++a) {
    const std::string& l = alg.label(a);
    names[l] = a;
    names["x_" + l] = a;
    if (l.size() > 2 && l.compare(0, 2, "E_") == 0) names["x_" + l.substr(2)] = a;
  }
  return names;
}

void parse_mixing(const json& v, RunConfig& cfg) {
  const int r = cfg.algebra->dim();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "none") cfg.mixing = MixingSet::none(r);
    else if (s == "all") cfg.mixing = MixingSet::all(r);
    else fail("mixing", "expected \"none\", \"all\", {\"rows_from\": m1} or a list of generator labels");
    cfg.mixing_name = s;
    return;
  }
  if (v.is_object()) {
    allow_keys(v, "mixing", {"rows_from"});
    const int m1 = get_int(require(v, "mixing", "rows_from"), "mixing.rows_from");
    if (!cfg.nilradical || cfg.nilradical->choice.variant != ParabolicVariant::kA) {
      fail("mixing.rows_from", "needs the gl preset with parabolic A");
    }
    if (m1 < 1 || m1 >= cfg.gl->m) fail("mixing.rows_from", "needs 1 <= m1 < m");
    cfg.mixing = mixed_rows(*cfg.nilradical, m1);
    cfg.mixing_name = "rows>" + std::to_string(m1);
    return;
  }
  if (!v.is_array()) fail("mixing", "expected a string, an object or an array");
  const auto names = generator_names(*cfg.algebra);
  std::vector<int> members;
  std::string label;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string k = "mixing[" + std::to_string(i) + "]";
    const std::string s = get_string(v[i], k);
    auto it = names.find(s);
    if (it == names.end()) fail(k, "unknown generator label '" + s + "'");
    if (std::find(members.begin(), members.end(), it->second) != members.end()) fail(k, "listed twice");
    members.push_back(it->second);
    label += (label.empty() ? "" : ",") + s;
  }
  cfg.mixing = MixingSet(r, members);
  cfg.mixing_name = "{" + label + "}";
}

std::vector<Weight> get_weights(const json& v, const std::string& key, int count) {
  if (!v.is_array() || static_cast<int>(v.size()) != count) fail(key, "expected " + std::to_string(count) + " weights");
  std::vector<Weight> out;
  std::optional<std::size_t> rank;
  for (int i = 0; i < count; ++i) {
    const std::string k = key + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(k, "expected an integer vector");
    if (rank && v[i].size() != *rank) fail(k, "torus rank differs from the first weight");
    rank = v[i].size();
    Weight w;
    for (std::size_t t = 0; t < v[i].size(); ++t) w.push_back(get_int(v[i][t], k + "[" + std::to_string(t) + "]"));
    out.push_back(std::move(w));
  }
  return out;
}

void parse_grading(const json& v, RunConfig& cfg) {
  if (!v.is_object()) fail("grading", "expected an object");
  const std::string type = get_string(require(v, "grading", "type"), "grading.type");
  if (type == "window") {
    allow_keys(v, "grading", {"type", "bound"});
    cfg.grading = GradingScheme::degree_window(v.contains("bound") ? get_int(v["bound"], "grading.bound", 0, 40) : 6);
    return;
  }
  if (type != "weight") fail("grading.type", "expected \"window\" or \"weight\"");
  allow_keys(v, "grading", {"type", "torus", "generator_weights", "module_weights", "seed_bound"});
  const int seed = v.contains("seed_bound") ? get_int(v["seed_bound"], "grading.seed_bound", 0, 40) : 6;
  const int r = cfg.algebra->dim();
  std::vector<Weight> gen, mod;
  if (v.contains("torus")) {
    const std::string torus = get_string(v["torus"], "grading.torus");
    if (torus != "diagonal") fail("grading.torus", "unknown torus '" + torus + "' (diagonal)");
    if (!cfg.gl) fail("grading.torus", "the diagonal torus needs the gl preset");
    if (v.contains("generator_weights")) fail("grading.generator_weights", "given together with a named torus");
    gen = cfg.nilradical ? generator_weights(*cfg.nilradical) : generator_weights(*cfg.gl);
    if (v.contains("module_weights")) {
      mod = get_weights(v["module_weights"], "grading.module_weights", cfg.module.dim());
    } else if (cfg.module_name == "natural") {
      mod = natural_weights(*cfg.gl);
    } else if (cfg.kac_dim > 0) {
      mod = kac_weights(*cfg.nilradical, cfg.kac_dim);
    } else if (cfg.module_name.rfind("trivial", 0) == 0) {
      mod.assign(cfg.module.dim(), Weight(cfg.gl->size(), 0));
    } else if (cfg.module_name == "adjoint") {
      for (const auto& w : gen) {
        Weight root = w;
        for (auto& x : root) x = -x;
        mod.push_back(std::move(root));
      }
    } else {
      fail("grading.module_weights", "required for inline modules");
    }
  } else {
    gen = get_weights(require(v, "grading", "generator_weights"), "grading.generator_weights", r);
    mod = get_weights(require(v, "grading", "module_weights"), "grading.module_weights", cfg.module.dim());
    if (!gen.empty() && !mod.empty() && gen.front().size() != mod.front().size()) {
      fail("grading.module_weights", "torus rank differs from generator_weights");
    }
  }
  cfg.grading = GradingScheme::weight_blocks(std::move(gen), std::move(mod), seed);
  try {
    check_torus(cfg.module, cfg.grading);
  } catch (const std::invalid_argument& e) {
    fail("grading", e.what());
  }
}

}  // namespace

std::string task_name(Task t) {
  switch (t) {
    case Task::kValidate: return "validate";
    case Task::kCohomology: return "cohomology";
    case Task::kCeCompare: return "ce-compare";
    case Task::kKacWitness: return "kac-witness";
    case Task::kCompletionDemo: return "completion-demo";
  }
  return "?";
}

std::optional<Task> parse_task(const std::string& name) {
  for (Task t : {Task::kValidate, Task::kCohomology, Task::kCeCompare, Task::kKacWitness, Task::kCompletionDemo}) {
    if (task_name(t) == name) return t;
  }
  return std::nullopt;
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw ConfigError(source + ": " + msg);
  }
  try {
    if (!doc.is_object()) fail("(top level)", "expected an object");
    allow_keys(doc, "", {"algebra", "module", "mixing", "grading", "degrees", "order", "tasks"});
    RunConfig cfg;
    cfg.source = source;
    cfg.echo = doc.dump();
    parse_algebra(require(doc, "", "algebra"), cfg);
    parse_module(doc.contains("module") ? doc["module"] : json("trivial"), cfg);
    parse_mixing(doc.contains("mixing") ? doc["mixing"] : json("none"), cfg);
    parse_grading(doc.contains("grading") ? doc["grading"] : json{{"type", "window"}}, cfg);
    if (doc.contains("degrees")) {
      const json& d = doc["degrees"];
      if (!d.is_array() || d.size() != 2) fail("degrees", "expected [p_min, p_max]");
      cfg.pmin = get_int(d[0], "degrees[0]", -64, 64);
      cfg.pmax = get_int(d[1], "degrees[1]", -64, 64);
      if (cfg.pmin > cfg.pmax) fail("degrees", "p_min > p_max");
    }
    if (doc.contains("order")) cfg.order = get_int(doc["order"], "order", 2, 40);
    if (doc.contains("tasks")) {
      const json& t = doc["tasks"];
      if (!t.is_array()) fail("tasks", "expected an array of task names");
      for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string k = "tasks[" + std::to_string(i) + "]";
        const std::string s = get_string(t[i], k);
        auto task = parse_task(s);
        if (!task) fail(k, "unknown task '" + s + "'");
        cfg.tasks.push_back(*task);
      }
    } else {
      cfg.tasks = {Task::kCohomology};
    }
    return cfg;
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  } catch (const StructuralError& e) {
    throw ConfigError(source + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open");
  std::ostringstream s;
  s << in.rdbuf();
  return parse_config_text(s.str(), path);
}

}  // namespace sbrst::cli
