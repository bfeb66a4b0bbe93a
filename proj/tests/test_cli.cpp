#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sbrst/ce.hpp"
#include "sbrst/cli.hpp"

using namespace sbrst;
using namespace sbrst::cli;
using json = nlohmann::ordered_json;

namespace {

bool g_update_golden = false;

const std::string kConfigs = SBRST_CONFIG_DIR;
const std::string kGolden = SBRST_GOLDEN_DIR;

std::string config_path(const std::string& name) { return kConfigs + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text, "t.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

int run_config(const RunConfig& cfg, std::string& out, Format format = Format::kRecords, int threads = 1) {
  std::ostringstream os;
  RunOptions opt;
  opt.format = format;
  opt.threads = threads;
  const int code = run(cfg, cfg.tasks, opt, os);
  out = os.str();
  return code;
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

// Records with the wall-clock field removed, one per line.
std::string without_timing(const std::string& text) {
  std::string out;
  for (auto r : records(text)) {
    r.erase("wall_clock_s");
    out += r.dump() + "\n";
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Shell {
  int code = -1;
  std::string out, err;
};

Shell shell(const std::string& args, const std::string& env = "") {
  const auto dir = std::filesystem::temp_directory_path();
  static int counter = 0;
  const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const std::string out = (dir / ("sbrst_out_" + tag)).string(), err = (dir / ("sbrst_err_" + tag)).string();
  const std::string cmd = env + " \"" SBRST_EXE "\" " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  Shell s;
  s.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  s.out = slurp(out);
  s.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return s;
}

void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = kGolden + "/" + name;
  if (g_update_golden) {
    std::ofstream(path) << actual;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path << " missing; rerun with --update-golden";
  EXPECT_EQ(actual, slurp(path)) << name;
}

}  // namespace

TEST(Config, UnknownKeyNamed) {
  const std::string e = error_of(R"({"algebra": {"preset": "gl", "m": 1, "n": 1, "variant": "A"}})");
  EXPECT_NE(e.find("algebra.variant"), std::string::npos) << e;
  EXPECT_NE(e.find("t.json"), std::string::npos) << e;
}

TEST(Config, UnknownMixingLabel) {
  const std::string e = error_of(R"({"algebra": {"preset": "gl", "m": 1, "n": 1, "parabolic": "A"},
                                    "module": "natural", "mixing": ["x_99"]})");
  EXPECT_NE(e.find("mixing[0]"), std::string::npos) << e;
  EXPECT_NE(e.find("x_99"), std::string::npos) << e;
}

TEST(Config, SyntaxErrorPosition) {
  const std::string e = error_of("{\n  \"module\": \"natural\",,\n}");
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;
  EXPECT_NE(e.find("column"), std::string::npos) << e;
}

TEST(Config, MixingLabelForms) {
  const char* base = R"({"algebra": {"preset": "gl", "m": 1, "n": 2, "parabolic": "A"}, "module": "natural", )";
  for (const char* m : {R"("mixing": ["x_13"]})", R"("mixing": ["E_13"]})"}) {
    const RunConfig cfg = parse_config_text(std::string(base) + m);
    EXPECT_EQ(cfg.mixing.members(), std::vector<int>{1}) << m;
  }
}

TEST(Config, Defaults) {
  const RunConfig cfg = parse_config_text(R"({"algebra": {"preset": "sl2"}, "module": "adjoint"})");
  EXPECT_EQ(cfg.pmin, -6);
  EXPECT_EQ(cfg.pmax, 6);
  EXPECT_EQ(cfg.order, 4);
  EXPECT_EQ(cfg.tasks, std::vector<Task>{Task::kCohomology});
  EXPECT_TRUE(cfg.mixing.empty());
  EXPECT_FALSE(cfg.grading.weighted());
}

TEST(Config, RangeChecks) {
  EXPECT_NE(error_of(R"({"algebra": {"preset": "sl2"}, "degrees": [2, 1]})").find("degrees"), std::string::npos);
  EXPECT_NE(error_of(R"({"algebra": {"preset": "sl2"}, "order": 1})").find("order"), std::string::npos);
  EXPECT_NE(error_of(R"({"algebra": {"preset": "gl", "m": 2, "n": 1, "parabolic": "B", "m1": 2}})")
                .find("algebra.m1"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algebra": {"preset": "sl2"}, "tasks": ["frobnicate"]})").find("tasks[0]"),
            std::string::npos);
}

TEST(Config, InlineAlgebraAndModule) {
  const RunConfig cfg = parse_config_text(R"({
    "algebra": {"name": "aff", "basis": [{"label": "e1", "parity": 0}, {"label": "e2", "parity": 0}],
                "brackets": [{"a": "e1", "b": "e2", "value": {"e2": 1}}]},
    "module": "trivial", "degrees": [0, 3]})");
  ASSERT_EQ(cfg.algebra->dim(), 2);
  EXPECT_EQ(cfg.algebra->bracket(1, 0), (SparseVector{{1, -1}}));
  EXPECT_EQ(ce_betti(cfg.module, 2), (std::vector<long>{1, 1, 0}));

  const RunConfig odd = parse_config_text(R"({
    "algebra": {"basis": [{"label": "t", "parity": 1}]},
    "module": {"basis": [{"label": "v1", "parity": 0}, {"label": "v2", "parity": 1}],
               "action": {"t": [[0, "1/2"], [0, 0]]}}})");
  EXPECT_EQ(odd.module.action(0).at(0, 1), Rational(1, 2));
}

TEST(Config, InlineRejections) {
  // [a, [b, c]] + [b, [c, a]] + [c, [a, b]] = c
  const std::string jac = error_of(R"({"algebra": {"basis": [{"label": "a", "parity": 0},
      {"label": "b", "parity": 0}, {"label": "c", "parity": 0}],
      "brackets": [{"a": "a", "b": "b", "value": {"c": 1}}, {"a": "a", "b": "c", "value": {"a": 1}}]}})");
  EXPECT_NE(jac.find("algebra"), std::string::npos) << jac;
  // t^2 = 0 is required: a nonzero square of an odd operator is not a module.
  const std::string rep = error_of(R"({"algebra": {"basis": [{"label": "t", "parity": 1}]},
    "module": {"basis": [{"label": "v1", "parity": 0}, {"label": "v2", "parity": 1}],
               "action": {"t": [[0, 1], [1, 0]]}}})");
  EXPECT_NE(rep.find("module"), std::string::npos) << rep;
  const std::string shape = error_of(R"({"algebra": {"basis": [{"label": "t", "parity": 1}]},
    "module": {"basis": [{"label": "v", "parity": 0}], "action": {"t": [[0, 1]]}}})");
  EXPECT_NE(shape.find("module.action.t[0]"), std::string::npos) << shape;
}

TEST(Run, DualFockHasNoPositiveDegrees) {
  const RunConfig cfg = parse_config(config_path("gl11_dual_all.json"));
  std::string out;
  ASSERT_EQ(run_config(cfg, out), kExitOk);
  int seen = 0;
  for (const auto& r : records(out)) {
    if (r["record"] != "betti") continue;
    ++seen;
    const int p = r["p"];
    EXPECT_GE(p, -3);
    EXPECT_LE(p, 3);
    if (p > 0) EXPECT_EQ(r["dimC"], 0) << p;
  }
  EXPECT_EQ(seen, 7);
  const auto all = records(out);
  EXPECT_EQ(all.front()["record"], "config");
  EXPECT_EQ(all.back()["record"], "run");
  EXPECT_EQ(all.back()["exit_code"], 0);
}

TEST(Run, NotPointedIsAConfigError) {
  const RunConfig cfg = parse_config_text(R"({
    "algebra": {"preset": "gl", "m": 1, "n": 1}, "module": "natural", "mixing": ["x_12"],
    "grading": {"type": "weight", "generator_weights": [[0], [0], [0], [0]], "module_weights": [[0], [0]]}})");
  std::string out;
  EXPECT_EQ(run_config(cfg, out), kExitConfig);
  EXPECT_EQ(records(out).back()["exit_code"], kExitConfig);
}

TEST(Run, TaskPreconditions) {
  std::string out;
  RunConfig cfg = parse_config(config_path("gl11_dual_all.json"));
  cfg.tasks = {Task::kCeCompare};
  EXPECT_EQ(run_config(cfg, out), kExitConfig);
  cfg.tasks = {Task::kKacWitness};
  EXPECT_EQ(run_config(cfg, out), kExitConfig);
  cfg.tasks = {Task::kCompletionDemo};
  EXPECT_EQ(run_config(cfg, out), kExitConfig);
}

TEST(Run, Deterministic) {
  const RunConfig cfg = parse_config(config_path("gl22_kac_weight.json"));
  std::string a, b, c;
  ASSERT_EQ(run_config(cfg, a), kExitOk);
  ASSERT_EQ(run_config(cfg, b), kExitOk);
  ASSERT_EQ(run_config(cfg, c, Format::kRecords, 4), kExitOk);
  EXPECT_EQ(without_timing(a), without_timing(b));
  EXPECT_EQ(without_timing(a), without_timing(c));
}

TEST(Golden, Outputs) {
  struct Case {
    std::string config, golden;
    Format format;
  };
  const std::vector<Case> cases = {
      {"gl11_natural.json", "gl11_natural.txt", Format::kTable},
      {"gl11_dual_all.json", "gl11_dual_all.jsonl", Format::kRecords},
      {"gl22_kac_weight.json", "gl22_kac_weight.txt", Format::kTable},
      {"gl22_kac_weight.json", "gl22_kac_weight.jsonl", Format::kRecords},
      {"gl12_kac_witness.json", "gl12_kac_witness.txt", Format::kTable},
      {"gl12_completion.json", "gl12_completion.txt", Format::kTable},
  };
  for (const auto& c : cases) {
    std::string out;
    ASSERT_EQ(run_config(parse_config(config_path(c.config)), out, c.format), kExitOk) << c.config;
    check_golden(c.golden, c.format == Format::kRecords ? without_timing(out) : out);
  }
}

TEST(Executable, ExitCodes) {
  EXPECT_EQ(shell("run \"" + config_path("gl11_natural.json") + "\"").code, 0);
  EXPECT_EQ(shell("completion-demo \"" + config_path("gl12_completion.json") + "\" --order 6").code, 0);

  const Shell key = shell("cohomology \"" + config_path("bad_key.json") + "\"");
  EXPECT_EQ(key.code, 1);
  EXPECT_NE(key.err.find("algebra.variant"), std::string::npos) << key.err;

  const Shell label = shell("cohomology \"" + config_path("bad_label.json") + "\"");
  EXPECT_EQ(label.code, 1);
  EXPECT_NE(label.err.find("x_99"), std::string::npos) << label.err;

  const Shell syntax = shell("cohomology \"" + config_path("bad_syntax.json") + "\"");
  EXPECT_EQ(syntax.code, 1);
  EXPECT_NE(syntax.err.find("line 3"), std::string::npos) << syntax.err;

  EXPECT_EQ(shell("cohomology /nonexistent/config.json").code, 1);
  EXPECT_EQ(shell("frobnicate").code, 1);
  EXPECT_EQ(shell("cohomology \"" + config_path("gl11_natural.json") + "\"", "SBRST_THREADS=0").code, 1);
}

TEST(Executable, WritesOutFile) {
  const std::string path = (std::filesystem::temp_directory_path() / ("sbrst_records_" + std::to_string(::getpid()))).string();
  std::filesystem::remove(path);
  const Shell s =
      shell("cohomology \"" + config_path("gl11_dual_all.json") + "\" --format records --out \"" + path + "\"");
  ASSERT_EQ(s.code, 0);
  const RunConfig cfg = parse_config(config_path("gl11_dual_all.json"));
  std::string in_process;
  run_config(cfg, in_process);
  EXPECT_EQ(without_timing(slurp(path)), without_timing(in_process));
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--update-golden") g_update_golden = true;
  }
  return RUN_ALL_TESTS();
}
