#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sbrst/cli.hpp"

using namespace sbrst::cli;

namespace {

int threads_from_env() {
  const char* s = std::getenv("SBRST_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const long n = std::strtol(s, &end, 10);
  if (*end || n < 1 || n > 256) throw ConfigError(std::string("SBRST_THREADS: expected 1..256, got '") + s + "'");
  return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BRST and mixed Fock cohomology of Lie superalgebras"};
  app.require_subcommand(1);
  std::string config_path, out_path, format = "table";
  std::optional<int> order;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "write output here instead of stdout");
    sub->add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}));
    return sub;
  };
  CLI::App* run_cmd = add("run", "run the tasks listed in the config");
  CLI::App* validate = add("validate", "structural checks, delta^2 = 0, equivariance");
  CLI::App* cohomology = add("cohomology", "Betti numbers per block and degree");
  CLI::App* ce = add("ce-compare", "compare with the Chevalley-Eilenberg complex (D = none)");
  CLI::App* witness = add("kac-witness", "gl(1|1) operator relations on Kac-module cochains");
  CLI::App* demo = add("completion-demo", "gl(1|2) truncated completion example");
  demo->add_option("--order", order, "truncation order N >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const RunConfig cfg = parse_config(config_path);
    RunOptions opt;
    opt.format = format == "records" ? Format::kRecords : Format::kTable;
    opt.order = order;
    opt.threads = threads_from_env();
    std::vector<Task> tasks;
    if (*run_cmd) tasks = cfg.tasks;
    else if (*validate) tasks = {Task::kValidate};
    else if (*cohomology) tasks = {Task::kCohomology};
    else if (*ce) tasks = {Task::kCeCompare};
    else if (*witness) tasks = {Task::kKacWitness};
    else tasks = {Task::kCompletionDemo};

    if (out_path.empty()) return run(cfg, tasks, opt, std::cout);
    std::ofstream out(out_path);
    if (!out) throw ConfigError(out_path + ": cannot open for writing");
    return run(cfg, tasks, opt, out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
