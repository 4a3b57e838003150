#include "ghc/errors.hpp"
#include "ghc/job.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

namespace {

struct Flags {
  std::string config;
  std::string task;
  std::string group;
  std::string job;
  std::string out;
  std::string convention;
  std::uint64_t seed = 0;
  std::size_t cap = 0;
  std::vector<std::string> params;
  bool no_cache = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON job config; explicit flags override its fields");
  cmd->add_option("--group", f.group, "group: S3, Z/4, Z2xZ2, Dn, Z^k, Fk or file:PATH");
  cmd->add_option("--job", f.job, "job id used for output file names");
  cmd->add_option("--seed", f.seed, "seed for all randomness");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--cap", f.cap, "cap on ball and basis sizes");
  cmd->add_option("--convention", f.convention, "sign convention for tau and B")
      ->check(CLI::IsMember({"standard", "twisted"}));
  cmd->add_option("--param", f.params, "task parameter KEY=JSON (repeatable)");
  cmd->add_flag("--no-cache", f.no_cache, "ignore and do not fill the result cache");
  cmd->add_flag("--quiet", f.quiet, "do not print the results document");
}

std::string absolute(const std::string& path) { return std::filesystem::absolute(path).lexically_normal().string(); }

ghc::Json build_config(const Flags& f, const std::string& task, std::string& base_dir) {
  ghc::Json cfg = ghc::Json::object();
  base_dir = ".";
  if (!f.config.empty()) {
    cfg = ghc::Json::parse(ghc::read_text(f.config));
    if (!cfg.is_object()) throw ghc::ConfigError("config file must hold a JSON object");
    base_dir = std::filesystem::path(f.config).parent_path().string();
    if (base_dir.empty()) base_dir = ".";
  }
  // flags override the file; relative flag paths are taken from the working directory
  if (!task.empty()) cfg["task"] = task;
  if (!f.group.empty())
    cfg["group"] = f.group.starts_with("file:") ? "file:" + absolute(f.group.substr(5)) : f.group;
  if (!f.job.empty()) cfg["job"] = f.job;
  if (!f.out.empty()) cfg["out"] = absolute(f.out);
  if (!f.convention.empty()) cfg["convention"] = f.convention;
  if (f.seed != 0) cfg["seed"] = f.seed;
  if (f.cap != 0) cfg["cap"] = f.cap;
  if (f.no_cache) cfg["cache"] = false;
  for (const auto& kv : f.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ghc::ConfigError("--param expects KEY=JSON, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (!cfg.contains("params") || !cfg["params"].is_object()) cfg["params"] = ghc::Json::object();
    try {
      cfg["params"][key] = ghc::Json::parse(value);
    } catch (const ghc::Json::parse_error&) {
      cfg["params"][key] = value;  // bare strings such as variant=cyclic
    }
  }
  return cfg;
}

int run_task(const Flags& f, const std::string& task) {
  std::string base_dir;
  const auto cfg = build_config(f, task, base_dir);
  const auto config = ghc::JobConfig::from_json(cfg, base_dir);
  const auto report = ghc::run_job(config);
  if (!f.quiet) std::cout << report.results.dump(2) << "\n";
  std::cerr << config.job_id << " [" << config.task << "] " << (report.passed ? "PASS" : "FAIL") << " digest "
            << report.digest << (report.cache_hits ? " (cached)" : "") << "\n";
  return ghc::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for group-algebra Hochschild and cyclic complexes"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;

  for (const char* task : ghc::kTasks) {
    auto* cmd = app.add_subcommand(task, std::string("run the ") + task + " task");
    add_common(cmd, flags);
    cmd->callback([&chosen, task] { chosen = task; });
  }
  auto* run = app.add_subcommand("run", "run the task named in --config or --task");
  add_common(run, flags);
  run->add_option("--task", flags.task, "task name")->check(CLI::IsMember(std::vector<std::string>(
                                                           std::begin(ghc::kTasks), std::end(ghc::kTasks))));
  run->callback([&chosen] { chosen = "run"; });

  std::string builtin_dir;
  auto* list = app.add_subcommand("list-builtins", "print built-in groups and cochain families");
  list->add_option("--dir", builtin_dir, "directory searched for *.group files");
  list->callback([&chosen] { chosen = "list-builtins"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (chosen == "list-builtins") {
      std::cout << ghc::list_builtins(builtin_dir).dump(2) << "\n";
      return 0;
    }
    return run_task(flags, chosen == "run" ? flags.task : chosen);
  } catch (const ghc::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
