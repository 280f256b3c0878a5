// Command-line front end: check, enumerate, family, bound, verify.
//
// Exit codes: 0 pass, 1 property failure, 2 usage error, 3 inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "togliatti/classify.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/report.hpp"

namespace {

using namespace togliatti;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

void emit(bool as_json, const std::string& command, const nlohmann::json& payload,
          const std::string& text) {
  if (as_json)
    std::cout << envelope(command, payload).dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial Togliatti systems of cubics: checks, search, family tables"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a versioned JSON report");

  auto* check = app.add_subcommand("check", "full report on one system read from a file");
  std::string file;
  int check_n = -1, check_d = 3;
  bool verbose = false;
  check->add_option("file", file, "system file ('-' for stdin)")->required();
  check->add_option("--n", check_n, "number of variables minus one (inferred if absent)");
  check->add_option("--d", check_d, "degree")->check(CLI::PositiveNumber);
  check->add_flag("--verbose", verbose, "dump the polytope and graphs");

  auto* enumerate = app.add_subcommand("enumerate", "search for minimal smooth systems");
  SearchConfig config;
  int max_s = 0;
  bool no_prune = false;
  bool subset_minimality = false;
  enumerate->add_option("--n", config.n)->required()->check(CLI::Range(2, 4));
  enumerate->add_option("--max-s", max_s, "largest |S| considered")->check(CLI::PositiveNumber);
  enumerate->add_option("--budget", config.budget_seconds, "seconds, 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--jobs", config.jobs, "threads, 0 = runtime default")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--seed", config.seed, "task scheduling seed");
  enumerate->add_option("--prefix-depth", config.prefix_depth, "decisions per task")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--no-prune", no_prune, "visit every assignment");
  enumerate->add_flag("--subset-minimality", subset_minimality,
                      "ignore the quadric's values on the cubes when judging minimality");

  auto* family = app.add_subcommand("family", "build and check the system of a partition");
  std::string partition;
  int family_n = -1;
  family->add_option("--partition", partition, "e.g. 2,1,1")->required();
  family->add_option("--n", family_n, "must equal the partition sum minus one");

  auto* bound = app.add_subcommand("bound", "mu/beta table over all partitions");
  int n_max = 0;
  bound->add_option("--n-max", n_max)->required()->check(CLI::Range(2, 40));

  auto* verify = app.add_subcommand("verify", "compare the search with the family");
  int verify_n = 0, verify_jobs = 0;
  double verify_budget = 0;
  verify->add_option("--n", verify_n)->required()->check(CLI::Range(2, 4));
  verify->add_option("--budget", verify_budget, "seconds, 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", verify_jobs, "threads, 0 = runtime default")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) {
      const auto sys = parse_system(read_input(file), check_n, check_d);
      const auto report = check_command(sys);
      emit(as_json, "check", to_json(report), render_text(report, verbose));
      return report.smooth_minimal_togliatti() ? kPass : kFail;
    }
    if (*enumerate) {
      if (max_s > 0) config.max_s = max_s;
      config.quadric_pruning = !no_prune;
      config.cubes_in_minimality = !subset_minimality;
      const auto result = enumerate_minimal_smooth(config);
      emit(as_json, "enumerate", to_json(result), render_text(result));
      return result.complete ? kPass : kInconclusive;
    }
    if (*family) {
      const PartitionSpec spec = parse_partition(partition);
      if (family_n >= 0 && family_n != spec.n())
        throw InvalidArgument("partition sums to " + std::to_string(spec.n() + 1) +
                              ", expected n+1 = " + std::to_string(family_n + 1));
      const auto f = family_system(spec);
      const auto report = check_command(f.sys);
      emit(as_json, "family", to_json(f, report), render_text(f, report));
      const bool ok = report.smooth_minimal_togliatti() && report.family_match &&
                      report.partition == spec;
      return ok ? kPass : kFail;
    }
    if (*bound) {
      const auto table = bound_table(n_max);
      emit(as_json, "bound", to_json(table), render_text(table));
      for (const auto& row : table)
        if (row.max_mu != row.bound) return kFail;
      return kPass;
    }
    if (*verify) {
      const auto report = verify_theorem(verify_n, verify_budget, verify_jobs);
      emit(as_json, "verify", to_json(report), render_text(report));
      return static_cast<int>(report.status);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
