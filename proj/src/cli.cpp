#include "mls/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mls/algorithms.hpp"
#include "mls/harness.hpp"
#include "mls/trace_io.hpp"

namespace mls {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << bytes;
  if (!out) throw Error(Errc::IoError, "short write to " + path);
}

struct GenFlags {
  std::string family;
  std::string out_path;
  int m = 0;
  int k = 0;
  int n = 0;
  int n_max = 0;
  std::vector<int> lens;
  Time lo = 1;
  Time hi = 10;
  std::uint64_t seed = 1;
};

GenSpec to_spec(const GenFlags& flags) {
  const std::optional<Family> family = family_from_name(flags.family);
  if (!family) throw Error(Errc::InconsistentSpec, "unknown family \"" + flags.family + "\"");
  GenSpec spec;
  spec.family = *family;
  spec.m = flags.m;
  spec.k = flags.k;
  spec.n = flags.n;
  spec.n_max = flags.n_max;
  spec.lens = flags.lens;
  spec.lo = flags.lo;
  spec.hi = flags.hi;
  spec.seed = flags.seed;
  return spec;
}

int cmd_gen(const GenFlags& flags, std::ostream& out) {
  const Instance instance = generate(to_spec(flags));
  write_file(flags.out_path, serialize_instance(instance));
  out << "wrote " << flags.out_path << " (m=" << instance.machines << " k=" << instance.num_lists()
      << " n=" << instance.num_jobs() << ")\n";
  return 0;
}

struct RunFlags {
  std::string alg;
  std::string in_path;
  std::string flatten = "concatenate";
  std::string schedule_out;
};

int cmd_run(const RunFlags& flags, std::ostream& out) {
  const Instance instance = parse_instance(read_file(flags.in_path));
  Schedule schedule;
  if (flags.alg == "ljllm") {
    schedule = run_ljllm(instance);
  } else if (flags.alg == "ls") {
    schedule = run_ls(instance, flags.flatten == "round_robin" ? Flatten::RoundRobin
                                                               : Flatten::Concatenate);
  } else {
    schedule = run_lpt(instance);
  }
  if (!flags.schedule_out.empty()) write_file(flags.schedule_out, serialize_schedule(schedule));
  out << "makespan " << schedule.makespan << "\n";
  return 0;
}

struct VerifyFlags {
  std::string in_path;
  std::string schedule_path;
  bool offline_order = false;
};

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  const Instance instance = parse_instance(read_file(flags.in_path));
  const Schedule schedule = parse_schedule(read_file(flags.schedule_path), instance.machines);
  const Verdict verdict = verify_schedule(instance, schedule,
                                          {.require_batch_order = !flags.offline_order});
  if (verdict.ok()) {
    out << "OK\n";
    return 0;
  }
  out << violation_name(verdict.violation) << " at assignment " << verdict.assignment_index << ": "
      << verdict.detail << "\n";
  return 1;
}

struct RatioFlags {
  std::string in_path;
  int oracle_cap = 16;
  std::uint64_t node_limit = 0;
};

int cmd_ratio(const RatioFlags& flags, std::ostream& out) {
  const Instance instance = parse_instance(read_file(flags.in_path));
  EvalOptions options;
  options.oracle.size_cap = flags.oracle_cap;
  options.oracle.node_limit = flags.node_limit;
  const EvaluationReport report = evaluate(instance, options);
  out << serialize_report(report);
  return report.ok() ? 0 : 1;
}

struct SweepFlags {
  std::string config_path;
  std::string out_dir;
  int jobs = 1;
};

// Strict config document: unknown keys are errors, like unknown flags.
GenSpec spec_from_json(const nlohmann::json& doc) {
  GenSpec spec;
  bool have_family = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "family") {
      const std::optional<Family> family = family_from_name(value.get<std::string>());
      if (!family)
        throw Error(Errc::BadConfig, "unknown family \"" + value.get<std::string>() + "\"");
      spec.family = *family;
      have_family = true;
    } else if (key == "m") {
      spec.m = value.get<int>();
    } else if (key == "k") {
      spec.k = value.get<int>();
    } else if (key == "n") {
      spec.n = value.get<int>();
    } else if (key == "n_max") {
      spec.n_max = value.get<int>();
    } else if (key == "lens") {
      spec.lens = value.get<std::vector<int>>();
    } else if (key == "lo") {
      spec.lo = value.get<Time>();
    } else if (key == "hi") {
      spec.hi = value.get<Time>();
    } else if (key == "seed") {
      spec.seed = value.get<std::uint64_t>();
    } else {
      throw Error(Errc::BadConfig, "unknown spec key \"" + key + "\"");
    }
  }
  if (!have_family) throw Error(Errc::BadConfig, "spec without family");
  return spec;
}

void print_summary(const SweepSummary& summary, std::ostream& out) {
  out << "instances: " << summary.instances << "\n";
  for (const auto& [name, counter] : summary.checks)
    out << name << ": " << counter.fail << " failures, " << counter.pass << " passed, "
        << counter.not_applicable << " not applicable\n";
  for (const auto& [key, ratio] : summary.worst_ljllm_ratio)
    out << "worst ljllm ratio [" << key << "]: " << ratio.str() << "\n";
  for (const auto& [key, ratio] : summary.worst_ls_ratio)
    out << "worst ls ratio [" << key << "]: " << ratio.str() << "\n";
  out << "verdict: " << (summary.ok() ? "pass" : "fail") << "\n";
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(read_file(flags.config_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadConfig, std::string("cannot parse config: ") + e.what());
  }

  int seeds_per_spec = 0;
  SweepOptions options;
  options.jobs = flags.jobs;
  std::vector<GenSpec> specs;
  try {
    for (const auto& [key, value] : config.items()) {
      if (key == "seeds_per_spec") {
        seeds_per_spec = value.get<int>();
      } else if (key == "with_oracle") {
        options.eval.with_oracle = value.get<bool>();
      } else if (key == "oracle_cap") {
        options.eval.oracle.size_cap = value.get<int>();
      } else if (key == "node_limit") {
        options.eval.oracle.node_limit = value.get<std::uint64_t>();
      } else if (key == "specs") {
        for (const auto& spec_doc : value) specs.push_back(spec_from_json(spec_doc));
      } else {
        throw Error(Errc::BadConfig, "unknown config key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadConfig, std::string("bad config value: ") + e.what());
  }
  if (seeds_per_spec < 1) throw Error(Errc::BadConfig, "seeds_per_spec must be >= 1");

  const SweepResult result = sweep(specs, seeds_per_spec, options);
  if (!flags.out_dir.empty()) {
    std::filesystem::create_directories(flags.out_dir);
    const std::filesystem::path dir(flags.out_dir);
    for (const EvaluationReport& report : result.reports)
      write_file((dir / ("report-" + report.digest + ".json")).string(), serialize_report(report));
    write_file((dir / "summary.json").string(), serialize_summary(result.summary));
  }
  print_summary(result.summary, out);
  return result.summary.ok() ? 0 : 1;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deterministic multi-list scheduling engine and experiment harness", "mls"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--family", gen.family,
                      "uniform|unit|equal_lists|single_batch|ls_adversarial|figure2")
      ->required();
  gen_cmd->add_option("--m", gen.m, "machine count");
  gen_cmd->add_option("--k", gen.k, "list count");
  gen_cmd->add_option("--n", gen.n, "exact total job count");
  gen_cmd->add_option("--n-max", gen.n_max, "randomized total job count in [k, n-max]");
  gen_cmd->add_option("--lens", gen.lens, "explicit list lengths")->delimiter(',');
  gen_cmd->add_option("--lo", gen.lo, "ptime range low end");
  gen_cmd->add_option("--hi", gen.hi, "ptime range high end");
  gen_cmd->add_option("--seed", gen.seed, "64-bit generator seed");
  gen_cmd->add_option("--out", gen.out_path, "output instance file")->required();

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "run one algorithm on an instance file");
  run_cmd->add_option("--alg", run.alg, "ljllm|ls|lpt")
      ->required()
      ->check(CLI::IsMember({"ljllm", "ls", "lpt"}));
  run_cmd->add_option("--in", run.in_path, "instance file")->required();
  run_cmd->add_option("--flatten", run.flatten, "ls flattening order")
      ->check(CLI::IsMember({"concatenate", "round_robin"}));
  run_cmd->add_option("--schedule-out", run.schedule_out, "write the schedule CSV here");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a schedule CSV against an instance");
  verify_cmd->add_option("--in", verify.in_path, "instance file")->required();
  verify_cmd->add_option("--schedule", verify.schedule_path, "schedule CSV file")->required();
  verify_cmd->add_flag("--offline-order", verify.offline_order,
                       "waive the batch-order requirement (offline baselines)");

  RatioFlags ratio;
  CLI::App* ratio_cmd = app.add_subcommand("ratio", "evaluate one instance against the exact optimum");
  ratio_cmd->add_option("--in", ratio.in_path, "instance file")->required();
  ratio_cmd->add_option("--oracle-cap", ratio.oracle_cap, "oracle size cap (jobs)");
  ratio_cmd->add_option("--node-limit", ratio.node_limit, "oracle node limit, 0 = unlimited");

  SweepFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a seeded sweep from a config file");
  sweep_cmd->add_option("--config", sweep_flags.config_path, "sweep config JSON")->required();
  sweep_cmd->add_option("--out", sweep_flags.out_dir, "directory for report documents");
  sweep_cmd->add_option("--jobs", sweep_flags.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (ratio_cmd->parsed()) return cmd_ratio(ratio, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mls
