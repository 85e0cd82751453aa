// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mls/algorithms.hpp"
#include "mls/harness.hpp"
#include "mls/trace_io.hpp"
#include "support/exhaustive.hpp"

using namespace mls;

namespace {

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(std::min(hw, 8u));
}

GenSpec uniform_spec(int m, int k, int n_max, std::uint64_t seed, Family family = Family::Uniform) {
  GenSpec spec;
  spec.family = family;
  spec.m = m;
  spec.k = k;
  spec.n_max = n_max;
  spec.seed = seed;
  return spec;
}

std::string serialize_all(const SweepResult& result) {
  std::string bytes = serialize_summary(result.summary);
  for (const EvaluationReport& report : result.reports) bytes += serialize_report(report);
  return bytes;
}

Rational worst_ljllm(const SweepSummary& summary) {
  Rational worst(0, 1);
  for (const auto& [key, ratio] : summary.worst_ljllm_ratio)
    if (ratio > worst) worst = ratio;
  return worst;
}

std::uint64_t fails(const SweepSummary& summary, const std::string& check) {
  return summary.checks.at(check).fail;
}

std::uint64_t not_applicable(const SweepSummary& summary, const std::string& check) {
  return summary.checks.at(check).not_applicable;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& label, const Outcome& outcome) {
  if (!outcome.pass) ++failures;
  std::cout << "criterion " << (id < 10 ? " " : "") << id << ": "
            << (outcome.pass ? "PASS" : "FAIL") << "  " << label;
  if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
  std::cout << "\n" << std::flush;
}

}  // namespace

int main() {
  const int jobs = worker_threads();
  SweepOptions options;
  options.jobs = jobs;

  // Sweeps shared across criteria; bytes kept for the determinism rerun.
  std::vector<std::pair<std::vector<GenSpec>, int>> sweep_plan;
  std::vector<SweepResult> sweep_results;
  std::vector<std::string> sweep_bytes;
  sweep_results.reserve(8);
  auto run_plan = [&](std::vector<GenSpec> specs, int seeds) -> const SweepResult& {
    sweep_plan.emplace_back(specs, seeds);
    sweep_results.push_back(sweep(specs, seeds, options));
    sweep_bytes.push_back(serialize_all(sweep_results.back()));
    return sweep_results.back();
  };

  // 1. Uniform instances: ljllm/opt <= 2 - 1/m, 500 seeds per (m, k).
  {
    const auto start = std::chrono::steady_clock::now();
    std::vector<GenSpec> specs;
    for (int m : {2, 3, 4})
      for (int k : {1, 2, 3}) specs.push_back(uniform_spec(m, k, 12, 1000u * m + 100u * k));
    const SweepResult& result = run_plan(specs, 500);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << result.summary.instances << " instances, " << fails(result.summary, "theorem1")
           << " theorem1 failures, worst ljllm ratio " << worst_ljllm(result.summary).str() << ", "
           << elapsed << "s";
    report(1, "uniform family stays within 2 - 1/m",
           {fails(result.summary, "theorem1") == 0 && not_applicable(result.summary, "theorem1") == 0 &&
                result.summary.ok() && elapsed < 60.0,
            detail.str()});
  }

  // 2. Equal-length lists, same bound, 300 seeds per (m, k).
  {
    std::vector<GenSpec> specs;
    for (int m : {2, 3, 4})
      for (int k : {2, 3})
        specs.push_back(uniform_spec(m, k, 12, 2000u * m + 100u * k, Family::EqualLists));
    const SweepResult& result = run_plan(specs, 300);
    report(2, "equal-length lists stay within 2 - 1/m",
           {fails(result.summary, "theorem1") == 0 && not_applicable(result.summary, "theorem1") == 0 &&
                result.summary.ok(),
            std::to_string(result.summary.instances) + " instances, worst ljllm ratio " +
                worst_ljllm(result.summary).str()});
  }

  // 3. Unit jobs: ratio <= 2; the worst observation is recorded, the bound is the gate.
  {
    std::vector<GenSpec> specs;
    for (int m : {2, 3, 4})
      for (int k : {1, 2, 3}) specs.push_back(uniform_spec(m, k, 12, 3000u * m + 100u * k, Family::Unit));
    const SweepResult& result = run_plan(specs, 200);
    const Rational worst = worst_ljllm(result.summary);
    report(3, "unit jobs stay within 2",
           {worst <= Rational(2, 1) && not_applicable(result.summary, "theorem1") == 0 &&
                result.summary.ok(),
            std::to_string(result.summary.instances) + " instances, worst observed ratio " +
                worst.str()});
  }

  // 4. Single-batch (k = n): ljllm/opt <= 4/3 - 1/(3m) and ljllm == lpt.
  {
    std::vector<GenSpec> specs;
    for (int m : {2, 3}) specs.push_back(uniform_spec(m, 0, 10, 4000u * m, Family::SingleBatch));
    const SweepResult& result = run_plan(specs, 300);
    report(4, "single-batch family stays within 4/3 - 1/(3m) and matches lpt",
           {fails(result.summary, "lemma14") == 0 && not_applicable(result.summary, "lemma14") == 0 &&
                fails(result.summary, "degeneracy") == 0 &&
                not_applicable(result.summary, "degeneracy") == 0 && result.summary.ok(),
            std::to_string(result.summary.instances) + " instances, worst ljllm ratio " +
                worst_ljllm(result.summary).str()});
  }

  // 5. Exactness for m = 1 and for n <= m, 100 seeds each.
  {
    std::vector<GenSpec> specs;
    specs.push_back(uniform_spec(1, 2, 8, 5100));
    specs.push_back(uniform_spec(6, 2, 6, 5200));  // n <= 6 = m by construction
    const SweepResult& result = run_plan(specs, 100);
    const Rational worst = worst_ljllm(result.summary);
    report(5, "m = 1 and n <= m are solved exactly",
           {fails(result.summary, "lemma15") == 0 && not_applicable(result.summary, "lemma15") == 0 &&
                worst == Rational(1, 1) && result.summary.ok(),
            std::to_string(result.summary.instances) + " instances, worst ratio " + worst.str()});
  }

  // 6. Idle bound and accounting identity across every sweep above.
  {
    std::uint64_t eq4_fail = 0, eq4_na = 0, acct_fail = 0, acct_na = 0, instances = 0;
    for (const SweepResult& result : sweep_results) {
      eq4_fail += fails(result.summary, "eq4");
      eq4_na += not_applicable(result.summary, "eq4");
      acct_fail += fails(result.summary, "accounting");
      acct_na += not_applicable(result.summary, "accounting");
      instances += result.summary.instances;
    }
    report(6, "idle bound and accounting identity hold on every ljllm schedule",
           {eq4_fail == 0 && eq4_na == 0 && acct_fail == 0 && acct_na == 0,
            std::to_string(instances) + " instances, 0 idle-bound violations"});
  }

  // 7. Golden trace of the two-list illustration instance.
  {
    GenSpec spec;
    spec.family = Family::Figure2;
    const Instance instance = generate(spec);
    const Schedule schedule = run_ljllm(instance);
    const std::string csv = serialize_schedule(schedule);

    std::ifstream golden_file(std::string(MLS_GOLDEN_DIR) + "/figure2_ljllm.csv", std::ios::binary);
    std::ostringstream golden;
    golden << golden_file.rdbuf();

    const Time opt = opt_makespan(instance).opt_makespan;
    const Time brute = testing::exhaustive_opt(instance);
    report(7, "golden ljllm trace is byte-exact and opt is 5",
           {golden_file.good() && csv == golden.str() && schedule.makespan == 5 && opt == 5 &&
                brute == 5,
            "makespan " + std::to_string(schedule.makespan) + ", opt " + std::to_string(opt)});
  }

  // 8. Adversarial list: ls hits (2m-1)/m exactly; reshaped to one batch,
  //    ljllm recovers the optimum.
  {
    bool pass = true;
    std::string detail;
    for (int m : {2, 3, 4}) {
      const EvaluationReport original = evaluate(ls_adversarial(m), options.eval);
      const EvaluationReport reshaped =
          evaluate(reshape_single_batch(ls_adversarial(m)), options.eval);
      const bool here = original.opt && *original.opt == m && original.ls_concatenate.ratio &&
                        *original.ls_concatenate.ratio == Rational(2 * m - 1, m) &&
                        reshaped.ljllm.ratio && *reshaped.ljllm.ratio == Rational(1, 1) &&
                        original.ok() && reshaped.ok();
      pass = pass && here;
      if (!detail.empty()) detail += ", ";
      detail += "m=" + std::to_string(m) + " ls " +
                (original.ls_concatenate.ratio ? original.ls_concatenate.ratio->str() : "?");
    }
    report(8, "ls tightness at (2m-1)/m with ljllm recovery at k=n", {pass, detail});
  }

  // 9. Branch and bound equals pruning-free enumeration for n <= 8.
  {
    bool pass = true;
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const int m = 2 + static_cast<int>(seed % 3);
      const int k = 1 + static_cast<int>(seed % 3);
      const Instance instance = generate(uniform_spec(m, k, 8, 9000 + seed));
      pass = pass && instance.num_jobs() <= 8 &&
             opt_makespan(instance).opt_makespan == testing::exhaustive_opt(instance);
      ++checked;
    }
    report(9, "oracle equals m^n enumeration on n <= 8",
           {pass, std::to_string(checked) + " instances"});
  }

  // 10. Repeating the full sweep set reproduces every artifact byte.
  {
    bool pass = true;
    SweepOptions rerun_options;
    rerun_options.jobs = jobs == 1 ? 2 : 1;  // a different thread count must not matter
    for (std::size_t i = 0; i < sweep_plan.size(); ++i) {
      const SweepResult rerun = sweep(sweep_plan[i].first, sweep_plan[i].second, rerun_options);
      pass = pass && serialize_all(rerun) == sweep_bytes[i];
    }
    report(10, "acceptance sweeps are byte-identical on rerun",
           {pass, std::to_string(sweep_plan.size()) + " sweeps rerun"});
  }

  std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
