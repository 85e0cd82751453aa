#include "mls/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mls/algorithms.hpp"
#include "mls/trace_io.hpp"

namespace mls {

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

bool EvaluationReport::ok() const {
  const CheckStatus all[] = {checks.schedule_valid, checks.theorem1, checks.lemma14,
                             checks.lemma15,        checks.eq4,      checks.accounting,
                             checks.degeneracy};
  return std::none_of(std::begin(all), std::end(all),
                      [](CheckStatus s) { return s == CheckStatus::Fail; });
}

bool SweepSummary::ok() const {
  for (const auto& [name, counter] : checks)
    if (counter.fail != 0) return false;
  return true;
}

namespace {

CheckStatus as_status(bool pass) { return pass ? CheckStatus::Pass : CheckStatus::Fail; }

void note_failure(EvaluationReport& report, const std::string& note) {
  if (report.check_notes.empty()) report.check_notes = note;
}

}  // namespace

EvaluationReport evaluate(const Instance& instance, const EvalOptions& options) {
  EvaluationReport report;
  report.digest = instance_digest(instance);
  report.m = instance.machines;
  report.k = instance.num_lists();
  report.n = instance.num_jobs();
  report.lower_bound = mls::lower_bound(instance);

  const Schedule ljllm = run_ljllm(instance);
  const Schedule ls_concat = run_ls(instance, Flatten::Concatenate);
  const Schedule ls_rr = run_ls(instance, Flatten::RoundRobin);
  const Schedule lpt = run_lpt(instance);

  // The offline baselines place jobs out of batch order by construction.
  const std::pair<const Schedule*, VerifyOptions> runs[] = {
      {&ljllm, {.require_batch_order = true}},
      {&ls_rr, {.require_batch_order = true}},
      {&ls_concat, {.require_batch_order = false}},
      {&lpt, {.require_batch_order = false}},
  };
  report.checks.schedule_valid = CheckStatus::Pass;
  for (const auto& [schedule, verify_options] : runs) {
    const Verdict verdict = verify_schedule(instance, *schedule, verify_options);
    if (!verdict.ok()) {
      report.checks.schedule_valid = CheckStatus::Fail;
      note_failure(report, std::string("schedule_valid: ") + violation_name(verdict.violation) +
                               " (" + verdict.detail + ")");
    }
  }

  const Time total = instance.total_ptime();
  report.checks.accounting = CheckStatus::Pass;
  const Schedule* all_runs[] = {&ljllm, &ls_concat, &ls_rr, &lpt};
  for (const Schedule* schedule : all_runs) {
    const IdleProfile idle = idle_profile(*schedule);
    if (static_cast<Time>(instance.machines) * schedule->makespan != total + idle.total) {
      report.checks.accounting = CheckStatus::Fail;
      note_failure(report, "accounting identity broken");
    }
  }

  report.ljllm.makespan = ljllm.makespan;
  report.ljllm.idle_total = idle_profile(ljllm).total;
  report.ls_concatenate.makespan = ls_concat.makespan;
  report.ls_concatenate.idle_total = idle_profile(ls_concat).total;
  report.ls_round_robin.makespan = ls_rr.makespan;
  report.ls_round_robin.idle_total = idle_profile(ls_rr).total;
  report.lpt.makespan = lpt.makespan;
  report.lpt.idle_total = idle_profile(lpt).total;

  // Idle bound: asserted for ljllm only; ls/lpt idle totals are recorded above.
  const bool eq4_pass =
      report.ljllm.idle_total <= static_cast<Time>(instance.machines - 1) * instance.max_ptime();
  report.checks.eq4 = as_status(eq4_pass);
  if (!eq4_pass) note_failure(report, "eq4 idle bound broken on the ljllm schedule");

  if (report.k == 1) {
    report.checks.degeneracy = as_status(ljllm.makespan == ls_concat.makespan);
  } else if (report.k == report.n) {
    report.checks.degeneracy = as_status(ljllm.makespan == lpt.makespan);
  }
  if (report.checks.degeneracy == CheckStatus::Fail) note_failure(report, "degeneracy equality broken");

  if (options.with_oracle) {
    try {
      const OptResult opt = opt_makespan(instance, options.oracle);
      report.oracle_explored = opt.explored;
      if (opt.proven) {
        report.opt = opt.opt_makespan;
      } else {
        report.opt_reason = "NodeLimitExceeded";
      }
    } catch (const Error& error) {
      if (error.code() != Errc::InstanceTooLarge) throw;
      report.opt_reason = "InstanceTooLarge";
    }
  } else {
    report.opt_reason = "OracleDisabled";
  }

  if (report.opt) {
    const Time opt = *report.opt;
    report.ljllm.ratio = competitive_ratio(ljllm.makespan, opt);
    report.ls_concatenate.ratio = competitive_ratio(ls_concat.makespan, opt);
    report.ls_round_robin.ratio = competitive_ratio(ls_rr.makespan, opt);
    report.lpt.ratio = competitive_ratio(lpt.makespan, opt);

    const int m = instance.machines;
    report.checks.theorem1 = as_status(*report.ljllm.ratio <= Rational(2 * m - 1, m));
    if (report.checks.theorem1 == CheckStatus::Fail)
      note_failure(report, "theorem1: ljllm ratio " + report.ljllm.ratio->str() + " above 2 - 1/m");
    if (report.k == report.n) {
      report.checks.lemma14 = as_status(*report.ljllm.ratio <= Rational(4 * m - 1, 3 * m));
      if (report.checks.lemma14 == CheckStatus::Fail)
        note_failure(report, "lemma14: ljllm ratio " + report.ljllm.ratio->str() + " above 4/3 - 1/(3m)");
    }
    if (m == 1 || report.n <= m) {
      report.checks.lemma15 = as_status(*report.ljllm.ratio == Rational(1, 1));
      if (report.checks.lemma15 == CheckStatus::Fail)
        note_failure(report, "lemma15: ljllm ratio " + report.ljllm.ratio->str() + " not 1/1");
    }
  }

  report.sources = source_stats(ljllm);
  return report;
}

namespace {

void tally(CheckCounter& counter, CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: ++counter.pass; break;
    case CheckStatus::Fail: ++counter.fail; break;
    case CheckStatus::NotApplicable: ++counter.not_applicable; break;
  }
}

void record_worst(std::map<std::string, Rational>& worst, const std::string& key,
                  const std::optional<Rational>& ratio) {
  if (!ratio) return;
  const auto [it, inserted] = worst.emplace(key, *ratio);
  if (!inserted && *ratio > it->second) it->second = *ratio;
}

}  // namespace

SweepResult sweep(const std::vector<GenSpec>& specs, int seeds_per_spec,
                  const SweepOptions& options) {
  if (specs.empty()) throw Error(Errc::BadConfig, "sweep needs at least one generator spec");
  if (seeds_per_spec < 1) throw Error(Errc::BadConfig, "seeds per spec must be >= 1");

  // Run i of a spec uses seed spec.seed + i. Instances are generated up
  // front so spec errors surface on the calling thread.
  std::vector<GenSpec> tasks;
  tasks.reserve(specs.size() * static_cast<std::size_t>(seeds_per_spec));
  std::vector<Instance> instances;
  instances.reserve(tasks.capacity());
  for (const GenSpec& spec : specs) {
    for (int i = 0; i < seeds_per_spec; ++i) {
      GenSpec task = spec;
      task.seed = spec.seed + static_cast<std::uint64_t>(i);
      instances.push_back(generate(task));
      tasks.push_back(std::move(task));
    }
  }

  std::vector<EvaluationReport> reports(tasks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = evaluate(instances[i], options.eval);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= tasks.size()) return;
        reports[i] = evaluate(instances[i], options.eval);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepResult result;
  result.summary.instances = reports.size();
  for (const char* name : {"schedule_valid", "theorem1", "lemma14", "lemma15", "eq4",
                           "accounting", "degeneracy"})
    result.summary.checks[name] = {};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const EvaluationReport& report = reports[i];
    tally(result.summary.checks["schedule_valid"], report.checks.schedule_valid);
    tally(result.summary.checks["theorem1"], report.checks.theorem1);
    tally(result.summary.checks["lemma14"], report.checks.lemma14);
    tally(result.summary.checks["lemma15"], report.checks.lemma15);
    tally(result.summary.checks["eq4"], report.checks.eq4);
    tally(result.summary.checks["accounting"], report.checks.accounting);
    tally(result.summary.checks["degeneracy"], report.checks.degeneracy);

    const std::string key =
        std::string("family=") + family_name(tasks[i].family) + " m=" + std::to_string(report.m);
    record_worst(result.summary.worst_ljllm_ratio, key, report.ljllm.ratio);
    record_worst(result.summary.worst_ls_ratio, key, report.ls_concatenate.ratio);
  }

  // Order-normalized output: parallelism never changes the bytes.
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EvaluationReport& a, const EvaluationReport& b) {
                     return a.digest < b.digest;
                   });
  result.reports = std::move(reports);
  return result;
}

}  // namespace mls
