#include "mls/metrics.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mls {

const char* violation_name(Violation violation) {
  switch (violation) {
    case Violation::None: return "None";
    case Violation::MachineCountMismatch: return "MachineCountMismatch";
    case Violation::MachineOutOfRange: return "MachineOutOfRange";
    case Violation::UnknownJob: return "UnknownJob";
    case Violation::DuplicateJob: return "DuplicateJob";
    case Violation::MissingJob: return "MissingJob";
    case Violation::StartMismatch: return "StartMismatch";
    case Violation::FinishMismatch: return "FinishMismatch";
    case Violation::BatchOrderViolation: return "BatchOrderViolation";
    case Violation::LoadMismatch: return "LoadMismatch";
    case Violation::MakespanMismatch: return "MakespanMismatch";
  }
  return "?";
}

Verdict verify_schedule(const Instance& instance, const Schedule& schedule,
                        const VerifyOptions& options) {
  const int m = instance.machines;
  if (static_cast<int>(schedule.loads.size()) != m)
    return {Violation::MachineCountMismatch, -1,
            "loads has " + std::to_string(schedule.loads.size()) + " entries, instance has " +
                std::to_string(m) + " machines"};

  std::map<std::pair<int, int>, Time> expected;
  for (const Job& job : instance.jobs()) expected[{job.list_id, job.index_in_list}] = job.ptime;

  std::map<std::pair<int, int>, bool> seen;
  std::vector<Time> replay(m, 0);
  int prev_step = 0;
  for (int i = 0; i < static_cast<int>(schedule.assignments.size()); ++i) {
    const Assignment& a = schedule.assignments[i];
    const auto key = std::make_pair(a.job.list_id, a.job.index_in_list);
    const std::string job_name =
        "J^" + std::to_string(a.job.list_id) + "_" + std::to_string(a.job.index_in_list);

    if (a.machine < 0 || a.machine >= m)
      return {Violation::MachineOutOfRange, i, "machine " + std::to_string(a.machine)};
    const auto it = expected.find(key);
    if (it == expected.end() || it->second != a.job.ptime)
      return {Violation::UnknownJob, i, job_name + "/" + std::to_string(a.job.ptime) + " is not an instance job"};
    if (seen[key]) return {Violation::DuplicateJob, i, job_name + " assigned twice"};
    seen[key] = true;
    if (a.start != replay[a.machine])
      return {Violation::StartMismatch, i,
              "start " + std::to_string(a.start) + " but machine load was " +
                  std::to_string(replay[a.machine])};
    if (a.finish != a.start + a.job.ptime)
      return {Violation::FinishMismatch, i, "finish " + std::to_string(a.finish)};
    if (options.require_batch_order && a.job.index_in_list < prev_step)
      return {Violation::BatchOrderViolation, i,
              job_name + " of batch " + std::to_string(a.job.index_in_list) +
                  " placed after a batch-" + std::to_string(prev_step) + " job"};
    prev_step = std::max(prev_step, a.job.index_in_list);
    replay[a.machine] += a.job.ptime;
  }

  if (seen.size() != expected.size()) {
    for (const auto& [key, ptime] : expected) {
      if (!seen.count(key))
        return {Violation::MissingJob, -1,
                "J^" + std::to_string(key.first) + "_" + std::to_string(key.second) + " never assigned"};
    }
  }
  for (int j = 0; j < m; ++j) {
    if (replay[j] != schedule.loads[j])
      return {Violation::LoadMismatch, -1,
              "machine " + std::to_string(j) + " load field " + std::to_string(schedule.loads[j]) +
                  " vs replayed " + std::to_string(replay[j])};
  }
  const Time max_load = *std::max_element(replay.begin(), replay.end());
  if (schedule.makespan != max_load)
    return {Violation::MakespanMismatch, -1,
            "makespan field " + std::to_string(schedule.makespan) + " vs max load " +
                std::to_string(max_load)};
  return {};
}

IdleProfile idle_profile(const Schedule& schedule) {
  IdleProfile profile;
  profile.per_machine.reserve(schedule.loads.size());
  for (Time load : schedule.loads) {
    profile.per_machine.push_back(schedule.makespan - load);
    profile.total += schedule.makespan - load;
  }
  return profile;
}

SourceStats source_stats(const Schedule& schedule) {
  int k = 0;
  for (const Assignment& a : schedule.assignments) k = std::max(k, a.job.list_id);

  std::vector<int> jobs(k, 0);
  std::vector<Time> total(k, 0), last(k, 0), finish_sum(k, 0);
  for (const Assignment& a : schedule.assignments) {
    const int r = a.job.list_id - 1;
    ++jobs[r];
    total[r] += a.job.ptime;
    last[r] = std::max(last[r], a.finish);
    finish_sum[r] += a.finish;
  }

  SourceStats stats;
  stats.per_list.reserve(k);
  for (int r = 0; r < k; ++r)
    stats.per_list.push_back(
        {r + 1, jobs[r], total[r], last[r], Rational(finish_sum[r], std::max(jobs[r], 1))});
  return stats;
}

}  // namespace mls
