#pragma once

#include <string>
#include <vector>

#include "mls/model.hpp"
#include "mls/rational.hpp"

namespace mls {

enum class Violation {
  None,
  MachineCountMismatch,
  MachineOutOfRange,
  UnknownJob,
  DuplicateJob,
  MissingJob,
  StartMismatch,
  FinishMismatch,
  BatchOrderViolation,
  LoadMismatch,
  MakespanMismatch,
};

const char* violation_name(Violation violation);

// Violations are data, not failures: OK means the schedule is a consistent
// record of the instance's jobs.
struct Verdict {
  Violation violation = Violation::None;
  int assignment_index = -1;  // -1 for whole-schedule violations
  std::string detail;

  bool ok() const { return violation == Violation::None; }
};

struct VerifyOptions {
  // The online model demands assignments in batch order (non-decreasing
  // arrival step). Offline baselines (concatenated LS, LPT) place jobs out
  // of batch order by construction, so the check can be waived.
  bool require_batch_order = true;
};

// Checks, in decision order: every job appears exactly once, each start
// equals the machine's load at that point, batch order (when required), and
// the loads/makespan fields match the replay. Returns the first violation.
Verdict verify_schedule(const Instance& instance, const Schedule& schedule,
                        const VerifyOptions& options = {});

// Idle time per machine: makespan - load. The totals obey the accounting
// identity m * makespan = sum ptime + total idle.
struct IdleProfile {
  std::vector<Time> per_machine;
  Time total = 0;
};

IdleProfile idle_profile(const Schedule& schedule);

// Descriptive per-source aggregates; mean_finish is kept exact.
struct SourceStat {
  int list_id = 0;
  int jobs = 0;
  Time total_ptime = 0;
  Time last_finish = 0;
  Rational mean_finish;
};

struct SourceStats {
  std::vector<SourceStat> per_list;  // ordered by list_id
};

SourceStats source_stats(const Schedule& schedule);

}  // namespace mls
