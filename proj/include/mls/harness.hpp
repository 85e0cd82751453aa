#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mls/metrics.hpp"
#include "mls/model.hpp"
#include "mls/oracle.hpp"
#include "mls/rational.hpp"
#include "mls/workloads.hpp"

namespace mls {

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* check_status_name(CheckStatus status);

struct AlgoResult {
  Time makespan = 0;
  Time idle_total = 0;
  std::optional<Rational> ratio;  // vs the proven optimum, when available
};

// Bound checks are non-strict and compared with exact rationals; equality
// passes. NotApplicable marks a check whose precondition the instance does
// not meet (or whose optimum the oracle could not prove).
struct BoundChecks {
  CheckStatus schedule_valid = CheckStatus::NotApplicable;
  CheckStatus theorem1 = CheckStatus::NotApplicable;   // ljllm/opt <= 2 - 1/m
  CheckStatus lemma14 = CheckStatus::NotApplicable;    // k == n: ljllm/opt <= 4/3 - 1/(3m)
  CheckStatus lemma15 = CheckStatus::NotApplicable;    // m == 1 or n <= m: ratio == 1
  CheckStatus eq4 = CheckStatus::NotApplicable;        // ljllm idle total <= (m-1) * max ptime
  CheckStatus accounting = CheckStatus::NotApplicable; // m * C_max = sum p + sum idle, every run
  CheckStatus degeneracy = CheckStatus::NotApplicable; // k==1: ljllm == ls_concat; k==n: ljllm == lpt
};

struct EvaluationReport {
  std::string digest;
  int m = 0;
  int k = 0;
  int n = 0;
  Time lower_bound = 0;
  AlgoResult ljllm;
  AlgoResult ls_concatenate;
  AlgoResult ls_round_robin;
  AlgoResult lpt;
  std::optional<Time> opt;
  std::string opt_reason;  // absence reason when !opt, else empty
  std::uint64_t oracle_explored = 0;
  BoundChecks checks;
  std::string check_notes;  // first defect detail, empty when everything passes
  SourceStats sources;      // of the ljllm schedule

  bool ok() const;  // no Fail anywhere
};

struct EvalOptions {
  bool with_oracle = true;
  OracleLimits oracle;
};

// Runs ljllm, both ls flattenings and lpt, validates every schedule, runs the
// oracle when asked, and evaluates every applicable bound check exactly.
// Oracle refusals (size cap, node limit) become opt-absence reasons, never
// evaluation failures.
EvaluationReport evaluate(const Instance& instance, const EvalOptions& options = {});

struct CheckCounter {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
};

struct SweepSummary {
  std::uint64_t instances = 0;
  std::map<std::string, CheckCounter> checks;         // keyed by check name
  std::map<std::string, Rational> worst_ljllm_ratio;  // keyed "family=<f> m=<m>"
  std::map<std::string, Rational> worst_ls_ratio;     // concatenate flattening

  bool ok() const;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<EvaluationReport> reports;  // sorted by instance digest
};

struct SweepOptions {
  EvalOptions eval;
  int jobs = 1;  // worker threads; output is order-normalized either way
};

// Runs seeds_per_spec instances per spec; run i uses seed spec.seed + i.
// Deterministic given specs and seeds, independent of the thread count.
// Throws Error(BadConfig) on an empty spec list or a non-positive count.
SweepResult sweep(const std::vector<GenSpec>& specs, int seeds_per_spec,
                  const SweepOptions& options = {});

}  // namespace mls
