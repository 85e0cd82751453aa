#include "mls/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "mls/algorithms.hpp"

namespace mls {

Time lower_bound(const Instance& instance) {
  const Time total = instance.total_ptime();
  const Time per_machine = (total + instance.machines - 1) / instance.machines;
  return std::max(per_machine, instance.max_ptime());
}

namespace {

struct Search {
  const int m;
  const std::vector<Time>& ptimes;  // sorted non-increasing
  const Time ceil_avg;
  const std::uint64_t node_limit;

  std::vector<Time> loads;
  std::vector<int> current;
  std::vector<int> best;
  Time incumbent;
  std::uint64_t explored = 0;
  bool truncated = false;

  Search(int machines, const std::vector<Time>& sorted, Time ceil_average, Time start_incumbent,
         std::uint64_t limit)
      : m(machines),
        ptimes(sorted),
        ceil_avg(ceil_average),
        node_limit(limit),
        loads(machines, 0),
        current(sorted.size(), -1),
        incumbent(start_incumbent) {}

  void dfs(std::size_t depth, Time current_max) {
    if (truncated) return;
    ++explored;
    if (node_limit != 0 && explored > node_limit) {
      truncated = true;
      return;
    }
    if (depth == ptimes.size()) {
      if (current_max < incumbent) {
        incumbent = current_max;
        best = current;
      }
      return;
    }

    const Time p = ptimes[depth];
    const Time min_load = *std::min_element(loads.begin(), loads.end());
    // The next job lands on some machine whose load is at least min_load.
    const Time bound = std::max({current_max, ceil_avg, min_load + p});
    if (bound >= incumbent) return;

    for (int j = 0; j < m; ++j) {
      // Identical machines: one branch per distinct load value, so at most
      // one currently-empty machine is ever tried.
      bool duplicate = false;
      for (int prior = 0; prior < j && !duplicate; ++prior)
        duplicate = loads[prior] == loads[j];
      if (duplicate) continue;

      const Time new_load = loads[j] + p;
      if (std::max(current_max, new_load) >= incumbent) continue;
      loads[j] = new_load;
      current[depth] = j;
      dfs(depth + 1, std::max(current_max, new_load));
      loads[j] = new_load - p;
      if (truncated) return;
    }
  }
};

}  // namespace

OptResult opt_makespan(const Instance& instance, const OracleLimits& limits) {
  const int n = instance.num_jobs();
  if (limits.size_cap > 0 && n > limits.size_cap)
    throw Error(Errc::InstanceTooLarge, "instance has " + std::to_string(n) +
                                            " jobs, oracle size cap is " +
                                            std::to_string(limits.size_cap));

  const std::vector<Job> jobs = instance.jobs();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&jobs](int a, int b) { return jobs[a].ptime > jobs[b].ptime; });
  std::vector<Time> sorted(n);
  for (int d = 0; d < n; ++d) sorted[d] = jobs[order[d]].ptime;

  // LPT seeds the incumbent and the witness.
  const Schedule lpt = run_lpt(instance);
  std::map<std::pair<int, int>, int> lpt_machine;
  for (const Assignment& a : lpt.assignments)
    lpt_machine[{a.job.list_id, a.job.index_in_list}] = a.machine;

  OptResult result;
  result.machine_of_job.resize(n);
  for (int i = 0; i < n; ++i)
    result.machine_of_job[i] = lpt_machine.at({jobs[i].list_id, jobs[i].index_in_list});

  const Time global_lb = lower_bound(instance);
  if (lpt.makespan == global_lb) {
    result.opt_makespan = lpt.makespan;
    return result;
  }

  const Time ceil_avg = (instance.total_ptime() + instance.machines - 1) / instance.machines;
  Search search(instance.machines, sorted, ceil_avg, lpt.makespan, limits.node_limit);
  search.dfs(0, 0);

  result.opt_makespan = search.incumbent;
  result.explored = search.explored;
  result.proven = !search.truncated;
  if (!search.best.empty())
    for (int d = 0; d < n; ++d) result.machine_of_job[order[d]] = search.best[d];
  return result;
}

Rational competitive_ratio(Time alg_makespan, Time opt) {
  if (opt < 1)
    throw Error(Errc::ZeroOpt, "optimal makespan must be >= 1, got " + std::to_string(opt));
  return Rational(alg_makespan, opt);
}

}  // namespace mls
