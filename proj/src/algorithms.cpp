#include "mls/algorithms.hpp"

#include <algorithm>

namespace mls {

namespace {

Assignment place(const Job& job, MachineState& state) {
  const int machine = min_loaded(state);
  const Time start = state.loads[machine];
  state.loads[machine] += job.ptime;
  return Assignment{job, machine, start, start + job.ptime};
}

Schedule finish_schedule(MachineState state, std::vector<Assignment> assignments) {
  Schedule schedule;
  schedule.assignments = std::move(assignments);
  schedule.loads = std::move(state.loads);
  schedule.makespan = *std::max_element(schedule.loads.begin(), schedule.loads.end());
  return schedule;
}

Schedule run_sequence(const Instance& instance, const std::vector<Job>& order) {
  MachineState state(instance.machines);
  std::vector<Assignment> assignments;
  assignments.reserve(order.size());
  for (const Job& job : order) assignments.push_back(place(job, state));
  return finish_schedule(std::move(state), std::move(assignments));
}

}  // namespace

int min_loaded(const MachineState& state) {
  // min_element keeps the first minimum, which is the tie rule.
  return static_cast<int>(std::min_element(state.loads.begin(), state.loads.end()) -
                          state.loads.begin());
}

std::vector<Assignment> ljllm_step(const Batch& batch, MachineState& state) {
  std::vector<Job> order = batch.jobs;
  std::stable_sort(order.begin(), order.end(), [](const Job& a, const Job& b) {
    if (a.ptime != b.ptime) return a.ptime > b.ptime;
    return a.list_id < b.list_id;
  });

  std::vector<Assignment> placed;
  placed.reserve(order.size());
  for (const Job& job : order) placed.push_back(place(job, state));
  return placed;
}

Schedule run_ljllm(const Instance& instance) {
  MachineState state(instance.machines);
  std::vector<Assignment> assignments;
  assignments.reserve(instance.num_jobs());
  for (const Batch& batch : batches(instance)) {
    std::vector<Assignment> placed = ljllm_step(batch, state);
    assignments.insert(assignments.end(), placed.begin(), placed.end());
  }
  return finish_schedule(std::move(state), std::move(assignments));
}

Schedule run_ls(const Instance& instance, Flatten flatten) {
  std::vector<Job> order;
  if (flatten == Flatten::Concatenate) {
    order = instance.jobs();
  } else {
    order.reserve(instance.num_jobs());
    for (const Batch& batch : batches(instance))
      order.insert(order.end(), batch.jobs.begin(), batch.jobs.end());
  }
  return run_sequence(instance, order);
}

Schedule run_lpt(const Instance& instance) {
  std::vector<Job> order = instance.jobs();
  std::stable_sort(order.begin(), order.end(), [](const Job& a, const Job& b) {
    if (a.ptime != b.ptime) return a.ptime > b.ptime;
    if (a.list_id != b.list_id) return a.list_id < b.list_id;
    return a.index_in_list < b.index_in_list;
  });
  return run_sequence(instance, order);
}

}  // namespace mls
