#pragma once

#include <vector>

#include "mls/model.hpp"

namespace mls {

// Per-machine accumulated loads while a run is in progress.
struct MachineState {
  std::vector<Time> loads;

  explicit MachineState(int machines) : loads(machines, 0) {}
};

// Index of a least loaded machine; ties go to the lowest index.
int min_loaded(const MachineState& state);

// Places one batch: jobs in non-increasing ptime order (ties to the lower
// list_id), each on the machine that is least loaded at that moment.
std::vector<Assignment> ljllm_step(const Batch& batch, MachineState& state);

// Largest job on least loaded machine over the instance's batch sequence.
Schedule run_ljllm(const Instance& instance);

enum class Flatten { Concatenate, RoundRobin };

// Greedy list scheduling over a single flattened sequence: Concatenate plays
// list 1 front to back, then list 2, ...; RoundRobin plays the jobs in batch
// order without sorting inside a batch.
Schedule run_ls(const Instance& instance, Flatten flatten = Flatten::Concatenate);

// Offline rule: every job sorted non-increasing by ptime (ties by list_id,
// then index_in_list), then greedy least loaded assignment. Coincides with
// run_ljllm when every list holds exactly one job.
Schedule run_lpt(const Instance& instance);

}  // namespace mls
