#pragma once

#include <cstdint>
#include <vector>

#include "mls/error.hpp"

namespace mls {

// All processing times, loads and makespans are strictly positive integers,
// so every comparison in the engine is exact.
using Time = std::int64_t;

// One job: source list r (1-based), arrival position i within that list
// (1-based), and its processing time.
struct Job {
  int list_id = 0;
  int index_in_list = 0;
  Time ptime = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

// The full online input: m identical machines and k ordered sub-lists of
// processing times in arrival order. Immutable once built.
struct Instance {
  int machines = 0;
  std::vector<std::vector<Time>> lists;

  int num_lists() const { return static_cast<int>(lists.size()); }
  int num_jobs() const;
  Time total_ptime() const;
  Time max_ptime() const;

  // All jobs in list-major order: list 1 front to back, then list 2, ...
  std::vector<Job> jobs() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// The jobs revealed at one time step: at most one per non-exhausted list,
// ordered by list_id. Every job carries index_in_list == step.
struct Batch {
  int step = 0;
  std::vector<Job> jobs;
};

// One irrevocable placement. start equals the machine's accumulated load
// immediately before the assignment; finish = start + ptime.
struct Assignment {
  Job job;
  int machine = 0;
  Time start = 0;
  Time finish = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Schedule {
  std::vector<Assignment> assignments;  // decision order
  std::vector<Time> loads;              // final per-machine load
  Time makespan = 0;
};

// Validates and builds an Instance. Throws Error(ZeroMachines),
// Error(EmptyList) or Error(NonPositivePtime) with the offending list index.
Instance build_instance(int machines, std::vector<std::vector<Time>> lists);

// Batch t holds job t of every list whose length is at least t. The batch
// count is the longest list length; concatenating the batches covers every
// job exactly once.
std::vector<Batch> batches(const Instance& instance);

}  // namespace mls
