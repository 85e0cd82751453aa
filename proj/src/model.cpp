#include "mls/model.hpp"

#include <algorithm>
#include <string>

namespace mls {

int Instance::num_jobs() const {
  int n = 0;
  for (const auto& list : lists) n += static_cast<int>(list.size());
  return n;
}

Time Instance::total_ptime() const {
  Time total = 0;
  for (const auto& list : lists)
    for (Time p : list) total += p;
  return total;
}

Time Instance::max_ptime() const {
  Time best = 0;
  for (const auto& list : lists)
    for (Time p : list) best = std::max(best, p);
  return best;
}

std::vector<Job> Instance::jobs() const {
  std::vector<Job> all;
  all.reserve(num_jobs());
  for (int r = 0; r < num_lists(); ++r)
    for (int i = 0; i < static_cast<int>(lists[r].size()); ++i)
      all.push_back(Job{r + 1, i + 1, lists[r][i]});
  return all;
}

Instance build_instance(int machines, std::vector<std::vector<Time>> lists) {
  if (machines < 1)
    throw Error(Errc::ZeroMachines, "machine count must be >= 1, got " + std::to_string(machines));
  if (lists.empty()) throw Error(Errc::EmptyList, "at least one job list is required", 0);
  for (int r = 0; r < static_cast<int>(lists.size()); ++r) {
    if (lists[r].empty())
      throw Error(Errc::EmptyList, "list " + std::to_string(r + 1) + " is empty", r + 1);
    for (Time p : lists[r]) {
      if (p < 1)
        throw Error(Errc::NonPositivePtime,
                    "list " + std::to_string(r + 1) + " holds non-positive ptime " + std::to_string(p),
                    r + 1);
    }
  }
  return Instance{machines, std::move(lists)};
}

std::vector<Batch> batches(const Instance& instance) {
  std::size_t steps = 0;
  for (const auto& list : instance.lists) steps = std::max(steps, list.size());

  std::vector<Batch> result;
  result.reserve(steps);
  for (std::size_t t = 1; t <= steps; ++t) {
    Batch batch{static_cast<int>(t), {}};
    for (int r = 0; r < instance.num_lists(); ++r) {
      if (instance.lists[r].size() >= t)
        batch.jobs.push_back(Job{r + 1, static_cast<int>(t), instance.lists[r][t - 1]});
    }
    result.push_back(std::move(batch));
  }
  return result;
}

}  // namespace mls
