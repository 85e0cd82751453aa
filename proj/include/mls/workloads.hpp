#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mls/model.hpp"

namespace mls {

// Fixed 64-bit mixing generator (splitmix64) so generated instances are
// bit-identical across platforms and language ports:
//   state' = state + 0x9E3779B97F4A7C15
//   z = state'; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
//   z = (z ^ z>>27) * 0x94D049BB133111EB; output = z ^ z>>31
// Bounded draws are next() % bound.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // bound >= 1

 private:
  std::uint64_t state_;
};

enum class Family { Uniform, Unit, EqualLists, SingleBatch, LsAdversarial, Figure2 };

const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// One generator request. List lengths come from `lens` when given; otherwise
// from `n` (exact total) or `n_max` (total drawn in [k, n_max]). Draws happen
// in a fixed order: total, then length distribution, then ptimes list-major.
// Family constraints: unit forces every ptime to 1, equal_lists needs k | n,
// single_batch forces one job per list (k = n), figure2 is the fixed
// two-list instance {m=2, [1 1 1], [2 2 2]}, ls_adversarial uses only m.
struct GenSpec {
  Family family = Family::Uniform;
  int m = 0;
  int k = 0;
  std::vector<int> lens;
  int n = 0;      // 0 = unset
  int n_max = 0;  // 0 = unset
  Time lo = 1;
  Time hi = 10;
  std::uint64_t seed = 1;
};

// Deterministic in the spec; throws Error(InconsistentSpec) on contradictory
// or insufficient fields.
Instance generate(const GenSpec& spec);

// Single list of m(m-1) unit jobs followed by one job of size m. Greedy list
// scheduling lands at 2m-1 while the optimum is m. Requires m >= 2.
Instance ls_adversarial(int machines);

// Same jobs, one list per job in list-major order (k = n), so the whole
// input arrives as one batch.
Instance reshape_single_batch(const Instance& instance);

}  // namespace mls
