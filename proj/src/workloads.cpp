#include "mls/workloads.hpp"

#include <algorithm>
#include <string>

namespace mls {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

const char* family_name(Family family) {
  switch (family) {
    case Family::Uniform: return "uniform";
    case Family::Unit: return "unit";
    case Family::EqualLists: return "equal_lists";
    case Family::SingleBatch: return "single_batch";
    case Family::LsAdversarial: return "ls_adversarial";
    case Family::Figure2: return "figure2";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "uniform") return Family::Uniform;
  if (name == "unit") return Family::Unit;
  if (name == "equal_lists") return Family::EqualLists;
  if (name == "single_batch") return Family::SingleBatch;
  if (name == "ls_adversarial") return Family::LsAdversarial;
  if (name == "figure2") return Family::Figure2;
  return std::nullopt;
}

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(Errc::InconsistentSpec, "inconsistent generator spec: " + why);
}

// Checks an explicitly-given field against the value a family forces.
void require_unset_or(const char* field, int given, int forced) {
  if (given != 0 && given != forced)
    inconsistent(std::string(field) + " " + std::to_string(given) + " conflicts with forced value " +
                 std::to_string(forced));
}

std::vector<int> resolve_lengths(const GenSpec& spec, SplitMix64& rng) {
  if (spec.family == Family::SingleBatch) {
    // One job per list: k = n, every length 1.
    if (!spec.lens.empty()) {
      for (int len : spec.lens)
        if (len != 1) inconsistent("single_batch forces every list length to 1");
      const int n = static_cast<int>(spec.lens.size());
      require_unset_or("k", spec.k, n);
      require_unset_or("n", spec.n, n);
      return spec.lens;
    }
    int n = spec.n != 0 ? spec.n : spec.k;
    if (n == 0) {
      if (spec.n_max == 0) inconsistent("need one of lens, n, k or n_max");
      n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n_max)));
    }
    require_unset_or("k", spec.k, n);
    require_unset_or("n", spec.n, n);
    return std::vector<int>(n, 1);
  }

  const int k = spec.k != 0 ? spec.k : static_cast<int>(spec.lens.size());
  if (k < 1) inconsistent("k must be >= 1");

  if (!spec.lens.empty()) {
    if (spec.k != 0 && spec.k != static_cast<int>(spec.lens.size()))
      inconsistent("k = " + std::to_string(spec.k) + " but " + std::to_string(spec.lens.size()) +
                   " lengths given");
    for (int len : spec.lens)
      if (len < 1) inconsistent("list lengths must be >= 1");
    int total = 0;
    for (int len : spec.lens) total += len;
    if (spec.n != 0 && spec.n != total)
      inconsistent("n = " + std::to_string(spec.n) + " but lengths sum to " + std::to_string(total));
    return spec.lens;
  }

  if (spec.family == Family::EqualLists) {
    // One shared length: exact when n is given, else drawn in [1, n_max / k].
    if (spec.n != 0) {
      if (spec.n % k != 0)
        inconsistent("equal_lists needs k | n, got k = " + std::to_string(k) + ", n = " +
                     std::to_string(spec.n));
      return std::vector<int>(k, spec.n / k);
    }
    if (spec.n_max == 0) inconsistent("need one of lens, n or n_max");
    const int len_max = spec.n_max / k;
    if (len_max < 1) inconsistent("n_max " + std::to_string(spec.n_max) + " below k = " + std::to_string(k));
    return std::vector<int>(k, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len_max))));
  }

  // No explicit lengths: derive the total, then spread it over the lists.
  int n = spec.n;
  if (n == 0) {
    if (spec.n_max == 0) inconsistent("need one of lens, n or n_max");
    if (spec.n_max < k) inconsistent("n_max " + std::to_string(spec.n_max) + " below k = " + std::to_string(k));
    n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n_max - k + 1)));
  }
  if (n < k) inconsistent("n = " + std::to_string(n) + " below k = " + std::to_string(k));

  std::vector<int> lens(k, 1);
  for (int extra = 0; extra < n - k; ++extra) ++lens[rng.below(k)];
  return lens;
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (spec.family == Family::Figure2) {
    require_unset_or("m", spec.m, 2);
    require_unset_or("k", spec.k, 2);
    require_unset_or("n", spec.n, 6);
    if (!spec.lens.empty() && spec.lens != std::vector<int>{3, 3})
      inconsistent("figure2 forces lengths 3,3");
    return build_instance(2, {{1, 1, 1}, {2, 2, 2}});
  }
  if (spec.family == Family::LsAdversarial) {
    require_unset_or("k", spec.k, 1);
    if (spec.m < 2) inconsistent("ls_adversarial needs m >= 2");
    const int forced_n = spec.m * (spec.m - 1) + 1;
    require_unset_or("n", spec.n, forced_n);
    if (!spec.lens.empty() && spec.lens != std::vector<int>{forced_n})
      inconsistent("ls_adversarial forces a single list of " + std::to_string(forced_n) + " jobs");
    return ls_adversarial(spec.m);
  }

  if (spec.m < 1) inconsistent("m must be >= 1");
  if (spec.lo < 1) inconsistent("ptime range must start at >= 1");
  if (spec.hi < spec.lo) inconsistent("empty ptime range");

  SplitMix64 rng(spec.seed);
  std::vector<int> lens = resolve_lengths(spec, rng);

  if (spec.family == Family::EqualLists) {
    for (int len : lens)
      if (len != lens.front()) inconsistent("equal_lists needs equal list lengths");
  }

  std::vector<std::vector<Time>> lists;
  lists.reserve(lens.size());
  for (int len : lens) {
    std::vector<Time> list(len, 1);
    if (spec.family != Family::Unit) {
      const std::uint64_t span = static_cast<std::uint64_t>(spec.hi - spec.lo + 1);
      for (Time& p : list) p = spec.lo + static_cast<Time>(rng.below(span));
    }
    lists.push_back(std::move(list));
  }
  return build_instance(spec.m, std::move(lists));
}

Instance ls_adversarial(int machines) {
  if (machines < 2)
    throw Error(Errc::InconsistentSpec, "ls_adversarial needs m >= 2, got " + std::to_string(machines));
  std::vector<Time> list(static_cast<std::size_t>(machines) * (machines - 1), 1);
  list.push_back(machines);
  return build_instance(machines, {std::move(list)});
}

Instance reshape_single_batch(const Instance& instance) {
  std::vector<std::vector<Time>> lists;
  lists.reserve(instance.num_jobs());
  for (const Job& job : instance.jobs()) lists.push_back({job.ptime});
  return build_instance(instance.machines, std::move(lists));
}

}  // namespace mls
