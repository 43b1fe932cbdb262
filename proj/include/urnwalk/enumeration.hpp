#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "urnwalk/rational.hpp"
#include "urnwalk/walk.hpp"

namespace urnwalk {

enum class Method {
  Exhaustive,             // all n! marble permutations
  CombinationsRecursive,  // one representative per group of whites!*reds! permutations
  CombinationsIterative,  // same visit set, explicit successor, supports rank ranges
  DynamicProgramming,     // lattice-path counting over (reds used, whites used, running max)
};

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct EnumOptions {
  bool prune_horizon = true;
  bool prune_lexicographic = true;
  int workers = 1;                 // iterative method only; never changes values
  long exhaustive_cap_delta = 8;   // refuse factorial blowup beyond this delta
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Raised when a cooperative deadline expires mid-enumeration.
struct EnumerationTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a method refuses a workload (factorial cap, rank overflow).
struct InfeasibleWorkload : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mergeable partial sums from a slice of the enumeration space. Merging the
// partials of any disjoint cover of [0, C(n, reds)) reproduces the full run
// exactly, independent of merge order.
struct Counters {
  std::uint64_t sum_max = 0;              // sum of running maxima over evaluated sequences
  std::uint64_t sequences_evaluated = 0;  // walks actually simulated (possibly truncated)
  std::uint64_t sequences_skipped = 0;    // sequences covered by a lexicographic skip range
  std::uint64_t walks_truncated = 0;      // walks stopped early by the horizon rule
  std::uint64_t steps_evaluated = 0;      // individual marble draws simulated

  void merge(const Counters& o);
};

struct Report {
  Rational expected_max;
  std::uint64_t sequences_evaluated = 0;
  std::uint64_t sequences_skipped = 0;
  std::uint64_t walks_truncated = 0;
  std::uint64_t steps_evaluated = 0;
  std::chrono::duration<double, std::milli> elapsed{0};

  std::uint64_t nodes_pruned() const { return sequences_skipped + walks_truncated; }
};

// True exactly when the running maximum can no longer increase: even if every
// remaining red is drawn next, mu stays at or below the maximum already seen.
// Stopping then never changes the sequence's max_prefix value.
inline bool horizon_stop(long mu, long reds_remaining, long running_max) {
  return mu + reds_remaining <= running_max;
}

// When the first red of `combination` is already so late that the walk can
// never reach +1, every lexicographic successor shares that property; the
// whole tail [rank(combination), C(n, reds)) contributes 0 and may be
// skipped. Returns that rank range, or nothing when the combination can
// still attain a positive maximum.
std::optional<std::pair<std::uint64_t, std::uint64_t>> lexicographic_skip_range(
    const WalkConfig& cfg, std::span<const int> combination);

Report enumerate_exhaustive(const WalkConfig& cfg, const EnumOptions& opts = {});
Report enumerate_combinations_recursive(const WalkConfig& cfg, const EnumOptions& opts = {});
Report enumerate_combinations_iterative(const WalkConfig& cfg, const EnumOptions& opts = {});

// Partition primitive behind the iterative method: processes exactly the
// lexicographic ranks [lo, hi). Disjoint covers merge to the full result.
Counters enumerate_rank_range(const WalkConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                              const EnumOptions& opts = {});

// Turns merged partials into a report (divides by C(n, reds) exactly).
Report finalize_counters(const WalkConfig& cfg, const Counters& counters,
                         std::chrono::duration<double, std::milli> elapsed);

// Independent oracle: exact E[max mu] by dynamic programming over states
// (reds used, whites used, running max), counting lattice paths per
// running-max value. Polynomial in delta, so it reaches far beyond what
// enumeration can.
Rational expected_max_dp(const WalkConfig& cfg);

// Dispatch helper used by the CLI and reporting layers.
Report compute_expected_max(const WalkConfig& cfg, Method method, const EnumOptions& opts = {});

// C(n, reds) if it fits in 64 bits; enumeration refuses otherwise.
std::optional<std::uint64_t> sequence_count_u64(const WalkConfig& cfg);

}  // namespace urnwalk
