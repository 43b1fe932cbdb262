#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "urnwalk/enumeration.hpp"
#include "urnwalk/iid.hpp"

namespace urnwalk {

// One table row: both models at the same delta, urn side computed by
// `method`. `status` is empty on success; infeasible or timed-out cells are
// marked rather than silently dropped.
struct SeriesRow {
  long delta = 0;
  long whites = 0;
  long reds = 0;
  Method method = Method::DynamicProgramming;
  std::optional<Rational> urn_exact;
  std::optional<Rational> iid_exact;
  std::chrono::duration<double, std::milli> urn_elapsed{0};
  std::chrono::duration<double, std::milli> iid_elapsed{0};
  std::uint64_t sequences_evaluated = 0;
  std::uint64_t nodes_pruned = 0;
  std::string status;
};

struct FigurePoint {
  long delta = 0;
  Rational urn;
  Rational iid;
};

struct BenchRecord {
  long delta = 0;
  Method method = Method::DynamicProgramming;
  bool flags_apply = false;  // pruning flags are meaningful for combination methods only
  bool prune_horizon = false;
  bool prune_lexicographic = false;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::uint64_t sequences_evaluated = 0;
  std::uint64_t sequences_skipped = 0;
  std::uint64_t walks_truncated = 0;
  std::uint64_t steps_evaluated = 0;
  std::uint64_t nodes_pruned = 0;
  std::string status;  // "ok", "timeout", or "infeasible: ..."
};

struct TableOptions {
  long delta_max = 22;
  std::vector<Method> methods = {Method::DynamicProgramming};
  bool prune_horizon = true;
  bool prune_lexicographic = true;
  int workers = 1;
  long exhaustive_cap_delta = 8;
  std::optional<std::chrono::milliseconds> timeout;  // per cell
};

struct BenchOptions {
  long delta_min = 2;
  long delta_max = 14;
  std::vector<Method> methods = {Method::CombinationsRecursive, Method::CombinationsIterative};
  long exhaustive_cap_delta = 8;
  std::optional<std::chrono::milliseconds> timeout = std::chrono::milliseconds(10000);  // per cell
};

// One row per even delta in [2, delta_max] and selected method; urn values
// from the chosen enumeration, iid values at horizon 3*delta/2.
std::vector<SeriesRow> build_table(const TableOptions& opts);

// Aligned decimal series for both walks; the asymptote is the constant 1.
std::vector<FigurePoint> build_figure_series(long delta_max);

// Times every (method, delta, pruning flags) cell. Absolute times are
// informational; counters carry the contractual comparisons.
std::vector<BenchRecord> run_benchmark(const BenchOptions& opts);

// CSV renderings. Fixed headers, canonical ordering, exact fractions as
// "num/den", decimals rounded half-even to `precision` places.
std::string table_csv(const std::vector<SeriesRow>& rows, int precision = 6);
std::string figure_csv(const std::vector<FigurePoint>& points, int precision = 6);
std::string bench_csv(const std::vector<BenchRecord>& records);

// Cells that did not produce a value (marked rows / timeouts).
std::size_t failed_cells(const std::vector<SeriesRow>& rows);
std::size_t failed_cells(const std::vector<BenchRecord>& records);

}  // namespace urnwalk
