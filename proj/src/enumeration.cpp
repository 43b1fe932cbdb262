#include "urnwalk/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

#include "urnwalk/combinatorics.hpp"

namespace urnwalk {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDeadlineCheckStride = 8192;

void check_deadline(const EnumOptions& opts) {
  if (opts.deadline && Clock::now() >= *opts.deadline)
    throw EnumerationTimeout("enumeration exceeded its deadline");
}

// Simulates the walk of one red-position combination draw by draw, keeping
// the running maximum. With the horizon rule on, stops as soon as the
// maximum is provably final.
long walk_combination(std::span<const int> reds, long n, bool prune_horizon, Counters& ctr) {
  const int k = static_cast<int>(reds.size());
  long mu = 0;
  long best = 0;
  int next_red = 0;
  for (long t = 0; t < n; ++t) {
    if (next_red < k && reds[static_cast<std::size_t>(next_red)] == t) {
      ++next_red;
      if (++mu > best) best = mu;
    } else {
      --mu;
    }
    ++ctr.steps_evaluated;
    if (prune_horizon && horizon_stop(mu, k - next_red, best)) {
      if (t + 1 < n) ++ctr.walks_truncated;
      break;
    }
  }
  return best;
}

struct RecursiveState {
  const WalkConfig& cfg;
  const EnumOptions& opts;
  long n;
  int k;
  std::uint64_t zero_tail_size;  // combinations whose first red is at position >= k
  std::vector<int> selection;
  Counters ctr;
  std::uint64_t since_check = 0;
};

void select_level(RecursiveState& st, int level, int loopstart) {
  for (int pos = loopstart; pos <= static_cast<int>(st.n) - st.k + level; ++pos) {
    if (level == 0 && st.opts.prune_lexicographic && pos >= st.k) {
      // First red at or past position k: mu can never reach +1 here nor in
      // any lexicographic successor. The whole tail contributes 0.
      st.ctr.sequences_skipped += st.zero_tail_size;
      return;
    }
    st.selection[static_cast<std::size_t>(level)] = pos;
    if (level == st.k - 1) {
      st.ctr.sum_max += static_cast<std::uint64_t>(
          walk_combination(st.selection, st.n, st.opts.prune_horizon, st.ctr));
      ++st.ctr.sequences_evaluated;
      if (++st.since_check >= kDeadlineCheckStride) {
        st.since_check = 0;
        check_deadline(st.opts);
      }
    } else {
      select_level(st, level + 1, pos + 1);
    }
  }
}

std::uint64_t require_count_u64(const WalkConfig& cfg) {
  const auto count = sequence_count_u64(cfg);
  if (!count)
    throw InfeasibleWorkload("sequence count C(" + std::to_string(cfg.total()) + ", " +
                             std::to_string(cfg.reds()) + ") exceeds 64 bits; enumeration infeasible");
  return *count;
}

// Rank of the first combination whose leading red position is >= reds; all
// combinations from there on have running maximum 0. The tail holds the
// C(whites, reds) combinations drawn entirely from positions >= reds, so it
// always fits once the total count does.
std::uint64_t zero_tail_start(const WalkConfig& cfg, std::uint64_t count) {
  const mpz_class tail = binomial(static_cast<unsigned long>(cfg.whites()),
                                  static_cast<unsigned long>(cfg.reds()));
  return count - mpz_get_ui(tail.get_mpz_t());
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::CombinationsRecursive: return "combos";
    case Method::CombinationsIterative: return "combos-iter";
    case Method::DynamicProgramming: return "dp";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "exhaustive") return Method::Exhaustive;
  if (name == "combos" || name == "combinations") return Method::CombinationsRecursive;
  if (name == "combos-iter" || name == "iterative") return Method::CombinationsIterative;
  if (name == "dp") return Method::DynamicProgramming;
  return std::nullopt;
}

void Counters::merge(const Counters& o) {
  sum_max += o.sum_max;
  sequences_evaluated += o.sequences_evaluated;
  sequences_skipped += o.sequences_skipped;
  walks_truncated += o.walks_truncated;
  steps_evaluated += o.steps_evaluated;
}

std::optional<std::uint64_t> sequence_count_u64(const WalkConfig& cfg) {
  const mpz_class count = sequence_count(cfg);
  if (!count.fits_ulong_p()) return std::nullopt;
  return mpz_get_ui(count.get_mpz_t());
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> lexicographic_skip_range(
    const WalkConfig& cfg, std::span<const int> combination) {
  if (combination.empty() || combination[0] < cfg.reds()) return std::nullopt;
  const std::uint64_t count = require_count_u64(cfg);
  BinomialTable table(static_cast<int>(cfg.total()), static_cast<int>(cfg.reds()));
  return std::make_pair(combination_rank(table, combination), count);
}

Report finalize_counters(const WalkConfig& cfg, const Counters& counters,
                         std::chrono::duration<double, std::milli> elapsed) {
  Report report;
  report.expected_max = Rational(mpz_class(static_cast<unsigned long>(counters.sum_max)),
                                 sequence_count(cfg));
  report.sequences_evaluated = counters.sequences_evaluated;
  report.sequences_skipped = counters.sequences_skipped;
  report.walks_truncated = counters.walks_truncated;
  report.steps_evaluated = counters.steps_evaluated;
  report.elapsed = elapsed;
  return report;
}

Report enumerate_exhaustive(const WalkConfig& cfg, const EnumOptions& opts) {
  const long cap_total = opts.exhaustive_cap_delta + opts.exhaustive_cap_delta / 2;
  if (cfg.total() > cap_total)
    throw InfeasibleWorkload("exhaustive enumeration of " + std::to_string(cfg.total()) +
                             "! permutations refused: factorial growth past the safety cap (delta " +
                             std::to_string(opts.exhaustive_cap_delta) +
                             "); raise the cap to override");

  const auto start = Clock::now();
  check_deadline(opts);
  const long n = cfg.total();
  const long k = cfg.reds();
  std::vector<int> marbles(static_cast<std::size_t>(n));
  std::iota(marbles.begin(), marbles.end(), 0);  // ids < k are the red marbles

  Counters ctr;
  std::uint64_t since_check = 0;
  do {
    long mu = 0;
    long best = 0;
    for (long t = 0; t < n; ++t) {
      mu += (marbles[static_cast<std::size_t>(t)] < k) ? 1 : -1;
      if (mu > best) best = mu;
      ++ctr.steps_evaluated;
    }
    ctr.sum_max += static_cast<std::uint64_t>(best);
    ++ctr.sequences_evaluated;
    if (++since_check >= kDeadlineCheckStride) {
      since_check = 0;
      check_deadline(opts);
    }
  } while (std::next_permutation(marbles.begin(), marbles.end()));

  Report report;
  report.expected_max = Rational(mpz_class(static_cast<unsigned long>(ctr.sum_max)),
                                 factorial(static_cast<unsigned long>(n)));
  report.sequences_evaluated = ctr.sequences_evaluated;
  report.steps_evaluated = ctr.steps_evaluated;
  report.elapsed = Clock::now() - start;
  return report;
}

Report enumerate_combinations_recursive(const WalkConfig& cfg, const EnumOptions& opts) {
  const auto start = Clock::now();
  check_deadline(opts);
  const std::uint64_t count = require_count_u64(cfg);

  RecursiveState st{cfg, opts, cfg.total(), static_cast<int>(cfg.reds()),
                    count - zero_tail_start(cfg, count),
                    std::vector<int>(static_cast<std::size_t>(cfg.reds())), Counters{}, 0};
  if (st.k == 0) {
    // single empty sequence, maximum 0
    st.ctr.sequences_evaluated = 1;
  } else {
    select_level(st, 0, 0);
  }
  return finalize_counters(cfg, st.ctr, Clock::now() - start);
}

Counters enumerate_rank_range(const WalkConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                              const EnumOptions& opts) {
  const std::uint64_t count = require_count_u64(cfg);
  if (lo > hi || hi > count)
    throw std::out_of_range("rank range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            ") out of bounds for " + std::to_string(count) + " sequences");
  check_deadline(opts);

  Counters ctr;
  std::uint64_t eval_hi = hi;
  if (opts.prune_lexicographic) {
    const std::uint64_t tail_start = zero_tail_start(cfg, count);
    eval_hi = std::clamp(tail_start, lo, hi);
    ctr.sequences_skipped = hi - eval_hi;
  }
  if (lo >= eval_hi) return ctr;

  const int n = static_cast<int>(cfg.total());
  const int k = static_cast<int>(cfg.reds());
  if (k == 0) {
    ctr.sequences_evaluated = 1;  // the empty sequence, maximum 0
    return ctr;
  }

  BinomialTable table(n, k);
  std::vector<int> combo = combination_unrank(table, lo);
  std::uint64_t since_check = 0;
  for (std::uint64_t rank = lo; rank < eval_hi; ++rank) {
    ctr.sum_max +=
        static_cast<std::uint64_t>(walk_combination(combo, n, opts.prune_horizon, ctr));
    ++ctr.sequences_evaluated;
    if (rank + 1 < eval_hi) next_combination(combo, n);
    if (++since_check >= kDeadlineCheckStride) {
      since_check = 0;
      check_deadline(opts);
    }
  }
  return ctr;
}

Report enumerate_combinations_iterative(const WalkConfig& cfg, const EnumOptions& opts) {
  const auto start = Clock::now();
  const std::uint64_t count = require_count_u64(cfg);
  const int workers = std::max(1, opts.workers);

  Counters merged;
  if (workers == 1 || count < 2) {
    merged = enumerate_rank_range(cfg, 0, count, opts);
  } else {
    const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count);
    std::vector<Counters> parts(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t w = 0; w < chunks; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = count / chunks * w + std::min(w, count % chunks);
        const std::uint64_t hi = count / chunks * (w + 1) + std::min(w + 1, count % chunks);
        try {
          parts[w] = enumerate_rank_range(cfg, lo, hi, opts);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();  // join
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (const auto& part : parts) merged.merge(part);
  }
  return finalize_counters(cfg, merged, Clock::now() - start);
}

Rational expected_max_dp(const WalkConfig& cfg) {
  const long reds = cfg.reds();
  const long whites = cfg.whites();
  const std::size_t max_dim = static_cast<std::size_t>(reds) + 1;
  const std::size_t white_dim = static_cast<std::size_t>(whites) + 1;

  // paths[r][w][m]: lattice paths using r reds and w whites whose running
  // maximum is exactly m. A red landing on height h == m either keeps the
  // maximum (from m) or raises it by one (from m-1); a white never changes it.
  std::vector<mpz_class> paths(max_dim * white_dim * max_dim);
  auto cell = [&](long r, long w, long m) -> mpz_class& {
    return paths[(static_cast<std::size_t>(r) * white_dim + static_cast<std::size_t>(w)) * max_dim +
                 static_cast<std::size_t>(m)];
  };

  cell(0, 0, 0) = 1;
  for (long r = 0; r <= reds; ++r) {
    for (long w = 0; w <= whites; ++w) {
      if (r == 0 && w == 0) continue;
      const long height = r - w;
      for (long m = std::max<long>(0, height); m <= r; ++m) {
        mpz_class& acc = cell(r, w, m);
        if (w >= 1) acc += cell(r, w - 1, m);
        if (r >= 1) {
          if (height < m) {
            acc += cell(r - 1, w, m);
          } else {  // height == m: the red step sets or keeps the maximum
            acc += cell(r - 1, w, m);
            if (m >= 1) acc += cell(r - 1, w, m - 1);
          }
        }
      }
    }
  }

  mpz_class weighted_sum = 0;
  for (long m = 1; m <= reds; ++m) weighted_sum += m * cell(reds, whites, m);
  return Rational(weighted_sum, sequence_count(cfg));
}

Report compute_expected_max(const WalkConfig& cfg, Method method, const EnumOptions& opts) {
  switch (method) {
    case Method::Exhaustive: return enumerate_exhaustive(cfg, opts);
    case Method::CombinationsRecursive: return enumerate_combinations_recursive(cfg, opts);
    case Method::CombinationsIterative: return enumerate_combinations_iterative(cfg, opts);
    case Method::DynamicProgramming: {
      const auto start = Clock::now();
      Report report;
      report.expected_max = expected_max_dp(cfg);
      report.elapsed = Clock::now() - start;
      return report;
    }
  }
  throw std::invalid_argument("unknown enumeration method");
}

}  // namespace urnwalk
