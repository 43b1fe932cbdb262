#include "urnwalk/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace urnwalk {

namespace {

// splitmix64; used only to spread (seed, worker index) into generator seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform on [0, bound) by rejection; std::uniform_int_distribution is not
// portable across standard libraries, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t reject_below = (-bound) % bound;  // 2^64 mod bound
  std::uint64_t x;
  do {
    x = rng();
  } while (x < reject_below);
  return x % bound;
}

struct Accumulator {
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;

  void add(long max_value) {
    const std::uint64_t v = static_cast<std::uint64_t>(max_value);
    sum += v;
    sum_sq += static_cast<unsigned __int128>(v) * v;
  }
  void merge(const Accumulator& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
};

SampleReport summarize(const Accumulator& acc, std::uint64_t trials, std::uint64_t seed, int workers) {
  SampleReport report;
  report.trials = trials;
  report.seed = seed;
  report.workers = workers;
  report.mean_max = static_cast<double>(acc.sum) / static_cast<double>(trials);
  if (trials > 1) {
    const long double sum = static_cast<long double>(acc.sum);
    const long double sum_sq = static_cast<long double>(acc.sum_sq);
    const long double n = static_cast<long double>(trials);
    const long double variance = (sum_sq - sum * sum / n) / (n - 1);
    report.std_error = static_cast<double>(std::sqrt(std::max<long double>(0, variance) / n));
  }
  return report;
}

template <typename TrialFn>
SampleReport run_trials(std::uint64_t trials, std::uint64_t seed, int workers, TrialFn trial) {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials);

  std::vector<Accumulator> parts(chunks);
  auto worker_body = [&](std::uint64_t w) {
    std::mt19937_64 rng(mix_seed(seed + w));
    const std::uint64_t lo = trials / chunks * w + std::min(w, trials % chunks);
    const std::uint64_t hi = trials / chunks * (w + 1) + std::min(w + 1, trials % chunks);
    for (std::uint64_t i = lo; i < hi; ++i) parts[w].add(trial(rng));
  };

  if (chunks == 1) {
    worker_body(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t w = 0; w < chunks; ++w) pool.emplace_back(worker_body, w);
  }

  Accumulator total;
  for (const auto& part : parts) total.merge(part);
  return summarize(total, trials, seed, static_cast<int>(chunks));
}

}  // namespace

SampleReport sample_urn_walk(const WalkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             int workers) {
  return run_trials(trials, seed, workers, [&cfg](std::mt19937_64& rng) {
    std::uint64_t reds = static_cast<std::uint64_t>(cfg.reds());
    std::uint64_t whites = static_cast<std::uint64_t>(cfg.whites());
    long mu = 0;
    long best = 0;
    while (reds + whites > 0) {
      if (bounded(rng, reds + whites) < reds) {
        --reds;
        if (++mu > best) best = mu;
      } else {
        --whites;
        --mu;
      }
    }
    if (mu != cfg.final_position())
      throw std::logic_error("urn walk failed to terminate at reds - whites");
    return best;
  });
}

SampleReport sample_iid_walk(const IidConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             int workers) {
  if (!cfg.p().denominator().fits_ulong_p())
    throw std::invalid_argument("p denominator too large for sampling");
  const std::uint64_t den = mpz_get_ui(cfg.p().denominator().get_mpz_t());
  const std::uint64_t num = mpz_get_ui(cfg.p().numerator().get_mpz_t());
  const long steps = cfg.steps();

  return run_trials(trials, seed, workers, [num, den, steps](std::mt19937_64& rng) {
    long mu = 0;
    long best = 0;
    for (long t = 0; t < steps; ++t) {
      if (bounded(rng, den) < num) {
        if (++mu > best) best = mu;
      } else {
        --mu;
      }
    }
    return best;
  });
}

}  // namespace urnwalk
