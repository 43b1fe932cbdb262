#include "urnwalk/iid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace urnwalk {

IidConfig::IidConfig(long steps, Rational p) : steps_(steps), p_(std::move(p)) {
  if (steps < 0) throw std::invalid_argument("horizon must be nonnegative");
  if (p_ <= Rational(0, 1) || p_ >= Rational(1, 1))
    throw std::invalid_argument("up-probability must satisfy 0 < p < 1, got " + p_.str());
}

IidConfig IidConfig::for_delta(long delta) {
  if (delta < 0 || delta % 2 != 0)
    throw std::invalid_argument("delta must be a nonnegative even integer, got " + std::to_string(delta));
  return IidConfig(3 * delta / 2);
}

Rational expected_max_iid(const IidConfig& cfg) {
  const long steps = cfg.steps();
  if (steps == 0) return Rational(0, 1);

  const mpz_class up_weight = cfg.p().numerator();
  const mpz_class down_weight = cfg.p().denominator() - cfg.p().numerator();

  // layer[(h + steps)*(steps+1) + m]: integer path weights (scaled by
  // den(p)^t) for walks at height h with running max m after t steps.
  // A state is reachable only when m >= max(0, h) and 2m - h <= t, and the
  // reachable set at t-1 is contained in the one at t+1, so double
  // buffering leaves no stale cells behind.
  const std::size_t max_dim = static_cast<std::size_t>(steps) + 1;
  const std::size_t cells = (2 * static_cast<std::size_t>(steps) + 1) * max_dim;
  std::vector<mpz_class> current(cells), next(cells);
  auto index = [&](long h, long m) {
    return static_cast<std::size_t>(h + steps) * max_dim + static_cast<std::size_t>(m);
  };

  current[index(0, 0)] = 1;
  for (long t = 0; t < steps; ++t) {
    const long layer = t + 1;
    for (long h = -layer; h <= layer; h += 2) {
      const long m_lo = std::max<long>(0, h);
      const long m_hi = (layer + h) / 2;  // reaching m and returning to h costs 2m - h steps
      for (long m = m_lo; m <= m_hi; ++m) {
        mpz_class& acc = next[index(h, m)];
        acc = 0;
        // up-step arrivals from (h-1, m') with max(m', h) == m
        if (h - 1 >= -t) {
          acc += up_weight * current[index(h - 1, m)];
          // on h == m the red step may also raise the maximum from m-1
          if (h == m && m >= 1) acc += up_weight * current[index(h - 1, m - 1)];
        }
        // down-step arrivals keep the running max
        if (h + 1 <= t) acc += down_weight * current[index(h + 1, m)];
      }
    }
    current.swap(next);
  }

  mpz_class weighted_sum = 0;
  for (long h = -steps; h <= steps; h += 2) {
    for (long m = std::max<long>(0, h); m <= (steps + h) / 2; ++m) {
      const mpz_class& w = current[index(h, m)];
      if (m > 0 && w != 0) weighted_sum += m * w;
    }
  }

  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), cfg.p().denominator().get_mpz_t(),
             static_cast<unsigned long>(steps));
  return Rational(weighted_sum, denom);
}

Rational expected_max_iid_limit(const Rational& p) {
  if (p <= Rational(0, 1) || p >= Rational(1, 2))
    throw std::domain_error("the infinite-horizon maximum has finite expectation only for 0 < p < 1/2, got " +
                            p.str());
  return p / (Rational(1, 1) - p - p);
}

}  // namespace urnwalk
