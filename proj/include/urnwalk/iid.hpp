#pragma once

#include "urnwalk/rational.hpp"

namespace urnwalk {

// The comparison walk: independent +-1 steps with a constant up-probability
// p (default 1/3), over a fixed horizon. Mirroring the urn walk means
// horizon = 3*delta/2.
class IidConfig {
 public:
  explicit IidConfig(long steps, Rational p = Rational(1, 3));
  static IidConfig for_delta(long delta);

  long steps() const { return steps_; }
  const Rational& p() const { return p_; }
  Rational q() const { return Rational(1, 1) - p_; }

 private:
  long steps_;
  Rational p_;
};

// Exact E[max over the horizon] by dynamic programming over
// (step, height, running max). The denominator divides den(p)^steps.
Rational expected_max_iid(const IidConfig& cfg);

// Infinite-horizon expected maximum p/(q - p), from the geometric law
// P(max >= k) = (p/q)^k. Requires 0 < p < 1/2 (negative drift); equals
// exactly 1 at p = 1/3. Throws std::domain_error otherwise.
Rational expected_max_iid_limit(const Rational& p);

}  // namespace urnwalk
