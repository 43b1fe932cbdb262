#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "urnwalk/rational.hpp"

namespace urnwalk {

enum class Color : bool { White = false, Red = true };

// Urn parameters. The standard urn has delta white marbles and delta/2 red
// ones, so n = 3*delta/2 and the red probability at the first draw is 1/3.
// A custom white/red split is accepted as an override; the standard split is
// the contract-tested path.
class WalkConfig {
 public:
  static WalkConfig standard(long delta);
  static WalkConfig custom(long whites, long reds);

  long delta() const { return whites_; }
  long whites() const { return whites_; }
  long reds() const { return reds_; }
  long total() const { return whites_ + reds_; }
  bool is_standard() const { return whites_ == 2 * reds_; }

  Rational p() const;  // reds / total, exact
  Rational q() const;  // whites / total, exact

  // Walk position after all n draws: reds - whites (= -delta/2 standard).
  long final_position() const { return reds_ - whites_; }

 private:
  WalkConfig(long whites, long reds) : whites_(whites), reds_(reds) {}
  long whites_;
  long reds_;
};

// One ordering of marble colors, stored as a packed bit string (bit = red).
class StepSequence {
 public:
  static StepSequence from_colors(const std::vector<Color>& colors);
  // Positions must be strictly increasing and < n.
  static StepSequence from_red_positions(long n, std::span<const int> red_positions);

  std::size_t size() const { return red_at_.size(); }
  bool is_red(std::size_t i) const { return red_at_[i]; }
  std::size_t red_count() const;

 private:
  explicit StepSequence(std::vector<bool> red_at) : red_at_(std::move(red_at)) {}
  std::vector<bool> red_at_;
};

// Trace of the walk positions mu_0..mu_n plus the attained running maximum.
struct WalkTrace {
  std::vector<long> positions;  // length n+1, positions[0] == 0
  long max_position = 0;

  long final_position() const { return positions.back(); }
};

// Evaluates one sequence under the urn rules: red steps +1, white steps -1.
// Rejects sequences whose red/white counts do not match the config.
WalkTrace max_prefix(const WalkConfig& cfg, const StepSequence& seq);

// Number of distinct color sequences, C(n, reds). Each is equally likely
// under sampling without replacement; the n! raw permutations collapse onto
// them in groups of whites! * reds!.
mpz_class sequence_count(const WalkConfig& cfg);

}  // namespace urnwalk
