#include "urnwalk/walk.hpp"

#include <stdexcept>
#include <string>

namespace urnwalk {

WalkConfig WalkConfig::standard(long delta) {
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative, got " + std::to_string(delta));
  if (delta % 2 != 0)
    throw std::invalid_argument("delta must be even so that the urn holds delta/2 red marbles, got " +
                                std::to_string(delta));
  return WalkConfig(delta, delta / 2);
}

WalkConfig WalkConfig::custom(long whites, long reds) {
  if (whites < 0 || reds < 0) throw std::invalid_argument("marble counts must be nonnegative");
  return WalkConfig(whites, reds);
}

Rational WalkConfig::p() const {
  if (total() == 0) throw std::domain_error("p is undefined for an empty urn");
  return Rational(reds_, total());
}

Rational WalkConfig::q() const {
  if (total() == 0) throw std::domain_error("q is undefined for an empty urn");
  return Rational(whites_, total());
}

StepSequence StepSequence::from_colors(const std::vector<Color>& colors) {
  std::vector<bool> bits(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) bits[i] = (colors[i] == Color::Red);
  return StepSequence(std::move(bits));
}

StepSequence StepSequence::from_red_positions(long n, std::span<const int> red_positions) {
  if (n < 0) throw std::invalid_argument("sequence length must be nonnegative");
  std::vector<bool> bits(static_cast<std::size_t>(n), false);
  int prev = -1;
  for (int pos : red_positions) {
    if (pos <= prev || pos >= n)
      throw std::invalid_argument("red positions must be strictly increasing and < n");
    bits[static_cast<std::size_t>(pos)] = true;
    prev = pos;
  }
  return StepSequence(std::move(bits));
}

std::size_t StepSequence::red_count() const {
  std::size_t reds = 0;
  for (bool red : red_at_) reds += red;
  return reds;
}

WalkTrace max_prefix(const WalkConfig& cfg, const StepSequence& seq) {
  if (static_cast<long>(seq.size()) != cfg.total() ||
      static_cast<long>(seq.red_count()) != cfg.reds()) {
    throw std::invalid_argument("sequence does not match urn contents (need " +
                                std::to_string(cfg.reds()) + " red / " +
                                std::to_string(cfg.whites()) + " white)");
  }
  WalkTrace trace;
  trace.positions.reserve(seq.size() + 1);
  trace.positions.push_back(0);
  long mu = 0;
  long best = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    mu += seq.is_red(t) ? 1 : -1;
    if (mu > best) best = mu;
    trace.positions.push_back(mu);
  }
  trace.max_position = best;
  return trace;
}

mpz_class sequence_count(const WalkConfig& cfg) {
  return binomial(static_cast<unsigned long>(cfg.total()), static_cast<unsigned long>(cfg.reds()));
}

}  // namespace urnwalk
