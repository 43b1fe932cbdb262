#pragma once

#include <cstdint>
#include <string>

#include "urnwalk/iid.hpp"
#include "urnwalk/walk.hpp"

namespace urnwalk {

// Stochastic estimate of E[max]. Reproducible: a fixed (seed, trials,
// config, workers) tuple always yields the identical report. Workers draw
// from per-worker streams derived from (seed, worker index).
struct SampleReport {
  std::uint64_t trials = 0;
  double mean_max = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string generator = "mt19937_64";
};

SampleReport sample_urn_walk(const WalkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             int workers = 1);

SampleReport sample_iid_walk(const IidConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             int workers = 1);

}  // namespace urnwalk
