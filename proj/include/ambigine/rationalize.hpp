#pragma once

#include "ambigine/types.hpp"

#include <vector>

namespace ambigine {

// Ex-ante prior (strictly interior) plus one singleton posterior per signal.
struct BeliefProfile {
  StateSpace states;
  SignalSpace signals;
  std::vector<Rat> mu;
  std::vector<std::vector<Rat>> posteriors;  // [signal][state]

  BeliefProfile(StateSpace states, SignalSpace signals, std::vector<Rat> mu,
                std::vector<std::vector<Rat>> posteriors);

  Rat ratio(std::size_t signal, std::size_t state) const;      // mu_theta(s) / mu(s)
  Rat max_ratio(std::size_t signal) const;                     // over states
};

struct RationalizabilityResult {
  bool rationalizable = false;
  std::vector<Rat> state_sums;  // left-hand sides, one per state
};

// The per-state sums of normalized likelihoods must each reach one.
RationalizabilityResult is_rationalizable(const BeliefProfile& profile);

// One interpretation per signal: unit diagonal likelihood at the max-ratio
// states, remainders water-filled in signal label order under the caps
// c^theta(theta'|s) <= c^theta'(theta'|s). Round-trips through the CML
// formula exactly.
SimpleDecomposition construct_interpretations(const BeliefProfile& profile);

}  // namespace ambigine
