#pragma once

#include "ambigine/types.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ambigine {

// One Moebius mass: a nonempty set of (state, signal) cells and its weight.
struct MobiusMass {
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // sorted, unique
  Rat mass;
};

// Totally monotone capacity over states x signals via nonnegative masses
// summing to one. The represented prior set is the Minkowski sum of the
// per-event simplices, i.e. the capacity's core.
class MobiusBelief {
 public:
  MobiusBelief(StateSpace states, SignalSpace signals, std::vector<MobiusMass> masses);

  const StateSpace& states() const { return states_; }
  const SignalSpace& signals() const { return signals_; }
  const std::vector<MobiusMass>& masses() const { return masses_; }
  bool is_additive() const;  // all mass on singletons

  // Min expectation over the core equals the Choquet integral:
  // sum over events of mass * (minimum payoff on the event).
  Rat choquet(const ExtendedAct& act) const;

  // Extreme points of the core, one per selection of a cell from each event.
  ExtremePriorSet to_prior_set(std::size_t max_extremes = 4096) const;

 private:
  StateSpace states_;
  SignalSpace signals_;
  std::vector<MobiusMass> masses_;
};

// Moebius masses over subsets of the state space (a posterior belief function).
class StateBelief {
 public:
  StateBelief(StateSpace states, std::vector<std::pair<std::vector<std::size_t>, Rat>> masses);

  const StateSpace& states() const { return states_; }
  const std::vector<std::pair<std::vector<std::size_t>, Rat>>& masses() const { return masses_; }
  bool is_additive() const;

  Rat choquet(const Act& act) const;

  // Lower-probability vertices of the core via permutation enumeration.
  std::vector<std::vector<Rat>> core_extremes() const;

 private:
  StateSpace states_;
  std::vector<std::pair<std::vector<std::size_t>, Rat>> masses_;
};

struct ProxyPosterior {
  StateBelief belief;
  PosteriorSet posterior;
};

// The proxy rule: reweight each event by the fraction of it lying in the
// observed signal's column, intersect, renormalize.
ProxyPosterior proxy_update_full(const MobiusBelief& belief, std::size_t signal);

}  // namespace ambigine
