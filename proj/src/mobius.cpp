#include "ambigine/mobius.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ambigine {

MobiusBelief::MobiusBelief(StateSpace states, SignalSpace signals, std::vector<MobiusMass> masses)
    : states_(std::move(states)), signals_(std::move(signals)) {
  // Normalize representation: sorted unique cells, merged duplicate events,
  // zero masses dropped.
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, Rat> merged;
  Rat total(0);
  for (auto& entry : masses) {
    if (entry.mass < 0) throw InvalidMobius("negative Moebius mass");
    if (entry.cells.empty()) throw InvalidMobius("empty event");
    for (const auto& [s, t] : entry.cells) {
      if (s >= states_.size() || t >= signals_.size()) throw InvalidMobius("event cell out of range");
    }
    std::sort(entry.cells.begin(), entry.cells.end());
    entry.cells.erase(std::unique(entry.cells.begin(), entry.cells.end()), entry.cells.end());
    total += entry.mass;
    if (entry.mass != 0) merged[entry.cells] += entry.mass;
  }
  if (total != 1) throw InvalidMobius("Moebius masses must sum to 1, got " + format_rational(total));
  for (auto& [cells, mass] : merged) masses_.push_back({cells, mass});
}

bool MobiusBelief::is_additive() const {
  return std::all_of(masses_.begin(), masses_.end(),
                     [](const MobiusMass& m) { return m.cells.size() == 1; });
}

Rat MobiusBelief::choquet(const ExtendedAct& act) const {
  if (act.state_count() != states_.size() || act.signal_count() != signals_.size()) {
    throw ShapeMismatch("act shape does not match the belief");
  }
  Rat total(0);
  for (const auto& entry : masses_) {
    Rat lowest = act.payoff(entry.cells.front().first, entry.cells.front().second);
    for (std::size_t i = 1; i < entry.cells.size(); ++i) {
      lowest = std::min(lowest, act.payoff(entry.cells[i].first, entry.cells[i].second));
    }
    total += entry.mass * lowest;
  }
  return total;
}

ExtremePriorSet MobiusBelief::to_prior_set(std::size_t max_extremes) const {
  std::size_t combos = 1;
  for (const auto& entry : masses_) {
    combos *= entry.cells.size();
    if (combos > max_extremes) {
      throw InvalidMobius("too many core extremes to enumerate");
    }
  }
  const std::size_t m = states_.size();
  const std::size_t n = signals_.size();
  std::vector<JointDistribution> extremes;
  extremes.reserve(combos);
  std::vector<std::size_t> choice(masses_.size(), 0);
  for (;;) {
    std::vector<Rat> mass(m * n, Rat(0));
    for (std::size_t e = 0; e < masses_.size(); ++e) {
      const auto& [s, t] = masses_[e].cells[choice[e]];
      mass[s * n + t] += masses_[e].mass;
    }
    extremes.emplace_back(m, n, std::move(mass));
    std::size_t k = 0;
    while (k < choice.size()) {
      if (++choice[k] < masses_[k].cells.size()) break;
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  std::sort(extremes.begin(), extremes.end(),
            [](const JointDistribution& a, const JointDistribution& b) { return a.flat() < b.flat(); });
  extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());
  return ExtremePriorSet(states_, signals_, std::move(extremes));
}

StateBelief::StateBelief(StateSpace states,
                         std::vector<std::pair<std::vector<std::size_t>, Rat>> masses)
    : states_(std::move(states)) {
  std::map<std::vector<std::size_t>, Rat> merged;
  Rat total(0);
  for (auto& [set, mass] : masses) {
    if (mass < 0) throw InvalidMobius("negative Moebius mass");
    if (set.empty()) throw InvalidMobius("empty event");
    for (std::size_t s : set) {
      if (s >= states_.size()) throw InvalidMobius("event state out of range");
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    total += mass;
    if (mass != 0) merged[set] += mass;
  }
  if (total != 1) throw InvalidMobius("Moebius masses must sum to 1");
  for (auto& [set, mass] : merged) masses_.emplace_back(set, mass);
}

bool StateBelief::is_additive() const {
  return std::all_of(masses_.begin(), masses_.end(),
                     [](const auto& m) { return m.first.size() == 1; });
}

Rat StateBelief::choquet(const Act& act) const {
  if (act.size() != states_.size()) throw ShapeMismatch("act length does not match the belief");
  Rat total(0);
  for (const auto& [set, mass] : masses_) {
    Rat lowest = act.payoff(set.front());
    for (std::size_t i = 1; i < set.size(); ++i) lowest = std::min(lowest, act.payoff(set[i]));
    total += mass * lowest;
  }
  return total;
}

std::vector<std::vector<Rat>> StateBelief::core_extremes() const {
  const std::size_t m = states_.size();
  if (m > 8) throw InvalidMobius("core enumeration limited to 8 states");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<Rat>> vertices;
  do {
    // rank in the permutation, per state
    std::vector<std::size_t> rank(m);
    for (std::size_t i = 0; i < m; ++i) rank[order[i]] = i;
    // each event's mass goes to its last state under the ordering
    std::vector<Rat> vertex(m, Rat(0));
    for (const auto& [set, mass] : masses_) {
      std::size_t last = set.front();
      for (std::size_t s : set) {
        if (rank[s] > rank[last]) last = s;
      }
      vertex[last] += mass;
    }
    vertices.push_back(std::move(vertex));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

ProxyPosterior proxy_update_full(const MobiusBelief& belief, std::size_t signal) {
  if (signal >= belief.signals().size()) throw UnknownLabel("signal index out of range");
  std::map<std::vector<std::size_t>, Rat> accumulated;
  Rat denominator(0);
  for (const auto& entry : belief.masses()) {
    std::vector<std::size_t> intersection;
    for (const auto& [s, t] : entry.cells) {
      if (t == signal) intersection.push_back(s);
    }
    if (intersection.empty()) continue;
    const Rat weight =
        entry.mass * Rat(static_cast<long>(intersection.size()), static_cast<long>(entry.cells.size()));
    accumulated[intersection] += weight;
    denominator += weight;
  }
  if (denominator == 0) throw NullSignal("proxy update on a null signal");

  std::vector<std::pair<std::vector<std::size_t>, Rat>> masses;
  masses.reserve(accumulated.size());
  for (auto& [set, weight] : accumulated) masses.emplace_back(set, weight / denominator);
  StateBelief posterior_belief(belief.states(), std::move(masses));
  PosteriorSet posterior(posterior_belief.core_extremes());
  return {std::move(posterior_belief), std::move(posterior)};
}

}  // namespace ambigine
