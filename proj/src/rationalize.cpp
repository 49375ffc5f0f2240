#include "ambigine/rationalize.hpp"

#include <algorithm>

namespace ambigine {

BeliefProfile::BeliefProfile(StateSpace states_in, SignalSpace signals_in, std::vector<Rat> mu_in,
                             std::vector<std::vector<Rat>> posteriors_in)
    : states(std::move(states_in)),
      signals(std::move(signals_in)),
      mu(std::move(mu_in)),
      posteriors(std::move(posteriors_in)) {
  if (mu.size() != states.size()) throw ShapeMismatch("prior length does not match states");
  Rat total(0);
  for (const auto& p : mu) {
    if (p <= 0) throw ValidationError("profile prior must be strictly positive; drop zero states");
    total += p;
  }
  if (total != 1) throw ValidationError("profile prior must sum to 1");
  if (posteriors.size() != signals.size()) throw ShapeMismatch("one posterior per signal required");
  for (const auto& post : posteriors) {
    if (post.size() != states.size()) throw ShapeMismatch("posterior length does not match states");
    Rat sum(0);
    for (const auto& p : post) {
      if (p < 0) throw ValidationError("negative posterior mass");
      sum += p;
    }
    if (sum != 1) throw ValidationError("posterior must sum to 1");
  }
}

Rat BeliefProfile::ratio(std::size_t signal, std::size_t state) const {
  return posteriors.at(signal).at(state) / mu.at(state);
}

Rat BeliefProfile::max_ratio(std::size_t signal) const {
  Rat best = ratio(signal, 0);
  for (std::size_t s = 1; s < states.size(); ++s) best = std::max(best, ratio(signal, s));
  return best;
}

RationalizabilityResult is_rationalizable(const BeliefProfile& profile) {
  RationalizabilityResult result;
  result.rationalizable = true;
  result.state_sums.assign(profile.states.size(), Rat(0));
  for (std::size_t s = 0; s < profile.states.size(); ++s) {
    Rat sum(0);
    for (std::size_t t = 0; t < profile.signals.size(); ++t) {
      sum += profile.ratio(t, s) / profile.max_ratio(t);
    }
    result.state_sums[s] = sum;
    if (sum < 1) result.rationalizable = false;
  }
  return result;
}

SimpleDecomposition construct_interpretations(const BeliefProfile& profile) {
  const auto verdict = is_rationalizable(profile);
  if (!verdict.rationalizable) throw NotRationalizable("profile fails the per-state sum condition");

  const std::size_t m = profile.states.size();
  const std::size_t n = profile.signals.size();

  // Diagonal likelihoods: c^theta(theta|s), the caps for every other
  // interpretation's mass on theta.
  std::vector<std::vector<Rat>> diagonal(n, std::vector<Rat>(m));
  for (std::size_t t = 0; t < n; ++t) {
    const Rat top = profile.max_ratio(t);
    for (std::size_t s = 0; s < m; ++s) diagonal[t][s] = profile.ratio(t, s) / top;
  }

  std::vector<Kernel> kernels(n);
  for (std::size_t t = 0; t < n; ++t) {
    kernels[t].rows.assign(m, std::vector<Rat>(n, Rat(0)));
    for (std::size_t s = 0; s < m; ++s) {
      kernels[t].rows[s][t] = diagonal[t][s];
      Rat deficit = 1 - diagonal[t][s];
      for (std::size_t other = 0; other < n && deficit > 0; ++other) {
        if (other == t) continue;
        const Rat grant = std::min(deficit, diagonal[other][s]);
        kernels[t].rows[s][other] = grant;
        deficit -= grant;
      }
      if (deficit != 0) {
        throw NotRationalizable("cap allocation failed; sum condition violated");
      }
    }
  }
  return SimpleDecomposition(profile.states, profile.signals, profile.mu, std::move(kernels));
}

}  // namespace ambigine
