#include "ambigine/eval.hpp"

#include <algorithm>

namespace ambigine {

Rat evaluate_extended(const JointDistribution& p, const ExtendedAct& act) {
  if (p.state_count() != act.state_count() || p.signal_count() != act.signal_count()) {
    throw ShapeMismatch("act shape does not match the distribution");
  }
  Rat total(0);
  for (std::size_t s = 0; s < p.state_count(); ++s) {
    for (std::size_t t = 0; t < p.signal_count(); ++t) {
      if (p.mass(s, t) != 0) total += p.mass(s, t) * act.payoff(s, t);
    }
  }
  return total;
}

Rat evaluate_extended(const ExtremePriorSet& prior, const ExtendedAct& act) {
  if (prior.states().size() != act.state_count() || prior.signals().size() != act.signal_count()) {
    throw ShapeMismatch("act shape does not match the prior set");
  }
  Rat best = evaluate_extended(prior.extremes().front(), act);
  for (std::size_t i = 1; i < prior.extremes().size(); ++i) {
    best = std::min(best, evaluate_extended(prior.extremes()[i], act));
  }
  return best;
}

Rat evaluate_act(const std::vector<Rat>& belief, const Act& act) {
  if (belief.size() != act.size()) throw ShapeMismatch("act length does not match the belief");
  Rat total(0);
  for (std::size_t s = 0; s < belief.size(); ++s) {
    if (belief[s] != 0) total += belief[s] * act.payoff(s);
  }
  return total;
}

Rat evaluate_act(const PosteriorSet& posterior, const Act& act) {
  Rat best = evaluate_act(posterior.extremes().front(), act);
  for (std::size_t i = 1; i < posterior.extremes().size(); ++i) {
    best = std::min(best, evaluate_act(posterior.extremes()[i], act));
  }
  return best;
}

Act restrict_to_signal(const ExtendedAct& act, std::size_t signal) {
  if (signal >= act.signal_count()) throw UnknownLabel("signal index out of range");
  std::vector<Rat> payoff(act.state_count());
  for (std::size_t s = 0; s < act.state_count(); ++s) payoff[s] = act.payoff(s, signal);
  return Act(std::move(payoff));
}

std::vector<std::size_t> non_null_signals(const ExtremePriorSet& prior) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < prior.signals().size(); ++t) {
    bool positive = false;
    for (const auto& e : prior.extremes()) {
      for (std::size_t s = 0; s < prior.states().size() && !positive; ++s) {
        positive = e.mass(s, t) > 0;
      }
      if (positive) break;
    }
    if (positive) out.push_back(t);
  }
  return out;
}

SimpleDecomposition decompose(const ExtremePriorSet& prior) {
  const std::vector<Rat> mu = prior.state_prior();  // throws NotSimple
  const std::size_t m = prior.states().size();
  const std::size_t n = prior.signals().size();
  std::vector<Kernel> kernels;
  kernels.reserve(prior.extremes().size());
  for (const auto& e : prior.extremes()) {
    Kernel kernel;
    kernel.rows.assign(m, std::vector<Rat>(n, Rat(0)));
    for (std::size_t s = 0; s < m; ++s) {
      if (mu[s] == 0) {
        // Unconstrained row; canonical uniform kernel.
        for (std::size_t t = 0; t < n; ++t) kernel.rows[s][t] = Rat(1, static_cast<long>(n));
      } else {
        for (std::size_t t = 0; t < n; ++t) kernel.rows[s][t] = e.mass(s, t) / mu[s];
      }
    }
    kernels.push_back(std::move(kernel));
  }
  return SimpleDecomposition(prior.states(), prior.signals(), mu, std::move(kernels));
}

ExtremePriorSet compose(const SimpleDecomposition& decomposition) { return decomposition.compose(); }

}  // namespace ambigine
