#include "ambigine/dynamics.hpp"

#include "ambigine/rng.hpp"

#include <cmath>

namespace ambigine {

namespace {

void validate_kernels(const StateSpace& states, const SignalSpace& signals,
                      const std::vector<Kernel>& kernels) {
  if (kernels.empty()) throw ValidationError("need at least one interpretation");
  for (const auto& kernel : kernels) {
    if (kernel.rows.size() != states.size()) throw ShapeMismatch("kernel rows do not match states");
    for (const auto& row : kernel.rows) {
      if (row.size() != signals.size()) throw ShapeMismatch("kernel row does not match signals");
      Rat total(0);
      for (const auto& c : row) {
        if (c < 0) throw ValidationError("negative kernel entry");
        total += c;
      }
      if (total != 1) throw ValidationError("kernel row must sum to 1");
    }
  }
}

}  // namespace

ProductStructure::ProductStructure(StateSpace states_in, std::vector<Rat> mu_in,
                                   SignalSpace signals_first_in, std::vector<Kernel> kernels_first_in,
                                   SignalSpace signals_second_in,
                                   std::vector<Kernel> kernels_second_in)
    : states(std::move(states_in)),
      mu(std::move(mu_in)),
      signals_first(std::move(signals_first_in)),
      kernels_first(std::move(kernels_first_in)),
      signals_second(std::move(signals_second_in)),
      kernels_second(std::move(kernels_second_in)) {
  if (mu.size() != states.size()) throw ShapeMismatch("prior length does not match states");
  Rat total(0);
  for (const auto& p : mu) {
    if (p < 0) throw ValidationError("negative prior mass");
    total += p;
  }
  if (total != 1) throw ValidationError("state prior must sum to 1");
  validate_kernels(states, signals_first, kernels_first);
  validate_kernels(states, signals_second, kernels_second);
}

SimpleDecomposition ProductStructure::first() const {
  return SimpleDecomposition(states, signals_first, mu, kernels_first);
}

SimpleDecomposition ProductStructure::second() const {
  return SimpleDecomposition(states, signals_second, mu, kernels_second);
}

SimpleDecomposition ProductStructure::product() const {
  const std::size_t n1 = signals_first.size();
  const std::size_t n2 = signals_second.size();
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      labels.push_back(signals_first.label(a) + "*" + signals_second.label(b));
    }
  }
  SignalSpace product_signals(std::move(labels));
  std::vector<Kernel> kernels;
  kernels.reserve(kernels_first.size() * kernels_second.size());
  for (const auto& k1 : kernels_first) {
    for (const auto& k2 : kernels_second) {
      Kernel kernel;
      kernel.rows.assign(states.size(), std::vector<Rat>(n1 * n2));
      for (std::size_t s = 0; s < states.size(); ++s) {
        for (std::size_t a = 0; a < n1; ++a) {
          for (std::size_t b = 0; b < n2; ++b) {
            kernel.rows[s][a * n2 + b] = k1.at(s, a) * k2.at(s, b);
          }
        }
      }
      kernels.push_back(std::move(kernel));
    }
  }
  return SimpleDecomposition(states, product_signals, mu, std::move(kernels));
}

PosteriorSet joint_update(const ProductStructure& ps, std::size_t signal_first,
                          std::size_t signal_second) {
  if (signal_first >= ps.signals_first.size() || signal_second >= ps.signals_second.size()) {
    throw UnknownLabel("signal index out of range");
  }
  const SimpleDecomposition d1 = ps.first();
  const SimpleDecomposition d2 = ps.second();
  const std::size_t m = ps.states.size();
  std::vector<Rat> numerators(m);
  Rat denominator(0);
  for (std::size_t s = 0; s < m; ++s) {
    numerators[s] =
        ps.mu[s] * d1.max_likelihood(s, signal_first) * d2.max_likelihood(s, signal_second);
    denominator += numerators[s];
  }
  if (denominator == 0) throw NullSignal("joint update on a null signal pair");
  for (auto& v : numerators) v /= denominator;
  return PosteriorSet({std::move(numerators)});
}

PosteriorSet sequential_update(const ProductStructure& ps, std::size_t signal_first,
                               std::size_t signal_second, bool first_set_first) {
  const SimpleDecomposition stage1 = first_set_first ? ps.first() : ps.second();
  const SimpleDecomposition stage2 = first_set_first ? ps.second() : ps.first();
  const std::size_t sig1 = first_set_first ? signal_first : signal_second;
  const std::size_t sig2 = first_set_first ? signal_second : signal_first;

  const PosteriorSet mid = cml_update_decomposed(stage1, sig1);
  SimpleDecomposition stage2_posterior(stage2.states(), stage2.signals(), mid.point(),
                                       stage2.interpretations());
  return cml_update_decomposed(stage2_posterior, sig2);
}

AccuracyModel::AccuracyModel(Rat H_in, Rat L_in, Rat alpha_in, Rat lambda_in, std::size_t state)
    : H(std::move(H_in)),
      L(std::move(L_in)),
      alpha(std::move(alpha_in)),
      lambda_true(std::move(lambda_in)),
      true_state(state) {
  if (!(L > 0 && H > L && H < 1)) throw ValidationError("accuracy levels need 0 < L < H < 1");
  if (H + L < 1) throw ValidationError("accuracy levels need H + L >= 1");
  if (!(alpha > 0 && alpha < 1)) throw ValidationError("prior weight must be interior");
  if (lambda_true < 0 || lambda_true > 1) throw ValidationError("true accuracy must lie in [0, 1]");
  if (true_state > 1) throw ValidationError("true state must be 0 or 1");
}

SimpleDecomposition AccuracyModel::decomposition() const {
  StateSpace states({"s1", "s2"});
  SignalSpace signals({"theta1", "theta2"});
  Kernel high{{{H, 1 - H}, {1 - H, H}}};
  Kernel low{{{L, 1 - L}, {1 - L, L}}};
  return SimpleDecomposition(std::move(states), std::move(signals), {alpha, 1 - alpha},
                             {std::move(high), std::move(low)});
}

Rat AccuracyModel::posterior_true(long long net_matched) const {
  // Posterior odds scale by (H / (1-L))^net_matched.
  const Rat prior_true = true_state == 0 ? alpha : 1 - alpha;
  const Rat ratio = likelihood_ratio();
  const auto magnitude = static_cast<unsigned long>(net_matched < 0 ? -net_matched : net_matched);
  Rat factor = rational_pow(ratio, magnitude);
  if (net_matched < 0) factor = 1 / factor;
  const Rat odds = prior_true / (1 - prior_true) * factor;
  return odds / (1 + odds);
}

UnderReaction check_under_reaction(const AccuracyModel& model) {
  UnderReaction result;
  if (model.H + model.L == 1) {
    result.no_update_boundary = true;
    return result;  // posteriors equal the prior under every signal
  }
  const Rat pooled = (model.H + model.L) / 2;
  result.under_reacts = model.likelihood_ratio() < pooled / (1 - pooled);
  return result;
}

LearningPath simulate_learning(const AccuracyModel& model, int horizon, std::uint64_t seed) {
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  LearningPath path;
  path.seed = seed;
  path.steps.reserve(static_cast<std::size_t>(horizon));
  SplitMix64 rng(seed);

  const double log_ratio = std::log(to_double(model.likelihood_ratio()));
  const Rat prior_true = model.true_state == 0 ? model.alpha : 1 - model.alpha;
  const double log_prior_odds = std::log(to_double(prior_true) / (1.0 - to_double(prior_true)));

  long long net = 0;
  for (int step = 0; step < horizon; ++step) {
    const bool matched = rng.bernoulli(model.lambda_true);
    net += matched ? 1 : -1;
    const int signal = matched ? static_cast<int>(model.true_state)
                               : static_cast<int>(1 - model.true_state);
    const double log_odds = log_prior_odds + static_cast<double>(net) * log_ratio;
    const double belief = 1.0 / (1.0 + std::exp(-log_odds));
    path.steps.push_back({signal, net, belief});
  }
  path.terminal_net_matched = net;
  path.terminal_belief_true = model.posterior_true(net);
  return path;
}

}  // namespace ambigine
