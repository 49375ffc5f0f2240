#pragma once

#include "ambigine/types.hpp"
#include "ambigine/update.hpp"

#include <cstdint>
#include <vector>

namespace ambigine {

// Two independent signal sets over a shared state prior; the product
// interpretation family multiplies kernels componentwise.
struct ProductStructure {
  StateSpace states;
  std::vector<Rat> mu;
  SignalSpace signals_first;
  std::vector<Kernel> kernels_first;
  SignalSpace signals_second;
  std::vector<Kernel> kernels_second;

  ProductStructure(StateSpace states, std::vector<Rat> mu, SignalSpace signals_first,
                   std::vector<Kernel> kernels_first, SignalSpace signals_second,
                   std::vector<Kernel> kernels_second);

  SimpleDecomposition first() const;
  SimpleDecomposition second() const;
  // Fully materialized product decomposition over Theta x Theta' and T x T'.
  SimpleDecomposition product() const;
};

// Simultaneous arrival: likelihoods factor into per-set conditional maxima.
PosteriorSet joint_update(const ProductStructure& ps, std::size_t signal_first,
                          std::size_t signal_second);

// Two single-signal updates, in either order.
PosteriorSet sequential_update(const ProductStructure& ps, std::size_t signal_first,
                               std::size_t signal_second, bool first_set_first);

// Binary states/signals with two accuracy interpretations H and L.
struct AccuracyModel {
  Rat H;
  Rat L;
  Rat alpha;        // prior weight on the first state
  Rat lambda_true;  // accuracy of the true generating process
  std::size_t true_state = 0;

  AccuracyModel(Rat H, Rat L, Rat alpha, Rat lambda_true, std::size_t true_state);

  SimpleDecomposition decomposition() const;
  Rat likelihood_ratio() const { return H / (1 - L); }
  Rat perceived_accuracy() const { return H / (H + 1 - L); }
  // Exact posterior weight on the true state after net_matched more matched
  // than mismatched signals.
  Rat posterior_true(long long net_matched) const;
};

struct UnderReaction {
  bool under_reacts = false;
  bool no_update_boundary = false;  // H + L = 1: posteriors never move
};

UnderReaction check_under_reaction(const AccuracyModel& model);

struct LearningStep {
  int signal = 0;               // 0 or 1
  long long net_matched = 0;    // matched minus mismatched so far
  double belief_true = 0.0;
};

struct LearningPath {
  std::uint64_t seed = 0;
  std::vector<LearningStep> steps;
  long long terminal_net_matched = 0;
  Rat terminal_belief_true;
};

LearningPath simulate_learning(const AccuracyModel& model, int horizon, std::uint64_t seed);

}  // namespace ambigine
