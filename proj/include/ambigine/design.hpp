#pragma once

#include "ambigine/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ambigine {

struct PersuasionInstance {
  StateSpace states;
  std::vector<std::string> actions;
  std::vector<std::vector<Rat>> u;  // agent payoffs   [state][action]
  std::vector<std::vector<Rat>> v;  // designer payoffs [state][action]
  std::vector<Rat> mu;              // common prior, strictly interior

  PersuasionInstance(StateSpace states, std::vector<std::string> actions,
                     std::vector<std::vector<Rat>> u, std::vector<std::vector<Rat>> v,
                     std::vector<Rat> mu);
};

// Exact argmax set of the agent's expected utility.
std::vector<std::size_t> best_responses(const PersuasionInstance& instance,
                                        const std::vector<Rat>& belief);

struct AttainableActions {
  std::vector<std::size_t> attainable;  // A*
  // Per action: the belief maximizing the minimum simplex coordinate over the
  // action's best-response polytope; absent if the action is unattainable.
  std::vector<std::optional<std::vector<Rat>>> witness;
  std::vector<std::size_t> boundary_only;  // attainable without interior witness
};

AttainableActions attainable_actions(const PersuasionInstance& instance);

// m*N signals theta_{j,l} and m*N systems c^{j,l} in closed form:
//   c^{j,l}(theta_{j,l} | s)        = r_j * lam_j(s)            for every s
//   c^{j,l}(theta_{j,l'} | s_j)     = (1 - r_j lam_j(s_j))/(N-1) for l' != l
//   c^{j,l}(theta_{j',l'} | s_{j'}) = (1 - r_j lam_j(s_{j'}))/N  for j' != j, all l'
//   zero otherwise.
// Rows sum to one identically; the diagonal dominance condition makes the
// CML posterior at every group-j signal equal to targets[j].
struct BlockStructure {
  std::size_t state_count = 0;
  long long copies = 0;  // N
  std::vector<std::vector<Rat>> lam;      // [group][state], entries in (0,1)
  std::vector<Rat> r;                     // [group], entries in (0,1)
  std::vector<std::vector<Rat>> targets;  // [group] -> posterior over states
  std::vector<std::size_t> group_action;  // [group] -> action index

  Rat diag(std::size_t j, std::size_t s) const { return r.at(j) * lam.at(j).at(s); }
  Rat same_state_offdiag(std::size_t j) const {
    return (1 - diag(j, j)) / Rat(copies - 1);
  }
  Rat cross_state(std::size_t j, std::size_t s) const { return (1 - diag(j, s)) / Rat(copies); }

  // Probability that the agent takes the state's own group action,
  // conditional on the state, under any group-j system.
  Rat own_action_rate(std::size_t j, std::size_t s) const {
    return s == j ? Rat(1) : 1 - diag(j, s);
  }
};

struct DesignCertificate {
  BlockStructure structure;
  std::vector<Rat> payoff_per_system;  // by group; equal across groups
  Rat v_star;
  Rat ideal;
  Rat l_star;
  bool common_optimum = false;  // one action is designer-optimal at every state
};

// Checks diagonal dominance, target consistency, best responses and exact
// payoff equality across systems; evaluates everything in closed form.
DesignCertificate verify_block(const PersuasionInstance& instance, const BlockStructure& block);

// Theorem-style construction: designer-optimal action and interior target per
// state, ratio-matched lambda scaled to max 1/2, indifference levels solved in
// rationals, N from the dominance condition.
DesignCertificate construct_epsilon(const PersuasionInstance& instance, const Rat& epsilon,
                                    const std::optional<std::vector<std::vector<Rat>>>& targets);

// Assembles and verifies a block with caller-chosen r and N.
DesignCertificate construct_with(const PersuasionInstance& instance,
                                 const std::vector<std::vector<Rat>>& targets,
                                 const std::vector<std::size_t>& group_actions,
                                 const std::vector<Rat>& r, long long copies);

// Explicitly tabulated ambiguous information structure.
struct DenseStructure {
  SignalSpace signals;
  std::vector<Kernel> systems;

  DenseStructure(SignalSpace signals, std::vector<Kernel> systems, std::size_t state_count);
};

struct DenseVerification {
  std::vector<std::vector<Rat>> posteriors;  // CML posterior per signal
  std::vector<Rat> payoff_per_system;
  Rat v_star;
  Rat ideal;
};

DenseVerification verify_implementable(const PersuasionInstance& instance,
                                       const DenseStructure& structure,
                                       const std::vector<std::size_t>& action_at_signal);

// Tabulates a block structure; intended for small N in tests.
DenseStructure materialize(const BlockStructure& block, const PersuasionInstance& instance,
                           std::size_t max_signals = 4096);

}  // namespace ambigine
