#include "ambigine/design.hpp"

#include "ambigine/lp.hpp"

#include <algorithm>

namespace ambigine {

namespace {

Rat ideal_payoff(const PersuasionInstance& instance, const std::vector<std::size_t>& attainable) {
  Rat total(0);
  for (std::size_t s = 0; s < instance.states.size(); ++s) {
    Rat best = instance.v[s][attainable.front()];
    for (std::size_t a : attainable) best = std::max(best, instance.v[s][a]);
    total += instance.mu[s] * best;
  }
  return total;
}

std::vector<std::size_t> designer_argmax(const PersuasionInstance& instance,
                                         const std::vector<std::size_t>& attainable,
                                         std::size_t state) {
  Rat best = instance.v[state][attainable.front()];
  for (std::size_t a : attainable) best = std::max(best, instance.v[state][a]);
  std::vector<std::size_t> out;
  for (std::size_t a : attainable) {
    if (instance.v[state][a] == best) out.push_back(a);
  }
  return out;
}

}  // namespace

PersuasionInstance::PersuasionInstance(StateSpace states_in, std::vector<std::string> actions_in,
                                       std::vector<std::vector<Rat>> u_in,
                                       std::vector<std::vector<Rat>> v_in, std::vector<Rat> mu_in)
    : states(std::move(states_in)),
      actions(std::move(actions_in)),
      u(std::move(u_in)),
      v(std::move(v_in)),
      mu(std::move(mu_in)) {
  if (actions.empty()) throw ValidationError("need at least one action");
  if (u.size() != states.size() || v.size() != states.size()) {
    throw ShapeMismatch("payoff matrices do not match states");
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (u[s].size() != actions.size() || v[s].size() != actions.size()) {
      throw ShapeMismatch("payoff matrices do not match actions");
    }
  }
  if (mu.size() != states.size()) throw ShapeMismatch("prior length does not match states");
  Rat total(0);
  for (const auto& p : mu) {
    if (p <= 0) throw ValidationError("common prior must be strictly interior");
    total += p;
  }
  if (total != 1) throw ValidationError("common prior must sum to 1");
}

std::vector<std::size_t> best_responses(const PersuasionInstance& instance,
                                        const std::vector<Rat>& belief) {
  if (belief.size() != instance.states.size()) throw ShapeMismatch("belief length mismatch");
  std::vector<Rat> value(instance.actions.size(), Rat(0));
  for (std::size_t a = 0; a < instance.actions.size(); ++a) {
    for (std::size_t s = 0; s < instance.states.size(); ++s) {
      value[a] += belief[s] * instance.u[s][a];
    }
  }
  const Rat best = *std::max_element(value.begin(), value.end());
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < instance.actions.size(); ++a) {
    if (value[a] == best) out.push_back(a);
  }
  return out;
}

AttainableActions attainable_actions(const PersuasionInstance& instance) {
  const std::size_t m = instance.states.size();
  const std::size_t k = instance.actions.size();
  AttainableActions result;
  result.witness.assign(k, std::nullopt);

  for (std::size_t a = 0; a < k; ++a) {
    // Variables: belief coordinates then the floor t; maximize t subject to
    // the belief lying on the simplex inside action a's best-response region.
    std::vector<lp::Constraint> constraints;
    lp::Constraint simplex;
    simplex.coeffs.assign(m + 1, Rat(0));
    for (std::size_t s = 0; s < m; ++s) simplex.coeffs[s] = 1;
    simplex.sense = lp::Sense::Eq;
    simplex.rhs = 1;
    constraints.push_back(std::move(simplex));
    for (std::size_t other = 0; other < k; ++other) {
      if (other == a) continue;
      lp::Constraint dominance;
      dominance.coeffs.assign(m + 1, Rat(0));
      for (std::size_t s = 0; s < m; ++s) {
        dominance.coeffs[s] = instance.u[s][a] - instance.u[s][other];
      }
      dominance.sense = lp::Sense::Ge;
      dominance.rhs = 0;
      constraints.push_back(std::move(dominance));
    }
    for (std::size_t s = 0; s < m; ++s) {
      lp::Constraint floor;
      floor.coeffs.assign(m + 1, Rat(0));
      floor.coeffs[s] = 1;
      floor.coeffs[m] = -1;
      floor.sense = lp::Sense::Ge;
      floor.rhs = 0;
      constraints.push_back(std::move(floor));
    }
    std::vector<Rat> objective(m + 1, Rat(0));
    objective[m] = 1;

    const lp::Result solved = lp::maximize(constraints, objective);
    if (solved.status != lp::Status::Optimal) continue;  // region empty
    result.attainable.push_back(a);
    if (solved.objective > 0) {
      result.witness[a] = std::vector<Rat>(solved.x.begin(), solved.x.begin() + m);
    } else {
      result.boundary_only.push_back(a);
    }
  }
  if (result.attainable.empty()) throw Error("no attainable action");  // impossible: argmax exists
  return result;
}

DesignCertificate verify_block(const PersuasionInstance& instance, const BlockStructure& block) {
  const std::size_t m = instance.states.size();
  if (block.state_count != m) throw ShapeMismatch("block state count mismatch");
  if (block.copies < 2) throw NotImplementable("need at least two signal copies per group");
  if (block.lam.size() != m || block.r.size() != m || block.targets.size() != m ||
      block.group_action.size() != m) {
    throw ShapeMismatch("block arrays must have one entry per state");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!(block.r[j] > 0 && block.r[j] < 1)) throw NotImplementable("r out of (0,1)");
    if (block.lam[j].size() != m) throw ShapeMismatch("lambda width mismatch");
    for (const auto& value : block.lam[j]) {
      if (!(value > 0 && value < 1)) throw NotImplementable("lambda out of (0,1)");
    }
    if (block.group_action[j] >= instance.actions.size()) throw ShapeMismatch("action index");
  }

  // Targets must be what the ratio-matched lambdas induce through the prior.
  for (std::size_t j = 0; j < m; ++j) {
    Rat denom(0);
    for (std::size_t s = 0; s < m; ++s) denom += instance.mu[s] * block.lam[j][s];
    for (std::size_t s = 0; s < m; ++s) {
      if (block.targets[j][s] * denom != instance.mu[s] * block.lam[j][s]) {
        throw NotImplementable("targets are not proportional to mu * lambda");
      }
    }
  }

  // Diagonal dominance: at every signal the conditional maximum over systems
  // is attained uniquely by the signal's own system.
  for (std::size_t j = 0; j < m; ++j) {
    if (!(block.diag(j, j) > block.same_state_offdiag(j))) {
      throw NotImplementable("dominance fails against same-group systems");
    }
    for (std::size_t other = 0; other < m; ++other) {
      if (other == j) continue;
      if (!(block.diag(j, j) > block.cross_state(other, j))) {
        throw NotImplementable("dominance fails against cross-group systems");
      }
    }
  }

  // Condition 1: the planned action is a best response to the CML posterior.
  for (std::size_t j = 0; j < m; ++j) {
    const auto br = best_responses(instance, block.targets[j]);
    if (std::find(br.begin(), br.end(), block.group_action[j]) == br.end()) {
      throw NotImplementable("planned action is not a best response at group " +
                             std::to_string(j));
    }
  }

  // Condition 2: the designer's expected payoff is the same under every
  // system. Under a group-j system, state s sends the diagonal signal with
  // probability r_j lam_j(s) (action a_j) and otherwise lands in state s's own
  // group (action a_s).
  DesignCertificate certificate;
  certificate.structure = block;
  certificate.payoff_per_system.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Rat payoff(0);
    for (std::size_t s = 0; s < m; ++s) {
      const Rat p = block.diag(j, s);
      payoff += instance.mu[s] *
                (p * instance.v[s][block.group_action[j]] +
                 (1 - p) * instance.v[s][block.group_action[s]]);
    }
    certificate.payoff_per_system.push_back(payoff);
  }
  for (std::size_t j = 1; j < m; ++j) {
    if (certificate.payoff_per_system[j] != certificate.payoff_per_system[0]) {
      throw NotImplementable("systems yield different designer payoffs");
    }
  }
  certificate.v_star = certificate.payoff_per_system.front();
  certificate.l_star = certificate.v_star;
  certificate.ideal = ideal_payoff(instance, attainable_actions(instance).attainable);
  return certificate;
}

DesignCertificate construct_with(const PersuasionInstance& instance,
                                 const std::vector<std::vector<Rat>>& targets,
                                 const std::vector<std::size_t>& group_actions,
                                 const std::vector<Rat>& r, long long copies) {
  const std::size_t m = instance.states.size();
  if (targets.size() != m || group_actions.size() != m || r.size() != m) {
    throw ShapeMismatch("need one target, action and r per state");
  }
  BlockStructure block;
  block.state_count = m;
  block.copies = copies;
  block.targets = targets;
  block.group_action = group_actions;
  block.r = r;
  block.lam.assign(m, std::vector<Rat>(m));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rat> ratio(m);
    Rat top(0);
    for (std::size_t s = 0; s < m; ++s) {
      if (!(targets[j][s] > 0)) throw DegenerateTargets("target beliefs must be interior");
      ratio[s] = targets[j][s] / instance.mu[s];
      top = std::max(top, ratio[s]);
    }
    // Scale so the largest entry is 1/2; any (0,1) scaling preserving the
    // ratios would do.
    for (std::size_t s = 0; s < m; ++s) block.lam[j][s] = ratio[s] / (2 * top);
  }
  return verify_block(instance, block);
}

DesignCertificate construct_epsilon(const PersuasionInstance& instance, const Rat& epsilon,
                                    const std::optional<std::vector<std::vector<Rat>>>& targets) {
  if (epsilon <= 0) throw ValidationError("epsilon must be positive");
  const std::size_t m = instance.states.size();
  const AttainableActions attainable = attainable_actions(instance);
  if (!attainable.boundary_only.empty()) {
    std::string names;
    for (std::size_t a : attainable.boundary_only) {
      if (!names.empty()) names += ", ";
      names += instance.actions[a];
    }
    throw AssumptionFailed("attainable actions without interior best-response beliefs: " + names);
  }

  // Designer-optimal action per state; share one if possible.
  std::vector<std::size_t> group_actions(m);
  std::vector<std::size_t> common = designer_argmax(instance, attainable.attainable, 0);
  for (std::size_t s = 1; s < m && !common.empty(); ++s) {
    const auto here = designer_argmax(instance, attainable.attainable, s);
    std::vector<std::size_t> kept;
    for (std::size_t a : common) {
      if (std::find(here.begin(), here.end(), a) != here.end()) kept.push_back(a);
    }
    common = std::move(kept);
  }
  const bool common_optimum = !common.empty();
  for (std::size_t s = 0; s < m; ++s) {
    group_actions[s] = common_optimum ? common.front() : designer_argmax(instance, attainable.attainable, s).front();
  }

  std::vector<std::vector<Rat>> chosen_targets(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (targets) {
      chosen_targets[s] = targets->at(s);
      const auto br = best_responses(instance, chosen_targets[s]);
      const bool supports =
          std::find(br.begin(), br.end(), group_actions[s]) != br.end();
      bool interior = true;
      for (const auto& p : chosen_targets[s]) interior = interior && p > 0;
      if (!supports || !interior) {
        throw DegenerateTargets("target for state " + instance.states.label(s) +
                                " is not an interior best-response belief");
      }
    } else {
      chosen_targets[s] = *attainable.witness[group_actions[s]];
    }
  }

  // lambda vectors, ratio-matched to the targets and scaled to max 1/2.
  std::vector<std::vector<Rat>> lam(m, std::vector<Rat>(m));
  for (std::size_t j = 0; j < m; ++j) {
    Rat top(0);
    for (std::size_t s = 0; s < m; ++s) top = std::max(top, chosen_targets[j][s] / instance.mu[s]);
    for (std::size_t s = 0; s < m; ++s) {
      lam[j][s] = chosen_targets[j][s] / instance.mu[s] / (2 * top);
    }
  }

  // Expected payoff of a group-j system is A + r_j * slope_j with A the ideal.
  std::vector<Rat> slope(m, Rat(0));
  bool any_negative = false;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < m; ++s) {
      slope[j] += instance.mu[s] * lam[j][s] *
                  (instance.v[s][group_actions[j]] - instance.v[s][group_actions[s]]);
    }
    if (slope[j] > 0) throw Error("positive payoff slope; group action is not state-optimal");
    any_negative = any_negative || slope[j] < 0;
  }

  std::vector<Rat> r(m, Rat(1, 2));
  Rat level_drop(0);
  if (any_negative) {
    for (std::size_t j = 0; j < m; ++j) {
      if (slope[j] == 0) {
        // Structurally unreachable when group actions come from the designer
        // argmax; a zero slope forces a common optimal action.
        throw Error("mixed zero and negative payoff slopes");
      }
    }
    level_drop = epsilon / 2;
    for (;;) {
      bool fits = true;
      for (std::size_t j = 0; j < m; ++j) {
        r[j] = level_drop / (-slope[j]);
        fits = fits && r[j] < 1;
      }
      if (fits) break;
      level_drop /= 2;
    }
  }

  Rat min_diag;
  Rat max_rest;
  bool first_entry = true;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < m; ++s) {
      const Rat d = r[j] * lam[j][s];
      if (first_entry || d < min_diag) min_diag = d;
      if (first_entry || 1 - d > max_rest) max_rest = 1 - d;
      first_entry = false;
    }
  }
  const Rat quotient = max_rest / min_diag;
  long long copies = quotient.convert_to<long long>() + 2;  // smallest N with N-1 > quotient

  DesignCertificate certificate = construct_with(instance, chosen_targets, group_actions, r, copies);
  certificate.common_optimum = common_optimum;
  return certificate;
}

DenseStructure::DenseStructure(SignalSpace signals_in, std::vector<Kernel> systems_in,
                               std::size_t state_count)
    : signals(std::move(signals_in)), systems(std::move(systems_in)) {
  if (systems.empty()) throw ValidationError("need at least one signal generating system");
  for (const auto& system : systems) {
    if (system.rows.size() != state_count) throw ShapeMismatch("system rows do not match states");
    for (const auto& row : system.rows) {
      if (row.size() != signals.size()) throw ShapeMismatch("system row does not match signals");
      Rat total(0);
      for (const auto& c : row) {
        if (c < 0) throw ValidationError("negative kernel entry");
        total += c;
      }
      if (total != 1) throw ValidationError("system row must sum to 1");
    }
  }
  for (std::size_t t = 0; t < signals.size(); ++t) {
    bool positive = false;
    for (const auto& system : systems) {
      for (std::size_t s = 0; s < state_count && !positive; ++s) positive = system.at(s, t) > 0;
    }
    if (!positive) throw ValidationError("signal '" + signals.label(t) + "' is unreachable");
  }
}

DenseVerification verify_implementable(const PersuasionInstance& instance,
                                       const DenseStructure& structure,
                                       const std::vector<std::size_t>& action_at_signal) {
  const std::size_t m = instance.states.size();
  const std::size_t n = structure.signals.size();
  if (action_at_signal.size() != n) throw ShapeMismatch("one action per signal required");

  DenseVerification result;
  result.posteriors.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Rat> weight(m);
    Rat denom(0);
    for (std::size_t s = 0; s < m; ++s) {
      Rat best(0);
      for (const auto& system : structure.systems) best = std::max(best, system.at(s, t));
      weight[s] = instance.mu[s] * best;
      denom += weight[s];
    }
    if (denom == 0) throw NullSignal("structure leaves a signal unreachable");
    for (auto& w : weight) w /= denom;
    const auto br = best_responses(instance, weight);
    if (std::find(br.begin(), br.end(), action_at_signal[t]) == br.end()) {
      throw NotImplementable("action at signal '" + structure.signals.label(t) +
                             "' is not a best response");
    }
    result.posteriors.push_back(std::move(weight));
  }

  result.payoff_per_system.reserve(structure.systems.size());
  for (const auto& system : structure.systems) {
    Rat payoff(0);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (system.at(s, t) != 0) {
          payoff += instance.mu[s] * system.at(s, t) * instance.v[s][action_at_signal[t]];
        }
      }
    }
    result.payoff_per_system.push_back(payoff);
  }
  for (std::size_t i = 1; i < result.payoff_per_system.size(); ++i) {
    if (result.payoff_per_system[i] != result.payoff_per_system[0]) {
      throw NotImplementable("systems yield different designer payoffs");
    }
  }
  result.v_star = result.payoff_per_system.front();
  result.ideal = ideal_payoff(instance, attainable_actions(instance).attainable);
  return result;
}

DenseStructure materialize(const BlockStructure& block, const PersuasionInstance& instance,
                           std::size_t max_signals) {
  const std::size_t m = block.state_count;
  const auto n_ll = static_cast<long long>(m) * block.copies;
  if (n_ll <= 0 || static_cast<std::size_t>(n_ll) > max_signals) {
    throw ValidationError("block too large to tabulate");
  }
  const auto copies = static_cast<std::size_t>(block.copies);
  const std::size_t n = m * copies;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < copies; ++l) {
      labels.push_back("theta_" + std::to_string(j + 1) + "_" + std::to_string(l + 1));
    }
  }
  std::vector<Kernel> systems;
  systems.reserve(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < copies; ++l) {
      Kernel kernel;
      kernel.rows.assign(m, std::vector<Rat>(n, Rat(0)));
      for (std::size_t s = 0; s < m; ++s) {
        kernel.rows[s][j * copies + l] = block.diag(j, s);
        if (s == j) {
          for (std::size_t other = 0; other < copies; ++other) {
            if (other != l) kernel.rows[s][j * copies + other] = block.same_state_offdiag(j);
          }
        } else {
          for (std::size_t other = 0; other < copies; ++other) {
            kernel.rows[s][s * copies + other] += block.cross_state(j, s);
          }
        }
      }
      systems.push_back(std::move(kernel));
    }
  }
  (void)instance;
  return DenseStructure(SignalSpace(std::move(labels)), std::move(systems), m);
}

}  // namespace ambigine
