#include "ambigine/types.hpp"

#include <algorithm>
#include <set>

namespace ambigine {

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("label set must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("empty label");
    if (!seen.insert(l).second) throw ValidationError("duplicate label '" + l + "'");
  }
}

std::optional<std::size_t> LabelSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t LabelSet::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw UnknownLabel("unknown label '" + label + "'");
}

JointDistribution::JointDistribution(std::size_t states, std::size_t signals,
                                     std::vector<Rat> mass_row_major)
    : states_(states), signals_(signals), mass_(std::move(mass_row_major)) {
  if (states_ == 0 || signals_ == 0) throw ValidationError("empty distribution shape");
  if (mass_.size() != states_ * signals_) throw ShapeMismatch("joint mass size mismatch");
  Rat total(0);
  for (const auto& m : mass_) {
    if (m < 0) throw ValidationError("negative probability mass");
    total += m;
  }
  if (total != 1) throw ValidationError("joint mass must sum to 1, got " + format_rational(total));
}

Rat JointDistribution::state_marginal(std::size_t s) const {
  Rat total(0);
  for (std::size_t t = 0; t < signals_; ++t) total += mass(s, t);
  return total;
}

std::vector<Rat> JointDistribution::state_marginals() const {
  std::vector<Rat> out(states_);
  for (std::size_t s = 0; s < states_; ++s) out[s] = state_marginal(s);
  return out;
}

Rat JointDistribution::signal_mass(std::size_t t) const {
  Rat total(0);
  for (std::size_t s = 0; s < states_; ++s) total += mass(s, t);
  return total;
}

std::vector<Rat> JointDistribution::conditional_on_signal(std::size_t t) const {
  const Rat total = signal_mass(t);
  if (total == 0) throw NullSignal("conditioning on a zero-probability signal");
  std::vector<Rat> out(states_);
  for (std::size_t s = 0; s < states_; ++s) out[s] = mass(s, t) / total;
  return out;
}

ExtremePriorSet::ExtremePriorSet(StateSpace states, SignalSpace signals,
                                 std::vector<JointDistribution> extremes)
    : states_(std::move(states)), signals_(std::move(signals)), extremes_(std::move(extremes)) {
  if (extremes_.empty()) throw ValidationError("prior set needs at least one extreme point");
  for (const auto& e : extremes_) {
    if (e.state_count() != states_.size() || e.signal_count() != signals_.size()) {
      throw ShapeMismatch("extreme point shape does not match the spaces");
    }
  }
  const std::vector<Rat> first = extremes_.front().state_marginals();
  is_simple_ = std::all_of(extremes_.begin(), extremes_.end(), [&](const JointDistribution& e) {
    return e.state_marginals() == first;
  });
}

std::vector<Rat> ExtremePriorSet::state_prior() const {
  if (!is_simple_) throw NotSimple("prior set does not share a state marginal");
  return extremes_.front().state_marginals();
}

Rat ExtremePriorSet::max_cell_mass(std::size_t s, std::size_t t) const {
  Rat best = extremes_.front().mass(s, t);
  for (std::size_t i = 1; i < extremes_.size(); ++i) {
    best = std::max(best, extremes_[i].mass(s, t));
  }
  return best;
}

Rat ExtremePriorSet::max_signal_weight(std::size_t t) const {
  Rat total(0);
  for (std::size_t s = 0; s < states_.size(); ++s) total += max_cell_mass(s, t);
  return total;
}

SimpleDecomposition::SimpleDecomposition(StateSpace states, SignalSpace signals,
                                         std::vector<Rat> mu, std::vector<Kernel> interpretations)
    : states_(std::move(states)),
      signals_(std::move(signals)),
      mu_(std::move(mu)),
      interpretations_(std::move(interpretations)) {
  if (mu_.size() != states_.size()) throw ShapeMismatch("prior length does not match states");
  Rat total(0);
  for (const auto& p : mu_) {
    if (p < 0) throw ValidationError("negative prior mass");
    total += p;
  }
  if (total != 1) throw ValidationError("state prior must sum to 1");
  if (interpretations_.empty()) throw ValidationError("need at least one interpretation");
  for (const auto& kernel : interpretations_) {
    if (kernel.rows.size() != states_.size()) throw ShapeMismatch("kernel rows do not match states");
    for (const auto& row : kernel.rows) {
      if (row.size() != signals_.size()) throw ShapeMismatch("kernel row does not match signals");
      Rat row_total(0);
      for (const auto& c : row) {
        if (c < 0) throw ValidationError("negative kernel entry");
        row_total += c;
      }
      if (row_total != 1) throw ValidationError("kernel row must sum to 1");
    }
  }
}

Rat SimpleDecomposition::max_likelihood(std::size_t s, std::size_t t) const {
  Rat best = interpretations_.front().at(s, t);
  for (std::size_t i = 1; i < interpretations_.size(); ++i) {
    best = std::max(best, interpretations_[i].at(s, t));
  }
  return best;
}

ExtremePriorSet SimpleDecomposition::compose() const {
  std::vector<JointDistribution> extremes;
  extremes.reserve(interpretations_.size());
  const std::size_t m = states_.size();
  const std::size_t n = signals_.size();
  for (const auto& kernel : interpretations_) {
    std::vector<Rat> mass(m * n);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < n; ++t) mass[s * n + t] = mu_[s] * kernel.at(s, t);
    }
    extremes.emplace_back(m, n, std::move(mass));
  }
  return ExtremePriorSet(states_, signals_, std::move(extremes));
}

Act::Act(std::vector<Rat> payoff) : payoff_(std::move(payoff)) {
  if (payoff_.empty()) throw ValidationError("empty act");
}

ExtendedAct::ExtendedAct(std::size_t states, std::size_t signals, std::vector<Rat> payoff_row_major)
    : states_(states), signals_(signals), payoff_(std::move(payoff_row_major)) {
  if (states_ == 0 || signals_ == 0) throw ValidationError("empty extended act shape");
  if (payoff_.size() != states_ * signals_) throw ShapeMismatch("extended act size mismatch");
}

ExtendedAct ExtendedAct::constant(std::size_t states, std::size_t signals, const Rat& x) {
  return ExtendedAct(states, signals, std::vector<Rat>(states * signals, x));
}

ExtendedAct ExtendedAct::with_cell(std::size_t s, std::size_t t, const Rat& value) const {
  std::vector<Rat> copy = payoff_;
  copy.at(s * signals_ + t) = value;
  return ExtendedAct(states_, signals_, std::move(copy));
}

PosteriorSet::PosteriorSet(std::vector<std::vector<Rat>> extremes) : extremes_(std::move(extremes)) {
  if (extremes_.empty()) throw ValidationError("posterior set needs at least one point");
  const std::size_t dim = extremes_.front().size();
  if (dim == 0) throw ValidationError("empty posterior point");
  for (const auto& point : extremes_) {
    if (point.size() != dim) throw ShapeMismatch("posterior points have differing lengths");
    Rat total(0);
    for (const auto& p : point) {
      if (p < 0) throw ValidationError("negative posterior mass");
      total += p;
    }
    if (total != 1) throw ValidationError("posterior point must sum to 1");
  }
  std::sort(extremes_.begin(), extremes_.end());
  extremes_.erase(std::unique(extremes_.begin(), extremes_.end()), extremes_.end());
}

const std::vector<Rat>& PosteriorSet::point() const {
  if (!singleton()) throw PreconditionFailed("posterior set is not a singleton");
  return extremes_.front();
}

Rat PosteriorSet::min_mass_on(const std::vector<std::size_t>& states) const {
  Rat best(0);
  bool first = true;
  for (const auto& point : extremes_) {
    Rat mass(0);
    for (std::size_t s : states) mass += point.at(s);
    if (first || mass < best) {
      best = mass;
      first = false;
    }
  }
  return best;
}

}  // namespace ambigine
