#include "ambigine/update.hpp"

#include <algorithm>
#include <cmath>

namespace ambigine {

UpdateRule UpdateRule::parse(const std::string& text) {
  if (text == "cml") return {Kind::Cml, Rat(0)};
  if (text == "fb") return {Kind::Fb, Rat(0)};
  if (text == "ml") return {Kind::Ml, Rat(0)};
  if (text == "proxy") return {Kind::Proxy, Rat(0)};
  if (text == "blend") return {Kind::BlendCmlFb, Rat(0)};
  if (text.rfind("power:", 0) == 0) {
    const Rat lambda = parse_rational(text.substr(6));
    if (lambda <= 0 || lambda > 1) throw ValidationError("power exponent must be in (0, 1]");
    return {Kind::Power, lambda};
  }
  throw ValidationError("unknown rule '" + text + "'");
}

std::string UpdateRule::name() const {
  switch (kind) {
    case Kind::Cml: return "cml";
    case Kind::Fb: return "fb";
    case Kind::Ml: return "ml";
    case Kind::Proxy: return "proxy";
    case Kind::BlendCmlFb: return "blend";
    case Kind::Power: return "power:" + format_rational(lambda);
  }
  return "?";
}

PosteriorSet cml_update(const ExtremePriorSet& prior, std::size_t signal) {
  if (signal >= prior.signals().size()) throw UnknownLabel("signal index out of range");
  if (!prior.is_simple()) throw NotSimple("CML requires a simple prior set");
  const std::size_t m = prior.states().size();
  std::vector<Rat> numerators(m);
  Rat denominator(0);
  for (std::size_t s = 0; s < m; ++s) {
    numerators[s] = prior.max_cell_mass(s, signal);
    denominator += numerators[s];
  }
  if (denominator == 0) throw NullSignal("CML update on a null signal");
  for (auto& v : numerators) v /= denominator;
  return PosteriorSet({std::move(numerators)});
}

PosteriorSet cml_update_decomposed(const SimpleDecomposition& decomposition, std::size_t signal) {
  if (signal >= decomposition.signals().size()) throw UnknownLabel("signal index out of range");
  const std::size_t m = decomposition.states().size();
  std::vector<Rat> numerators(m);
  Rat denominator(0);
  for (std::size_t s = 0; s < m; ++s) {
    numerators[s] = decomposition.mu()[s] * decomposition.max_likelihood(s, signal);
    denominator += numerators[s];
  }
  if (denominator == 0) throw NullSignal("CML update on a null signal");
  for (auto& v : numerators) v /= denominator;
  return PosteriorSet({std::move(numerators)});
}

PosteriorSet fb_update(const ExtremePriorSet& prior, std::size_t signal) {
  if (signal >= prior.signals().size()) throw UnknownLabel("signal index out of range");
  std::vector<std::vector<Rat>> extremes;
  for (const auto& e : prior.extremes()) {
    if (e.signal_mass(signal) > 0) extremes.push_back(e.conditional_on_signal(signal));
  }
  if (extremes.empty()) throw NullSignal("FB update on a null signal");
  return PosteriorSet(std::move(extremes));
}

PosteriorSet ml_update(const ExtremePriorSet& prior, std::size_t signal) {
  if (signal >= prior.signals().size()) throw UnknownLabel("signal index out of range");
  Rat best(0);
  for (const auto& e : prior.extremes()) best = std::max(best, e.signal_mass(signal));
  if (best == 0) throw NullSignal("ML update on a null signal");
  std::vector<std::vector<Rat>> extremes;
  for (const auto& e : prior.extremes()) {
    if (e.signal_mass(signal) == best) extremes.push_back(e.conditional_on_signal(signal));
  }
  return PosteriorSet(std::move(extremes));
}

PosteriorSet blend_cml_fb_update(const ExtremePriorSet& prior, std::size_t signal) {
  const PosteriorSet cml = cml_update(prior, signal);  // enforces simple + non-null
  const Rat weight = prior.max_signal_weight(signal);
  if (weight > 1) {
    // For simple sets the weight is bounded by sum_s mu(s) = 1.
    throw Error("blend weight exceeds 1 on a simple prior set");
  }
  if (weight == 1) return cml;
  const PosteriorSet fb = fb_update(prior, signal);
  const auto& center = cml.point();
  std::vector<std::vector<Rat>> extremes;
  extremes.reserve(fb.extremes().size());
  for (const auto& q : fb.extremes()) {
    std::vector<Rat> mixed(center.size());
    for (std::size_t s = 0; s < center.size(); ++s) {
      mixed[s] = weight * center[s] + (1 - weight) * q[s];
    }
    extremes.push_back(std::move(mixed));
  }
  return PosteriorSet(std::move(extremes));
}

PosteriorSet power_update(const SimpleDecomposition& decomposition, std::size_t signal,
                          const Rat& lambda) {
  if (signal >= decomposition.signals().size()) throw UnknownLabel("signal index out of range");
  if (lambda <= 0 || lambda > 1) throw ValidationError("power exponent must be in (0, 1]");
  const std::size_t m = decomposition.states().size();
  const double exponent = to_double(lambda);
  std::vector<double> numerators(m);
  double denominator = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    const double mu = to_double(decomposition.mu()[s]);
    const double likelihood = to_double(decomposition.max_likelihood(s, signal));
    numerators[s] = likelihood > 0 ? mu * std::pow(likelihood, exponent) : 0.0;
    denominator += numerators[s];
  }
  if (denominator <= 0.0) throw NullSignal("power update on a null signal");
  std::vector<Rat> point(m);
  for (std::size_t s = 0; s < m; ++s) point[s] = rational_from_double(numerators[s] / denominator);
  // Force an exact probability vector; the slack lands on the largest entry.
  Rat total(0);
  for (const auto& v : point) total += v;
  std::size_t top = 0;
  for (std::size_t s = 1; s < m; ++s) {
    if (point[s] > point[top]) top = s;
  }
  point[top] += 1 - total;
  return PosteriorSet({std::move(point)});
}

AmbiguousPrior::AmbiguousPrior(ExtremePriorSet prior) : prior_(std::move(prior)) {}
AmbiguousPrior::AmbiguousPrior(MobiusBelief belief) : belief_(std::move(belief)) {}

const StateSpace& AmbiguousPrior::states() const {
  return belief_ ? belief_->states() : prior_->states();
}

const SignalSpace& AmbiguousPrior::signals() const {
  return belief_ ? belief_->signals() : prior_->signals();
}

const MobiusBelief& AmbiguousPrior::belief() const {
  if (!belief_) throw InvalidMobius("this prior has no Moebius representation");
  return *belief_;
}

const ExtremePriorSet& AmbiguousPrior::prior_set() const {
  if (!prior_) prior_ = belief_->to_prior_set();
  return *prior_;
}

const SimpleDecomposition& AmbiguousPrior::decomposition() const {
  if (!decomposition_) decomposition_ = decompose(prior_set());
  return *decomposition_;
}

Rat AmbiguousPrior::evaluate(const ExtendedAct& act) const {
  if (belief_) return belief_->choquet(act);
  return evaluate_extended(*prior_, act);
}

std::vector<std::size_t> AmbiguousPrior::non_null() const { return non_null_signals(prior_set()); }

PosteriorSet AmbiguousPrior::update(const UpdateRule& rule, std::size_t signal) const {
  switch (rule.kind) {
    case UpdateRule::Kind::Cml: return cml_update(prior_set(), signal);
    case UpdateRule::Kind::Fb: return fb_update(prior_set(), signal);
    case UpdateRule::Kind::Ml: return ml_update(prior_set(), signal);
    case UpdateRule::Kind::Proxy: return proxy_update_full(belief(), signal).posterior;
    case UpdateRule::Kind::BlendCmlFb: return blend_cml_fb_update(prior_set(), signal);
    case UpdateRule::Kind::Power: return power_update(decomposition(), signal, rule.lambda);
  }
  throw Error("unreachable");
}

}  // namespace ambigine
