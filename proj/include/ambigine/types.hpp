#pragma once

#include "ambigine/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambigine {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct NullSignal : Error { using Error::Error; };
struct InvalidMobius : Error { using Error::Error; };
struct MalformedPair : Error { using Error::Error; };
struct ColumnsDiffer : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct NotRationalizable : Error { using Error::Error; };
struct AssumptionFailed : Error { using Error::Error; };
struct NotImplementable : Error { using Error::Error; };
struct DegenerateTargets : Error { using Error::Error; };

// Ordered list of distinct identifiers.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel

  bool operator==(const LabelSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<std::string> labels) : ids_(std::move(labels)) {}
  std::size_t size() const { return ids_.size(); }
  const std::string& label(std::size_t i) const { return ids_.label(i); }
  const std::vector<std::string>& labels() const { return ids_.labels(); }
  std::size_t index_of(const std::string& label) const { return ids_.index_of(label); }
  std::optional<std::size_t> find(const std::string& label) const { return ids_.find(label); }
  bool operator==(const StateSpace&) const = default;

 private:
  LabelSet ids_;
};

class SignalSpace {
 public:
  SignalSpace() = default;
  explicit SignalSpace(std::vector<std::string> labels) : ids_(std::move(labels)) {}
  std::size_t size() const { return ids_.size(); }
  const std::string& label(std::size_t i) const { return ids_.label(i); }
  const std::vector<std::string>& labels() const { return ids_.labels(); }
  std::size_t index_of(const std::string& label) const { return ids_.index_of(label); }
  std::optional<std::size_t> find(const std::string& label) const { return ids_.find(label); }
  bool operator==(const SignalSpace&) const = default;

 private:
  LabelSet ids_;
};

// Joint distribution over states x signals; entries nonnegative and summing to one.
class JointDistribution {
 public:
  JointDistribution(std::size_t states, std::size_t signals, std::vector<Rat> mass_row_major);

  std::size_t state_count() const { return states_; }
  std::size_t signal_count() const { return signals_; }
  const Rat& mass(std::size_t s, std::size_t t) const { return mass_[s * signals_ + t]; }
  const std::vector<Rat>& flat() const { return mass_; }

  Rat state_marginal(std::size_t s) const;
  std::vector<Rat> state_marginals() const;
  Rat signal_mass(std::size_t t) const;  // p(S x theta)
  std::vector<Rat> conditional_on_signal(std::size_t t) const;  // throws NullSignal

  bool operator==(const JointDistribution&) const = default;

 private:
  std::size_t states_ = 0;
  std::size_t signals_ = 0;
  std::vector<Rat> mass_;
};

// Finitely generated prior set over states x signals; the convex hull is implicit.
class ExtremePriorSet {
 public:
  ExtremePriorSet(StateSpace states, SignalSpace signals, std::vector<JointDistribution> extremes);

  const StateSpace& states() const { return states_; }
  const SignalSpace& signals() const { return signals_; }
  const std::vector<JointDistribution>& extremes() const { return extremes_; }
  bool is_simple() const { return is_simple_; }

  std::vector<Rat> state_prior() const;  // throws NotSimple
  Rat max_cell_mass(std::size_t s, std::size_t t) const;
  Rat max_signal_weight(std::size_t t) const;  // sum_s max_e p(s, theta)

 private:
  StateSpace states_;
  SignalSpace signals_;
  std::vector<JointDistribution> extremes_;
  bool is_simple_ = false;
};

// One interpretation: a conditional distribution over signals per state.
struct Kernel {
  std::vector<std::vector<Rat>> rows;  // [state][signal], each row sums to one

  const Rat& at(std::size_t s, std::size_t t) const { return rows.at(s).at(t); }
};

// A simple prior set written as (mu, {c^t}).
class SimpleDecomposition {
 public:
  SimpleDecomposition(StateSpace states, SignalSpace signals, std::vector<Rat> mu,
                      std::vector<Kernel> interpretations);

  const StateSpace& states() const { return states_; }
  const SignalSpace& signals() const { return signals_; }
  const std::vector<Rat>& mu() const { return mu_; }
  const std::vector<Kernel>& interpretations() const { return interpretations_; }

  Rat max_likelihood(std::size_t s, std::size_t t) const;  // max over interpretations
  ExtremePriorSet compose() const;

 private:
  StateSpace states_;
  SignalSpace signals_;
  std::vector<Rat> mu_;
  std::vector<Kernel> interpretations_;
};

class Act {
 public:
  explicit Act(std::vector<Rat> payoff);
  std::size_t size() const { return payoff_.size(); }
  const Rat& payoff(std::size_t s) const { return payoff_.at(s); }
  const std::vector<Rat>& values() const { return payoff_; }
  bool operator==(const Act&) const = default;

 private:
  std::vector<Rat> payoff_;
};

class ExtendedAct {
 public:
  ExtendedAct(std::size_t states, std::size_t signals, std::vector<Rat> payoff_row_major);
  static ExtendedAct constant(std::size_t states, std::size_t signals, const Rat& x);

  std::size_t state_count() const { return states_; }
  std::size_t signal_count() const { return signals_; }
  const Rat& payoff(std::size_t s, std::size_t t) const { return payoff_[s * signals_ + t]; }
  const std::vector<Rat>& flat() const { return payoff_; }
  ExtendedAct with_cell(std::size_t s, std::size_t t, const Rat& value) const;
  bool operator==(const ExtendedAct&) const = default;

 private:
  std::size_t states_ = 0;
  std::size_t signals_ = 0;
  std::vector<Rat> payoff_;
};

// Convex set over states given by its (possibly redundant) generators.
class PosteriorSet {
 public:
  explicit PosteriorSet(std::vector<std::vector<Rat>> extremes);

  std::size_t dimension() const { return extremes_.front().size(); }
  const std::vector<std::vector<Rat>>& extremes() const { return extremes_; }
  bool singleton() const { return extremes_.size() == 1; }
  const std::vector<Rat>& point() const;  // throws if not singleton
  Rat min_mass_on(const std::vector<std::size_t>& states) const;

 private:
  std::vector<std::vector<Rat>> extremes_;  // deduped, each a probability vector
};

}  // namespace ambigine
