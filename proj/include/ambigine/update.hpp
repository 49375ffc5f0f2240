#pragma once

#include "ambigine/eval.hpp"
#include "ambigine/mobius.hpp"
#include "ambigine/types.hpp"

#include <memory>
#include <optional>
#include <string>

namespace ambigine {

struct UpdateRule {
  enum class Kind { Cml, Fb, Ml, Proxy, BlendCmlFb, Power };

  Kind kind = Kind::Cml;
  Rat lambda;  // Power only, in (0, 1]

  static UpdateRule parse(const std::string& text);  // "cml"|"fb"|"ml"|"proxy"|"blend"|"power:1/2"
  std::string name() const;
  bool exact() const { return kind != Kind::Power; }
};

PosteriorSet cml_update(const ExtremePriorSet& prior, std::size_t signal);
PosteriorSet cml_update_decomposed(const SimpleDecomposition& decomposition, std::size_t signal);
PosteriorSet fb_update(const ExtremePriorSet& prior, std::size_t signal);
PosteriorSet ml_update(const ExtremePriorSet& prior, std::size_t signal);
PosteriorSet blend_cml_fb_update(const ExtremePriorSet& prior, std::size_t signal);

// Appendix-style power rule; irrational in general, computed in doubles and
// returned as dyadic rationals (tolerance 1e-12 on normalized entries).
PosteriorSet power_update(const SimpleDecomposition& decomposition, std::size_t signal,
                          const Rat& lambda);

// The DM's ambiguous prior in whichever representation the instance carries.
// A Moebius belief converts to its core's extreme points on demand; the
// reverse direction is not well defined, so the proxy rule requires a belief.
class AmbiguousPrior {
 public:
  explicit AmbiguousPrior(ExtremePriorSet prior);
  explicit AmbiguousPrior(MobiusBelief belief);

  const StateSpace& states() const;
  const SignalSpace& signals() const;

  bool has_belief() const { return belief_.has_value(); }
  const MobiusBelief& belief() const;  // throws InvalidMobius when absent
  const ExtremePriorSet& prior_set() const;
  const SimpleDecomposition& decomposition() const;  // throws NotSimple

  Rat evaluate(const ExtendedAct& act) const;  // max-min over the represented set
  std::vector<std::size_t> non_null() const;
  PosteriorSet update(const UpdateRule& rule, std::size_t signal) const;

 private:
  std::optional<MobiusBelief> belief_;
  mutable std::optional<ExtremePriorSet> prior_;
  mutable std::optional<SimpleDecomposition> decomposition_;
};

}  // namespace ambigine
