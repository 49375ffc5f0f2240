#include "ambigine/examples.hpp"

#include "ambigine/axioms.hpp"
#include "ambigine/eval.hpp"
#include "ambigine/lp.hpp"
#include "ambigine/update.hpp"

#include <algorithm>
#include <sstream>

namespace ambigine::examples {

namespace {

Rat q(long num, long den = 1) { return Rat(num, den); }

JointDistribution joint(std::size_t m, std::size_t n, std::vector<Rat> flat) {
  return JointDistribution(m, n, std::move(flat));
}

std::string rats(const std::vector<Rat>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_rational(values[i]);
  }
  out << ")";
  return out.str();
}

void expect(std::vector<ExampleCheck>& checks, const std::string& name, bool pass,
            const std::string& expected, const std::string& got) {
  checks.push_back({name, pass, expected, got});
}

void expect_vector(std::vector<ExampleCheck>& checks, const std::string& name,
                   const std::vector<Rat>& expected, const std::vector<Rat>& got) {
  expect(checks, name, expected == got, rats(expected), rats(got));
}

void expect_rat(std::vector<ExampleCheck>& checks, const std::string& name, const Rat& expected,
                const Rat& got) {
  expect(checks, name, expected == got, format_rational(expected), format_rational(got));
}

void expect_bool(std::vector<ExampleCheck>& checks, const std::string& name, bool expected,
                 bool got) {
  expect(checks, name, expected == got, expected ? "true" : "false", got ? "true" : "false");
}

}  // namespace

ExtremePriorSet prior_3x2_symmetric() {
  StateSpace states({"s", "s_prime", "s_dprime"});
  SignalSpace signals({"theta", "theta_prime"});
  std::vector<JointDistribution> extremes;
  extremes.push_back(joint(3, 2, {q(4, 15), q(1, 15), q(4, 15), q(1, 15), q(1, 15), q(4, 15)}));
  extremes.push_back(joint(3, 2, {q(4, 15), q(1, 15), q(1, 15), q(4, 15), q(4, 15), q(1, 15)}));
  return ExtremePriorSet(std::move(states), std::move(signals), std::move(extremes));
}

ExtremePriorSet prior_2x2_skewed() {
  StateSpace states({"s", "s_prime"});
  SignalSpace signals({"theta", "theta_prime"});
  std::vector<JointDistribution> extremes;
  extremes.push_back(joint(2, 2, {q(1, 8), q(3, 8), q(3, 8), q(1, 8)}));
  extremes.push_back(joint(2, 2, {q(1, 3), q(1, 6), q(1, 8), q(3, 8)}));
  return ExtremePriorSet(std::move(states), std::move(signals), std::move(extremes));
}

ExtendedAct act_f_2x2() { return ExtendedAct(2, 2, {q(3), q(6), q(2), q(0)}); }
ExtendedAct act_g_2x2() { return ExtendedAct(2, 2, {q(15, 4), q(6), q(2), q(0)}); }

BeliefProfile profile_not_rationalizable() {
  StateSpace states({"s", "s_prime", "s_dprime"});
  SignalSpace signals({"theta", "theta_prime"});
  std::vector<Rat> mu{q(1, 3), q(1, 3), q(1, 3)};
  std::vector<std::vector<Rat>> posteriors{{q(1, 6), q(1, 2), q(1, 3)},
                                           {q(1, 6), q(1, 2), q(1, 3)}};
  return BeliefProfile(std::move(states), std::move(signals), std::move(mu), std::move(posteriors));
}

ExtremePriorSet prior_4x2_nonsimple() {
  StateSpace states({"s1", "s2", "s3", "s4"});
  SignalSpace signals({"theta1", "theta2"});
  std::vector<JointDistribution> extremes;
  extremes.push_back(
      joint(4, 2, {q(1, 10), q(0), q(7, 10), q(0), q(0), q(1, 10), q(0), q(1, 10)}));
  extremes.push_back(
      joint(4, 2, {q(3, 5), q(0), q(1, 10), q(0), q(0), q(1, 5), q(0), q(1, 10)}));
  return ExtremePriorSet(std::move(states), std::move(signals), std::move(extremes));
}

ExtremePriorSet prior_2x2_fourfold() { return belief_2x2_fourfold().to_prior_set(); }

MobiusBelief belief_2x2_fourfold() {
  StateSpace states({"s", "s_prime"});
  SignalSpace signals({"theta", "theta_prime"});
  std::vector<MobiusMass> masses;
  masses.push_back({{{0, 0}}, q(1, 20)});
  masses.push_back({{{0, 1}}, q(1, 20)});
  masses.push_back({{{0, 0}, {0, 1}}, q(2, 5)});
  masses.push_back({{{1, 0}}, q(1, 10)});
  masses.push_back({{{1, 1}}, q(1, 10)});
  masses.push_back({{{1, 0}, {1, 1}}, q(3, 10)});
  return MobiusBelief(std::move(states), std::move(signals), std::move(masses));
}

MobiusBelief belief_2x2_nested() {
  StateSpace states({"s", "s_prime"});
  SignalSpace signals({"theta", "theta_prime"});
  std::vector<MobiusMass> masses;
  masses.push_back({{{0, 0}}, q(1, 3)});
  masses.push_back({{{0, 1}}, q(1, 6)});
  masses.push_back({{{1, 0}, {1, 1}}, q(1, 2)});
  return MobiusBelief(std::move(states), std::move(signals), std::move(masses));
}

ExtendedAct act_f_nested() { return ExtendedAct(2, 2, {q(1), q(10, 7), q(0), q(1)}); }
ExtendedAct act_g_nested() { return ExtendedAct(2, 2, {q(1), q(10, 7), q(1, 2), q(1)}); }

PersuasionInstance persuasion_binary() {
  StateSpace states({"s1", "s2"});
  std::vector<std::string> actions{"a1", "a2"};
  // Agent: a1 pays off in s2, a2 in s1; a1 optimal iff the posterior puts at
  // least 1/2 on s2. Designer: a1 optimal at s1, a2 at s2.
  std::vector<std::vector<Rat>> u{{q(0), q(1)}, {q(1), q(0)}};
  std::vector<std::vector<Rat>> v{{q(1), q(0)}, {q(0), q(1)}};
  std::vector<Rat> mu{q(1, 2), q(1, 2)};
  return PersuasionInstance(std::move(states), std::move(actions), std::move(u), std::move(v),
                            std::move(mu));
}

std::vector<ExampleCheck> run_example_checks() {
  std::vector<ExampleCheck> checks;
  const UpdateRule cml = UpdateRule::parse("cml");
  const UpdateRule fb = UpdateRule::parse("fb");
  const UpdateRule ml = UpdateRule::parse("ml");
  const UpdateRule proxy = UpdateRule::parse("proxy");

  {  // symmetric 3x2 set: CML escapes the FB hull
    const ExtremePriorSet prior = prior_3x2_symmetric();
    const PosteriorSet cml_post = cml_update(prior, 0);
    expect_vector(checks, "ex1 cml posterior", {q(1, 3), q(1, 3), q(1, 3)}, cml_post.point());
    const PosteriorSet fb_post = fb_update(prior, 0);
    std::vector<std::vector<Rat>> fb_expected{{q(4, 9), q(1, 9), q(4, 9)},
                                              {q(4, 9), q(4, 9), q(1, 9)}};
    std::sort(fb_expected.begin(), fb_expected.end());
    expect(checks, "ex1 fb extremes", fb_post.extremes() == fb_expected, "two conditionals",
           std::to_string(fb_post.extremes().size()) + " points");
    expect_bool(checks, "ex1 cml outside fb hull", false,
                lp::in_convex_hull(cml_post.point(), fb_post.extremes()));
  }

  {  // skewed 2x2 set: FB and ML lose sensitivity after updating
    const ExtremePriorSet prior = prior_2x2_skewed();
    const ExtendedAct f = act_f_2x2();
    const ExtendedAct g = act_g_2x2();
    expect_rat(checks, "ex2 value f", q(9, 4), evaluate_extended(prior, f));
    expect_rat(checks, "ex2 value g", q(5, 2), evaluate_extended(prior, g));
    const PosteriorSet fb_post = fb_update(prior, 0);
    std::vector<std::vector<Rat>> fb_expected{{q(1, 4), q(3, 4)}, {q(8, 11), q(3, 11)}};
    std::sort(fb_expected.begin(), fb_expected.end());
    expect(checks, "ex2 fb extremes", fb_post.extremes() == fb_expected,
           "both conditionals", std::to_string(fb_post.extremes().size()) + " points");
    const PosteriorSet ml_post = ml_update(prior, 0);
    expect_vector(checks, "ex2 ml posterior", {q(1, 4), q(3, 4)}, ml_post.point());
    expect_rat(checks, "ex2 fb expost f", q(9, 4),
               evaluate_act(fb_post, restrict_to_signal(f, 0)));
    expect_rat(checks, "ex2 fb expost g", q(39, 16),
               evaluate_act(fb_post, restrict_to_signal(g, 0)));
    expect_rat(checks, "ex2 ml expost g", q(39, 16),
               evaluate_act(ml_post, restrict_to_signal(g, 0)));
    expect_vector(checks, "ex2 cml posterior", {q(8, 17), q(9, 17)},
                  cml_update(prior, 0).point());
    const AmbiguousPrior wrapped(prior);
    expect_bool(checks, "ex2 fb violates isu", false, check_prop1(wrapped, 0, f, g, fb));
    expect_bool(checks, "ex2 ml violates isu", false, check_prop1(wrapped, 0, f, g, ml));
    expect_bool(checks, "ex2 cml keeps isu", true, check_prop1(wrapped, 0, f, g, cml));
  }

  {  // profile with posteriors too lopsided to rationalize
    const auto verdict = is_rationalizable(profile_not_rationalizable());
    expect_bool(checks, "ex3 not rationalizable", false, verdict.rationalizable);
    expect_rat(checks, "ex3 state s sum", q(2, 3), verdict.state_sums.at(0));
  }

  {  // non-simple set: sensitivity bounds overflow
    const auto bounds = isu_feasibility_bounds(prior_4x2_nonsimple(), 0);
    const bool two = bounds.bounds.size() == 2;
    expect(checks, "ex4 two bounded states", two, "2", std::to_string(bounds.bounds.size()));
    if (two) {
      expect_rat(checks, "ex4 bound s1", q(3, 5), bounds.bounds[0].second);
      expect_rat(checks, "ex4 bound s2", q(7, 10), bounds.bounds[1].second);
    }
    expect_bool(checks, "ex4 infeasible", false, bounds.feasible);
  }

  {  // fourfold 2x2 set: CML strictly lowers a marginal bet at every signal
    const ExtremePriorSet prior = prior_2x2_fourfold();
    expect_vector(checks, "ex5 cml posterior theta", {q(9, 17), q(8, 17)},
                  cml_update(prior, 0).point());
    expect_vector(checks, "ex5 cml posterior theta_prime", {q(9, 17), q(8, 17)},
                  cml_update(prior, 1).point());
    const ExtendedAct bet(2, 2, {q(0), q(0), q(1), q(1)});
    const AmbiguousPrior as_set(prior);
    const AmbiguousPrior as_belief(belief_2x2_fourfold());
    expect_bool(checks, "ex5 nanbn cml", false, check_not_all_news_bad(as_set, bet, cml));
    expect_bool(checks, "ex5 nanbn proxy", true, check_not_all_news_bad(as_belief, bet, proxy));
    const auto prox = proxy_update_full(belief_2x2_fourfold(), 0);
    expect_vector(checks, "ex5 proxy posterior", {q(1, 2), q(1, 2)}, prox.posterior.point());
    expect_rat(checks, "ex5 proxy bet value", q(1, 2),
               evaluate_act(prox.posterior, Act({q(0), q(1)})));
  }

  {  // nested 2x2 belief: the proxy rule loses sensitivity after updating
    const MobiusBelief belief = belief_2x2_nested();
    const ExtendedAct f = act_f_nested();
    const ExtendedAct g = act_g_nested();
    const auto prox = proxy_update_full(belief, 0);
    expect_vector(checks, "ex6 proxy posterior", {q(4, 7), q(3, 7)}, prox.posterior.point());
    expect_rat(checks, "ex6 value f", q(4, 7), belief.choquet(f));
    expect_rat(checks, "ex6 expost f", q(4, 7),
               evaluate_act(prox.posterior, restrict_to_signal(f, 0)));
    expect_rat(checks, "ex6 value g", q(23, 28), belief.choquet(g));
    expect_rat(checks, "ex6 expost g", q(11, 14),
               evaluate_act(prox.posterior, restrict_to_signal(g, 0)));
    expect_bool(checks, "ex6 proxy violates isu", false,
                check_prop1(AmbiguousPrior(belief), 0, f, g, proxy));
  }

  {  // binary design instance: quoted kernel entries and action frequencies
    const PersuasionInstance instance = persuasion_binary();
    const std::vector<std::vector<Rat>> targets{{q(1, 3), q(2, 3)}, {q(2, 3), q(1, 3)}};
    const DesignCertificate cert =
        construct_with(instance, targets, {0, 1}, {q(1, 25), q(1, 25)}, 10000);
    const BlockStructure& block = cert.structure;
    expect_rat(checks, "design diag own", q(1, 100), block.diag(0, 0));
    expect_rat(checks, "design diag other", q(1, 50), block.diag(0, 1));
    expect_rat(checks, "design same-state offdiag", q(99, 100) / q(9999),
               block.same_state_offdiag(0));
    expect_rat(checks, "design cross", q(49, 50) / q(10000), block.cross_state(0, 1));
    expect_rat(checks, "design own-action rate s1", q(1), block.own_action_rate(0, 0));
    expect_rat(checks, "design own-action rate s2", q(49, 50), block.own_action_rate(0, 1));
    expect_rat(checks, "design payoff level", q(99, 100), cert.v_star);
    expect_rat(checks, "design ideal", q(1), cert.ideal);
  }

  return checks;
}

std::string example_summary(int id) {
  std::ostringstream out;
  switch (id) {
    case 1: {
      const auto prior = prior_3x2_symmetric();
      out << "cml posterior at theta: " << rats(cml_update(prior, 0).point());
      break;
    }
    case 2: {
      const auto prior = prior_2x2_skewed();
      out << "cml posterior at theta: " << rats(cml_update(prior, 0).point());
      out << "; value of f: " << format_rational(evaluate_extended(prior, act_f_2x2()));
      break;
    }
    case 3: {
      const auto verdict = is_rationalizable(profile_not_rationalizable());
      out << "rationalizable: " << (verdict.rationalizable ? "yes" : "no")
          << "; state sums: " << rats(verdict.state_sums);
      break;
    }
    case 4: {
      const auto bounds = isu_feasibility_bounds(prior_4x2_nonsimple(), 0);
      out << "feasible: " << (bounds.feasible ? "yes" : "no")
          << "; bound total: " << format_rational(bounds.total);
      break;
    }
    case 5: {
      const auto prior = prior_2x2_fourfold();
      out << "cml posterior at theta: " << rats(cml_update(prior, 0).point());
      break;
    }
    case 6: {
      const auto prox = proxy_update_full(belief_2x2_nested(), 0);
      out << "proxy posterior at theta: " << rats(prox.posterior.point());
      break;
    }
    default:
      throw ValidationError("example id must be 1..6");
  }
  return out.str();
}

}  // namespace ambigine::examples
