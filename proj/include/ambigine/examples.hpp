#pragma once

#include "ambigine/design.hpp"
#include "ambigine/mobius.hpp"
#include "ambigine/rationalize.hpp"
#include "ambigine/types.hpp"

#include <string>
#include <vector>

namespace ambigine::examples {

// Built-in worked instances; the JSON files under data/examples mirror these.
ExtremePriorSet prior_3x2_symmetric();      // example 1
ExtremePriorSet prior_2x2_skewed();         // example 2
ExtendedAct act_f_2x2();                    // example 2, f*
ExtendedAct act_g_2x2();                    // example 2, g*
BeliefProfile profile_not_rationalizable(); // example 3
ExtremePriorSet prior_4x2_nonsimple();      // example 4
ExtremePriorSet prior_2x2_fourfold();       // example 5
MobiusBelief belief_2x2_fourfold();         // example 5
MobiusBelief belief_2x2_nested();           // example 6
ExtendedAct act_f_nested();                 // example 6, f*
ExtendedAct act_g_nested();                 // example 6, g*
PersuasionInstance persuasion_binary();     // the two-state design example

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
};

// Every golden value, evaluated in exact arithmetic.
std::vector<ExampleCheck> run_example_checks();

// Human-facing summary of one example's computed quantities.
std::string example_summary(int id);

}  // namespace ambigine::examples
