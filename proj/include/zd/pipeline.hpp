#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zd/exponent_form.hpp"
#include "zd/moments.hpp"

namespace zd {

// The three encoded bound chains: the cusp-form density range, the zeta
// variant with the (24(1-sigma))/(30 sigma - 11) target, and the moment-only
// route that needs no cross terms.
enum class Scenario { Thm1CuspForm, Thm2Zeta, IvicRemark };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

struct MomentCouple {
  Rational q, B;
  std::string tag;  // "q0" / "q1"
};

// One summand of the large-value bound: delta1^d1_pow * delta2^d2_pow * T^base,
// where base is an ExponentForm in (sigma, n) and the delta exponents stay
// symbolic until substitute_deltas.
struct LvehTerm {
  std::string name;
  Rational d1_pow, d2_pow;
  ExponentForm base;
  // The threshold table bounds this term with delta1 <= 1 instead of the
  // tuned delta1 form (used for the non-tuned moment term of the zeta chain).
  bool drop_d1_in_table = false;
};

struct ScenarioConfig {
  Scenario id = Scenario::Thm1CuspForm;
  int nu = 1;                    // power-trick order
  ExponentForm target;           // n-free: T-exponent the zero count must meet
  ExponentForm n_lower;          // n-free: lower end of the leftover n-window
  ExponentForm n_upper_cap;      // n-free: hard cap from the power trick
  // Leftover-window tops per moment couple; the effective top is the pointwise
  // maximum, clamped by the cap.
  std::vector<std::pair<std::string, ExponentForm>> n_upper_candidates;
  RatFunc y_exp;                 // Y = T^{y_exp(sigma)}
  std::vector<std::pair<std::string, ExponentForm>> class2_terms;  // n-free
  std::vector<MomentCouple> couples;  // exactly two
  int tuned = -1;                // fixed couple index, or -1 = pointwise dominant
  bool has_cross_terms = true;   // false for the moment-only route
  SigmaRange solve_domain;       // interval with fixed denominator signs
  std::vector<std::string> annotations;
};

ScenarioConfig make_scenario(Scenario s);

// Delta exponents tuned so that the diagonal term and the chosen moment term
// both reduce to the target exactly.
struct PipelineParams {
  ExponentForm delta1_exp, delta2_exp;
  MomentCouple c0, c1;
  Scenario scenario = Scenario::Thm1CuspForm;
  int tuned = 0;
};

PipelineParams make_params(const ScenarioConfig& cfg, int tuned_couple);

// The six constraint ranges for one moment couple of the cusp-form chain:
// three cross-term thresholds at the window bottom, the cross-term N-exponent
// sign condition (stated twice, once independently), and the moment slope
// condition. Throws Infeasible when q <= B + 8/5.
struct Threshold {
  std::string name;
  SigmaRange range;
};
std::vector<Threshold> thm1_constraints(const Rational& q, const Rational& B);

std::vector<LvehTerm> lveh_terms(const ScenarioConfig& cfg);
std::vector<ExponentForm> substitute_deltas(const std::vector<LvehTerm>& terms,
                                            const PipelineParams& params);

struct NWindow {
  Rational lo, hi;
  bool closed = false;   // lo >= hi: nothing left to check
  bool capped = false;   // the power-trick cap clamped the top
};
NWindow n_window(const Rational& sigma, const ScenarioConfig& cfg);

struct Class2Eval {
  std::string name;
  Rational exponent;          // exact T-exponent at the queried sigma
  SigmaRange ok_range;        // sigma range on which it stays <= target
  bool identical_to_target;   // equality as rational functions
};
std::vector<Class2Eval> class2_exponent(const Rational& sigma, const ScenarioConfig& cfg);

struct TermCheck {
  std::string name;
  Rational sup;         // worst exponent over the window
  Rational target;
  Rational witness_n;   // window endpoint attaining the sup
  bool pass = false;
  bool tight = false;
};

struct DeltaCheck {
  Rational lo, hi;      // range of the delta T-exponent over the window
  bool ok = false;
};

struct DensityCheck {
  Scenario scenario = Scenario::Thm1CuspForm;
  Rational sigma;
  Rational target;
  NWindow window;
  std::vector<TermCheck> terms;
  std::vector<TermCheck> class2;
  DeltaCheck delta1, delta2;  // meaningful only when the window is open
  bool pass = false;
  std::vector<std::string> notes;
};

DensityCheck verify_density(const Rational& sigma, const ScenarioConfig& cfg);

struct ValidityReport {
  Scenario scenario = Scenario::Thm1CuspForm;
  std::vector<Threshold> per_term;
  SigmaRange overall;
  SigmaRange n_window_closed;  // sigma range on which the leftover window is empty
  std::vector<std::string> tight_terms;
  std::vector<std::string> feasibility_flags;
  std::vector<std::string> annotations;
};

ValidityReport theorem_report(const ScenarioConfig& cfg);

}  // namespace zd
