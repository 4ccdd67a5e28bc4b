#pragma once

#include "zd/exponent_pair.hpp"

namespace zd {

// Mixed-moment parameters: the q-th moment of a zeta level piece over (0, T)
// is bounded by T^B (up to T^eps when eps_on_B is set), and the level split
// happens at H(T) = T^h.
struct MomentParams {
  Rational q, B, h;
  bool eps_on_B = true;

  bool invariants_ok() const {
    return q >= Rational(2) && B.sign() > 0 && h >= Rational(0) && h < Rational(1, 4);
  }
  // Needed downstream so the constraint denominators stay positive.
  bool q_exceeds_b_slack() const { return q > B + Rational(8, 5); }
};

// Result of deriving admissible parameters from an exponent pair: the fixed
// base couple (6, 1+eps) is always emitted alongside the pair-derived couple
//   q1 = 2(1 + 2a + 2b)/a,   B1 = (a+b)/a + eps,
// both with level split h = a/(a+b+1). The h formula is inferred from the two
// recorded instances (2/13 and 55/359) and flagged as such in reports.
struct MomentDerivation {
  MomentParams base;     // (6, 1)
  MomentParams derived;  // from the pair
  bool h_in_range;       // false when h hits the 1/4 boundary
  bool slack_ok_base;    // q > B + 8/5 for the base couple
  bool slack_ok_derived;
  bool h_formula_inferred = true;
};

// Throws ZeroA when p.a = 0.
MomentDerivation from_exponent_pair(const ExponentPair& p);

}  // namespace zd
