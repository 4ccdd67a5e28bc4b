#include "zd/moments.hpp"

#include "zd/errors.hpp"

namespace zd {

MomentDerivation from_exponent_pair(const ExponentPair& p) {
  if (p.a.is_zero()) throw ZeroA("derived moment exponent q1 is undefined for a = 0");

  MomentDerivation d;
  d.base = MomentParams{Rational(6), Rational(1), p.a / (p.a + p.b + Rational(1)), true};
  Rational q1 = Rational(2) * (Rational(1) + Rational(2) * p.a + Rational(2) * p.b) / p.a;
  Rational b1 = (p.a + p.b) / p.a;
  d.derived = MomentParams{q1, b1, d.base.h, true};
  d.h_in_range = d.base.h < Rational(1, 4);
  d.slack_ok_base = d.base.q_exceeds_b_slack();
  d.slack_ok_derived = d.derived.q_exceeds_b_slack();
  return d;
}

}  // namespace zd
