#include "zd/exponent_pair.hpp"

#include "zd/errors.hpp"

namespace zd {

ExponentPair::ExponentPair(Rational a_, Rational b_, int eps)
    : a(std::move(a_)), b(std::move(b_)), eps_slack(eps) {
  if (!in_domain())
    throw Error("ExponentPair: (" + a.str() + ", " + b.str() + ") outside 0<=a<=1/2<=b<=1");
}

bool ExponentPair::in_domain() const {
  Rational half(1, 2);
  return a >= Rational(0) && a <= half && b >= half && b <= Rational(1);
}

ExponentPair process_a(const ExponentPair& p) {
  Rational den = Rational(2) * p.a + Rational(2);  // >= 2, never zero
  return ExponentPair(p.a / den, (p.a + p.b + Rational(1)) / den, p.eps_slack);
}

ExponentPair process_b(const ExponentPair& p) {
  Rational half(1, 2);
  return ExponentPair(p.b - half, p.a + half, p.eps_slack);
}

ExponentPair apply_word(ExponentPair p, std::string_view word) {
  if (word.empty()) throw BadWord("empty process word");
  for (char ch : word) {
    switch (ch) {
      case 'A': p = process_a(p); break;
      case 'B': p = process_b(p); break;
      default: throw BadWord(std::string("bad process letter '") + ch + "'");
    }
  }
  return p;
}

}  // namespace zd
