#pragma once

#include <string_view>

#include "zd/rational.hpp"

namespace zd {

// Van der Corput exponent pair (a, b) with 0 <= a <= 1/2 <= b <= 1.
// eps_slack records that the pair is only known with an epsilon on each
// coordinate; the processes carry it through unchanged.
struct ExponentPair {
  Rational a, b;
  int eps_slack = 0;

  ExponentPair(Rational a_, Rational b_, int eps = 0);
  bool in_domain() const;
  friend bool operator==(const ExponentPair& x, const ExponentPair& y) {
    return x.a == y.a && x.b == y.b;
  }
  std::string str() const { return "(" + a.str() + ", " + b.str() + ")"; }
};

// Process A: (a, b) -> (a/(2a+2), (a+b+1)/(2a+2)).
ExponentPair process_a(const ExponentPair& p);

// Process B: (a, b) -> (b - 1/2, a + 1/2). An involution.
ExponentPair process_b(const ExponentPair& p);

// Left-to-right application of a word over {A, B}. Throws BadWord.
ExponentPair apply_word(ExponentPair p, std::string_view word);

}  // namespace zd
