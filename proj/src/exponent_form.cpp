#include "zd/exponent_form.hpp"

#include <sstream>

#include "zd/errors.hpp"

namespace zd {

bool SigmaRange::is_empty() const {
  if (!lo || !hi) return false;
  if (*lo > *hi) return true;
  if (*lo == *hi) return lo_strict || hi_strict;
  return false;
}

bool SigmaRange::contains(const Rational& x) const {
  if (lo && (lo_strict ? x <= *lo : x < *lo)) return false;
  if (hi && (hi_strict ? x >= *hi : x > *hi)) return false;
  return true;
}

SigmaRange SigmaRange::intersect(const SigmaRange& o) const {
  SigmaRange r;
  if (lo && o.lo) {
    r.lo = max(*lo, *o.lo);
    r.lo_strict = (*lo == *o.lo) ? (lo_strict || o.lo_strict) : (*lo > *o.lo ? lo_strict : o.lo_strict);
  } else if (lo) {
    r.lo = lo; r.lo_strict = lo_strict;
  } else if (o.lo) {
    r.lo = o.lo; r.lo_strict = o.lo_strict;
  }
  if (hi && o.hi) {
    r.hi = min(*hi, *o.hi);
    r.hi_strict = (*hi == *o.hi) ? (hi_strict || o.hi_strict) : (*hi < *o.hi ? hi_strict : o.hi_strict);
  } else if (hi) {
    r.hi = hi; r.hi_strict = hi_strict;
  } else if (o.hi) {
    r.hi = o.hi; r.hi_strict = o.hi_strict;
  }
  return r;
}

bool operator==(const SigmaRange& a, const SigmaRange& b) {
  if (a.is_empty() && b.is_empty()) return true;
  return a.lo == b.lo && a.hi == b.hi && a.lo_strict == b.lo_strict && a.hi_strict == b.hi_strict;
}

std::string SigmaRange::str() const {
  if (is_empty()) return "{}";
  std::ostringstream os;
  os << (lo_strict ? "(" : "[") << (lo ? lo->str() : "-inf") << ", "
     << (hi ? hi->str() : "+inf") << (hi_strict ? ")" : "]");
  return os.str();
}

ExponentForm ExponentForm::operator+(const ExponentForm& o) const {
  return {const_part + o.const_part, n_coeff + o.n_coeff, std::max(eps_slack, o.eps_slack)};
}

ExponentForm ExponentForm::operator-(const ExponentForm& o) const {
  return {const_part - o.const_part, n_coeff - o.n_coeff, std::max(eps_slack, o.eps_slack)};
}

ExponentForm ExponentForm::scaled(const Rational& r) const {
  return {const_part.scaled(r), n_coeff.scaled(r), eps_slack};
}

std::string ExponentForm::str() const {
  std::string s = const_part.str();
  if (!n_coeff.is_zero()) s += " + (" + n_coeff.str() + ")*n";
  if (eps_slack > 0) s += " [+" + std::to_string(eps_slack) + "eps]";
  return s;
}

Rational eval_exact(const ExponentForm& form, const Rational& sigma, const Rational& n) {
  return form.const_part.eval(sigma) + form.n_coeff.eval(sigma) * n;
}

namespace {

void require_fixed_sign(const Poly& den, const SigmaRange& within) {
  if (den.degree() <= 0) return;
  const Rational& lo = *within.lo;
  const Rational& hi = *within.hi;
  if (den.eval(lo).is_zero() || den.eval(hi).is_zero())
    throw SignChange("denominator vanishes at an interval endpoint");
  if (den.roots_in(lo, hi) > 0)
    throw SignChange("denominator changes sign inside the interval");
}

}  // namespace

SigmaRange solve_threshold(const ExponentForm& lhs, const ExponentForm& rhs,
                           const Rational& n_fixed, const SigmaRange& within) {
  if (!within.bounded() || within.is_empty())
    throw Error("solve_threshold: supplied interval must be bounded and nonempty");
  const Rational& lo = *within.lo;
  const Rational& hi = *within.hi;

  RatFunc diff = (lhs.const_part + lhs.n_coeff.scaled(n_fixed)) -
                 (rhs.const_part + rhs.n_coeff.scaled(n_fixed));
  if (diff.is_zero()) return within;  // identity: holds everywhere

  require_fixed_sign(diff.den(), within);
  int den_sign = diff.den().eval(lo).sign();

  // diff <= 0  <=>  den_sign * num <= 0
  Poly p = den_sign > 0 ? diff.num() : -diff.num();
  if (p.degree() > 2) throw DegreeTooHigh("cleared comparison has degree " + std::to_string(p.degree()));

  if (p.degree() <= 0) {
    // Nonzero constant (zero was handled above).
    return p.coeff(0).sign() <= 0 ? within : SigmaRange::empty();
  }

  if (p.degree() == 1) {
    Rational root = -p.coeff(0) / p.coeff(1);
    SigmaRange half = p.coeff(1).sign() > 0 ? SigmaRange::at_most(root) : SigmaRange::at_least(root);
    return half.intersect(within);
  }

  // Quadratic. Exact thresholds require a rational discriminant square root.
  Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) {
    return a.sign() < 0 ? within : SigmaRange::empty();
  }
  Rational sq;
  if (!disc.is_square(&sq)) throw IrrationalRoot("quadratic threshold has irrational roots");
  Rational r1 = (-b - sq) / (Rational(2) * a);
  Rational r2 = (-b + sq) / (Rational(2) * a);
  if (r1 > r2) std::swap(r1, r2);
  if (a.sign() > 0) {
    return SigmaRange::closed(r1, r2).intersect(within);
  }
  // p <= 0 outside (r1, r2): the interval must sit inside one component.
  SigmaRange left = SigmaRange::at_most(r1).intersect(within);
  SigmaRange right = SigmaRange::at_least(r2).intersect(within);
  if (left.is_empty()) return right;
  if (right.is_empty()) return left;
  throw Disconnected("solution set splits into two intervals");
}

Rational sup_over_n(const ExponentForm& form, const Rational& sigma,
                    const std::pair<Rational, Rational>& n_range) {
  if (n_range.first > n_range.second) throw Error("sup_over_n: empty n range");
  return max(eval_exact(form, sigma, n_range.first), eval_exact(form, sigma, n_range.second));
}

Rational inf_over_n(const ExponentForm& form, const Rational& sigma,
                    const std::pair<Rational, Rational>& n_range) {
  if (n_range.first > n_range.second) throw Error("inf_over_n: empty n range");
  return min(eval_exact(form, sigma, n_range.first), eval_exact(form, sigma, n_range.second));
}

}  // namespace zd
