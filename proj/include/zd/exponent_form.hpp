#pragma once

#include <optional>
#include <string>
#include <utility>

#include "zd/poly.hpp"

namespace zd {

// Closed sigma interval, possibly unbounded on either side. Thresholds are
// produced non-strict throughout; strict flags exist for reporting boundary
// cases.
struct SigmaRange {
  std::optional<Rational> lo, hi;
  bool lo_strict = false;
  bool hi_strict = false;

  static SigmaRange all() { return {}; }
  static SigmaRange at_least(Rational r) { return {std::move(r), std::nullopt}; }
  static SigmaRange at_most(Rational r) { return {std::nullopt, std::move(r)}; }
  static SigmaRange closed(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
  static SigmaRange empty() { return {Rational(1), Rational(0)}; }

  bool is_empty() const;
  bool bounded() const { return lo && hi; }
  bool contains(const Rational& x) const;
  SigmaRange intersect(const SigmaRange& o) const;
  friend bool operator==(const SigmaRange& a, const SigmaRange& b);
  std::string str() const;
};

// A T-exponent of the shape  const_part(sigma) + n_coeff(sigma) * n  with
// n = log_T N. eps_slack counts suppressed T^eps factors; it is metadata and
// never enters the arithmetic.
struct ExponentForm {
  RatFunc const_part;
  RatFunc n_coeff;
  int eps_slack = 0;

  ExponentForm() = default;
  ExponentForm(RatFunc c, RatFunc n, int eps = 0)
      : const_part(std::move(c)), n_coeff(std::move(n)), eps_slack(eps) {}

  static ExponentForm constant(RatFunc c, int eps = 0) { return {std::move(c), RatFunc(Rational(0)), eps}; }
  static ExponentForm of_n(RatFunc n, int eps = 0) { return {RatFunc(Rational(0)), std::move(n), eps}; }
  static ExponentForm zero() { return constant(RatFunc(Rational(0))); }

  bool depends_on_n() const { return !n_coeff.is_zero(); }
  // Compose with n = g(sigma), yielding a function of sigma alone.
  RatFunc at_n(const RatFunc& g) const { return const_part + n_coeff * g; }

  ExponentForm operator+(const ExponentForm& o) const;
  ExponentForm operator-(const ExponentForm& o) const;
  ExponentForm scaled(const Rational& r) const;
  bool same_function(const ExponentForm& o) const {
    return const_part.same_function(o.const_part) && n_coeff.same_function(o.n_coeff);
  }
  std::string str() const;
};

// const_part(sigma) + n_coeff(sigma) * n, exactly. Throws PoleAtSigma.
Rational eval_exact(const ExponentForm& form, const Rational& sigma, const Rational& n);

// Exact sigma range inside `within` on which lhs(sigma, n_fixed) <= rhs(sigma, n_fixed).
// `within` must be a bounded nonempty interval on which every denominator
// keeps a fixed sign; the cleared comparison must have degree <= 2.
SigmaRange solve_threshold(const ExponentForm& lhs, const ExponentForm& rhs,
                           const Rational& n_fixed, const SigmaRange& within);

// Affine functions of n attain extrema at interval endpoints.
Rational sup_over_n(const ExponentForm& form, const Rational& sigma,
                    const std::pair<Rational, Rational>& n_range);
Rational inf_over_n(const ExponentForm& form, const Rational& sigma,
                    const std::pair<Rational, Rational>& n_range);

}  // namespace zd
