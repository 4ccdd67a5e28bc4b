#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zd/rational.hpp"

namespace zd {

// Dense univariate polynomial over the rationals. Degrees stay tiny here
// (everything in the bound chains is linear-fractional or a product of two
// such), so no sparse or modular tricks are needed.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& r) { return Poly({r}); }
  // c0 + c1*x
  static Poly linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& r) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  // Monic gcd.
  static Poly gcd(Poly a, Poly b);

  // Number of distinct real roots in the open interval (lo, hi), by Sturm
  // chains. Endpoints must not be roots.
  int roots_in(const Rational& lo, const Rational& hi) const;

  std::string str(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] multiplies x^k
};

// Ratio of two polynomials, reduced by the monic gcd, denominator kept with
// positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_({Rational(1)}) {}
  RatFunc(const Rational& r) : num_(Poly::constant(r)), den_({Rational(1)}) {}  // NOLINT
  RatFunc(Poly num, Poly den);
  static RatFunc of(std::initializer_list<Rational> num, std::initializer_list<Rational> den) {
    return RatFunc(Poly(num), Poly(den));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational eval(const Rational& x) const;  // throws PoleAtSigma on a vanishing denominator
  bool has_pole_at(const Rational& x) const { return den_.eval(x).is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc scaled(const Rational& r) const;

  // Equality as rational functions (cross multiplication, no normal forms needed).
  bool same_function(const RatFunc& o) const;

  std::string str(const std::string& var = "s") const;

 private:
  Poly num_, den_;
};

}  // namespace zd
