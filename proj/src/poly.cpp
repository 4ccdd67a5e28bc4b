#include "zd/poly.hpp"

#include <sstream>

#include "zd/errors.hpp"

namespace zd {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  static const Rational kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw Error("Poly::leading on zero polynomial");
  return c_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> d(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rational& r) const {
  std::vector<Rational> d(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) d[k] = c_[k] * r;
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error("Poly::divmod by zero polynomial");
  Poly rem = *this;
  std::vector<Rational> q(std::max<size_t>(1, c_.size()), Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rational factor = rem.leading() / d.leading();
    std::vector<Rational> term(static_cast<size_t>(shift) + 1, Rational(0));
    term.back() = factor;
    Poly t(std::move(term));
    q[static_cast<size_t>(shift)] = factor;
    rem = rem - t * d;
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inv());  // monic
}

namespace {

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int Poly::roots_in(const Rational& lo, const Rational& hi) const {
  if (is_zero()) throw Error("Poly::roots_in on zero polynomial");
  if (degree() == 0) return 0;
  if (eval(lo).is_zero() || eval(hi).is_zero())
    throw Error("Poly::roots_in: endpoint is a root");
  // Square-free part keeps the Sturm chain honest for repeated roots.
  Poly p = *this;
  Poly g = gcd(p, p.derivative());
  if (g.degree() > 0) p = p.divmod(g).first;
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    if (k == 0 || a != Rational(1)) os << a.str();
    if (k >= 1) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("RatFunc: zero denominator");
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  if (den_.leading().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw PoleAtSigma("RatFunc: pole at " + x.str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("RatFunc: division by zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::scaled(const Rational& r) const { return RatFunc(num_.scaled(r), den_); }

bool RatFunc::same_function(const RatFunc& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RatFunc::str(const std::string& var) const {
  if (num_.is_zero()) return "0";
  if (den_.degree() == 0 && den_.coeff(0) == Rational(1)) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace zd
