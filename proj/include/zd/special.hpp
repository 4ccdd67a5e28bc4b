#pragma once

#include <complex>
#include <vector>

namespace zd {

using cplx = std::complex<double>;

// Nodes and weights on [-1, 1]; cached per order.
struct GaussLegendre {
  std::vector<double> nodes, weights;
};
const GaussLegendre& gauss_legendre(int order);

// Principal-branch log-gamma via a Lanczos fit, shifted upward by the
// recurrence for small real part so no reflection is ever needed. Good to
// ~1e-13 relative on the half-plane Re z > -1 away from the poles.
cplx clgamma(cplx z);
cplx cgamma(cplx z);

// Upper incomplete gamma for complex s and real x > 0, by composite
// Gauss-Legendre quadrature of the defining integral with the panel count
// tied to the phase swing of u^{s-1}. Relative accuracy ~1e-12 in the desk
// ranges (|Im s| <= a few hundred, x up to a few hundred).
cplx upper_gamma(cplx s, double x);

// Neumaier compensated accumulator; order-stable summation for the lab
// reductions.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

}  // namespace zd
