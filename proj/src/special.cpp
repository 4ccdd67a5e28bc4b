#include "zd/special.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "zd/errors.hpp"

namespace zd {

const GaussLegendre& gauss_legendre(int order) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_order with the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[order - 1 - i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[order - 1 - i] = gl.weights[i];
  }
  auto [pos, inserted] = cache.emplace(order, std::move(gl));
  return pos->second;
}

namespace {

// Lanczos g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_lgamma(cplx z) {
  // valid for Re z >= ~1
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx clgamma(cplx z) {
  // Shift into Re z >= 2 with lgamma(z) = lgamma(z+1) - log z. This covers
  // the strip Re z in [0, 2) without reflection, so large imaginary parts
  // cannot overflow a sine.
  cplx shift = 0.0;
  while (z.real() < 2.0) {
    if (std::abs(z) == 0.0) throw Error("clgamma at a pole");
    shift += std::log(z);
    z += 1.0;
  }
  return lanczos_lgamma(z) - shift;
}

cplx cgamma(cplx z) { return std::exp(clgamma(z)); }

cplx upper_gamma(cplx s, double x) {
  if (x <= 0.0) throw Error("upper_gamma: x must be positive");
  const double a = s.real();

  // Truncation point: past the peak of u^{a-1} e^{-u}, push until the
  // integrand has dropped by e^-45 relative to its value at the peak.
  double peak = std::max(x, a - 1.0);
  double upper = peak + 45.0;
  for (int i = 0; i < 200; ++i) {
    double drop = (upper - peak) - std::max(0.0, a - 1.0) * std::log(upper / peak);
    if (drop >= 45.0) break;
    upper += 15.0;
  }
  if (x >= 700.0) return 0.0;  // below double underflow after e^-x

  // Panel count follows the phase swing of u^{i Im s} over [x, upper].
  double phase = std::abs(s.imag()) * std::log(upper / x);
  int panels = 8 + static_cast<int>(phase / 3.0);
  const auto& gl = gauss_legendre(16);

  // Log-spaced panel edges resolve the peak near x.
  KahanC acc;
  double lx = std::log(x), lu = std::log(upper);
  for (int p = 0; p < panels; ++p) {
    double a0 = std::exp(lx + (lu - lx) * p / panels);
    double b0 = std::exp(lx + (lu - lx) * (p + 1) / panels);
    double mid = 0.5 * (a0 + b0), half = 0.5 * (b0 - a0);
    for (size_t k = 0; k < gl.nodes.size(); ++k) {
      double u = mid + half * gl.nodes[k];
      acc.add(half * gl.weights[k] * std::exp((s - 1.0) * std::log(u) - u));
    }
  }
  return acc.value();
}

}  // namespace zd
