#pragma once

#include <cstdint>
#include <vector>

#include "zd/rational.hpp"

namespace zd {

// Fourier coefficients of the weight-12 level-1 cusp eigenform, exact, plus
// the normalized eigenvalues lambda(n) = tau(n) / n^{11/2}.
struct HeckeTables {
  int n_max = 0;
  std::vector<BigInt> tau;      // tau[n], index 0 unused
  std::vector<double> lambda;   // lambda[n]
  static constexpr int weight = 12;

  double lambda_at(int n) const { return lambda[static_cast<size_t>(n)]; }
};

// tau(n) for n <= n_max from the 24th power of the sparse pentagonal-number
// series, by repeated truncated multiplication.
HeckeTables build_tables(int n_max);

// Exact integer checks over the whole table; each returns the first violating
// n (or 0 if the property holds everywhere).
long check_hecke_recursion(const HeckeTables& t);        // tau(p^{k+1}) = tau(p)tau(p^k) - p^11 tau(p^{k-1})
long check_multiplicativity(const HeckeTables& t);       // tau(mn) = tau(m)tau(n), gcd(m,n)=1
long check_deligne(const HeckeTables& t);                // tau(p)^2 <= 4 p^11
long check_congruence_691(const HeckeTables& t);         // tau(n) = sigma_11(n) mod 691
bool check_lambda_divisor_bound(const HeckeTables& t);   // |lambda(n)| <= d(n)

// Mollifier data: mu values, smoothed product coefficients c_n, and the
// integer certificate C_n = n^{11/2} c_n which vanishes exactly for
// 1 < n <= X.
struct MollifierTable {
  int X = 0;
  int n_max = 0;
  std::vector<double> mu;    // mu[n] for n <= X, the approximate-inverse coefficients
  std::vector<double> c;     // c[n] for n <= n_max
  std::vector<BigInt> cert;  // cert[n] for n <= X
};

MollifierTable build_mollifier(const HeckeTables& t, int X, int n_max);

// Smallest-prime-factor sieve (index 0,1 unset).
std::vector<int> spf_sieve(int n_max);

}  // namespace zd
