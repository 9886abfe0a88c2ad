#include "bplab/util.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bplab {

std::vector<long> sieve_primes(long limit) {
  std::vector<long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (long p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  int k = 1;
  if (v & 1) {
    long long am8 = ((a % 8) + 8) % 8; /* (a|2) depends on a mod 8 */
    if (am8 == 3 || am8 == 5) k = -1;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  /* n odd positive from here: Jacobi loop with quadratic reciprocity */
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) k = -k;
    }
    std::swap(a, n);
    if ((a % 4) == 3 && (n % 4) == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

namespace {

/* Stirling series for psi, valid once |z| is large; coefficients are
   B_{2n}/(2n) for 2n = 2..14. */
template <typename T>
T digamma_impl(T z) {
  static const double coef[] = {1.0 / 12,  -1.0 / 120,       1.0 / 252, -1.0 / 240,
                                1.0 / 132, -691.0 / 32760.0, 1.0 / 12};
  T shift(0.0);
  while (std::abs(z) < 16.0) {
    shift -= T(1.0) / z;
    z += T(1.0);
  }
  T inv2 = T(1.0) / (z * z);
  T series(0.0);
  T power = inv2;
  for (double c : coef) {
    series += c * power;
    power *= inv2;
  }
  return shift + std::log(z) - T(0.5) / z - series;
}

}  // namespace

double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("digamma: requires Re z > 0");
  return digamma_impl(x);
}

std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0)) throw std::domain_error("digamma: requires Re z > 0");
  return digamma_impl(z);
}

}  // namespace bplab
