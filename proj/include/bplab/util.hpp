#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace bplab {

/* Primes <= limit, sieve of Eratosthenes. */
std::vector<long> sieve_primes(long limit);

bool is_prime(long n);

/* Kronecker symbol (D|n), the full multiplicative extension of the Legendre
   symbol to all integers n (including n even, zero or negative). */
int kronecker(long long D, long long n);

/* Digamma psi(z) = Gamma'(z)/Gamma(z) for Re z > 0, by upward shift to
   |z| >= 16 followed by the Stirling series. Absolute error ~1e-14 in the
   argument ranges used here (Re z >= 1). */
double digamma(double x);
std::complex<double> digamma(std::complex<double> z);

}  // namespace bplab
