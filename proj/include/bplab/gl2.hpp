#pragma once

#include <gmpxx.h>

#include <functional>
#include <utility>
#include <vector>

namespace bplab::gl2 {

/* J_nu(x) for nu >= 0 with 2 nu integral: ascending series with log-Gamma
   coefficients where it is cancellation-free (x <= 2 sqrt(nu+1) + 2),
   normalized backward (Miller) recurrence elsewhere. The flag marks the
   validated envelope nu <= 200, x <= 10^4 (absolute error <= 1e-10 there). */
struct BesselResult {
  double value;
  bool in_validated_range;
};
BesselResult bessel_j(double nu, double x);

/* Max of |J_k(x)| / bound over each bound's stated domain:
   (1) x^k / Gamma(k+1)      for 0 < x <= sqrt(k+1),
   (2) min(1, x/k) k^{-1/3}  for x >= 1,
   (3) 2^k / sqrt(x)         for x > 0. */
struct BoundFit {
  int bound_id;
  double max_ratio;
  long points_checked;
};
std::vector<BoundFit> verify_bessel_bounds(const std::vector<int>& k_range,
                                           const std::vector<double>& x_grid);

/* Integral over [0, pi/2] of J_{k-3/2}(4 pi s1 sin t) J_{k-3/2}(4 pi s2
   sin t) sin t dt by adaptive quadrature; decays like k^{-2/3} once
   s1, s2 >= 1. */
struct KitaokaResult {
  double value;
  double err_estimate;
};
KitaokaResult kitaoka_integral(int k, double s1, double s2);

/* Classical Kloosterman sum S(m, n; c) = sum over x mod c, (x,c)=1, of
   e((m x + n x^-1)/c); real by x -> -x symmetry (residual reported), with
   the Weil bound d(c) gcd(m,n,c)^{1/2} c^{1/2} attached. */
struct KloostermanSum {
  double value;
  double imag_residual;
  double weil_bound;
};
KloostermanSum kloosterman(long m, long n, long c);

/* Chebyshev U_l (three-term recursion evaluator on [-2, 2]) and its
   integral against the Sato-Tate probability density (1/pi) sqrt(1 - x^2/4),
   which is [l = 0]. */
struct ChebyshevSatoTate {
  std::function<double(double)> poly;
  double integral;
};
ChebyshevSatoTate chebyshev_sato_tate(int l);

/* Two routes to lambda(L) from angles at the primes dividing L: the product
   of U_{l_p}(2 cos theta_p) in closed sin form vs the Hecke power recursion
   lambda(p^{j+1}) = lambda(p) lambda(p^j) - lambda(p^{j-1}); returns the
   absolute difference. */
double hecke_multiplicativity_residual(
    const std::vector<std::pair<long, double>>& theta_by_prime, long L);

/* Kloosterman side of the Petersson formula, normalized so that it equals
   delta(L,1) - sum_f omega_f lambda_f(L); for weights with no cusp forms it
   is delta(L,1) on the nose:
     -2 pi i^{-k} sum_{c <= c_max} c^{-1} S(L,1;c) J_{k-1}(4 pi sqrt L / c).
   Tail bound from the series envelope of J_{k-1}; the flag is set when it
   exceeds 1e-8 (insufficient cutoff). Summation over c runs on 64 fixed
   logical streams reduced in order (thread-count independent). */
struct PeterssonSide {
  double value;
  double tail_bound;
  bool insufficient_cutoff;
};
PeterssonSide petersson_kloosterman_side(int k, long L, long c_max);

/* tau(1..N) of the discriminant cusp form, exact integers from the sparse
   eta^3 series squared up three times (q prod (1-q^n)^24). */
struct QExpansion {
  std::vector<mpz_class> tau; /* tau[i] = tau(i+1) */
};
QExpansion delta_q_expansion(int N);

}  // namespace bplab::gl2
