#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/laurent.hpp"
#include "bplab/measures.hpp"

namespace bplab::lfun {

using cplx = std::complex<double>;

enum class LocalFactorKind { spin, projection };

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct unsupported_region : std::domain_error {
  using std::domain_error::domain_error;
};

/* Product of the inverse linear factors at t = p^{-s}: degree 4 with roots
   {a, b, 1/a, 1/b} (spin), degree 5 with roots {1, ab, a/b, b/a, 1/(ab)}
   (projection). Throws pole_error if a factor vanishes. */
cplx local_factor(LocalFactorKind kind, cplx a, cplx b, cplx p_to_minus_s);
cplx local_factor(LocalFactorKind kind, const measures::SpectralPoint& pt, long p, cplx s);

/* H_m = complete homogeneous expansion of the spin factor: coefficient of
   T^m in prod(1 - rT)^{-1} over the four spin roots, as a W-invariant
   Laurent polynomial; c_m = a^m + a^{-m} + b^m + b^{-m}. */
struct DirichletCoefficients {
  long p;
  std::vector<wpoly::LaurentPolynomial> H; /* H[0..M] */
  std::vector<wpoly::LaurentPolynomial> c; /* c[0..M], c[0] = 4 */
};
DirichletCoefficients dirichlet_coefficients(long p, int M);

/* Local average of the spin factor against mu_{p,d,Lambda}: quadrature on
   one side, the closed form (1 - lambda_p p^{-1/2-s} + eps p^{-1-2s})^{-1}
   on the other. Requires Re(s) > 1/2. Quadrature non-convergence throws. */
struct LocalAverage {
  cplx numeric;
  cplx closed_form;
  double err_estimate;
};
LocalAverage average_local_factor(const classgroup::ClassGroup& G,
                                  const classgroup::Character& chi, long p, cplx s,
                                  const measures::QuadratureLadder& rule = {});

/* Closed-form factor alone (no quadrature). */
cplx closed_form_local_average(int eps, double lambda, long p, cplx s);

/* Product of closed-form local averages over p <= cutoff, with partial
   products recorded at each decade and a crude absolute log-tail bound
   3 * cutoff^{1/2 - Re s} / (Re s - 1/2). */
struct EulerProductResult {
  cplx value;
  std::vector<std::pair<long, cplx>> partials; /* (cutoff, partial product) */
  double log_tail_bound;
};
EulerProductResult euler_product_average(const classgroup::ClassGroup& G,
                                         const classgroup::Character& chi, cplx s,
                                         long prime_cutoff);

/* Truncated Dirichlet series over a periodic coefficient sequence
   chi[0..q-1] = values at n = 1..q (mod q), with an Euler-Maclaurin /
   mean-partial-sum tail correction added and a bound on the remaining
   error attached (series truncation plus a floating-point rounding
   envelope, so |value - L| <= tail_bound holds in double precision).
   Principal sequences (nonzero mean) need Re(s) > 1; mean-zero sequences
   are accepted for Re(s) >= 1. */
struct SeriesValue {
  cplx value;
  double tail_bound;
};
SeriesValue dirichlet_series(const std::vector<cplx>& chi, cplx s, long terms);

/* zeta(s) = dirichlet_series({1}, s, terms). */
SeriesValue zeta(cplx s, long terms);

/* L(s, chi_{-d}) for the quadratic character kronecker(-d, .) of period d. */
SeriesValue dirichlet_L_minus_d(long d, cplx s, long terms);

/* Hecke L-function oracle by form-class representation numbers:
   sum over classes c of Lambda(c)/w times sum over the lattice box
   |x|,|y| <= box of Q_c(x,y)^{-s}, counting only values below the level
   the box provably exhausts. Requires Re(s) > 1. */
SeriesValue hecke_L_oracle(const classgroup::ClassGroup& G, const classgroup::Character& chi,
                           cplx s, long box = 200);

/* log c_k = log(sqrt(pi)/4) + (3-2k) log(4 pi) + lgamma(k - 3/2)
   + lgamma(k - 2), and log c_{k,d} = (3/2 - k) log(d/4) + log 4 + log c_k
   - log(w h); k >= 3. */
struct NormalizingConstants {
  double log_ck;
  double log_ckd;
};
NormalizingConstants normalizing_constants(int k, long d);
/* The class-number-formula variant (d/4)^{1-k} 4 pi c_k / (w^2 L1) in log
   space, for cross-checking the two printed forms. */
double log_ckd_alternative(int k, long d, double L1);

}  // namespace bplab::lfun
