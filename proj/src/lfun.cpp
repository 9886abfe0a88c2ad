#include "bplab/lfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bplab/util.hpp"

namespace bplab::lfun {

namespace {

cplx inverse_factor_product(const std::vector<cplx>& roots, cplx t) {
  cplx prod = 1.0;
  for (cplx r : roots) {
    cplx f = 1.0 - r * t;
    if (std::abs(f) <= 1e-14 * (1.0 + std::abs(r * t)))
      throw pole_error("local_factor: inverse factor vanishes");
    prod *= f;
  }
  return 1.0 / prod;
}

}  // namespace

cplx local_factor(LocalFactorKind kind, cplx a, cplx b, cplx p_to_minus_s) {
  if (kind == LocalFactorKind::spin)
    return inverse_factor_product({a, b, 1.0 / a, 1.0 / b}, p_to_minus_s);
  return inverse_factor_product({1.0, a * b, a / b, b / a, 1.0 / (a * b)}, p_to_minus_s);
}

cplx local_factor(LocalFactorKind kind, const measures::SpectralPoint& pt, long p, cplx s) {
  cplx t = std::pow(static_cast<double>(p), -s);
  return local_factor(kind, pt.a(), pt.b(), t);
}

DirichletCoefficients dirichlet_coefficients(long p, int M) {
  if (M < 0) throw std::invalid_argument("dirichlet_coefficients: M must be >= 0");
  wpoly::Ctx ctx{wpoly::Mode::exact, p};
  DirichletCoefficients out{p, {}, {}};
  for (int m = 0; m <= M; ++m) {
    wpoly::LaurentPolynomial hm(ctx);
    for (int k1 = 0; k1 <= m; ++k1)
      for (int k2 = 0; k1 + k2 <= m; ++k2)
        for (int k3 = 0; k1 + k2 + k3 <= m; ++k3) {
          int k4 = m - k1 - k2 - k3;
          hm.add_term(k1 - k3, k2 - k4, wpoly::Coefficient(1));
        }
    out.H.push_back(std::move(hm));
    if (m == 0)
      out.c.push_back(wpoly::LaurentPolynomial::constant(ctx, wpoly::Coefficient(4)));
    else
      out.c.push_back(wpoly::orbit_sum(ctx, m, 0));
  }
  return out;
}

cplx closed_form_local_average(int eps, double lambda, long p, cplx s) {
  double pd = static_cast<double>(p);
  cplx denom = 1.0 - lambda * std::pow(pd, -0.5 - s) +
               static_cast<double>(eps) * std::pow(pd, -1.0 - 2.0 * s);
  return 1.0 / denom;
}

LocalAverage average_local_factor(const classgroup::ClassGroup& G,
                                  const classgroup::Character& chi, long p, cplx s,
                                  const measures::QuadratureLadder& rule) {
  if (s.real() <= 0.5)
    throw unsupported_region("average_local_factor: requires Re(s) > 1/2");
  auto datum = measures::make_datum(G, chi, p);
  auto mp = measures::SpectralMeasure::plancherel(datum);
  cplx t = std::pow(static_cast<double>(p), -s);
  auto f = [t](measures::SpectralPoint pt) {
    return local_factor(LocalFactorKind::spin, pt.a(), pt.b(), t);
  };
  auto r = measures::integrate(f, mp, rule);
  if (!r.converged)
    throw std::runtime_error("average_local_factor: quadrature did not converge");
  double lambda = datum.lambda.to_complex().real();
  return {r.value, closed_form_local_average(datum.eps, lambda, p, s), r.err_estimate};
}

EulerProductResult euler_product_average(const classgroup::ClassGroup& G,
                                         const classgroup::Character& chi, cplx s,
                                         long prime_cutoff) {
  if (s.real() <= 0.5)
    throw unsupported_region("euler_product_average: requires Re(s) > 1/2");
  if (prime_cutoff < 2)
    throw std::invalid_argument("euler_product_average: cutoff must be >= 2");
  EulerProductResult out{1.0, {}, 0.0};
  long next_decade = 10;
  for (long p : sieve_primes(prime_cutoff)) {
    while (p > next_decade && next_decade < prime_cutoff) {
      out.partials.emplace_back(next_decade, out.value);
      next_decade *= 10;
    }
    out.value *= closed_form_local_average(G.eps(p), classgroup::lambda_p(G, chi, p), p, s);
  }
  out.partials.emplace_back(prime_cutoff, out.value);
  double beta = s.real() + 0.5;
  out.log_tail_bound =
      3.0 * std::pow(static_cast<double>(prime_cutoff), 1.0 - beta) / (beta - 1.0);
  return out;
}

SeriesValue dirichlet_series(const std::vector<cplx>& chi, cplx s, long terms) {
  if (chi.empty()) throw std::invalid_argument("dirichlet_series: empty period");
  if (terms < 1000) throw std::invalid_argument("dirichlet_series: terms must be >= 1000");
  const long q = static_cast<long>(chi.size());
  cplx mean = 0.0;
  for (cplx v : chi) mean += v;
  mean /= static_cast<double>(q);
  const bool mean_zero = std::abs(mean) < 1e-15;
  if (s.real() <= 1.0 && !(mean_zero && s.real() >= 1.0))
    throw unsupported_region("dirichlet_series: plain summation needs Re(s) > 1 "
                             "(or mean-zero coefficients at Re(s) = 1)");

  const long N = terms;
  /* compensated summation; absum and evalerr feed the rounding envelope
     (per-term error of exp(-s log n) is ~(|s| log n + 3) ulp relative) */
  cplx sum = 0.0, comp = 0.0;
  double absum = 0.0, evalerr = 0.0;
  const double smag = std::abs(s);
  for (long n = 1; n <= N; ++n) {
    cplx v = chi[static_cast<size_t>(n % q)];
    if (v == 0.0) continue;
    double ln = std::log(static_cast<double>(n));
    cplx term = v * std::exp(-s * ln);
    double at = std::abs(term);
    absum += at;
    evalerr += (smag * ln + 3.0) * at;
    cplx y = term - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  /* tail, split as mean * (zeta tail) + mean-zero oscillating tail */
  const double Nd = static_cast<double>(N);
  cplx tail = 0.0;
  if (!mean_zero) {
    cplx NmS = std::exp(-s * std::log(Nd));
    tail += mean * (NmS * Nd / (s - 1.0) - 0.5 * NmS + s * NmS / (12.0 * Nd));
  }
  /* mean partial sum of the oscillating part over the period after N */
  cplx gbar = 0.0;
  for (long j = 1; j <= q; ++j)
    gbar += static_cast<double>(j) * (chi[static_cast<size_t>((N + j) % q)] - mean);
  gbar /= -static_cast<double>(q);
  tail += gbar * std::exp(-s * std::log(Nd));

  double sigma = s.real();
  double bound = std::abs(mean) * (std::abs(s) + 2.0) * std::pow(Nd, -sigma - 2.0) +
                 static_cast<double>(q) * static_cast<double>(q) * (std::abs(s) + 1.0) *
                     std::pow(Nd, -sigma - 1.0);
  /* truncation plus floating-point rounding: compensated accumulation costs
     2 ulp of absum, each term its evaluation error, the tail its own */
  const double eps = std::numeric_limits<double>::epsilon();
  bound += eps * (evalerr + 2.0 * absum + 4.0 * std::abs(tail));
  return {sum + tail, bound};
}

SeriesValue zeta(cplx s, long terms) { return dirichlet_series({cplx(1.0)}, s, terms); }

SeriesValue dirichlet_L_minus_d(long d, cplx s, long terms) {
  if (!classgroup::is_fundamental(d))
    throw std::invalid_argument("dirichlet_L_minus_d: -d must be fundamental");
  std::vector<cplx> chi(static_cast<size_t>(d));
  for (long r = 0; r < d; ++r) chi[static_cast<size_t>(r)] = static_cast<double>(kronecker(-d, r));
  return dirichlet_series(chi, s, terms);
}

SeriesValue hecke_L_oracle(const classgroup::ClassGroup& G, const classgroup::Character& chi,
                           cplx s, long box) {
  if (s.real() <= 1.0) throw unsupported_region("hecke_L_oracle: requires Re(s) > 1");
  if (box < 10) throw std::invalid_argument("hecke_L_oracle: box too small");
  /* the box certainly exhausts all values up to lambda_min * box^2, with
     lambda_min the smallest Gram eigenvalue over all reduced forms */
  double lambda_min = std::numeric_limits<double>::infinity();
  for (const auto& f : G.classes()) {
    double tr = static_cast<double>(f.a + f.c);
    double det_part = std::sqrt(static_cast<double>((f.a - f.c) * (f.a - f.c)) +
                                static_cast<double>(f.b) * static_cast<double>(f.b));
    lambda_min = std::min(lambda_min, (tr - det_part) / 2.0);
  }
  const double nmax = lambda_min * static_cast<double>(box) * static_cast<double>(box);

  cplx total = 0.0;
  for (int ci = 0; ci < G.h(); ++ci) {
    const auto& f = G.classes()[static_cast<size_t>(ci)];
    cplx class_sum = 0.0;
    for (long x = -box; x <= box; ++x)
      for (long y = -box; y <= box; ++y) {
        if (x == 0 && y == 0) continue;
        long v = f.a * x * x + f.b * x * y + f.c * y * y;
        if (static_cast<double>(v) > nmax) continue;
        class_sum += std::exp(-s * std::log(static_cast<double>(v)));
      }
    total += chi.value(ci) * class_sum;
  }
  total /= static_cast<double>(G.w());
  double sigma = s.real();
  double bound = 2.0 * std::log(nmax) * std::pow(nmax, 1.0 - sigma) / (sigma - 1.0);
  return {total, bound};
}

NormalizingConstants normalizing_constants(int k, long d) {
  if (k < 3) throw std::invalid_argument("normalizing_constants: k must be >= 3");
  classgroup::ClassGroup G(d);
  double log_ck = std::log(std::sqrt(std::numbers::pi) / 4.0) +
                  (3.0 - 2.0 * k) * std::log(4.0 * std::numbers::pi) +
                  std::lgamma(k - 1.5) + std::lgamma(k - 2.0);
  double log_ckd = (1.5 - k) * std::log(static_cast<double>(d) / 4.0) + std::log(4.0) +
                   log_ck - std::log(static_cast<double>(G.w()) * G.h());
  return {log_ck, log_ckd};
}

double log_ckd_alternative(int k, long d, double L1) {
  if (k < 3) throw std::invalid_argument("log_ckd_alternative: k must be >= 3");
  if (L1 <= 0.0) throw std::invalid_argument("log_ckd_alternative: L1 must be positive");
  classgroup::ClassGroup G(d);
  double log_ck = normalizing_constants(k, d).log_ck;
  return (1.0 - k) * std::log(static_cast<double>(d) / 4.0) +
         std::log(4.0 * std::numbers::pi) + log_ck -
         std::log(static_cast<double>(G.w()) * G.w() * L1);
}

}  // namespace bplab::lfun
