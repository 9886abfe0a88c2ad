#include "bplab/lowlying.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bplab/parallel.hpp"
#include "bplab/rng.hpp"
#include "bplab/util.hpp"

namespace bplab::lowlying {

namespace {

constexpr int kSampleStreams = 64;
constexpr double kPi = std::numbers::pi;

double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/* Largest prime index bound so that phi_hat(m log p / log k^2) can be
   nonzero: log p < (alpha/m) log k^2. */
long weight_support_bound(double alpha, double k, int m) {
  double b = std::exp(alpha / m * 2.0 * std::log(k));
  require(b < 2e8, "prime sum support exceeds sieve budget");
  return static_cast<long>(std::floor(b)) + 1;
}

/* c_m(x) = 2 cos(m theta1) + 2 cos(m theta2), the trace of the m-th power
   on the degree-4 parameter. */
double trace_power(const measures::SpectralPoint& x, int m) {
  return 2.0 * std::cos(m * x.theta1) + 2.0 * std::cos(m * x.theta2);
}

struct PrimeWeight {
  long p;
  double a1, a2; /* premultiplied weights for the m = 1, 2 terms */
};

/* Per-prime weights (2/log k^2)(log p) p^{-m/2} phi_hat(m log p/log k^2),
   dropping primes where both vanish. */
std::vector<PrimeWeight> collect_weights(double k, const TestFunction& phi, long cutoff) {
  double L = 2.0 * std::log(k);
  std::vector<PrimeWeight> out;
  for (long p : sieve_primes(cutoff)) {
    double lp = std::log(static_cast<double>(p));
    double w1 = phi.phi_hat(lp / L);
    double w2 = phi.phi_hat(2.0 * lp / L);
    if (w1 <= 0.0 && w2 <= 0.0) continue;
    out.push_back({p, 2.0 / L * lp / std::sqrt(static_cast<double>(p)) * w1,
                   2.0 / L * lp / static_cast<double>(p) * w2});
  }
  return out;
}

}  // namespace

TestFunction fejer_test_function(double alpha) {
  require(alpha > 0.0, "fejer_test_function: alpha must be positive");
  auto phi = [alpha](double x) {
    double s = sinc(kPi * alpha * x);
    return alpha * s * s;
  };
  auto phi_hat = [alpha](double t) { return std::max(0.0, 1.0 - std::abs(t) / alpha); };
  return TestFunction(alpha, phi, phi_hat, "fejer");
}

double sigma_integral(const TestFunction& phi, SymmetryType type) {
  double half = phi.phi(0.0) / 2.0;
  return phi.phi_hat(0.0) + (type == SymmetryType::Sp ? -half : half);
}

PrimeSumResult prime_sum_M(const TestFunction& phi, double k, const classgroup::ClassGroup& G,
                           const classgroup::Character& chi) {
  require(k >= 10.0, "prime_sum_M: k must be >= 10");
  double L = 2.0 * std::log(k);
  long bound = weight_support_bound(phi.alpha(), k, 1);
  double sum = 0.0;
  long last = 0;
  for (long p : sieve_primes(bound)) {
    double lp = std::log(static_cast<double>(p));
    double w = phi.phi_hat(lp / L);
    if (w <= 0.0) continue;
    sum += classgroup::lambda_p(G, chi, p) * lp / static_cast<double>(p) * w;
    last = p;
  }
  double value = 2.0 / L * sum;
  double target = phi.phi(0.0);
  return {value, target, std::abs(value - target), last};
}

PrimeSumResult prime_sum_N(const TestFunction& phi, double k) {
  require(k >= 10.0, "prime_sum_N: k must be >= 10");
  double L = 2.0 * std::log(k);
  long bound = weight_support_bound(phi.alpha(), k, 2);
  double sum = 0.0;
  long last = 0;
  for (long p : sieve_primes(bound)) {
    double lp = std::log(static_cast<double>(p));
    double w = phi.phi_hat(2.0 * lp / L);
    if (w <= 0.0) continue;
    sum += lp / static_cast<double>(p) * w;
    last = p;
  }
  double value = 2.0 / L * sum;
  double target = phi.phi(0.0) / 2.0;
  return {value, target, std::abs(value - target), last};
}

GammaTermStats gamma_term_check(double k, const std::vector<double>& t_grid) {
  require(k >= 10.0, "gamma_term_check: k must be >= 10");
  auto f = [k](double t) {
    return digamma(std::complex<double>(k - 1.0, t)) + digamma(std::complex<double>(k - 2.0, -t));
  };
  std::complex<double> f0 = f(0.0);
  double offset0 = std::abs(f0 - 2.0 * std::log(k));
  double curvature = 0.0;
  for (double t : t_grid) {
    if (std::abs(t) < 0.5) continue; /* statistic degenerates like 1/t at 0 */
    curvature = std::max(curvature, std::abs(f(t) - f0) * k * k / (t * t));
  }
  return {offset0, offset0 * k, curvature};
}

DensityEstimate synthetic_family_density(double k, const classgroup::ClassGroup& G,
                                         const classgroup::Character& chi,
                                         const TestFunction& phi, long prime_cutoff,
                                         long n_samples, std::uint64_t seed) {
  require(k >= 10.0, "synthetic_family_density: k must be >= 10");
  require(prime_cutoff >= 2, "synthetic_family_density: prime_cutoff must be >= 2");
  require(n_samples >= 1, "synthetic_family_density: n_samples must be >= 1");

  auto weights = collect_weights(k, phi, prime_cutoff);
  std::vector<measures::SpectralMeasure> mus;
  mus.reserve(weights.size());
  for (const auto& w : weights)
    mus.push_back(measures::SpectralMeasure::plancherel(measures::make_datum(G, chi, w.p)));

  double base = phi.phi_hat(0.0);
  std::vector<double> sums(kSampleStreams, 0.0), sumsqs(kSampleStreams, 0.0);
  parallel_streams(kSampleStreams, [&](int s) {
    Rng rng = Rng::stream(seed, s);
    for (long i = s; i < n_samples; i += kSampleStreams) {
      double score = base;
      for (std::size_t j = 0; j < weights.size(); ++j) {
        measures::SpectralPoint x = measures::sample(mus[j], rng, 1)[0];
        score -= weights[j].a1 * trace_power(x, 1) + weights[j].a2 * trace_power(x, 2);
      }
      sums[s] += score;
      sumsqs[s] += score * score;
    }
  });

  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < kSampleStreams; ++s) {
    sum += sums[s];
    sumsq += sumsqs[s];
  }
  double mean = sum / static_cast<double>(n_samples);
  double se = 0.0;
  if (n_samples > 1) {
    double var = (sumsq - static_cast<double>(n_samples) * mean * mean) /
                 static_cast<double>(n_samples - 1);
    se = std::sqrt(std::max(0.0, var) / static_cast<double>(n_samples));
  }
  long last = weights.empty() ? 0 : weights.back().p;
  return {mean, se, n_samples, last, sigma_integral(phi, SymmetryType::Sp),
          sigma_integral(phi, SymmetryType::O)};
}

double synthetic_family_expectation(double k, const classgroup::ClassGroup& G,
                                    const classgroup::Character& chi, const TestFunction& phi,
                                    long prime_cutoff) {
  require(k >= 10.0, "synthetic_family_expectation: k must be >= 10");
  double e = phi.phi_hat(0.0);
  for (const auto& w : collect_weights(k, phi, prime_cutoff)) {
    auto mu = measures::SpectralMeasure::plancherel(measures::make_datum(G, chi, w.p));
    for (int m : {1, 2}) {
      double coeff = m == 1 ? w.a1 : w.a2;
      if (coeff == 0.0) continue;
      auto r = measures::integrate(
          [m](const measures::SpectralPoint& x) {
            return std::complex<double>(trace_power(x, m), 0.0);
          },
          mu);
      e -= coeff * r.value.real();
    }
  }
  return e;
}

}  // namespace bplab::lowlying
