#include "bplab/gl2.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bplab/parallel.hpp"
#include "bplab/quadrature.hpp"

namespace bplab::gl2 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStreams = 64;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/* Ascending series sum_m (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1)); safe
   (monotone-dominated terms) in the regime guarded by the caller. */
double series_j(double nu, double x) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  double lx = std::log(x / 2.0);
  double sum = 0.0;
  for (int m = 0; m < 400; ++m) {
    double lt = (2 * m + nu) * lx - std::lgamma(m + 1.0) - std::lgamma(m + nu + 1.0);
    double t = std::exp(lt);
    sum += (m % 2 ? -t : t);
    if (t < 1e-18 * (std::abs(sum) + 1e-300) && m > 2) break;
  }
  return sum;
}

/* Miller backward recurrence over the order ladder mu = base + i, with
   rescaling; normalized against the even-order sum (integer base) or the
   closed-form J_{1/2}, J_{3/2} (half-integer base). */
double miller_j(double nu, double x) {
  bool half = std::abs(nu - std::floor(nu) - 0.5) < 0.25;
  double base = half ? 0.5 : 0.0;
  int target = static_cast<int>(std::llround(nu - base));
  int start = static_cast<int>(std::max(nu, x + 15.0 * std::cbrt(x))) + 20;
  if (start < target + 10) start = target + 10;

  double jp = 0.0, j = 1e-30;   /* J_{start+1}, J_{start} (unnormalized) */
  double captured = 0.0;        /* unnormalized J_target */
  double even_sum = 0.0;        /* J_0 + 2 (J_2 + J_4 + ...) */
  double j1 = 0.0;              /* unnormalized value one above the bottom */
  for (int i = start; i >= 0; --i) {
    if (i == target) captured = j;
    if (!half && i % 2 == 0) even_sum += (i == 0 ? j : 2.0 * j);
    if (i == 1) j1 = j;
    if (i > 0) {
      double jm = (2.0 * (base + i) / x) * j - jp;
      jp = j;
      j = jm;
      if (std::abs(j) > 1e250) {
        j *= 1e-250;
        jp *= 1e-250;
        captured *= 1e-250;
        even_sum *= 1e-250;
        j1 *= 1e-250;
      }
    }
  }
  if (!half) return captured / even_sum;
  /* bottom pair is J_{1/2}, J_{3/2}; pivot on the better-conditioned one */
  double e0 = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
  double e1 = std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x));
  return std::abs(e0) >= std::abs(e1) ? captured * (e0 / j) : captured * (e1 / j1);
}

long long mod_inverse(long long a, long long c) {
  long long r0 = c, r1 = ((a % c) + c) % c, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % c) + c) % c;
}

long divisor_count(long c) {
  long d = 0;
  for (long i = 1; i * i <= c; ++i)
    if (c % i == 0) d += (i * i == c ? 1 : 2);
  return d;
}

/* U_l(x) by the three-term recursion; stable on [-2, 2]. */
double chebyshev_u(int l, double x) {
  double um = 1.0, u = x;
  if (l == 0) return 1.0;
  for (int i = 1; i < l; ++i) {
    double un = x * u - um;
    um = u;
    u = un;
  }
  return u;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

/* log of the alternating-series envelope |J_nu(x)| <= (x/2)^nu / Gamma(nu+1)
   * 1/(1-r), valid for r = x^2/(4(nu+1)) < 1; +inf when out of regime. */
double log_series_envelope(double nu, double x) {
  double r = x * x / (4.0 * (nu + 1.0));
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return nu * std::log(x / 2.0) - std::lgamma(nu + 1.0) - std::log1p(-r);
}

}  // namespace

BesselResult bessel_j(double nu, double x) {
  require(nu >= 0.0 && x >= 0.0, "bessel_j: need nu >= 0 and x >= 0");
  require(std::abs(2.0 * nu - std::llround(2.0 * nu)) < 1e-12,
          "bessel_j: order must be integer or half-integer");
  bool ok = nu <= 200.0 && x <= 1e4;
  if (x <= 2.0 * std::sqrt(nu + 1.0) + 2.0) return {series_j(nu, x), ok};
  return {miller_j(nu, x), ok};
}

std::vector<BoundFit> verify_bessel_bounds(const std::vector<int>& k_range,
                                           const std::vector<double>& x_grid) {
  std::vector<BoundFit> out = {{1, 0.0, 0}, {2, 0.0, 0}, {3, 0.0, 0}};
  for (int k : k_range) {
    require(k >= 1, "verify_bessel_bounds: orders must be >= 1");
    for (double x : x_grid) {
      require(x >= 0.0, "verify_bessel_bounds: grid must be nonnegative");
      if (x == 0.0) continue;
      double j = bessel_j(k, x).value;
      double lj = std::log(std::abs(j) + 1e-300);
      if (x <= std::sqrt(k + 1.0) && j != 0.0) { /* both sides underflow together */
        double lb = k * std::log(x) - std::lgamma(k + 1.0);
        out[0].max_ratio = std::max(out[0].max_ratio, std::exp(lj - lb));
        ++out[0].points_checked;
      }
      if (x >= 1.0) {
        double b = std::min(1.0, x / k) * std::pow(k, -1.0 / 3.0);
        out[1].max_ratio = std::max(out[1].max_ratio, std::abs(j) / b);
        ++out[1].points_checked;
      }
      double lb3 = k * std::log(2.0) - 0.5 * std::log(x);
      out[2].max_ratio = std::max(out[2].max_ratio, std::exp(lj - lb3));
      ++out[2].points_checked;
    }
  }
  return out;
}

KitaokaResult kitaoka_integral(int k, double s1, double s2) {
  require(k >= 6, "kitaoka_integral: k must be >= 6");
  require(s1 > 0.0 && s2 > 0.0, "kitaoka_integral: s1, s2 must be positive");
  double nu = k - 1.5;
  auto f = [nu, s1, s2](double t) {
    double st = std::sin(t);
    return bessel_j(nu, 4.0 * kPi * s1 * st).value * bessel_j(nu, 4.0 * kPi * s2 * st).value *
           st;
  };
  auto r = integrate_adaptive(f, 0.0, kPi / 2.0, 1e-11);
  if (!r.converged) throw std::runtime_error("kitaoka_integral: quadrature failed to converge");
  return {r.value, r.error};
}

KloostermanSum kloosterman(long m, long n, long c) {
  require(c >= 1, "kloosterman: c must be >= 1");
  std::complex<double> s = 0.0;
  if (c == 1) {
    s = 1.0;
  } else {
    long long mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
    for (long x = 1; x < c; ++x) {
      if (std::gcd(x, c) != 1) continue;
      long long xi = mod_inverse(x, c);
      long long num = (mm * x % c + nn * xi % c) % c;
      double arg = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(c);
      s += std::complex<double>(std::cos(arg), std::sin(arg));
    }
  }
  long g = std::gcd(std::gcd(std::abs(m), std::abs(n)), c);
  double weil = divisor_count(c) * std::sqrt(static_cast<double>(g)) *
                std::sqrt(static_cast<double>(c));
  return {s.real(), std::abs(s.imag()), weil};
}

ChebyshevSatoTate chebyshev_sato_tate(int l) {
  require(l >= 0, "chebyshev_sato_tate: l must be >= 0");
  /* x = 2 cos t turns the density into (2/pi) sin^2 t on [0, pi]; the
     evaluator stays the generic recursion, the delta is the oracle */
  auto f = [l](double t) {
    return chebyshev_u(l, 2.0 * std::cos(t)) * (2.0 / kPi) * std::sin(t) * std::sin(t);
  };
  auto r = integrate_adaptive(f, 0.0, kPi, 1e-12);
  if (!r.converged)
    throw std::runtime_error("chebyshev_sato_tate: quadrature failed to converge");
  return {[l](double x) { return chebyshev_u(l, x); }, r.value};
}

double hecke_multiplicativity_residual(
    const std::vector<std::pair<long, double>>& theta_by_prime, long L) {
  require(L >= 1, "hecke_multiplicativity_residual: L must be >= 1");
  double closed = 1.0, recursive = 1.0;
  for (auto [p, e] : factorize(L)) {
    double theta = -1.0;
    for (const auto& [q, t] : theta_by_prime)
      if (q == p) theta = t;
    require(theta >= 0.0, "hecke_multiplicativity_residual: missing angle for a prime factor");
    /* closed sin form (recursion fallback where sin theta degenerates) */
    double st = std::sin(theta);
    closed *= std::abs(st) > 1e-8 ? std::sin((e + 1) * theta) / st
                                  : chebyshev_u(e, 2.0 * std::cos(theta));
    /* Hecke power recursion on lambda(p^j) */
    double lam1 = 2.0 * std::cos(theta), prev = 1.0, cur = lam1;
    for (int j = 1; j < e; ++j) {
      double next = lam1 * cur - prev;
      prev = cur;
      cur = next;
    }
    recursive *= cur;
  }
  return std::abs(closed - recursive);
}

PeterssonSide petersson_kloosterman_side(int k, long L, long c_max) {
  require(k >= 6 && k % 2 == 0, "petersson_kloosterman_side: k must be even and >= 6");
  require(L >= 1 && c_max >= 1, "petersson_kloosterman_side: need L >= 1, c_max >= 1");
  double sqL = std::sqrt(static_cast<double>(L));

  /* any c with |J_{k-1}(x_c)| below this cannot move the sum at the 1e-8
     scale: |S(L,1;c)|/c <= 1 termwise, and the skipped mass is folded into
     the reported tail bound */
  constexpr double kNegligibleJ = 1e-25;
  std::vector<double> partial(kStreams, 0.0);
  parallel_streams(kStreams, [&](int s) {
    for (long c = 1 + s; c <= c_max; c += kStreams) {
      double x = 4.0 * kPi * sqL / static_cast<double>(c);
      double j = bessel_j(k - 1, x).value;
      if (std::abs(j) < kNegligibleJ) continue;
      partial[s] += kloosterman(L, 1, c).value / static_cast<double>(c) * j;
    }
  });
  double sum = 0.0;
  for (int s = 0; s < kStreams; ++s) sum += partial[s];

  /* i^{-k} = (-1)^{k/2} for even k */
  double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  double value = -2.0 * kPi * sign * sum;

  /* tail: |S| <= c and the series envelope at x0 = 4 pi sqrt(L)/c_max give
     sum_{c > c_max} |J_{k-1}| <= e^{env(x0)} c_max / (k-2) */
  double x0 = 4.0 * kPi * sqL / static_cast<double>(c_max);
  double lt = log_series_envelope(k - 1.0, x0) + std::log(static_cast<double>(c_max)) -
              std::log(k - 2.0);
  double tail = 2.0 * kPi * (std::exp(lt) + kNegligibleJ * static_cast<double>(c_max));
  return {value, tail, !(tail < 1e-8)};
}

QExpansion delta_q_expansion(int N) {
  require(N >= 1 && N <= 10000, "delta_q_expansion: need 1 <= N <= 10^4");
  /* eta^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2} (sparse), then square up:
     eta^6, eta^12, eta^24; tau(n) is the q^{n-1} coefficient of eta^24 */
  using wide = __int128;
  std::vector<std::pair<int, long long>> eta3;
  for (long long k = 0; k * (k + 1) / 2 < N; ++k)
    eta3.emplace_back(static_cast<int>(k * (k + 1) / 2), (k % 2 ? -1 : 1) * (2 * k + 1));

  std::vector<wide> eta6(N, 0);
  for (const auto& [i, a] : eta3)
    for (const auto& [j, b] : eta3) {
      if (i + j >= N) break;
      eta6[i + j] += static_cast<wide>(a) * b;
    }
  auto square = [N](const std::vector<wide>& a) {
    std::vector<wide> out(N, 0);
    for (int i = 0; i < N; ++i) {
      if (a[i] == 0) continue;
      if (2 * i < N) out[2 * i] += a[i] * a[i];
      for (int j = i + 1; i + j < N; ++j) out[i + j] += 2 * a[i] * a[j];
    }
    return out;
  };
  std::vector<wide> eta24 = square(square(eta6));

  QExpansion q;
  q.tau.reserve(N);
  for (int n = 0; n < N; ++n) {
    wide v = eta24[n];
    bool neg = v < 0;
    if (neg) v = -v;
    mpz_class z = 0;
    for (int shift = 96; shift >= 0; shift -= 32) {
      z <<= 32;
      z += static_cast<unsigned long>((v >> shift) & 0xffffffffu);
    }
    q.tau.push_back(neg ? mpz_class(-z) : z);
  }
  return q;
}

}  // namespace bplab::gl2
