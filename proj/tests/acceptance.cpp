/* Acceptance suite: end-to-end checks of the library's headline identities
   and statistics, one [PASS]/[FAIL] line per criterion with pinned
   tolerances and runtime budgets. Exit status = number of failures. */
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/gl2.hpp"
#include "bplab/lfun.hpp"
#include "bplab/lowlying.hpp"
#include "bplab/measures.hpp"
#include "bplab/quadrature.hpp"
#include "bplab/rmt.hpp"
#include "bplab/rng.hpp"
#include "bplab/sugano.hpp"
#include "bplab/util.hpp"

using namespace bplab;
using wpoly::Coefficient;
using wpoly::LaurentPolynomial;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::vector<long> fundamental_up_to(long bound) {
  std::vector<long> out;
  for (long d = 3; d <= bound; ++d)
    if (classgroup::is_fundamental(d)) out.push_back(d);
  return out;
}

/* ---- shared evaluation grid: d in {3,4,8,23} x all characters x
        p in {2,3,5,7,13}, with floating-mode expansions table ---- */

struct GridEntry {
  long d;
  int chi_index;
  long p;
  sugano::LocalBesselDatum datum;
  measures::SpectralMeasure mu;
  sugano::UTable table;
};

const std::vector<std::unique_ptr<GridEntry>>& shared_grid() {
  static std::vector<std::unique_ptr<GridEntry>> grid = [] {
    std::vector<std::unique_ptr<GridEntry>> g;
    for (long d : {3L, 4L, 8L, 23L}) {
      classgroup::ClassGroup G(d);
      auto chars = classgroup::characters(G);
      for (int ci = 0; ci < static_cast<int>(chars.size()); ++ci)
        for (long p : {2L, 3L, 5L, 7L, 13L}) {
          auto dat = measures::make_datum(G, chars[ci], p);
          /* floating coefficients keep the per-point evaluation cheap */
          sugano::LocalBesselDatum fdat(p, dat.eps, dat.lambda.promoted());
          auto e = std::make_unique<GridEntry>(GridEntry{
              d, ci, p, fdat, measures::SpectralMeasure::plancherel(fdat),
              sugano::UTable(fdat)});
          e->table.precompute(8, 4);
          g.push_back(std::move(e));
        }
    }
    return g;
  }();
  return grid;
}

/* closed forms for the low-degree expansions */
LaurentPolynomial u10_closed_form(const sugano::LocalBesselDatum& dat) {
  auto ctx = dat.ctx();
  return wpoly::orbit_sum(ctx, 1, 0) -
         LaurentPolynomial::constant(ctx, dat.lambda * Coefficient::inv_sqrt_prime(dat.p));
}

LaurentPolynomial u01_closed_form(const sugano::LocalBesselDatum& dat) {
  auto ctx = dat.ctx();
  auto sigma = wpoly::orbit_sum(ctx, 1, 0);
  auto tau = wpoly::orbit_sum(ctx, 1, 1) + LaurentPolynomial::constant(ctx, Coefficient(1));
  Coefficient inv(mpq_class(1, dat.p - dat.eps));
  auto inner = sigma.scaled(Coefficient::sqrt_prime(dat.p) * dat.lambda) -
               wpoly::orbit_sum(ctx, 1, 1).scaled(Coefficient(dat.eps)) -
               LaurentPolynomial::constant(ctx, dat.lambda * dat.lambda);
  return tau - inner.scaled(inv);
}

/* ---------------- criteria ---------------- */

Outcome c01_closed_forms() {
  long n_data = 0, n_checks = 0;
  for (long d : fundamental_up_to(50)) {
    classgroup::ClassGroup G(d);
    for (const auto& chi : classgroup::characters(G)) {
      if (!chi.is_real()) continue;
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        auto dat = measures::make_datum(G, chi, p);
        auto ctx = dat.ctx();
        auto one = LaurentPolynomial::constant(ctx, Coefficient(1));
        if (!sugano::expand_U(dat, 0, 0).equals(one, 0.0))
          return {false, fmt("U(0,0) != 1 at d=%ld p=%ld", d, p)};
        if (!sugano::expand_U(dat, 1, 0).equals(u10_closed_form(dat), 0.0))
          return {false, fmt("U(1,0) mismatch at d=%ld p=%ld", d, p)};
        if (!sugano::expand_U(dat, 0, 1).equals(u01_closed_form(dat), 0.0))
          return {false, fmt("U(0,1) mismatch at d=%ld p=%ld", d, p)};
        ++n_data;
        n_checks += 3;
      }
    }
  }
  return {true, fmt("%ld exact identities over %ld (d,chi,p) data", n_checks, n_data)};
}

Outcome c02_row_consistency() {
  long n_data = 0, n_checks = 0;
  for (long d : fundamental_up_to(50)) {
    classgroup::ClassGroup G(d);
    for (const auto& chi : classgroup::characters(G)) {
      if (!chi.is_real()) continue;
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        auto dat = measures::make_datum(G, chi, p);
        auto row = sugano::expand_U_row(dat, 8);
        for (int l = 0; l <= 8; ++l) {
          if (!row[static_cast<size_t>(l)].equals(sugano::expand_U(dat, l, 0), 0.0))
            return {false, fmt("row l=%d mismatch at d=%ld p=%ld", l, d, p)};
          ++n_checks;
        }
        ++n_data;
      }
    }
  }
  return {true, fmt("%ld exact row entries over %ld data", n_checks, n_data)};
}

Outcome c03_plancherel_delta() {
  double worst = 0.0;
  long n_int = 0;
  for (const auto& e : shared_grid()) {
    for (int m = 0; 2 * m <= 6; ++m)
      for (int l = 0; l + 2 * m <= 6; ++l) {
        auto r = measures::integrate(measures::poly_evaluator(e->table.U(l, m)), e->mu);
        if (!r.converged)
          return {false, fmt("quadrature not converged at d=%ld chi=%d p=%ld (l,m)=(%d,%d)",
                             e->d, e->chi_index, e->p, l, m)};
        double target = (l == 0 && m == 0) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(r.value - target));
        ++n_int;
      }
  }
  bool ok = worst < 1e-8;
  return {ok, fmt("max |int U dmu - delta| = %.3e over %ld integrals (tol 1e-8)", worst, n_int)};
}

Outcome c04_mass_normalization() {
  double worst = 0.0, worst_pref = 0.0, pm_lo = 1e300, pm_hi = -1e300;
  GaussLegendre gl(512, 0.0, kPi);
  for (const auto& e : shared_grid()) {
    double mass = 0.0;
    for (int i = 0; i < 512; ++i) {
      double row = 0.0;
      for (int j = 0; j < 512; ++j) row += gl.w[j] * e->mu.density(gl.x[i], gl.x[j]);
      mass += gl.w[i] * row;
    }
    worst = std::max(worst, std::abs(mass / 2.0 / e->mu.normalizer() - 1.0));
    worst_pref = std::max(worst_pref, e->mu.prefactor_statistic());
    pm_lo = std::min(pm_lo, e->mu.printed_constant_mass());
    pm_hi = std::max(pm_hi, e->mu.printed_constant_mass());
  }
  bool ok = worst < 1e-10;
  return {ok, fmt("max |mu(X)-1| = %.3e (tol 1e-10); printed-constant mass in [%.6f, %.6f], "
                  "max prefactor statistic %.3e",
                  worst, pm_lo, pm_hi, worst_pref)};
}

Outcome c05_aut_weighted_pairing() {
  long n_checks = 0;
  for (long d : fundamental_up_to(200)) {
    classgroup::ClassGroup G(d);
    for (const auto& chi : classgroup::characters(G)) {
      auto r = classgroup::autcsum_identity(G, chi);
      long expect = 2L * G.h() * G.w() / chi.d_lambda();
      if (r.lhs != r.rhs || r.rhs != expect)
        return {false, fmt("pairing identity fails at d=%ld (lhs=%ld rhs=%ld expect=%ld)",
                           d, r.lhs, r.rhs, expect)};
      ++n_checks;
    }
  }
  return {true, fmt("exact integer identity for %ld (d,chi) pairs, d <= 200", n_checks)};
}

Outcome c06_local_average() {
  double worst = 0.0;
  long n = 0;
  for (const auto& e : shared_grid()) {
    classgroup::ClassGroup G(e->d);
    auto chars = classgroup::characters(G);
    for (double s : {0.75, 1.0, 2.0}) {
      auto r = lfun::average_local_factor(G, chars[static_cast<size_t>(e->chi_index)], e->p, s);
      worst = std::max(worst, std::abs(r.numeric - r.closed_form));
      ++n;
    }
  }
  bool ok = worst < 1e-8;
  return {ok, fmt("max |quadrature - closed form| = %.3e over %ld cases (tol 1e-8)", worst, n)};
}

Outcome c07_euler_product() {
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  auto ep = lfun::euler_product_average(G, chi, 2.0, 100000);
  double target = (lfun::zeta(2.5, 200000).value * lfun::dirichlet_L_minus_d(4, 2.5, 200000).value)
                      .real();
  std::vector<double> devs;
  for (long cut : {100L, 1000L, 10000L, 100000L})
    for (const auto& [c, v] : ep.partials)
      if (c == cut) devs.push_back(std::abs(v.real() - target) / std::abs(target));
  if (devs.size() != 4) return {false, "partial products missing a decade"};
  bool mono = devs[0] > devs[1] && devs[1] > devs[2] && devs[2] > devs[3];
  bool ok = mono && devs[3] < 1e-4;
  return {ok, fmt("relative deviation %.2e -> %.2e -> %.2e -> %.2e across cutoffs "
                  "1e2..1e5 (final tol 1e-4, monotone %s)",
                  devs[0], devs[1], devs[2], devs[3], mono ? "yes" : "NO")};
}

Outcome c08_basis_round_trip() {
  sugano::LocalBesselDatum dat(5, 1, Coefficient(2));
  auto ctx = dat.ctx();
  sugano::UTable tab(dat);
  tab.precompute(5, 2);
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPolynomial poly(ctx);
    bool nonzero = false;
    for (int j = 0; j <= 5; ++j)
      for (int k = 0; k <= j; ++k) {
        if (j + k > 5) continue;
        long num = static_cast<long>(rng.bits() % 21) - 10;
        long den = static_cast<long>(rng.bits() % 4) + 1;
        if (num == 0) continue;
        poly += wpoly::orbit_sum(ctx, j, k).scaled(Coefficient(mpq_class(num, den)));
        nonzero = true;
      }
    if (!nonzero) poly += wpoly::orbit_sum(ctx, 1, 0);
    int deg = wpoly::decompose_orbit_basis(poly).trace_degree;
    auto coords = sugano::decompose_in_U_basis(dat, poly);
    LaurentPolynomial rebuilt(ctx);
    for (const auto& [lm, c] : coords) {
      if (lm.first + 2 * lm.second > deg)
        return {false, fmt("trial %d: index (l,m)=(%d,%d) exceeds trace degree %d",
                           trial, lm.first, lm.second, deg)};
      rebuilt += tab.U(lm.first, lm.second).scaled(c);
    }
    if (!rebuilt.equals(poly, 0.0))
      return {false, fmt("trial %d: round trip not exact (degree %d)", trial, deg)};
  }
  return {true, "50 random invariant polynomials of trace degree <= 5 round-trip exactly"};
}

Outcome c09_uniform_bound() {
  constexpr int kGrid = 200;
  /* axis tables of powers e^{i e theta}, e in [-8, 8] */
  std::vector<std::array<std::complex<double>, 17>> pow_table(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    double th = (i + 0.5) * kPi / kGrid;
    for (int e = -8; e <= 8; ++e) pow_table[static_cast<size_t>(i)][static_cast<size_t>(e + 8)] =
        std::polar(1.0, e * th);
  }
  double C = 0.0;
  int argl = 0, argm = 0;
  long argd = 0, argp = 0;
  for (const auto& e : shared_grid()) {
    for (int m = 0; 2 * m <= 8; ++m)
      for (int l = 0; l + 2 * m <= 8; ++l) {
        const auto& poly = e->table.U(l, m);
        std::vector<std::tuple<int, int, std::complex<double>>> terms;
        for (const auto& [ex, c] : poly.terms()) {
          if (std::abs(ex.first) > 8 || std::abs(ex.second) > 8)
            return {false, fmt("exponent out of range in U(%d,%d)", l, m)};
          terms.emplace_back(ex.first, ex.second, c.to_complex());
        }
        double denom = std::pow(l + 3.0, 3) * std::pow(m + 3.0, 3);
        double maxv = 0.0;
        std::array<std::complex<double>, 17> inner;
        for (int i1 = 0; i1 < kGrid; ++i1) {
          inner.fill({0.0, 0.0});
          for (const auto& [j, k, c] : terms)
            inner[static_cast<size_t>(k + 8)] +=
                c * pow_table[static_cast<size_t>(i1)][static_cast<size_t>(j + 8)];
          for (int i2 = 0; i2 < kGrid; ++i2) {
            std::complex<double> v{0.0, 0.0};
            for (int k = 0; k < 17; ++k)
              v += inner[static_cast<size_t>(k)] * pow_table[static_cast<size_t>(i2)][static_cast<size_t>(k)];
            maxv = std::max(maxv, std::abs(v));
          }
        }
        if (maxv / denom > C) {
          C = maxv / denom;
          argl = l;
          argm = m;
          argd = e->d;
          argp = e->p;
        }
      }
  }
  bool ok = C <= 10.0;
  return {ok, fmt("certified constant C = %.6f (<= 10) attained at (l,m)=(%d,%d), d=%ld, p=%ld, "
                  "200^2 grid, l+2m <= 8",
                  C, argl, argm, argd, argp)};
}

Outcome c10_model_moments() {
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  double worst1 = 0.0, worst2 = 0.0;
  long worst2_p = 0, n = 0;
  for (long p = 5; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    auto dat = measures::make_datum(G, chi, p);
    auto mu = measures::SpectralMeasure::plancherel(dat);
    auto coeffs = lfun::dirichlet_coefficients(p, 2);
    auto m1 = measures::integrate(measures::poly_evaluator(coeffs.c[1]), mu);
    auto m2 = measures::integrate(measures::poly_evaluator(coeffs.c[2]), mu);
    if (!m1.converged || !m2.converged) return {false, fmt("quadrature stalled at p=%ld", p)};
    double target1 = classgroup::lambda_p(G, chi, p) / std::sqrt(static_cast<double>(p));
    worst1 = std::max(worst1, std::abs(m1.value.real() - target1));
    double dev2 = std::abs(m2.value.real() + 1.0) * static_cast<double>(p);
    if (dev2 > worst2) {
      worst2 = dev2;
      worst2_p = p;
    }
    ++n;
  }
  bool ok = worst1 < 1e-9 && worst2 <= 3.0;
  return {ok, fmt("first moment max dev %.2e (tol 1e-9); |int c2 + 1| * p <= %.3f at p=%ld "
                  "(bound 3) over %ld primes",
                  worst1, worst2, worst2_p, n)};
}

Outcome c11_prime_sums() {
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  auto phi = lowlying::fejer_test_function(0.25);
  std::vector<double> mdev, ndev;
  for (double k : {1e3, 1e4, 1e5, 1e6}) {
    mdev.push_back(lowlying::prime_sum_M(phi, k, G, chi).deviation);
    ndev.push_back(lowlying::prime_sum_N(phi, k).deviation);
  }
  bool mono = true;
  for (int i = 1; i < 4; ++i) mono = mono && mdev[i] < mdev[i - 1] && ndev[i] < ndev[i - 1];
  bool ok = mono && mdev[3] < 0.15 && ndev[3] < 0.15;
  return {ok, fmt("M deviations %.4f -> %.4f -> %.4f -> %.4f, N %.4f -> %.4f -> %.4f -> %.4f "
                  "across k = 1e3..1e6 (monotone %s, final < 0.15)",
                  mdev[0], mdev[1], mdev[2], mdev[3], ndev[0], ndev[1], ndev[2], ndev[3],
                  mono ? "yes" : "NO")};
}

Outcome c12_synthetic_density() {
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  auto phi = lowlying::fejer_test_function(0.25);
  auto r = lowlying::synthetic_family_density(1e4, G, chi, phi, 1000, 10000, 7);
  double dev = std::abs(r.estimate - 0.875);
  bool ok = dev < 0.05;
  return {ok, fmt("estimate %.6f +- %.6f vs symplectic functional 0.875: |dev| = %.4f "
                  "(tol 0.05)",
                  r.estimate, r.std_error, dev)};
}

Outcome c13_random_matrices() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {1, 2, 3}) {
    auto c = rmt::estimate_cn(n, 1000000, 5);
    double dev = std::abs(c.value - 0.5);
    ok = ok && dev < 0.02;
    d << fmt("c_%d dev %.2e; ", n, dev);
  }
  auto phi = lowlying::fejer_test_function(0.25);
  auto u = rmt::one_level_density(rmt::Ensemble::USp, 4, phi, 1000000, 9);
  auto o = rmt::one_level_density(rmt::Ensemble::SOeven, 4, phi, 1000000, 9);
  auto ow = rmt::one_level_density(rmt::Ensemble::SOeven, 4, phi, 1000000, 9, true);
  double du = std::abs(u.value - 0.875), doo = std::abs(o.value - 1.125);
  ok = ok && du < 0.1 && doo < 0.1;
  double gap_se = std::sqrt(o.std_error * o.std_error + ow.std_error * ow.std_error);
  bool shifted = ow.value < o.value - 2 * gap_se;
  ok = ok && shifted;
  d << fmt("USp %.4f (dev %.4f), SOeven %.4f (dev %.4f) vs 0.875/1.125 (tol 0.1); "
           "det-weighted %.4f below unweighted by %.0f se",
           u.value, du, o.value, doo, ow.value, (o.value - ow.value) / gap_se);
  return {ok, d.str()};
}

Outcome c14_petersson() {
  double worst = 0.0;
  for (long L = 1; L <= 10; ++L) {
    auto s = gl2::petersson_kloosterman_side(14, L, 10000);
    if (s.insufficient_cutoff) return {false, fmt("cutoff flagged insufficient at L=%ld", L)};
    worst = std::max(worst, std::abs(s.value - (L == 1 ? 1.0 : 0.0)));
  }
  auto q = gl2::delta_q_expansion(6);
  double worst_ratio = 0.0;
  std::vector<long> Ls = {2, 3, 5};
  std::map<long, double> side;
  for (long L : Ls) side[L] = gl2::petersson_kloosterman_side(12, L, 10000).value;
  for (long L : Ls)
    for (long Lp : Ls) {
      if (L == Lp) continue;
      double lhs = side[L] / side[Lp];
      double tL = q.tau[static_cast<size_t>(L - 1)].get_d();
      double tLp = q.tau[static_cast<size_t>(Lp - 1)].get_d();
      double rhs = tL * std::pow(static_cast<double>(Lp), 5.5) /
                   (tLp * std::pow(static_cast<double>(L), 5.5));
      worst_ratio = std::max(worst_ratio, std::abs(lhs - rhs) / std::abs(rhs));
    }
  bool ok = worst < 1e-6 && worst_ratio < 1e-4;
  return {ok, fmt("max |side(14,L) - delta| = %.2e for L <= 10 (tol 1e-6); max weight-12 "
                  "tau-ratio rel err = %.2e (tol 1e-4)",
                  worst, worst_ratio)};
}

Outcome c15_bessel_suite() {
  std::vector<int> ks;
  for (int k = 1; k <= 100; k += 3) ks.push_back(k);
  ks.push_back(150);
  ks.push_back(200);
  std::vector<double> xs;
  for (double x = 0.25; x <= 400.0; x *= 1.3) xs.push_back(x);
  auto fits = gl2::verify_bessel_bounds(ks, xs);
  bool bounds_ok = fits.size() == 3;
  std::ostringstream d;
  for (const auto& f : fits) {
    bounds_ok = bounds_ok && std::isfinite(f.max_ratio) && f.max_ratio < 1.0;
    d << fmt("bound %d ratio %.4f (%ld pts); ", f.bound_id, f.max_ratio, f.points_checked);
  }
  double res = 0.0;
  for (double nu : {1.0, 5.0, 10.5, 40.0, 99.5})
    for (double x : {0.5, 2.0, 8.0, 30.0, 120.0, 900.0}) {
      double a = gl2::bessel_j(nu - 1, x).value;
      double b = gl2::bessel_j(nu + 1, x).value;
      double c = gl2::bessel_j(nu, x).value;
      res = std::max(res, std::abs(a + b - 2 * nu / x * c));
    }
  bool rec_ok = res < 1e-9;
  d << fmt("recurrence residual %.2e (tol 1e-9); ", res);
  std::vector<double> kit;
  for (int k : {10, 20, 40, 80}) kit.push_back(std::abs(gl2::kitaoka_integral(k, 2.0, 2.0).value));
  bool decay = kit[0] > kit[1] && kit[1] > kit[2] && kit[2] > kit[3];
  d << fmt("pair-integral decay %.2e -> %.2e -> %.2e -> %.2e (monotone %s)", kit[0], kit[1],
           kit[2], kit[3], decay ? "yes" : "NO");
  return {bounds_ok && rec_ok && decay, d.str()};
}

Outcome c16_sato_tate() {
  double worst = 0.0;
  for (int l = 0; l <= 10; ++l) {
    double target = l == 0 ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(gl2::chebyshev_sato_tate(l).integral - target));
  }
  bool ok = worst < 1e-10;
  return {ok, fmt("max |int U_l dmu_ST - [l=0]| = %.2e for l <= 10 (tol 1e-10)", worst)};
}

struct Criterion {
  const char* name;
  double budget_sec;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);

  const std::vector<Criterion> criteria = {
      {"bessel-value closed forms at degree <= 1", 10, c01_closed_forms},
      {"one-variable row vs two-variable expansion", 10, c02_row_consistency},
      {"plancherel orthogonality deltas", 300, c03_plancherel_delta},
      {"measure mass normalization & printed constants", 60, c04_mass_normalization},
      {"automorphism-weighted character pairing", 30, c05_aut_weighted_pairing},
      {"local spin average vs closed form", 120, c06_local_average},
      {"euler product vs zeta * L target", 60, c07_euler_product},
      {"U-basis decomposition round trip", 30, c08_basis_round_trip},
      {"uniform bound on the U values", 120, c09_uniform_bound},
      {"first and second coefficient moments", 120, c10_model_moments},
      {"explicit-formula prime sums", 30, c11_prime_sums},
      {"synthetic family one-level density", 120, c12_synthetic_density},
      {"random-matrix constant and densities", 600, c13_random_matrices},
      {"petersson delta and weight-12 tau ratios", 120, c14_petersson},
      {"bessel bound and decay suite", 120, c15_bessel_suite},
      {"sato-tate orthogonality", 5, c16_sato_tate},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& ex) {
      r = {false, std::string("exception: ") + ex.what()};
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = sec < c.budget_sec;
    bool pass = r.pass && in_budget;
    failures += pass ? 0 : 1;
    std::printf("[%s] %02zu %s: %s [%.1fs%s]\n", pass ? "PASS" : "FAIL", i + 1, c.name,
                r.detail.c_str(), sec, in_budget ? "" : fmt(", budget %.0fs exceeded",
                                                            c.budget_sec).c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%d criteria passed\n",
              static_cast<int>(only ? 1 : criteria.size()) - failures,
              static_cast<int>(only ? 1 : criteria.size()));
  return failures;
}
