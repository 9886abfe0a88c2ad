#include <doctest.h>

#include <cmath>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/lowlying.hpp"

using namespace bplab;
using namespace bplab::lowlying;

TEST_SUITE("lowlying") {

TEST_CASE("Fejer pair invariants") {
  auto phi = fejer_test_function(0.25);
  CHECK(phi.alpha() == doctest::Approx(0.25));
  /* phi(0) = alpha, phi_hat(0) = 1, triangular transform */
  CHECK(phi.phi(0.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(phi.phi_hat(0.0) == doctest::Approx(1.0));
  CHECK(phi.phi_hat(0.125) == doctest::Approx(0.5));
  CHECK(phi.phi_hat(-0.125) == doctest::Approx(0.5));
  CHECK(phi.phi_hat(0.25) == doctest::Approx(0.0));
  CHECK(phi.phi_hat(0.4) == doctest::Approx(0.0));
  /* positivity and zeros of the sinc^2 shape: phi(n/alpha) = 0 for n != 0 */
  CHECK(phi.phi(4.0) == doctest::Approx(0.0).epsilon(1e-20));
  CHECK(phi.phi(6.3) > 0.0);
  /* Plancherel: int phi = phi_hat(0); trapezoid over |x| <= 2000 catches
     all but O(1/2000) of the mass of alpha sinc^2(pi alpha x) */
  double I = 0.0, h = 1e-3;
  for (long i = -2000000; i <= 2000000; ++i) I += phi.phi(i * h) * h;
  CHECK(std::abs(I - 1.0) < 1e-3);

  CHECK_THROWS_AS(fejer_test_function(0.0), std::invalid_argument);
  CHECK_THROWS_AS(fejer_test_function(-0.3), std::invalid_argument);
}

TEST_CASE("symmetry functionals") {
  CHECK(kAlphaTheoremLimit == doctest::Approx(4.0 / 15.0));
  for (double alpha : {0.1, 0.25, 0.5}) {
    auto phi = fejer_test_function(alpha);
    /* sigma_Sp = phi_hat(0) - phi(0)/2 = 1 - alpha/2; sigma_O = 1 + alpha/2 */
    CHECK(sigma_integral(phi, SymmetryType::Sp) == doctest::Approx(1.0 - alpha / 2));
    CHECK(sigma_integral(phi, SymmetryType::O) == doctest::Approx(1.0 + alpha / 2));
  }
}

TEST_CASE("prime sums approach the explicit-formula targets from below") {
  auto phi = fejer_test_function(0.25);
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  std::vector<double> ks = {1e3, 1e4, 1e5, 1e6};
  /* frozen regression values (deterministic prime sums) */
  std::vector<double> m_dev = {0.135912, 0.119469, 0.106167, 0.095283};
  std::vector<double> n_dev = {0.072507, 0.062713, 0.057082, 0.052157};
  std::vector<long> m_cut = {31, 97, 313, 997};
  double prev_m = 1e9, prev_n = 1e9;
  for (size_t i = 0; i < ks.size(); ++i) {
    auto M = prime_sum_M(phi, ks[i], G, chi);
    auto N = prime_sum_N(phi, ks[i]);
    CAPTURE(ks[i]);
    /* targets: M -> phi(0) = 0.25, N -> phi(0)/2 = 0.125 */
    CHECK(M.target == doctest::Approx(0.25));
    CHECK(N.target == doctest::Approx(0.125));
    CHECK(M.deviation == doctest::Approx(m_dev[i]).epsilon(1e-4));
    CHECK(N.deviation == doctest::Approx(n_dev[i]).epsilon(1e-4));
    CHECK(M.prime_cutoff == m_cut[i]);
    CHECK(M.deviation < prev_m);
    CHECK(N.deviation < prev_n);
    CHECK(M.deviation > 0.0); /* one-sided convergence */
    CHECK(N.deviation > 0.0);
    prev_m = M.deviation;
    prev_n = N.deviation;
  }
}

TEST_CASE("digamma-pair gamma term is flat at the 4/k scale") {
  std::vector<double> grid;
  for (double t = 0.5; t <= 10.0; t += 0.5) grid.push_back(t);
  double prev_offset = 1e9;
  for (double k : {100.0, 1000.0, 10000.0}) {
    auto g = gamma_term_check(k, grid);
    CAPTURE(k);
    /* offset0 = |psi(k-1) + psi(k-2) - 2 log k| ~ 4/k */
    CHECK(g.offset0_times_k == doctest::Approx(4.0).epsilon(0.02));
    CHECK(g.offset0 < prev_offset);
    /* curvature |f(t) - f(0)| k^2 / t^2 stays bounded */
    CHECK(g.curvature < 3.0);
    CHECK(g.curvature > 0.0);
    prev_offset = g.offset0;
  }
  /* frozen spot value at k=100 */
  auto g100 = gamma_term_check(100.0, grid);
  CHECK(g100.offset0 == doctest::Approx(0.04042277).epsilon(1e-5));
  CHECK(g100.curvature == doctest::Approx(2.32824).epsilon(1e-4));
}

TEST_CASE("synthetic family Monte Carlo agrees with its exact expectation") {
  auto phi = fejer_test_function(0.25);
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  double expectation = synthetic_family_expectation(1e4, G, chi, phi, 1000);
  /* frozen: quadrature expectation of the score at k=1e4, cutoff 97 */
  CHECK(expectation == doctest::Approx(0.899201255).epsilon(1e-8));

  auto est = synthetic_family_density(1e4, G, chi, phi, 1000, 10000, 7);
  CHECK(est.n_samples == 10000);
  CHECK(est.prime_cutoff == 97); /* primes <= k^{2 alpha} = 100 */
  CHECK(est.target_sp == doctest::Approx(0.875));
  CHECK(est.target_o == doctest::Approx(1.125));
  CHECK(est.std_error > 0.0);
  CHECK(std::abs(est.estimate - expectation) < 4 * est.std_error);

  /* bit determinism across calls */
  auto est2 = synthetic_family_density(1e4, G, chi, phi, 1000, 10000, 7);
  CHECK(est.estimate == est2.estimate);
  CHECK(est.std_error == est2.std_error);
  /* different seed moves the estimate */
  auto est3 = synthetic_family_density(1e4, G, chi, phi, 1000, 10000, 8);
  CHECK(est.estimate != est3.estimate);

  /* single sample degenerates gracefully */
  auto single = synthetic_family_density(1e4, G, chi, phi, 1000, 1, 7);
  CHECK(single.n_samples == 1);
  CHECK(single.std_error == 0.0);
}

TEST_CASE("input validation") {
  auto phi = fejer_test_function(0.25);
  classgroup::ClassGroup G(4);
  auto chi = classgroup::characters(G)[0];
  CHECK_THROWS_AS(prime_sum_M(phi, 1.0, G, chi), std::invalid_argument);
  CHECK_THROWS_AS(synthetic_family_density(1e4, G, chi, phi, 1000, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gamma_term_check(1.0, {1.0}), std::invalid_argument);
}

} /* TEST_SUITE lowlying */
