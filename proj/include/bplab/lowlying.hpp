#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/measures.hpp"

namespace bplab::lowlying {

/* The theorem's admissible range for the support radius. */
inline constexpr double kAlphaTheoremLimit = 4.0 / 15.0;

/* Even test function phi with Fourier transform phi_hat (in the
   e^{-2 pi i x t} convention) supported in [-alpha, alpha]. */
class TestFunction {
 public:
  TestFunction(double alpha, std::function<double(double)> phi,
               std::function<double(double)> phi_hat, std::string tag)
      : alpha_(alpha), phi_(std::move(phi)), phi_hat_(std::move(phi_hat)),
        tag_(std::move(tag)) {}

  double alpha() const { return alpha_; }
  double phi(double x) const { return phi_(x); }
  double phi_hat(double t) const { return phi_hat_(t); }
  const std::string& tag() const { return tag_; }

 private:
  double alpha_;
  std::function<double(double)> phi_, phi_hat_;
  std::string tag_;
};

/* Fejer pair: phi_hat(t) = max(0, 1 - |t|/alpha), phi(x) = alpha
   sinc^2(pi alpha x); phi >= 0, phi(0) = alpha, phi_hat(0) = 1. */
TestFunction fejer_test_function(double alpha);

/* One-level density targets: integral against dx -+ delta_0/2. */
enum class SymmetryType { Sp, O };
double sigma_integral(const TestFunction& phi, SymmetryType type);

/* Prime sums of the explicit formula, with their limit targets:
   M_k -> phi(0) (lambda_p-weighted, m = 1 scaling) and
   N_k -> phi(0)/2 (unweighted, m = 2 scaling). */
struct PrimeSumResult {
  double value;
  double target;
  double deviation;
  long prime_cutoff; /* largest prime with nonzero weight */
};
PrimeSumResult prime_sum_M(const TestFunction& phi, double k, const classgroup::ClassGroup& G,
                           const classgroup::Character& chi);
PrimeSumResult prime_sum_N(const TestFunction& phi, double k);

/* Stirling control of the gamma term f(t) = psi(k-1+it) + psi(k-2-it):
   offset0 = |f(0) - 2 log k| (decays like 4/k) and curvature =
   max over nonzero grid t of |f(t) - f(0)| k^2/t^2 (bounded). */
struct GammaTermStats {
  double offset0;
  double offset0_times_k;
  double curvature;
};
GammaTermStats gamma_term_check(double k, const std::vector<double>& t_grid);

/* Monte Carlo over a synthetic family: independent draws x_p ~ mu_p for
   each prime with nonvanishing weight, scoring
   D = phi_hat(0) - (2/log k^2) sum_{m in {1,2}, p} (log p) p^{-m/2}
       c_m(x_p) phi_hat(m log p / log k^2).
   The mean approaches sigma_integral(phi, Sp) as k and cutoff grow. The
   sample loop runs over 64 fixed logical streams so results are identical
   for any thread count. */
struct DensityEstimate {
  double estimate;
  double std_error;
  long n_samples;
  long prime_cutoff;
  double target_sp;
  double target_o;
};
DensityEstimate synthetic_family_density(double k, const classgroup::ClassGroup& G,
                                         const classgroup::Character& chi,
                                         const TestFunction& phi, long prime_cutoff,
                                         long n_samples, std::uint64_t seed);

/* Exact expectation of the synthetic score, with the per-prime moments
   int c_m dmu_p evaluated by quadrature; oracle for the Monte Carlo. */
double synthetic_family_expectation(double k, const classgroup::ClassGroup& G,
                                    const classgroup::Character& chi, const TestFunction& phi,
                                    long prime_cutoff);

}  // namespace bplab::lowlying
