#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/rng.hpp"
#include "bplab/sugano.hpp"

namespace bplab::measures {

/* Point of the tempered set: Satake angles in [0,pi]^2; (a,b) on the unit
   circle. Canonical representative has theta1 <= theta2. */
struct SpectralPoint {
  double theta1, theta2;
  SpectralPoint canonical() const {
    return theta1 <= theta2 ? *this : SpectralPoint{theta2, theta1};
  }
  std::complex<double> a() const { return {std::cos(theta1), std::sin(theta1)}; }
  std::complex<double> b() const { return {std::cos(theta2), std::sin(theta2)}; }
};

/* Unnormalized Weyl density (cos t1 - cos t2)^2 sin^2 t1 sin^2 t2. */
double haar_density(double theta1, double theta2);

/* Case-selected local density factor (inert / split / ramified by eps). */
double delta_p(const sugano::LocalBesselDatum& datum, double theta1, double theta2);

struct degenerate_measure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Tensor Gauss-Legendre refinement ladder; the reported error estimate is
   the difference between the last two rungs. */
struct QuadratureLadder {
  std::vector<int> orders{32, 64, 128, 256};
  double tol = 1e-10;
};

struct IntegrateResult {
  std::complex<double> value;
  double err_estimate;
  bool converged;
};

class SpectralMeasure {
 public:
  enum class Kind { haar, plancherel };

  static SpectralMeasure haar();
  static SpectralMeasure plancherel(const sugano::LocalBesselDatum& datum);

  Kind kind() const { return kind_; }
  const std::optional<sugano::LocalBesselDatum>& datum() const { return datum_; }

  /* Unnormalized density: the Weyl shape, divided by Delta_p for the
     Plancherel case. */
  double density(double theta1, double theta2) const;
  /* Mass of the unnormalized density over the ordered region theta1 <=
     theta2 (half the full-square mass by symmetry); density/normalizer
     integrates to 1 there. */
  double normalizer() const { return z_square_ / 2.0; }
  double normalized_density(double theta1, double theta2) const {
    return density(theta1, theta2) / normalizer();
  }

  /* Diagnostics against the printed constants: mass of the measure over the
     ordered region when written verbatim with the 4/pi^2 constant (and the
     1 - eps/p prefactor for Plancherel), and the prefactor-consistency
     statistic |(1 - eps/p) * int Delta_p^{-1} dmu - 1| (0 for Haar, with mu
     the numerically normalized probability Haar measure). */
  double printed_constant_mass() const { return printed_mass_; }
  double prefactor_statistic() const { return prefactor_stat_; }

 private:
  SpectralMeasure() = default;

  Kind kind_ = Kind::haar;
  std::optional<sugano::LocalBesselDatum> datum_;
  double z_square_ = 0.0;      /* full-square mass of density() */
  double printed_mass_ = 0.0;
  double prefactor_stat_ = 0.0;

  /* rejection envelope, certified lazily on first sample(); recomputation
     is idempotent, so a plain atomic suffices */
  mutable std::atomic<double> envelope_{0.0};

  friend std::vector<SpectralPoint> sample(const SpectralMeasure&, Rng&, long);

 public:
  SpectralMeasure(const SpectralMeasure& o)
      : kind_(o.kind_), datum_(o.datum_), z_square_(o.z_square_),
        printed_mass_(o.printed_mass_), prefactor_stat_(o.prefactor_stat_),
        envelope_(o.envelope_.load()) {}
  SpectralMeasure& operator=(const SpectralMeasure&) = delete;
};

/* Probability integral of f against the measure, computed as the ratio of
   full-square quadratures (f symmetrized over theta1 <-> theta2, so the
   ordered and full-square conventions agree). Ladder rungs refine until
   |I_2N - I_N| <= tol; if the ladder is exhausted first, converged = false
   and the last value is still returned. */
IntegrateResult integrate(const std::function<std::complex<double>(SpectralPoint)>& f,
                          const SpectralMeasure& m, const QuadratureLadder& rule = {});

/* f given by a Laurent polynomial evaluated at (e^{i t1}, e^{i t2}). */
std::function<std::complex<double>(SpectralPoint)> poly_evaluator(
    const wpoly::LaurentPolynomial& poly);

struct envelope_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* i.i.d. draws by rejection against a grid-certified envelope (512^2 scan
   plus 10% headroom); points are returned canonicalized. n >= 1. */
std::vector<SpectralPoint> sample(const SpectralMeasure& m, Rng& rng, long n);

/* Bridge from class-group data to the local datum at p: eps = kronecker
   symbol, lambda = character sum over norm-p classes. Real characters give
   an exact rational lambda; complex ones fall back to floating mode. */
sugano::LocalBesselDatum make_datum(const classgroup::ClassGroup& G,
                                    const classgroup::Character& chi, long p);

}  // namespace bplab::measures
