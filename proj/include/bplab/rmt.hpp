#pragma once

#include <cstdint>
#include <vector>

#include "bplab/lowlying.hpp"
#include "bplab/rng.hpp"

namespace bplab::rmt {

enum class Ensemble { USp, SOeven };

/* Half-spectrum of a matrix in USp(2n) or SO(2n): eigenvalues are the
   conjugate pairs e^{+-i theta_j}, angles sorted ascending in [0, pi]. */
struct EigenangleSample {
  int n;
  std::vector<double> angles;
  Ensemble ensemble;
};

/* Unnormalized Weyl eigenvalue density on [0, pi]^n:
   USp:    prod_{i<j} (cos t_i - cos t_j)^2 * prod_k sin^2 t_k
   SOeven: prod_{i<j} (cos t_i - cos t_j)^2. */
double weyl_density(Ensemble e, const std::vector<double>& angles);

/* i.i.d. draws by rejection against the uniform envelope on [0, pi]^n with a
   grid-certified sup (raised and restarted on any observed violation). */
std::vector<EigenangleSample> sample_weyl(Ensemble e, int n, Rng& rng, long count);

/* det(1 - g) = prod_j (2 - 2 cos theta_j) over the conjugate pairs; >= 0. */
double det_one_minus(const EigenangleSample& s);

struct MomentEstimate {
  double value;
  double std_error;
  long n_samples;
};

/* c_n = 1 / E_{SO(2n)}[det(1 - g)], delta-method standard error; the
   weighting constant is 1/2 for every n. */
MomentEstimate estimate_cn(int n, long samples, std::uint64_t seed);

/* Monte Carlo one-level density: mean of sum over all 2n eigenangles
   +-theta_j of phi(c theta / 2 pi), unfolded by the ensemble's exact mean
   eigenangle density c/2pi with c = 2n+1 (USp) or 2n-1 (SOeven), so the
   scaled bulk spacing is 1. With weighted = true (SOeven only) samples are
   reweighted by det(1 - g), which repels the estimate downward. Matches the
   sigma-measure value for phi_hat supported in (-1, 1), up to finite-n
   error. Runs on 64 fixed logical streams, so results are independent of
   the thread count. */
MomentEstimate one_level_density(Ensemble e, int n, const lowlying::TestFunction& phi,
                                 long samples, std::uint64_t seed, bool weighted = false);

}  // namespace bplab::rmt
