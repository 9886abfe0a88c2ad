#include "bplab/rmt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bplab/parallel.hpp"

namespace bplab::rmt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStreams = 64;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double density_unchecked(Ensemble e, const double* t, int n) {
  double d = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double c = std::cos(t[i]) - std::cos(t[j]);
      d *= c * c;
    }
  if (e == Ensemble::USp)
    for (int i = 0; i < n; ++i) {
      double s = std::sin(t[i]);
      d *= s * s;
    }
  return d;
}

/* Grid-certified sup over the ordered region (the density is symmetric, and
   vanishes on coincidences, so distinct grid nodes suffice); 1.25 headroom. */
double certified_sup(Ensemble e, int n) {
  int G = n <= 4 ? 48 : 28;
  std::vector<double> grid(G);
  for (int i = 0; i < G; ++i) grid[i] = (i + 0.5) * kPi / G;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<double> t(n);
  double sup = 0.0;
  while (true) {
    for (int i = 0; i < n; ++i) t[i] = grid[idx[i]];
    sup = std::max(sup, density_unchecked(e, t.data(), n));
    int k = n - 1;
    while (k >= 0 && idx[k] == G - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }
  return sup * 1.25;
}

/* One rejection draw; a sampled density above env raises it and signals the
   caller to restart its batch (accepted draws are biased once env is wrong). */
bool draw_one(Ensemble e, int n, Rng& rng, double& env, std::vector<double>& out) {
  while (true) {
    for (int i = 0; i < n; ++i) out[i] = rng.uniform(0.0, kPi);
    double d = density_unchecked(e, out.data(), n);
    if (d > env) {
      env = d * 1.1 * 1.25;
      return false;
    }
    if (rng.uniform01() * env <= d) {
      std::sort(out.begin(), out.end());
      return true;
    }
  }
}

void validate_n(int n) { require(n >= 1 && n <= 6, "rmt: n must be in [1, 6]"); }

/* Per-sample statistics reduced over fixed logical streams; body(sample,
   stream) is called for sample indices i = s, s + kStreams, ... so the
   stream decomposition (and hence every digit) is thread-count independent. */
template <typename Body>
void stream_samples(Ensemble e, int n, std::uint64_t seed, Body&& body) {
  double env0 = certified_sup(e, n);
  parallel_streams(kStreams, [&](int s) {
    double env = env0; /* raises persist across restarts */
    while (true) {
      Rng rng = Rng::stream(seed, s);
      bool restart = false;
      body(s, [&](std::vector<double>& t) {
        if (!restart && !draw_one(e, n, rng, env, t)) restart = true;
        return !restart;
      });
      if (!restart) return;
    }
  });
}

}  // namespace

double weyl_density(Ensemble e, const std::vector<double>& angles) {
  require(!angles.empty() && angles.size() <= 6, "weyl_density: need 1..6 angles");
  for (double t : angles)
    require(t >= 0.0 && t <= kPi, "weyl_density: angles must lie in [0, pi]");
  return density_unchecked(e, angles.data(), static_cast<int>(angles.size()));
}

std::vector<EigenangleSample> sample_weyl(Ensemble e, int n, Rng& rng, long count) {
  validate_n(n);
  require(count >= 1, "sample_weyl: count must be >= 1");
  double env = certified_sup(e, n);
  std::vector<EigenangleSample> out;
  while (true) {
    out.clear();
    out.reserve(count);
    bool ok = true;
    std::vector<double> t(n);
    for (long i = 0; i < count && ok; ++i) {
      if (draw_one(e, n, rng, env, t))
        out.push_back({n, t, e});
      else
        ok = false; /* env was raised; prior accepts are now invalid */
    }
    if (ok) return out;
  }
}

double det_one_minus(const EigenangleSample& s) {
  double d = 1.0;
  for (double t : s.angles) d *= 2.0 - 2.0 * std::cos(t);
  return d;
}

MomentEstimate estimate_cn(int n, long samples, std::uint64_t seed) {
  require(n >= 1 && n <= 4, "estimate_cn: n must be in [1, 4]");
  require(samples >= 10000, "estimate_cn: need at least 10^4 samples");
  std::vector<double> sums(kStreams, 0.0), sumsqs(kStreams, 0.0);
  stream_samples(Ensemble::SOeven, n, seed, [&](int s, auto&& next) {
    sums[s] = sumsqs[s] = 0.0;
    std::vector<double> t(n);
    for (long i = s; i < samples; i += kStreams) {
      if (!next(t)) return;
      double d = 1.0;
      for (double x : t) d *= 2.0 - 2.0 * std::cos(x);
      sums[s] += d;
      sumsqs[s] += d * d;
    }
  });
  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < kStreams; ++s) {
    sum += sums[s];
    sumsq += sumsqs[s];
  }
  double ns = static_cast<double>(samples);
  double mean = sum / ns;
  double var = (sumsq - ns * mean * mean) / (ns - 1.0);
  double se_mean = std::sqrt(std::max(0.0, var) / ns);
  /* c_n = 1/mean; delta method gives se = se_mean / mean^2 */
  return {1.0 / mean, se_mean / (mean * mean), samples};
}

MomentEstimate one_level_density(Ensemble e, int n, const lowlying::TestFunction& phi,
                                 long samples, std::uint64_t seed, bool weighted) {
  validate_n(n);
  require(samples >= 2, "one_level_density: need at least 2 samples");
  require(phi.alpha() < 1.0, "one_level_density: phi_hat must be supported in (-1, 1)");
  if (weighted && e == Ensemble::USp)
    throw std::invalid_argument("one_level_density: det(1 - g) weighting is SOeven-only");

  /* mean-density unfolding constant */
  double c = e == Ensemble::USp ? 2.0 * n + 1.0 : 2.0 * n - 1.0;

  /* accumulators: plain (S, S2) and, when weighted, (W, WS, W2S, W2S2, W2)
     for the self-normalized ratio and its delta-method error */
  std::vector<std::array<double, 7>> acc(kStreams);
  stream_samples(e, n, seed, [&](int s, auto&& next) {
    acc[s] = {};
    std::vector<double> t(n);
    for (long i = s; i < samples; i += kStreams) {
      if (!next(t)) return;
      double stat = 0.0;
      for (double x : t) stat += 2.0 * phi.phi(c * x / (2.0 * kPi));
      double w = 1.0;
      if (weighted)
        for (double x : t) w *= 2.0 - 2.0 * std::cos(x);
      auto& a = acc[s];
      a[0] += stat;
      a[1] += stat * stat;
      a[2] += w;
      a[3] += w * stat;
      a[4] += w * w * stat;
      a[5] += w * w * stat * stat;
      a[6] += w * w;
    }
  });
  std::array<double, 7> a{};
  for (int s = 0; s < kStreams; ++s)
    for (int j = 0; j < 7; ++j) a[j] += acc[s][j];

  double ns = static_cast<double>(samples);
  if (!weighted) {
    double mean = a[0] / ns;
    double var = (a[1] - ns * mean * mean) / (ns - 1.0);
    return {mean, std::sqrt(std::max(0.0, var) / ns), samples};
  }
  double r = a[3] / a[2];
  /* sum w_i^2 (stat_i - r)^2 expanded from the accumulated moments */
  double num = a[5] - 2.0 * r * a[4] + r * r * a[6];
  return {r, std::sqrt(std::max(0.0, num)) / a[2], samples};
}

}  // namespace bplab::rmt
