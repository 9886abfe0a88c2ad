#include "bplab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bplab {

namespace {

/* Nodes and weights on [-1,1]; Newton on the Legendre recurrence. */
void legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

const std::pair<const std::vector<double>&, const std::vector<double>&> cached_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::pair<std::vector<double>, std::vector<double>> rule;
    legendre_rule(n, rule.first, rule.second);
    it = cache.emplace(n, std::move(rule)).first;
  }
  return {it->second.first, it->second.second};
}

/* Gauss-Kronrod 7/15 nodes on [0,1]-half (symmetric); QUADPACK constants. */
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.000000000000000};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

void gk15(const std::function<double(double)>& f, double a, double b, double& value,
          double& error) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    double fsum = f(c - dx) + f(c + dx);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
  }
  value = res_k * h;
  double diff = std::abs(res_k - res_g) * h;
  error = diff; /* conservative: QUADPACK would scale by (200*diff)^1.5 */
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           AdaptiveResult& acc) {
  double v, e;
  gk15(f, a, b, v, e);
  if (e <= tol || depth <= 0) {
    acc.value += v;
    acc.error += e;
    if (e > tol) acc.converged = false;
    return;
  }
  double m = 0.5 * (a + b);
  adapt(f, a, m, tol * 0.5, depth - 1, acc);
  adapt(f, m, b, tol * 0.5, depth - 1, acc);
}

}  // namespace

GaussLegendre::GaussLegendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
  auto rule = cached_rule(n);
  x.resize(n);
  w.resize(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * rule.first[i];
    w[i] = half * rule.second[i];
  }
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_depth) {
  AdaptiveResult acc{0.0, 0.0, true};
  adapt(f, a, b, tol, max_depth, acc);
  return acc;
}

}  // namespace bplab
