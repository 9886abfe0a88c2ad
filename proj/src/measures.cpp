#include "bplab/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bplab/parallel.hpp"
#include "bplab/quadrature.hpp"

namespace bplab::measures {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(double t1, double t2) {
  if (!(t1 >= 0.0 && t1 <= kPi && t2 >= 0.0 && t2 <= kPi))
    throw std::invalid_argument("SpectralPoint: angles must lie in [0, pi]^2");
}

/* Full-square tensor quadrature of g(t1, t2) at one ladder order. Row sums
   are accumulated independently and then added in a fixed order, so the
   result is identical for any thread count. */
double tensor_integral(const std::function<double(double, double)>& g, int order) {
  GaussLegendre rule(order, 0.0, kPi);
  std::vector<double> row(order, 0.0);
  parallel_streams(order, [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < order; ++j) acc += rule.w[j] * g(rule.x[i], rule.x[j]);
    row[i] = rule.w[i] * acc;
  });
  double total = 0.0;
  for (double r : row) total += r;
  return total;
}

/* Ladder refinement of a plain (non-ratio) integral. */
double ladder_integral(const std::function<double(double, double)>& g,
                       const std::vector<int>& orders) {
  double last = tensor_integral(g, orders.front());
  for (size_t i = 1; i < orders.size(); ++i) {
    double next = tensor_integral(g, orders[i]);
    if (std::abs(next - last) <= 1e-13 * std::max(1.0, std::abs(next))) return next;
    last = next;
  }
  return last;
}

}  // namespace

double haar_density(double theta1, double theta2) {
  check_domain(theta1, theta2);
  double c = std::cos(theta1) - std::cos(theta2);
  double s1 = std::sin(theta1), s2 = std::sin(theta2);
  return c * c * s1 * s1 * s2 * s2;
}

double delta_p(const sugano::LocalBesselDatum& datum, double theta1, double theta2) {
  check_domain(theta1, theta2);
  const double p = static_cast<double>(datum.p);
  const double lam = datum.lambda.to_complex().real();
  const double sq = std::sqrt(p);
  auto factor = [&](double theta) {
    double x = std::cos(theta);
    switch (datum.eps) {
      case -1: {
        double t = 1.0 + 1.0 / p;
        return t * t - 4.0 * x * x / p;
      }
      case +1: {
        double t = 1.0 - 1.0 / p;
        return t * t + (1.0 / p) * (2.0 * x * sq - lam) * (2.0 * x / sq - lam);
      }
      default:
        return 1.0 - 2.0 * lam * x / sq + 1.0 / p;
    }
  };
  return factor(theta1) * factor(theta2);
}

SpectralMeasure SpectralMeasure::haar() {
  SpectralMeasure m;
  m.kind_ = Kind::haar;
  m.z_square_ = ladder_integral([](double t1, double t2) { return haar_density(t1, t2); },
                                QuadratureLadder{}.orders);
  /* printed constant 4/pi^2 over the ordered region */
  m.printed_mass_ = (4.0 / (kPi * kPi)) * m.z_square_ / 2.0;
  m.prefactor_stat_ = 0.0;
  return m;
}

SpectralMeasure SpectralMeasure::plancherel(const sugano::LocalBesselDatum& datum) {
  SpectralMeasure m;
  m.kind_ = Kind::plancherel;
  m.datum_ = datum;
  const std::vector<int> orders = QuadratureLadder{}.orders;
  double z_haar = ladder_integral([](double t1, double t2) { return haar_density(t1, t2); },
                                  orders);
  m.z_square_ = ladder_integral(
      [&](double t1, double t2) {
        double dp = delta_p(datum, t1, t2);
        if (dp <= 0.0)
          throw degenerate_measure_error("plancherel: Delta_p not positive on the domain");
        return haar_density(t1, t2) / dp;
      },
      orders);
  double prefactor = 1.0 - static_cast<double>(datum.eps) / static_cast<double>(datum.p);
  /* int Delta_p^{-1} dmu against probability Haar, times the prefactor */
  m.prefactor_stat_ = std::abs(prefactor * m.z_square_ / z_haar - 1.0);
  /* the measure as printed: (1 - eps/p) Delta_p^{-1} (4/pi^2) shape, over
     the ordered region */
  m.printed_mass_ = prefactor * (4.0 / (kPi * kPi)) * m.z_square_ / 2.0;
  return m;
}

double SpectralMeasure::density(double theta1, double theta2) const {
  double h = haar_density(theta1, theta2);
  if (kind_ == Kind::haar) return h;
  double dp = delta_p(*datum_, theta1, theta2);
  if (dp <= 0.0)
    throw degenerate_measure_error("plancherel: Delta_p not positive on the domain");
  return h / dp;
}

IntegrateResult integrate(const std::function<std::complex<double>(SpectralPoint)>& f,
                          const SpectralMeasure& m, const QuadratureLadder& rule) {
  auto ratio_at = [&](int order) -> std::complex<double> {
    GaussLegendre gl(order, 0.0, kPi);
    /* evaluate f and the density on the tensor grid once; symmetrization
       averages the grid transpose, costing no extra evaluations */
    std::vector<std::complex<double>> fv(static_cast<size_t>(order) * order);
    std::vector<double> dv(static_cast<size_t>(order) * order);
    parallel_streams(order, [&](int i) {
      for (int j = 0; j < order; ++j) {
        SpectralPoint pt{gl.x[i], gl.x[j]};
        fv[static_cast<size_t>(i) * order + j] = f(pt);
        dv[static_cast<size_t>(i) * order + j] = m.density(pt.theta1, pt.theta2);
      }
    });
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (int i = 0; i < order; ++i) {
      std::complex<double> rnum = 0.0;
      double rden = 0.0;
      for (int j = 0; j < order; ++j) {
        size_t ij = static_cast<size_t>(i) * order + j;
        size_t ji = static_cast<size_t>(j) * order + i;
        double wd = gl.w[j] * dv[ij];
        rnum += wd * 0.5 * (fv[ij] + fv[ji]);
        rden += wd;
      }
      num += gl.w[i] * rnum;
      den += gl.w[i] * rden;
    }
    return num / den;
  };

  std::complex<double> last = ratio_at(rule.orders.front());
  double err = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < rule.orders.size(); ++i) {
    std::complex<double> next = ratio_at(rule.orders[i]);
    err = std::abs(next - last);
    last = next;
    if (err <= rule.tol) return {last, err, true};
  }
  return {last, err, false};
}

std::function<std::complex<double>(SpectralPoint)> poly_evaluator(
    const wpoly::LaurentPolynomial& poly) {
  return [poly](SpectralPoint pt) { return poly.evaluate(pt.a(), pt.b()); };
}

std::vector<SpectralPoint> sample(const SpectralMeasure& m, Rng& rng, long n) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  double env = m.envelope_.load();
  if (env == 0.0) {
    /* certify sup(density) by a 512^2 grid scan plus 10% headroom */
    constexpr int kGrid = 512;
    double sup = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      double t1 = (i + 0.5) * kPi / kGrid;
      for (int j = 0; j < kGrid; ++j)
        sup = std::max(sup, m.density(t1, (j + 0.5) * kPi / kGrid));
    }
    env = sup * 1.1;
    m.envelope_.store(env);
  }
  std::vector<SpectralPoint> out;
  out.reserve(static_cast<size_t>(n));
  while (static_cast<long>(out.size()) < n) {
    SpectralPoint pt{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
    double d = m.density(pt.theta1, pt.theta2);
    if (d > env) {
      /* envelope violated: recertify upward and start over */
      env = d * 1.1;
      m.envelope_.store(env);
      out.clear();
      continue;
    }
    if (rng.uniform01() * env <= d) out.push_back(pt.canonical());
  }
  return out;
}

sugano::LocalBesselDatum make_datum(const classgroup::ClassGroup& G,
                                    const classgroup::Character& chi, long p) {
  int eps = G.eps(p);
  if (chi.is_real()) {
    long lam = classgroup::lambda_p_exact(G, chi, p);
    return {p, eps, wpoly::Coefficient(lam)};
  }
  double lam = classgroup::lambda_p(G, chi, p);
  return {p, eps, wpoly::Coefficient::floating({lam, 0.0})};
}

}  // namespace bplab::measures
