#include "bplab/sugano.hpp"

#include <cmath>
#include <stdexcept>

#include "bplab/util.hpp"

namespace bplab::sugano {

namespace {

Coefficient c_one(const Ctx& ctx) {
  return ctx.mode == Mode::exact ? Coefficient(1) : Coefficient::floating(1.0);
}

/* lambda / sqrt(p) and lambda * sqrt(p) inside the coefficient field. */
Coefficient lambda_over_sqrt_p(const LocalBesselDatum& d) {
  if (d.mode() == Mode::exact) return d.lambda * Coefficient::inv_sqrt_prime(d.p);
  return d.lambda * Coefficient::floating(1.0 / std::sqrt(static_cast<double>(d.p)));
}

Coefficient lambda_times_sqrt_p(const LocalBesselDatum& d) {
  if (d.mode() == Mode::exact) return d.lambda * Coefficient::sqrt_prime(d.p);
  return d.lambda * Coefficient::floating(std::sqrt(static_cast<double>(d.p)));
}

Coefficient rational_in(const Ctx& ctx, const mpq_class& v) {
  return ctx.mode == Mode::exact ? Coefficient(v) : Coefficient::floating(v.get_d());
}

/* prod over roots of (1 - r X): coefficient list of degree roots.size(). */
std::vector<LaurentPolynomial> product_one_minus(const Ctx& ctx,
                                                 const std::vector<LaurentPolynomial>& roots) {
  std::vector<LaurentPolynomial> acc{LaurentPolynomial::constant(ctx, c_one(ctx))};
  for (const auto& r : roots) {
    std::vector<LaurentPolynomial> next(acc.size() + 1, LaurentPolynomial(ctx));
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= r * acc[i];
    }
    acc = std::move(next);
  }
  return acc;
}

/* Series inverse of a polynomial with constant term 1, to given order. */
std::vector<LaurentPolynomial> series_inverse(const std::vector<LaurentPolynomial>& poly,
                                              int order) {
  const Ctx ctx = poly.at(0).ctx();
  std::vector<LaurentPolynomial> inv(order + 1, LaurentPolynomial(ctx));
  inv[0] = LaurentPolynomial::constant(ctx, c_one(ctx));
  for (int n = 1; n <= order; ++n)
    for (size_t j = 1; j < poly.size() && static_cast<int>(j) <= n; ++j)
      inv[n] -= poly[j] * inv[n - j];
  return inv;
}

}  // namespace

LocalBesselDatum::LocalBesselDatum(long p, int eps, Coefficient lambda)
    : p(p), eps(eps), lambda(std::move(lambda)) {
  if (!is_prime(p)) throw std::invalid_argument("LocalBesselDatum: p must be prime");
  if (eps < -1 || eps > 1) throw std::invalid_argument("LocalBesselDatum: eps must be -1, 0 or 1");
  if (this->lambda.mode() == Mode::exact && !this->lambda.is_rational())
    throw std::invalid_argument("LocalBesselDatum: exact lambda must be rational");
  double lam = this->lambda.to_complex().real();
  double imag = this->lambda.to_complex().imag();
  if (std::abs(imag) > 1e-9)
    throw std::invalid_argument("LocalBesselDatum: lambda must be real");
  if (eps == -1 && std::abs(lam) > 1e-9)
    throw std::invalid_argument("LocalBesselDatum: inert prime forces lambda = 0");
  if (eps == 0 && std::abs(std::abs(lam) - 1.0) > 1e-9)
    throw std::invalid_argument("LocalBesselDatum: ramified prime forces lambda = +-1");
  if (std::abs(lam) > 2.0 + 1e-9)
    throw std::invalid_argument("LocalBesselDatum: |lambda| must be <= 2");
}

SuganoComponents build_components(const LocalBesselDatum& datum) {
  const Ctx ctx = datum.ctx();
  const Coefficient one = c_one(ctx);
  auto mono = [&](int i, int j) { return LaurentPolynomial::monomial(ctx, i, j, one); };

  SuganoComponents out{
      {}, {}, {}, {}, {}, wpoly::orbit_sum(ctx, 1, 0),
      wpoly::orbit_sum(ctx, 1, 1) + LaurentPolynomial::constant(ctx, one)};

  /* P(X): roots ab, a/b, b/a, 1/(ab); Q(Y): roots a, b, 1/a, 1/b */
  out.P_X = product_one_minus(ctx, {mono(1, 1), mono(1, -1), mono(-1, 1), mono(-1, -1)});
  out.Q_Y = product_one_minus(ctx, {mono(1, 0), mono(0, 1), mono(-1, 0), mono(0, -1)});

  const Coefficient lam_div = lambda_over_sqrt_p(datum);
  const Coefficient lam_mul = lambda_times_sqrt_p(datum);
  const Coefficient lam_sq = datum.lambda * datum.lambda;
  const Coefficient eps_c = rational_in(ctx, datum.eps);
  const Coefficient eps_over_p = rational_in(ctx, mpq_class(datum.eps, datum.p));
  const Coefficient inv_p_eps = rational_in(ctx, mpq_class(1, datum.p - datum.eps));

  const LaurentPolynomial one_p = LaurentPolynomial::constant(ctx, one);
  const LaurentPolynomial tau_m1 = out.tau - one_p;

  /* M1(X) = 1 - (p-eps)^{-1} (sqrt(p) lambda sigma - eps (tau-1) - lambda^2) X
             - eps p^{-1} X^2 */
  LaurentPolynomial m1_lin =
      out.sigma.scaled(lam_mul) - tau_m1.scaled(eps_c) - one_p.scaled(lam_sq);
  out.M1_X = {one_p, -m1_lin.scaled(inv_p_eps), -one_p.scaled(eps_over_p)};

  /* M2(X) = 1 - tau X - tau X^2 + X^3 */
  out.M2_X = {one_p, -out.tau, -out.tau, one_p};

  /* A(X) = M1(X)(1+X) + p^{-1/2} lambda sigma X^2, degree 3 */
  std::vector<LaurentPolynomial> A(4, LaurentPolynomial(ctx));
  for (int i = 0; i < 3; ++i) {
    A[i] += out.M1_X[i];
    A[i + 1] += out.M1_X[i];
  }
  A[2] += out.sigma.scaled(lam_div);

  /* B(X) = sigma M1(X) - p^{-1/2} lambda M2(X), degree 3 */
  std::vector<LaurentPolynomial> B(4, LaurentPolynomial(ctx));
  for (int i = 0; i < 3; ++i) B[i] += out.M1_X[i] * out.sigma;
  for (int i = 0; i < 4; ++i) B[i] -= out.M2_X[i].scaled(lam_div);

  /* H = (1 + X Y^2) A(X) - X Y B(X) - p^{-1/2} lambda P(X) Y
         + p^{-1} eps P(X) Y^2 */
  out.H_XY.assign(5, std::vector<LaurentPolynomial>(3, LaurentPolynomial(ctx)));
  for (int i = 0; i < 4; ++i) {
    out.H_XY[i][0] += A[i];
    out.H_XY[i + 1][2] += A[i];
    out.H_XY[i + 1][1] -= B[i];
  }
  for (int i = 0; i <= 4; ++i) {
    out.H_XY[i][1] -= out.P_X[i].scaled(lam_div);
    out.H_XY[i][2] += out.P_X[i].scaled(eps_over_p);
  }
  return out;
}

LaurentPolynomial expand_U(const LocalBesselDatum& datum, int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("expand_U: indices must be >= 0");
  SuganoComponents comp = build_components(datum);
  auto p_inv = series_inverse(comp.P_X, m);
  auto q_inv = series_inverse(comp.Q_Y, l);
  LaurentPolynomial u(datum.ctx());
  for (int i = 0; i <= 4 && i <= m; ++i)
    for (int j = 0; j <= 2 && j <= l; ++j) u += comp.H_XY[i][j] * p_inv[m - i] * q_inv[l - j];
  return u;
}

std::vector<LaurentPolynomial> expand_U_row(const LocalBesselDatum& datum, int l_max) {
  if (l_max < 0) throw std::invalid_argument("expand_U_row: l_max must be >= 0");
  const Ctx ctx = datum.ctx();
  const Coefficient one = c_one(ctx);
  auto mono = [&](int i, int j) { return LaurentPolynomial::monomial(ctx, i, j, one); };
  auto Q = product_one_minus(ctx, {mono(1, 0), mono(0, 1), mono(-1, 0), mono(0, -1)});
  auto q_inv = series_inverse(Q, l_max);
  /* numerator 1 - lambda p^{-1/2} Y + eps p^{-1} Y^2 */
  std::vector<LaurentPolynomial> num{
      LaurentPolynomial::constant(ctx, one),
      -LaurentPolynomial::constant(ctx, lambda_over_sqrt_p(datum)),
      LaurentPolynomial::constant(ctx, rational_in(ctx, mpq_class(datum.eps, datum.p)))};
  std::vector<LaurentPolynomial> row;
  row.reserve(l_max + 1);
  for (int l = 0; l <= l_max; ++l) {
    LaurentPolynomial u(ctx);
    for (int j = 0; j <= 2 && j <= l; ++j) u += num[j] * q_inv[l - j];
    row.push_back(std::move(u));
  }
  return row;
}

void UTable::precompute(int l_max, int m_max) {
  SuganoComponents comp = build_components(datum_);
  auto p_inv = series_inverse(comp.P_X, m_max);
  auto q_inv = series_inverse(comp.Q_Y, l_max);
  for (int l = 0; l <= l_max; ++l)
    for (int m = 0; m <= m_max; ++m) {
      if (table_.count({l, m})) continue;
      LaurentPolynomial u(datum_.ctx());
      for (int i = 0; i <= 4 && i <= m; ++i)
        for (int j = 0; j <= 2 && j <= l; ++j) u += comp.H_XY[i][j] * p_inv[m - i] * q_inv[l - j];
      table_.emplace(std::make_pair(l, m), std::move(u));
    }
}

const LaurentPolynomial& UTable::U(int l, int m) const {
  auto it = table_.find({l, m});
  if (it == table_.end()) throw std::out_of_range("UTable: U(l,m) not precomputed");
  return it->second;
}

std::map<std::pair<int, int>, Coefficient> decompose_in_U_basis(const LocalBesselDatum& datum,
                                                                const LaurentPolynomial& poly) {
  if (!(poly.ctx() == datum.ctx()))
    throw std::invalid_argument("decompose_in_U_basis: polynomial context mismatch");
  const bool exact = datum.mode() == Mode::exact;
  auto od = wpoly::decompose_orbit_basis(poly);
  if (od.trace_degree < 0) return {};
  const int D = od.trace_degree;

  /* basis indices (l, m) with l + 2m <= D, ordered by (l+2m, l) */
  std::vector<std::pair<int, int>> basis;
  for (int s = 0; s <= D; ++s)
    for (int l = s % 2; l <= s; l += 2) basis.push_back({l, (s - l) / 2});

  /* orbit keys (j, k), j >= k >= 0, j + k <= D; same count as basis */
  std::vector<std::pair<int, int>> keys;
  for (int s = 0; s <= D; ++s)
    for (int j = (s + 1) / 2; j <= s; ++j) keys.push_back({j, s - j});
  const size_t n = basis.size();
  if (keys.size() != n) throw std::logic_error("decompose_in_U_basis: index count mismatch");

  UTable table(datum);
  table.precompute(D, D / 2);

  auto key_index = [&](const std::pair<int, int>& k) {
    for (size_t i = 0; i < n; ++i)
      if (keys[i] == k) return i;
    throw std::logic_error("decompose_in_U_basis: orbit key outside degree window");
  };

  /* columns: orbit coordinates of each U^{l,m}; degree bound guarantees the
     keys stay inside the window */
  const Coefficient zero = exact ? Coefficient() : Coefficient::floating(0.0);
  std::vector<std::vector<Coefficient>> mat(n, std::vector<Coefficient>(n + 1, zero));
  for (size_t col = 0; col < n; ++col) {
    auto [l, m] = basis[col];
    auto ud = wpoly::decompose_orbit_basis(table.U(l, m));
    if (ud.trace_degree > l + 2 * m)
      throw std::logic_error("decompose_in_U_basis: U^{l,m} exceeds trace degree l+2m");
    for (const auto& [key, c] : ud.coords) mat[key_index(key)][col] = c;
  }
  for (const auto& [key, c] : od.coords) mat[key_index(key)][n] = c;

  /* Gaussian elimination over the field */
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    if (exact) {
      while (pivot < n && mat[pivot][col].is_zero(0.0)) ++pivot;
      if (pivot == n) throw std::domain_error("decompose_in_U_basis: singular basis matrix");
    } else {
      double best = -1.0;
      for (size_t r = col; r < n; ++r) {
        double v = std::abs(mat[r][col].to_complex());
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
      if (best <= 1e-14) throw std::domain_error("decompose_in_U_basis: singular basis matrix");
    }
    std::swap(mat[col], mat[pivot]);
    Coefficient inv = mat[col][col].inverse();
    for (size_t j = col; j <= n; ++j) mat[col][j] = mat[col][j] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || mat[r][col].is_zero(0.0)) continue;
      Coefficient f = mat[r][col];
      for (size_t j = col; j <= n; ++j) mat[r][j] -= f * mat[col][j];
    }
  }

  std::map<std::pair<int, int>, Coefficient> out;
  for (size_t i = 0; i < n; ++i)
    if (!mat[i][n].is_zero()) out.emplace(basis[i], mat[i][n]);
  return out;
}

}  // namespace bplab::sugano
