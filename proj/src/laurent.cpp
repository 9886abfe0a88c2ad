#include "bplab/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bplab::wpoly {

namespace {

/* z^n for integer n (negative allowed). */
std::complex<double> ipow(std::complex<double> z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  std::complex<double> r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Ctx ctx) : ctx_(ctx) {
  if (ctx.p < 2) throw std::invalid_argument("LaurentPolynomial: prime context must be >= 2");
}

LaurentPolynomial LaurentPolynomial::constant(Ctx ctx, const Coefficient& c) {
  return monomial(ctx, 0, 0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(Ctx ctx, int i, int j, const Coefficient& c) {
  LaurentPolynomial p(ctx);
  p.add_term(i, j, c);
  return p;
}

Coefficient LaurentPolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  if (it == terms_.end())
    return ctx_.mode == Mode::exact ? Coefficient() : Coefficient::floating(0.0);
  return it->second;
}

void LaurentPolynomial::add_term(int i, int j, const Coefficient& c) {
  Coefficient v = c;
  if (ctx_.mode == Mode::floating && v.mode() == Mode::exact) v = v.promoted();
  if (ctx_.mode == Mode::exact && v.mode() == Mode::floating)
    throw std::invalid_argument("LaurentPolynomial: floating coefficient in exact context");
  if (v.mode() == Mode::exact && v.prime() != 0 && v.prime() != ctx_.p)
    throw std::invalid_argument("Coefficient: mixed prime contexts");
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    if (!v.is_zero(0.0)) terms_.emplace(Exponent{i, j}, std::move(v));
    return;
  }
  it->second += v;
  if (it->second.is_zero(0.0)) terms_.erase(it);
}

void LaurentPolynomial::check_ctx(const LaurentPolynomial& o) const {
  if (!(ctx_ == o.ctx_))
    throw std::invalid_argument("LaurentPolynomial: mixed prime contexts or modes");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_ctx(b);
  LaurentPolynomial r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Coefficient& c) const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, v] : terms_) r.add_term(e.first, e.second, v * c);
  return r;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> a,
                                                 std::complex<double> b) const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [e, c] : terms_) s += c.to_complex() * ipow(a, e.first) * ipow(b, e.second);
  return s;
}

LaurentPolynomial LaurentPolynomial::weyl_swap() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(e.second, e.first, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::weyl_inv_a() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(-e.first, e.second, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::weyl_inv_b() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(e.first, -e.second, c);
  return r;
}

bool LaurentPolynomial::weyl_invariant(std::string* violated, double tol) const {
  if (!equals(weyl_swap(), tol)) {
    if (violated) *violated = "a<->b";
    return false;
  }
  if (!equals(weyl_inv_a(), tol)) {
    if (violated) *violated = "a->1/a";
    return false;
  }
  if (!equals(weyl_inv_b(), tol)) {
    if (violated) *violated = "b->1/b";
    return false;
  }
  return true;
}

bool LaurentPolynomial::equals(const LaurentPolynomial& o, double tol) const {
  if (!(ctx_ == o.ctx_)) return false;
  /* union of exponents; coefficients compared with the tolerance */
  auto ia = terms_.begin();
  auto ib = o.terms_.begin();
  Coefficient zero =
      ctx_.mode == Mode::exact ? Coefficient() : Coefficient::floating(0.0);
  while (ia != terms_.end() || ib != o.terms_.end()) {
    if (ib == o.terms_.end() || (ia != terms_.end() && ia->first < ib->first)) {
      if (!ia->second.equals(zero, tol)) return false;
      ++ia;
    } else if (ia == terms_.end() || ib->first < ia->first) {
      if (!ib->second.equals(zero, tol)) return false;
      ++ib;
    } else {
      if (!ia->second.equals(ib->second, tol)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e.first != 0) os << "*a^" << e.first;
    if (e.second != 0) os << "*b^" << e.second;
  }
  return os.str();
}

LaurentPolynomial orbit_sum(Ctx ctx, int j, int k) {
  if (j < k || k < 0) throw std::invalid_argument("orbit_sum: requires j >= k >= 0");
  std::set<std::pair<int, int>> orbit;
  for (int sj : {j, -j})
    for (int sk : {k, -k}) {
      orbit.insert({sj, sk});
      orbit.insert({sk, sj});
    }
  Coefficient one =
      ctx.mode == Mode::exact ? Coefficient(1) : Coefficient::floating(1.0);
  LaurentPolynomial r(ctx);
  for (const auto& e : orbit) r.add_term(e.first, e.second, one);
  return r;
}

OrbitDecomposition decompose_orbit_basis(const LaurentPolynomial& poly, double tol) {
  std::string violated;
  if (!poly.weyl_invariant(&violated, tol)) throw not_invariant_error(violated);

  OrbitDecomposition out;
  out.trace_degree = -1;
  LaurentPolynomial work = poly;
  for (;;) {
    /* leading orbit representative: maximal (j+k, j) over remaining terms */
    bool found = false;
    std::pair<int, int> lead{0, 0};
    for (const auto& [e, c] : work.terms()) {
      if (c.is_zero(tol)) continue;
      int j = std::max(std::abs(e.first), std::abs(e.second));
      int k = std::min(std::abs(e.first), std::abs(e.second));
      if (!found || std::make_pair(j + k, j) > std::make_pair(lead.first + lead.second, lead.first)) {
        lead = {j, k};
        found = true;
      }
    }
    if (!found) break;
    Coefficient c = work.coeff(lead.first, lead.second);
    auto [it, inserted] = out.coords.emplace(lead, c);
    if (!inserted) it->second += c;
    out.trace_degree = std::max(out.trace_degree, lead.first + lead.second);
    work -= orbit_sum(poly.ctx(), lead.first, lead.second).scaled(c);
  }
  return out;
}

}  // namespace bplab::wpoly
