#include "bplab/coefficient.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bplab::wpoly {

Coefficient Coefficient::quadratic(const mpq_class& rat, const mpq_class& irr, long p) {
  if (p < 2) throw std::invalid_argument("Coefficient: radical prime must be >= 2");
  Coefficient c;
  c.rat_ = rat;
  c.irr_ = irr;
  c.p_ = irr == 0 ? 0 : p;
  c.rat_.canonicalize();
  c.irr_.canonicalize();
  return c;
}

Coefficient Coefficient::sqrt_prime(long p) { return quadratic(0, 1, p); }

Coefficient Coefficient::inv_sqrt_prime(long p) {
  return quadratic(0, mpq_class(1, p), p);
}

Coefficient Coefficient::floating(std::complex<double> v) {
  Coefficient c;
  c.mode_ = Mode::floating;
  c.f_ = v;
  return c;
}

const mpq_class& Coefficient::rat() const {
  if (mode_ != Mode::exact) throw std::domain_error("Coefficient: rat() on floating value");
  return rat_;
}

const mpq_class& Coefficient::irr() const {
  if (mode_ != Mode::exact) throw std::domain_error("Coefficient: irr() on floating value");
  return irr_;
}

std::complex<double> Coefficient::to_complex() const {
  if (mode_ == Mode::floating) return f_;
  double v = rat_.get_d();
  if (irr_ != 0) v += irr_.get_d() * std::sqrt(static_cast<double>(p_));
  return {v, 0.0};
}

bool Coefficient::is_zero(double tol) const {
  if (mode_ == Mode::exact) return rat_ == 0 && irr_ == 0;
  return std::abs(f_) <= tol;
}

bool Coefficient::equals(const Coefficient& o, double tol) const {
  if (mode_ == Mode::exact && o.mode_ == Mode::exact) {
    if (rat_ != o.rat_ || irr_ != o.irr_) return false;
    return irr_ == 0 || p_ == o.p_;
  }
  return std::abs(to_complex() - o.to_complex()) <= tol;
}

long Coefficient::combine_primes(long a, long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw std::invalid_argument("Coefficient: mixed prime contexts");
  return a;
}

Coefficient Coefficient::operator-() const {
  Coefficient c(*this);
  if (mode_ == Mode::exact) {
    c.rat_ = -rat_;
    c.irr_ = -irr_;
  } else {
    c.f_ = -f_;
  }
  return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (mode_ == Mode::exact && o.mode_ == Mode::exact) {
    p_ = combine_primes(p_, o.p_);
    rat_ += o.rat_;
    irr_ += o.irr_;
    if (irr_ == 0) p_ = 0;
    return *this;
  }
  f_ = to_complex() + o.to_complex();
  mode_ = Mode::floating;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (mode_ == Mode::exact && o.mode_ == Mode::exact) {
    long p = combine_primes(p_, o.p_);
    /* (r1 + s1 rt)(r2 + s2 rt) = r1 r2 + p s1 s2 + (r1 s2 + s1 r2) rt */
    mpq_class r = rat_ * o.rat_;
    if (irr_ != 0 && o.irr_ != 0) r += mpq_class(p) * irr_ * o.irr_;
    mpq_class s = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = r;
    irr_ = s;
    p_ = irr_ == 0 ? 0 : p;
    return *this;
  }
  f_ = to_complex() * o.to_complex();
  mode_ = Mode::floating;
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (mode_ == Mode::floating) {
    if (std::abs(f_) == 0.0) throw std::domain_error("Coefficient: inverse of zero");
    return floating(1.0 / f_);
  }
  if (rat_ == 0 && irr_ == 0) throw std::domain_error("Coefficient: inverse of zero");
  if (irr_ == 0) return Coefficient(mpq_class(1) / rat_);
  /* 1/(r + s rt p) = (r - s rt p)/(r^2 - p s^2); denominator nonzero since
     sqrt(p) is irrational */
  mpq_class den = rat_ * rat_ - mpq_class(p_) * irr_ * irr_;
  return quadratic(rat_ / den, -irr_ / den, p_);
}

Coefficient Coefficient::promoted() const { return floating(to_complex()); }

std::string Coefficient::str() const {
  std::ostringstream os;
  if (mode_ == Mode::exact) {
    os << rat_.get_str();
    if (irr_ != 0) os << (irr_ > 0 ? "+" : "") << irr_.get_str() << "*sqrt(" << p_ << ")";
  } else {
    os << "(" << f_.real() << "," << f_.imag() << ")";
  }
  return os.str();
}

}  // namespace bplab::wpoly
