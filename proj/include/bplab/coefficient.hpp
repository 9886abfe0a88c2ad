#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace bplab::wpoly {

enum class Mode { exact, floating };

/* Scalar of the coefficient field.

   Exact mode holds rat + irr*sqrt(p) with rational rat, irr; p prime, so
   this is the field Q(sqrt p). A value with irr == 0 may carry p == 0
   ("context-free rational", e.g. integer literals) and combines with any
   prime. Exact values under different radicals do not mix (invalid-argument).
   Floating mode holds a complex double; exact op floating promotes the exact
   side via to_complex(). */
class Coefficient {
 public:
  static constexpr double kTol = 1e-12;

  Coefficient() : mode_(Mode::exact), p_(0) {}
  Coefficient(long v) : mode_(Mode::exact), p_(0), rat_(v) {}
  Coefficient(const mpq_class& v) : mode_(Mode::exact), p_(0), rat_(v) {
    rat_.canonicalize();
  }

  static Coefficient quadratic(const mpq_class& rat, const mpq_class& irr, long p);
  static Coefficient sqrt_prime(long p);     /* sqrt(p) */
  static Coefficient inv_sqrt_prime(long p); /* 1/sqrt(p) = (1/p) sqrt(p) */
  static Coefficient floating(std::complex<double> v);

  Mode mode() const { return mode_; }
  long prime() const { return p_; } /* 0 when context-free */
  bool is_exact() const { return mode_ == Mode::exact; }
  /* exact with no radical part */
  bool is_rational() const { return mode_ == Mode::exact && irr_ == 0; }
  const mpq_class& rat() const;
  const mpq_class& irr() const;
  std::complex<double> to_complex() const;

  bool is_zero(double tol = kTol) const;
  bool equals(const Coefficient& o, double tol = kTol) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

  /* Field inverse; throws domain_error on zero. */
  Coefficient inverse() const;

  Coefficient promoted() const; /* floating copy */
  std::string str() const;

 private:
  Mode mode_;
  long p_;        /* exact: prime of the radical; 0 = none        */
  mpq_class rat_; /* exact: rational part                         */
  mpq_class irr_; /* exact: coefficient of sqrt(p)                */
  std::complex<double> f_{0.0, 0.0}; /* floating value            */

  static long combine_primes(long a, long b);
};

}  // namespace bplab::wpoly
