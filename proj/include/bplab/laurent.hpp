#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bplab/coefficient.hpp"

namespace bplab::wpoly {

/* Prime context + arithmetic mode shared by a polynomial's coefficients. */
struct Ctx {
  Mode mode;
  long p;
  bool operator==(const Ctx& o) const { return mode == o.mode && p == o.p; }
};

/* Thrown by decompositions when the input is not W-invariant; names the
   violated generator. */
struct not_invariant_error : std::domain_error {
  explicit not_invariant_error(const std::string& generator)
      : std::domain_error("polynomial is not W-invariant (generator " + generator + ")"),
        generator(generator) {}
  std::string generator;
};

/* Laurent polynomial in (a, b) over the coefficient field, tagged with a
   prime context and mode. Exponent map is ordered (canonical form): terms
   sorted by (i, j); zero coefficients are never stored. The Weyl group W
   (order 8) acts by a<->b and a->1/a, b->1/b. */
class LaurentPolynomial {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Coefficient>;

  explicit LaurentPolynomial(Ctx ctx);
  static LaurentPolynomial constant(Ctx ctx, const Coefficient& c);
  static LaurentPolynomial monomial(Ctx ctx, int i, int j, const Coefficient& c);

  const Ctx& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coeff(int i, int j) const;
  void add_term(int i, int j, const Coefficient& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial scaled(const Coefficient& c) const;

  std::complex<double> evaluate(std::complex<double> a, std::complex<double> b) const;

  /* Weyl generators. */
  LaurentPolynomial weyl_swap() const;  /* (a,b) -> (b,a)      */
  LaurentPolynomial weyl_inv_a() const; /* (a,b) -> (1/a, b)   */
  LaurentPolynomial weyl_inv_b() const; /* (a,b) -> (a, 1/b)   */
  /* True when fixed by all three generators (hence by W); on failure and
     when `violated` is non-null, stores the generator name. */
  bool weyl_invariant(std::string* violated = nullptr, double tol = Coefficient::kTol) const;

  bool equals(const LaurentPolynomial& o, double tol = Coefficient::kTol) const;
  std::string str() const;

 private:
  Ctx ctx_;
  TermMap terms_;
  void check_ctx(const LaurentPolynomial& o) const;
};

/* Sum of the W-orbit of a^j b^k, each monomial once; requires j >= k >= 0.
   orbit_sum(0,0) = 1, orbit_sum(1,0) = sigma, orbit_sum(1,1) = tau - 1. */
LaurentPolynomial orbit_sum(Ctx ctx, int j, int k);

struct OrbitDecomposition {
  /* coordinates on orbit sums, keyed by (j,k) with j >= k >= 0 */
  std::map<std::pair<int, int>, Coefficient> coords;
  /* total degree in (a + 1/a, b + 1/b); max of j+k, -1 for the zero poly */
  int trace_degree;
};

/* Writes a W-invariant polynomial on the orbit-sum basis. Throws
   not_invariant_error when some generator moves the input. */
OrbitDecomposition decompose_orbit_basis(const LaurentPolynomial& poly,
                                         double tol = Coefficient::kTol);

}  // namespace bplab::wpoly
