#pragma once

#include <map>
#include <vector>

#include "bplab/laurent.hpp"

namespace bplab::sugano {

using wpoly::Coefficient;
using wpoly::Ctx;
using wpoly::LaurentPolynomial;
using wpoly::Mode;

/* Local input datum: prime p, eps = value of the discriminant character at p
   (-1 inert, 0 ramified, +1 split), lambda = character sum over the norm-p
   classes. lambda is always real; exact mode requires it rational (real
   characters give lambda in {-2,-1,0,1,2}). Constructor validates the
   (eps, lambda) consistency: inert forces lambda = 0, ramified |lambda| = 1,
   split |lambda| <= 2. */
struct LocalBesselDatum {
  long p;
  int eps;
  Coefficient lambda;

  LocalBesselDatum(long p, int eps, Coefficient lambda);
  Mode mode() const { return lambda.mode(); }
  Ctx ctx() const { return {mode(), p}; }
};

/* The printed building blocks of the degree-(4,4) rational generating
   function H/(P*Q). Polynomials in X (resp. Y) are stored as coefficient
   lists by degree; H_XY[i][j] is the coefficient of X^i Y^j. */
struct SuganoComponents {
  std::vector<LaurentPolynomial> P_X;  /* degree 4, constant term 1 */
  std::vector<LaurentPolynomial> Q_Y;  /* degree 4, constant term 1 */
  std::vector<LaurentPolynomial> M1_X; /* degree 2, constant term 1 */
  std::vector<LaurentPolynomial> M2_X; /* degree 3, constant term 1 */
  std::vector<std::vector<LaurentPolynomial>> H_XY; /* [0..4][0..2] */
  LaurentPolynomial sigma; /* a + 1/a + b + 1/b */
  LaurentPolynomial tau;   /* 1 + ab + a/b + b/a + 1/(ab) */
};

SuganoComponents build_components(const LocalBesselDatum& datum);

/* Coefficient U^{l,m} of X^m Y^l in the power-series expansion of H/(P*Q);
   exact long division (series inversion of P and Q, both with constant term
   1) in exact mode. */
LaurentPolynomial expand_U(const LocalBesselDatum& datum, int l, int m);

/* The m = 0 row U^{0,0..l_max,0} from the one-variable specialization
   (1 - lambda p^{-1/2} Y + eps p^{-1} Y^2)/Q(Y); independent of the
   two-variable assembly, used as a cross-check against expand_U(l, 0). */
std::vector<LaurentPolynomial> expand_U_row(const LocalBesselDatum& datum, int l_max);

/* Writes a W-invariant polynomial on the U basis; returned keys (l, m)
   satisfy l + 2m <= trace degree of the input. Exact mode stays exact
   (Gaussian elimination over Q(sqrt p) on the orbit coordinates, ordered by
   (l+2m, l) so the system is block-triangular by degree). */
std::map<std::pair<int, int>, Coefficient> decompose_in_U_basis(const LocalBesselDatum& datum,
                                                                const LaurentPolynomial& poly);

/* Memoized table of expansions: warm it up single-threaded, then U() is
   safe for concurrent reads. */
class UTable {
 public:
  explicit UTable(const LocalBesselDatum& datum) : datum_(datum) {}
  void precompute(int l_max, int m_max);
  const LaurentPolynomial& U(int l, int m) const; /* throws if not precomputed */
  const LocalBesselDatum& datum() const { return datum_; }

 private:
  LocalBesselDatum datum_;
  std::map<std::pair<int, int>, LaurentPolynomial> table_;
};

}  // namespace bplab::sugano
