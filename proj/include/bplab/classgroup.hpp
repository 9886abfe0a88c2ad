#pragma once

#include <complex>
#include <vector>

namespace bplab::classgroup {

/* -d must be a fundamental discriminant: d = 3 mod 4 squarefree, or
   d = 4m with m = 1, 2 mod 4 squarefree. */
bool is_fundamental(long d);

/* Primitive positive form a x^2 + b xy + c y^2 of discriminant b^2-4ac = -d,
   reduced: |b| <= a <= c, and b >= 0 when |b| = a or a = c. */
struct FormClass {
  long a, b, c;
  bool operator==(const FormClass& o) const { return a == o.a && b == o.b && c == o.c; }
};

class ClassGroup {
 public:
  explicit ClassGroup(long d); /* throws invalid_argument unless fundamental */

  long d() const { return d_; }
  int h() const { return static_cast<int>(classes_.size()); }
  int w() const { return w_; } /* unit count: 6 (d=3), 4 (d=4), else 2 */
  const std::vector<FormClass>& classes() const { return classes_; }
  int identity() const { return identity_; }
  int compose(int i, int j) const { return mul_[i][j]; }
  int inverse(int i) const { return inv_[i]; }
  int power(int i, long e) const;
  int order(int i) const;
  bool is_two_torsion(int i) const { return inv_[i] == i; }
  int aut_count(int i) const { return is_two_torsion(i) ? 2 * w_ : w_; }
  int class_of(FormClass f) const; /* reduces, then looks up */

  /* Splitting data at a prime: eps = kronecker(-d, p); prime_class requires
     eps >= 0 (a form of norm p exists) and p prime. */
  int eps(long p) const;
  int prime_class(long p) const;

 private:
  long d_;
  int w_;
  int identity_;
  std::vector<FormClass> classes_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

/* Character of the class group; values are exact h-th roots of unity stored
   as indices k mod h (value = exp(2 pi i k/h)). */
class Character {
 public:
  Character(int h, std::vector<int> idx);
  int h() const { return h_; }
  int index_of(int cls) const { return idx_.at(cls); }
  std::complex<double> value(int cls) const;
  bool is_trivial() const;
  bool is_real() const; /* Lambda^2 = 1 */
  int d_lambda() const { return is_real() ? 1 : 2; }
  const std::vector<int>& indices() const { return idx_; }

 private:
  int h_;
  std::vector<int> idx_;
};

/* All h characters, deterministic order: trivial first, then ascending
   lexicographic on the index vectors. */
std::vector<Character> characters(const ClassGroup& G);

/* lambda_p = sum of Lambda over classes of norm-p forms: 0 (inert),
   Lambda(c) (ramified; always +-1), Lambda(c) + conj Lambda(c) (split).
   Always real. */
double lambda_p(const ClassGroup& G, const Character& chi, long p);
/* Exact integer variant; requires a real character. */
long lambda_p_exact(const ClassGroup& G, const Character& chi, long p);

/* Both sides of the automorphism-weighted pairing identity
     sum_{c,c'} Lambda(c) conj(Lambda(c')) delta(c,c') |Aut(c)| = 2 h w / d_Lambda,
   delta(c,c') = [c' in {c, c^-1}]. Evaluated exactly over root-of-unity
   indices (the only products that occur are 1 and Lambda(c)^2, and the full
   character sum of Lambda^2 is h or 0 by orthogonality). */
struct AutcsumResult {
  long lhs, rhs;
};
AutcsumResult autcsum_identity(const ClassGroup& G, const Character& chi);

/* |h - w sqrt(d) L(1,chi_{-d}) / (2 pi)| */
double class_number_formula_residual(const ClassGroup& G, double L1);

}  // namespace bplab::classgroup
