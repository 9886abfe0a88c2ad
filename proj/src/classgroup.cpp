#include "bplab/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bplab/util.hpp"

namespace bplab::classgroup {

namespace {

long gcd3(long a, long b, long c) {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

/* Extended gcd: returns g >= 0, sets x, y with a x + b y = g. */
long xgcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long x1, y1;
  long g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/* In-place reduction of a positive definite form: |b| <= a <= c with
   b >= 0 when |b| = a or a = c. */
void reduce(long& a, long& b, long& c) {
  for (;;) {
    if (b > a || b <= -a) { /* shift b into (-a, a] */
      long r = ((b % (2 * a)) + 2 * a) % (2 * a);
      long bn = r > a ? r - 2 * a : r;
      long q = (b - bn) / (2 * a);
      c += a * q * q - b * q;
      b = bn;
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if (a == c && b < 0) b = -b;
}

FormClass reduced(long a, long b, long c) {
  reduce(a, b, c);
  return {a, b, c};
}

}  // namespace

bool is_fundamental(long d) {
  if (d <= 0) return false;
  auto squarefree = [](long n) {
    for (long q = 2; q * q <= n; ++q)
      if (n % (q * q) == 0) return false;
    return true;
  };
  if (d % 4 == 3) return squarefree(d);
  if (d % 4 == 0) {
    long m = d / 4;
    return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
  }
  return false;
}

ClassGroup::ClassGroup(long d) : d_(d) {
  if (!is_fundamental(d))
    throw std::invalid_argument("ClassGroup: -d must be a fundamental discriminant");
  w_ = d == 3 ? 6 : (d == 4 ? 4 : 2);

  /* all reduced forms: |b| <= a <= c forces 3a^2 <= b^2 + 4ac = d,
     and c is determined by the discriminant */
  for (long a = 1; 3 * a * a <= d; ++a)
    for (long b = -a; b <= a; ++b) {
      if (((b * b + d) % (4 * a)) != 0) continue;
      long c = (b * b + d) / (4 * a);
      if (c < a) continue;
      if (b < 0 && (b == -a || a == c)) continue; /* reduced convention */
      if (gcd3(a, b, c) != 1) continue;
      classes_.push_back({a, b, c});
    }
  std::sort(classes_.begin(), classes_.end(), [](const FormClass& f, const FormClass& g) {
    return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
  });

  const FormClass principal =
      d % 4 == 0 ? FormClass{1, 0, d / 4} : FormClass{1, 1, (d + 1) / 4};
  identity_ = class_of(principal);

  const int n = h();
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    inv_[i] = class_of({classes_[i].a, -classes_[i].b, classes_[i].c});

  /* Dirichlet composition. Replace f2 by an equivalent form whose leading
     coefficient A2 is coprime to a1 (a small primitive representation,
     completed to an SL2 change of variables), then unify the middle
     coefficients by CRT: the composite is (a1 A2, B, (B^2+d)/(4 a1 A2)). */
  auto compose_forms = [&](const FormClass& f1, const FormClass& f2) -> FormClass {
    long a1 = f1.a, b1 = f1.b;
    long A2 = 0, B2 = 0;
    bool found = false;
    for (long x0 = 0; x0 <= 40 && !found; ++x0)
      for (long y0 = (x0 == 0 ? 1 : -40); y0 <= 40 && !found; ++y0) {
        if (std::gcd(x0, std::abs(y0)) != 1) continue;
        long val = f2.a * x0 * x0 + f2.b * x0 * y0 + f2.c * y0 * y0;
        if (std::gcd(val, a1) != 1) continue;
        long s, t; /* x0 s + y0 t = 1; columns (x0,y0), (-t,s) have det 1 */
        xgcd(x0, y0, s, t);
        long u = -t, v = s;
        A2 = val;
        B2 = 2 * (f2.a * x0 * u + f2.c * y0 * v) + f2.b * (x0 * v + y0 * u);
        found = true;
      }
    if (!found) throw std::logic_error("ClassGroup: no concordant representative found");
    /* B = b1 (mod 2 a1) and B = B2 (mod 2 A2); b1, B2 share the parity of d,
       and gcd(a1, A2) = 1, so B = b1 + 2 a1 k with a1 k = (B2-b1)/2 mod A2 */
    long t, s;
    xgcd(a1 % A2, A2, t, s);
    long diff = ((B2 - b1) / 2) % A2;
    long k = ((diff * (t % A2)) % A2 + A2) % A2;
    long A = a1 * A2;
    long B = (b1 + 2 * a1 * k) % (2 * A);
    if (B < 0) B += 2 * A;
    if ((B * B + d) % (4 * A) != 0) throw std::logic_error("ClassGroup: composition failed");
    return reduced(A, B, (B * B + d) / (4 * A));
  };

  mul_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int k = class_of(compose_forms(classes_[i], classes_[j]));
      mul_[i][j] = mul_[j][i] = k;
    }
}

int ClassGroup::class_of(FormClass f) const {
  if (f.a <= 0 || f.b * f.b - 4 * f.a * f.c != -d_)
    throw std::invalid_argument("ClassGroup: form does not have discriminant -d");
  FormClass r = reduced(f.a, f.b, f.c);
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i)
    if (classes_[i] == r) return i;
  throw std::invalid_argument("ClassGroup: form is not primitive");
}

int ClassGroup::power(int i, long e) const {
  int acc = identity_;
  int base = e >= 0 ? i : inv_[i];
  for (long n = std::abs(e); n > 0; n >>= 1) {
    if (n & 1) acc = mul_[acc][base];
    base = mul_[base][base];
  }
  return acc;
}

int ClassGroup::order(int i) const {
  int k = 1;
  int x = i;
  while (x != identity_) {
    x = mul_[x][i];
    ++k;
  }
  return k;
}

int ClassGroup::eps(long p) const {
  if (!is_prime(p)) throw std::invalid_argument("ClassGroup: eps requires a prime");
  return static_cast<int>(kronecker(-d_, p));
}

int ClassGroup::prime_class(long p) const {
  if (eps(p) < 0)
    throw std::invalid_argument("ClassGroup: no form of norm p at an inert prime");
  for (long b = 0; b < 2 * p; ++b) { /* smallest b first: deterministic choice */
    if (((b * b + d_) % (4 * p)) != 0) continue;
    return class_of({p, b, (b * b + d_) / (4 * p)});
  }
  throw std::logic_error("ClassGroup: prime_class found no representative");
}

Character::Character(int h, std::vector<int> idx) : h_(h), idx_(std::move(idx)) {
  for (int k : idx_)
    if (k < 0 || k >= h_) throw std::invalid_argument("Character: index out of range");
}

std::complex<double> Character::value(int cls) const {
  double arg = 2.0 * std::numbers::pi * idx_.at(cls) / h_;
  return {std::cos(arg), std::sin(arg)};
}

bool Character::is_trivial() const {
  return std::all_of(idx_.begin(), idx_.end(), [](int k) { return k == 0; });
}

bool Character::is_real() const {
  return std::all_of(idx_.begin(), idx_.end(), [&](int k) { return (2 * k) % h_ == 0; });
}

std::vector<Character> characters(const ClassGroup& G) {
  const int h = G.h();
  /* greedy generating set */
  std::vector<int> gens;
  std::set<int> generated{G.identity()};
  for (int x = 0; x < h && static_cast<int>(generated.size()) < h; ++x) {
    if (generated.count(x)) continue;
    gens.push_back(x);
    std::set<int> next = generated;
    next.insert(x);
    for (;;) {
      std::set<int> grow = next;
      for (int a : next)
        for (int b : next) grow.insert(G.compose(a, b));
      if (grow == next) break;
      next = std::move(grow);
    }
    generated = std::move(next);
  }

  /* one word in the generators for each element (breadth-first closure) */
  std::vector<std::vector<int>> expr(h);
  std::vector<bool> known(h, false);
  known[G.identity()] = true;
  expr[G.identity()].assign(gens.size(), 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (int x = 0; x < h; ++x) {
      if (!known[x]) continue;
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = G.compose(x, gens[gi]);
        if (known[y]) continue;
        expr[y] = expr[x];
        expr[y][gi] += 1;
        known[y] = true;
        progress = true;
      }
    }
  }

  /* a character sends gens[gi] to a root of unity of order dividing
     ord(gens[gi]); enumerate the candidate tuples and keep those that are
     multiplicative on the whole table */
  std::vector<int> ord(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) ord[gi] = G.order(gens[gi]);

  std::set<std::vector<int>> seen;
  std::vector<int> choice(gens.size(), 0);
  auto emit = [&]() {
    std::vector<int> idx(h, 0);
    for (int x = 0; x < h; ++x) {
      long k = 0;
      for (size_t gi = 0; gi < gens.size(); ++gi)
        k += static_cast<long>(expr[x][gi]) * choice[gi] * (h / ord[gi]);
      idx[x] = static_cast<int>(((k % h) + h) % h);
    }
    for (int x = 0; x < h; ++x)
      for (int y = 0; y < h; ++y)
        if ((idx[x] + idx[y]) % h != idx[G.compose(x, y)]) return;
    seen.insert(std::move(idx));
  };
  for (;;) {
    emit();
    size_t gi = 0;
    while (gi < gens.size() && ++choice[gi] == ord[gi]) choice[gi++] = 0;
    if (gi == gens.size()) break;
  }

  if (static_cast<int>(seen.size()) != h)
    throw std::logic_error("characters: expected exactly h characters");
  std::vector<Character> out;
  for (const auto& idx : seen) out.emplace_back(h, idx); /* set order = lex */
  return out;
}

double lambda_p(const ClassGroup& G, const Character& chi, long p) {
  int e = G.eps(p);
  if (e < 0) return 0.0;
  int c = G.prime_class(p);
  if (e == 0) return chi.value(c).real(); /* 2-torsion class: value is +-1 */
  return 2.0 * chi.value(c).real(); /* Lambda(c) + Lambda(c^-1) */
}

long lambda_p_exact(const ClassGroup& G, const Character& chi, long p) {
  if (!chi.is_real()) throw std::invalid_argument("lambda_p_exact: character must be real");
  int e = G.eps(p);
  if (e < 0) return 0;
  int c = G.prime_class(p);
  long v = chi.index_of(c) == 0 ? 1 : -1; /* real character: index 0 or h/2 */
  return e == 0 ? v : 2 * v;
}

AutcsumResult autcsum_identity(const ClassGroup& G, const Character& chi) {
  const int h = G.h();
  /* Pairs with delta != 0: c' = c contributes |Aut(c)| exactly, and
     c' = c^-1 != c contributes Lambda(c)^2 |Aut(c)| with |Aut(c)| = w.
     The sum of Lambda(c)^2 over all c is h (Lambda^2 trivial) or 0 (exact
     orthogonality); the 2-torsion terms, each exactly 1, are subtracted. */
  long sum_aut = 0;
  long two_torsion = 0;
  std::vector<long> mult(h, 0); /* multiplicity of each index of Lambda^2 */
  for (int c = 0; c < h; ++c) {
    sum_aut += G.aut_count(c);
    if (G.is_two_torsion(c)) ++two_torsion;
    mult[(2 * chi.index_of(c)) % h] += 1;
  }
  bool square_trivial = true;
  for (int j = 1; j < h; ++j)
    if (mult[j] != 0) square_trivial = false;
  long square_character_sum = h;
  if (!square_trivial) {
    /* Lambda^2 hits each value of its image subgroup equally often (kernel
       cosets), and the image's roots of unity sum to zero. Verify the
       uniformity rather than assume it. */
    long uniform = -1;
    for (int j = 0; j < h; ++j) {
      if (mult[j] == 0) continue;
      if (uniform < 0) uniform = mult[j];
      if (mult[j] != uniform)
        throw std::logic_error("autcsum_identity: non-uniform character image");
    }
    square_character_sum = 0;
  }
  long lhs = sum_aut + G.w() * (square_character_sum - two_torsion);
  long rhs = 2L * h * G.w() / chi.d_lambda();
  return {lhs, rhs};
}

double class_number_formula_residual(const ClassGroup& G, double L1) {
  double predicted =
      G.w() * std::sqrt(static_cast<double>(G.d())) * L1 / (2.0 * std::numbers::pi);
  return std::abs(static_cast<double>(G.h()) - predicted);
}

}  // namespace bplab::classgroup
