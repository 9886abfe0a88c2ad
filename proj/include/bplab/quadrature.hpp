#pragma once

#include <functional>
#include <vector>

namespace bplab {

/* Gauss-Legendre rule on [a,b]; exact for polynomials of degree 2n-1.
   Nodes by Newton iteration on P_n; cached per order internally. */
struct GaussLegendre {
  std::vector<double> x, w;
  GaussLegendre(int n, double a, double b);
};

struct AdaptiveResult {
  double value;
  double error; /* estimate */
  bool converged;
};

/* Adaptive Gauss-Kronrod 7/15 bisection on [a,b] to absolute tolerance. */
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_depth = 40);

}  // namespace bplab
