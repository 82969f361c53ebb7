#pragma once

// Gauss and generalized hypergeometric evaluation plus continuous dual Hahn
// polynomials. Covers every 2F1 / 3F2 the identity suite needs: direct
// series inside the disk, the z/(z-1) transformation for negative argument,
// the connection formula near z = 1, and large-argument expansions used for
// analytic integral tails.

#include <vector>

#include "wmb/gamma.hpp"

namespace wmb {

// Gauss hypergeometric F(a, b; c; z), principal branch.
// Supported regions: terminating (a or b a non-positive integer, any z),
// |z| < 1 interior, the negative real axis, and the neighbourhood of z = 1
// via the connection formula. z on [1, inf) is rejected for
// non-terminating parameters.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z);

// 3F2(a1, a2, a3; b1, b2; 1). Terminating series are summed exactly (in
// extended precision); convergent non-terminating series are summed with
// Levin-u acceleration. Requires Re(b1+b2-a1-a2-a3) > 0 in the
// non-terminating case.
Complex f3f2_unit(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2);

// Parameter bundle of the continuous dual Hahn family; the weight function
// needs positive real parts.
struct HahnParams {
  Complex a, b, c;
  HahnParams(Complex a_, Complex b_, Complex c_) : a(a_), b(b_), c(c_) {
    if (a.real() <= 0.0 || b.real() <= 0.0 || c.real() <= 0.0)
      throw Error("HahnParams: parameters need positive real parts");
  }
};

// Continuous dual Hahn polynomial S_n(x^2; a, b, c), normalized so that
// S_n(x^2)/((a+b)_n (a+c)_n) = 3F2(-n, a+ix, a-ix; a+b, a+c; 1).
// Evaluated by the three-term recurrence.
Complex cdh_poly(int n, Complex x2, const HahnParams& p);

// F(3/4 - it, 3/4 + it, 1; -u), real for real t and u >= 0. Small u by the
// transformed series; u > 1 through the two-term u^{it - 3/4} split. The
// t = 0, u > 1 case is the average of t = +-1e-6.
double jacobi_kernel(double t, double u);

// One branch of the |z| -> infinity expansion of F(a, b; c; -u):
//   coef * u^{-expo} * sum_k series[k] u^{-k}.
struct LargeArgBranch {
  Complex coef;
  Complex expo;
  std::vector<Complex> series;
};

// The two branches (requires a - b not an integer). `terms` series
// coefficients are produced per branch; valid for u > 1.
std::vector<LargeArgBranch> hyp2f1_large_neg(Complex a, Complex b, Complex c,
                                             int terms);

}  // namespace wmb
