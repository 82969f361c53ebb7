#pragma once

// Whittaker W functions, the theta-tail sums psi_l, the Mellin pairing of
// two W factors, and the Riemann zeta helper feeding the psi Mellin check.

#include "wmb/barnes.hpp"
#include "wmb/gamma.hpp"

namespace wmb {

struct WhittakerIndex {
  Complex kappa;
  Complex mu;
  double y = 1.0;  // argument, > 0
};

struct WhittakerValue {
  Complex value;
  bool underflowed = false;  // value flushed to exact 0 for huge y
};

// W_{kappa,mu}(y) through the Barnes representation
//   e^{-y/2} / (2 pi i Gamma(1/2+mu-kappa) Gamma(1/2-mu-kappa))
//     * int Gamma(1/2+mu+u) Gamma(1/2-mu+u) Gamma(-kappa-u) y^{-u} du,
// with the ascending poles of the first two factors left of the contour and
// the descending poles of Gamma(-kappa-u) right of it.
WhittakerValue whittaker_w(const WhittakerIndex& idx, double tol = 1e-10);

// psi_l(y) = (1/l!) sum_{m>=1} e^{-pi m^2 / y} (pi m^2 / y)^l.
double psi_l(int l, double y);

// Direct Mellin integral
//   int_0^inf y^S W_{n*sign, i t1}(4 pi m y) W_{0, i t2}(4 pi m y) dy / y^2
// by logarithmic-substitution quadrature. Requires Re S > 0.
Complex whittaker_pair_mellin(Complex S, int n, int sign, int m,
                              const SpectralParams& sp, double tol = 1e-8);

// Riemann zeta for Re s > 0.5: Dirichlet sum with an Euler-Maclaurin tail.
Complex zeta(Complex s);

}  // namespace wmb
