#pragma once

// Wilson functions phi_lambda(x; a, b, c, d) through their Barnes integral
// representation, and the composite kernels N+-, N, H_chi built from them.

#include "wmb/barnes.hpp"
#include "wmb/chi.hpp"
#include "wmb/gamma.hpp"

namespace wmb {

struct WilsonParams {
  Complex a, b, c, d;
  Complex lambda;  // order
  Complex x;       // argument

  // Duals entering the Barnes representation. The representation reads
  //   Gamma(a+-ix) Gamma(at+-i lambda) Gamma(1-d+-ix) Gamma(1-dt+-i lambda)
  //     * phi_lambda(x; a,b,c,d)
  //   = (1/2 pi i) int Gamma(a+-ix+R) Gamma(at+-i lambda+R) Gamma(-R)
  //                    Gamma(1-a-d-R) / (Gamma(a+b+R) Gamma(a+c+R)) dR.
  Complex a_dual() const { return 0.5 * (a + b + c + d - 1.0); }
  Complex d_dual() const { return 0.5 * (a - b - c + d + 1.0); }
};

// phi_lambda(x; a, b, c, d). Throws PinchError when the representation's
// pole families collide and PoleError when a prefactor gamma is singular.
Complex wilson_phi(const WilsonParams& p, double tol = 1e-9);

// The two spectral specializations
//   phi+-_lambda(x) = phi_lambda(x; 3/4 +- i t2, 1/4 + i t1, 1/4 - i t1,
//                                   3/4 -+ i t2).
Complex phi_plus(Complex lambda, Complex t, const SpectralParams& sp,
                 double tol = 1e-9);
Complex phi_minus(Complex lambda, Complex t, const SpectralParams& sp,
                  double tol = 1e-9);

// N+-(S, t) and N = N+ + N-.
Complex n_plus(Complex S, Complex t, const SpectralParams& sp, double tol = 1e-9);
Complex n_minus(Complex S, Complex t, const SpectralParams& sp, double tol = 1e-9);
Complex n_kernel(Complex S, Complex t, const SpectralParams& sp, double tol = 1e-9);

// H_chi(S) = int Gamma(1/4+-it) Gamma(1/4+-it+-it1) / Gamma(+-2it)
//            * chi(t) N(S, t) dt over the real line.
Complex h_chi(Complex S, const ChiSpec& chi, const SpectralParams& sp,
              double tol = 1e-8);

// The even weight Gamma(1/4+-it) Gamma(1/4+-it+-iT) / Gamma(+-2it) as an
// entire function of real t (reciprocal-gamma product; zero at t = 0).
double spectral_weight(double t, double T);

}  // namespace wmb
