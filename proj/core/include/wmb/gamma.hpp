#pragma once

// Complex gamma machinery and elementary helpers. Everything downstream
// (Barnes integrals, hypergeometric series, Wilson functions) is built on
// the functions in this header.

#include <complex>

#include "wmb/errors.hpp"

namespace wmb {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// log Gamma, principal branch: real on the positive real axis, continuous on
// the plane cut along the negative real axis, exp(log_gamma(z)) == Gamma(z).
// Stirling series with upward recurrence for small real part; relative error
// of the exponentiated value is ~1e-14 away from poles.
// Throws PoleError when z is within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

// 1/Gamma(z); entire, returns 0 at non-positive integers.
Complex rgamma(Complex z);

// Gamma(X+Y) Gamma(X-Y).
Complex gamma_pm(Complex x, Complex y);

// Gamma(X+Y+Z) Gamma(X+Y-Z) Gamma(X-Y+Z) Gamma(X-Y-Z).
Complex gamma_pm2(Complex x, Complex y, Complex z);

// Pochhammer symbol (w)_n as a finite product; valid even when Gamma(w)
// has a pole.
Complex pochhammer(Complex w, int n);

// sin(pi z), cos(pi z) with argument reduction on the real part, accurate
// for large |Re z|. Throws on |Im z| large enough to overflow cosh.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// True if z is within `tol` of a non-positive integer.
bool near_nonpositive_integer(Complex z, double tol = 1e-12);

// Spectral parameters t1, t2 > 0 of the two fixed forms; s_j = 1/2 + i t_j.
struct SpectralParams {
  double t1;
  double t2;

  SpectralParams(double t1_, double t2_) : t1(t1_), t2(t2_) {
    if (t1 == 0.0 || t2 == 0.0)
      throw Error("SpectralParams: t1 and t2 must be nonzero");
  }
  Complex s1() const { return {0.5, t1}; }
  Complex s2() const { return {0.5, t2}; }
};

}  // namespace wmb
