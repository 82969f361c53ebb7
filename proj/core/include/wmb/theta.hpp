#pragma once

// Theta lattice sums, the Taylor coefficients of the disk-model theta
// generating function, the point-pair kernel H(z, w), the six fixed coset
// maps, and the paired lattice sums F_t / G_t.

#include <array>
#include <vector>

#include "wmb/gamma.hpp"

namespace wmb {

struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;

  UpperHalfPoint() = default;
  UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
    if (y <= 0.0) throw Error("UpperHalfPoint: y must be positive");
  }
  Complex z() const { return {x, y}; }
};

struct MoebiusMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  MoebiusMap() = default;
  MoebiusMap(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(a * d - b * c - 1.0) > 1e-14)
      throw Error("MoebiusMap: determinant must be 1");
  }
  Complex j(Complex z) const { return c * z + d; }
  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
  UpperHalfPoint apply(const UpperHalfPoint& p) const {
    const Complex w = apply(p.z());
    return {w.real(), w.imag()};
  }
};

// theta(z) = sum_{m in Z} e(m^2 z), truncated below 1e-18 of the head.
Complex theta(const UpperHalfPoint& z);

// B_0(z) = (Im z)^{1/4} theta(z).
Complex b0(const UpperHalfPoint& z);

// Taylor coefficients of
//   (Im z)^{1/4} theta(T_z(i (1+L)/(1-L))) (1-L)^{-1/2}
// at L = 0, computed by trapezoid quadrature of the Cauchy integral on
// |L| = radius.
std::vector<Complex> theta_taylor(const UpperHalfPoint& z, int n_max,
                                  double radius = 0.5, int samples = 256);
Complex b_n(const UpperHalfPoint& z, int n);

// H(z, w) = i^{1/2} (|z - conj w| / (z - conj w))^{1/2}, arguments in
// (-pi, pi].
Complex h_point_pair(const UpperHalfPoint& z, const UpperHalfPoint& w);

// The six coset maps splitting the level-4 fundamental domain into copies
// of the modular one.
const std::array<MoebiusMap, 6>& coset_maps();

struct FGSums {
  Complex f;
  Complex g;
};

// F_t(z) = sum_j B_t(g_j z) conj(B_0(g_j z)) (j/|j|)^{-2t} over the six
// cosets, and G_t(z) = sum over width-one cosets of psi_t(Im(g z))
// (j/|j|)^{-2t}, enumerated over coprime pairs with |cz+d|^2 <= bound.
FGSums f_g_sums(const UpperHalfPoint& z, int t, double bound);

// A bound that makes the estimated G_t tail < 1e-12 at this point.
double g_sum_bound(const UpperHalfPoint& z);

}  // namespace wmb
