#pragma once

// Even entire gaussian test functions chi(z) = exp(-A z^2). Every transform
// in the library integrates against one of these; they decay fast on every
// horizontal strip, which is what the kernel constructions require.

#include <string>

#include "wmb/gamma.hpp"

namespace wmb {

struct ChiSpec {
  double scale_a = 1.0;  // A in exp(-A z^2)
  int shift_n = 0;       // when > 0, A was given as 1/N
  bool zero = false;     // the identically-zero member

  static ChiSpec gaussian(double a) {
    if (a <= 0.0) throw Error("ChiSpec: scale must be positive");
    ChiSpec c;
    c.scale_a = a;
    return c;
  }
  static ChiSpec gaussian_n(int n) {
    if (n < 1) throw Error("ChiSpec: shift must be >= 1");
    ChiSpec c;
    c.scale_a = 1.0 / n;
    c.shift_n = n;
    return c;
  }
  static ChiSpec zero_fn() {
    ChiSpec c;
    c.zero = true;
    return c;
  }

  Complex operator()(Complex z) const {
    return zero ? 0.0 : std::exp(-scale_a * z * z);
  }
  double operator()(double t) const {
    return zero ? 0.0 : std::exp(-scale_a * t * t);
  }

  // |t| beyond which chi(t) < floor on the real axis.
  double support_radius(double floor = 1e-18) const {
    if (zero) return 0.0;
    return std::sqrt(-std::log(floor) / scale_a);
  }

  std::string describe() const;
  static ChiSpec parse(const std::string& text);
};

}  // namespace wmb
