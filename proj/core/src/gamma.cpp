#include "wmb/gamma.hpp"

#include <cmath>

namespace wmb {

namespace {

// B_{2n} / (2n (2n-1)), the coefficients of the Stirling series
//   log Gamma(z) ~ (z-1/2) log z - z + log(2 pi)/2 + sum_n c_n z^{1-2n}.
constexpr double stirling_coeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
};

constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

// Stirling series at a point with Re z >= 9 or |Im z| >= 9, Re z >= 0.
Complex log_gamma_stirling(Complex z) {
  Complex w = (z - 0.5) * std::log(z) - z + half_log_two_pi;
  const Complex z2 = z * z;
  Complex zp = 1.0 / z;
  for (double c : stirling_coeff) {
    w += c * zp;
    zp /= z2;
  }
  return w;
}

}  // namespace

bool near_nonpositive_integer(Complex z, double tol) {
  if (z.real() > 0.5 || std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z))
    throw PoleError("log_gamma: argument at a non-positive integer", z);
  if (z.imag() == 0.0 && (z.real() == 1.0 || z.real() == 2.0)) return 0.0;

  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

  // Upward recurrence until the Stirling region is reached. With Im z >= 0
  // every factor z + k stays off the branch cut, so the principal logs add
  // up to the principal branch of log Gamma.
  Complex shift_log = 0.0;
  Complex w = z;
  if (!(w.real() >= 9.0 || (w.imag() >= 9.0 && w.real() >= 0.0))) {
    const int steps = static_cast<int>(std::ceil(9.0 - w.real()));
    for (int k = 0; k < steps; ++k) shift_log += std::log(w + static_cast<double>(k));
    w += static_cast<double>(steps);
  }
  return log_gamma_stirling(w) - shift_log;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.5 &&
      z.real() == std::round(z.real()))
    return 0.0;
  // Reflection keeps this entire near the poles of Gamma.
  if (z.real() < 0.5) return sin_pi(z) * std::exp(log_gamma(1.0 - z)) / pi;
  return std::exp(-log_gamma(z));
}

Complex gamma_pm(Complex x, Complex y) {
  return std::exp(log_gamma(x + y) + log_gamma(x - y));
}

Complex gamma_pm2(Complex x, Complex y, Complex z) {
  return std::exp(log_gamma(x + y + z) + log_gamma(x + y - z) +
                  log_gamma(x - y + z) + log_gamma(x - y - z));
}

Complex pochhammer(Complex w, int n) {
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) p *= w + static_cast<double>(k);
  return p;
}

namespace {

constexpr double sinh_overflow = 708.0;

// Reduced parts: z = (-1)^n (r + iy) modulo the period of sin/cos.
struct Reduced {
  double r;       // fractional real part in [-1/2, 1/2]
  double sign;    // (-1)^n
  double y;
};

Reduced reduce(Complex z) {
  if (std::abs(z.imag()) * pi > sinh_overflow)
    throw Error("sin_pi/cos_pi: |Im z| overflows the exponent range");
  const double n = std::round(z.real());
  const double r = z.real() - n;
  const double sign = std::fmod(std::abs(n), 2.0) < 0.5 ? 1.0 : -1.0;
  return {r, sign, z.imag()};
}

}  // namespace

Complex sin_pi(Complex z) {
  const Reduced q = reduce(z);
  return q.sign * Complex(std::sin(pi * q.r) * std::cosh(pi * q.y),
                          std::cos(pi * q.r) * std::sinh(pi * q.y));
}

Complex cos_pi(Complex z) {
  const Reduced q = reduce(z);
  return q.sign * Complex(std::cos(pi * q.r) * std::cosh(pi * q.y),
                          -std::sin(pi * q.r) * std::sinh(pi * q.y));
}

}  // namespace wmb
