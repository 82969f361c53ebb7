#include "wmb/theta.hpp"

#include <cmath>
#include <numeric>

#include "wmb/whittaker.hpp"

namespace wmb {

Complex theta(const UpperHalfPoint& z) {
  // |e(m^2 z)| = exp(-2 pi m^2 y): truncate once below 1e-18.
  const int m_max =
      static_cast<int>(std::ceil(std::sqrt(18.0 * std::log(10.0) /
                                           (2.0 * pi * z.y)))) + 1;
  Complex sum = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    const Complex e = std::exp(2.0 * pi * Complex(0, 1) *
                               static_cast<double>(m) * static_cast<double>(m) *
                               z.z());
    sum += 2.0 * e;
  }
  return sum;
}

Complex b0(const UpperHalfPoint& z) { return std::pow(z.y, 0.25) * theta(z); }

std::vector<Complex> theta_taylor(const UpperHalfPoint& z, int n_max,
                                  double radius, int samples) {
  if (radius <= 0.0 || radius >= 1.0)
    throw Error("theta_taylor: radius must lie in (0, 1)");
  const double y4 = std::pow(z.y, 0.25);

  std::vector<Complex> g(samples);
  for (int j = 0; j < samples; ++j) {
    const double phase = 2.0 * pi * j / samples;
    const Complex L = radius * std::exp(Complex(0, phase));
    const Complex w = Complex(0, 1) * (1.0 + L) / (1.0 - L);
    // T_z is upper triangular with T_z(i) = z, so T_z(w) = x + y w.
    const Complex point = Complex(z.x, 0.0) + z.y * w;
    const UpperHalfPoint p{point.real(), point.imag()};
    g[j] = y4 * theta(p) / std::sqrt(1.0 - L);
  }

  std::vector<Complex> coeff(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double phase = 2.0 * pi * j * n / samples;
      acc += g[j] * std::exp(Complex(0, -phase));
    }
    coeff[n] = acc / (static_cast<double>(samples) * std::pow(radius, n));
  }
  return coeff;
}

Complex b_n(const UpperHalfPoint& z, int n) {
  return theta_taylor(z, n)[n];
}

Complex h_point_pair(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  const Complex d = z.z() - std::conj(w.z());
  const Complex i_half = std::exp(Complex(0, pi / 4.0));
  return i_half * std::sqrt(std::abs(d) / d);
}

const std::array<MoebiusMap, 6>& coset_maps() {
  static const std::array<MoebiusMap, 6> maps = {
      MoebiusMap{0, -1, 1, 0}, MoebiusMap{0, -1, 1, 1}, MoebiusMap{0, -1, 1, 2},
      MoebiusMap{0, -1, 1, 3}, MoebiusMap{1, 0, 0, 1},  MoebiusMap{1, 0, -2, 1}};
  return maps;
}

FGSums f_g_sums(const UpperHalfPoint& z, int t, double bound) {
  if (t < 0) throw Error("f_g_sums: t must be >= 0");

  // F_t over the six fixed cosets.
  Complex f = 0.0;
  for (const MoebiusMap& m : coset_maps()) {
    const UpperHalfPoint w = m.apply(z);
    const Complex jz = m.j(z.z());
    const Complex phase = std::pow(jz / std::abs(jz), -2.0 * t);
    const Complex bt = t == 0 ? b0(w) : theta_taylor(w, t)[t];
    f += bt * std::conj(b0(w)) * phase;
  }

  // G_t over width-one cosets: coprime (c, d), c >= 1 plus (0, 1), modulo
  // sign. Terms with |cz+d|^2 > bound are cut; psi_t decays like
  // exp(-pi |cz+d|^2 / y) there.
  Complex g = psi_l(t, z.y);  // (c, d) = (0, 1)
  const double c_max = std::sqrt(bound) / z.y;
  double largest_cut_term = 0.0;
  for (int c = 1; c <= static_cast<int>(std::floor(c_max)); ++c) {
    const double half_width = std::sqrt(std::max(bound - c * c * z.y * z.y, 0.0));
    const int d_lo = static_cast<int>(std::floor(-c * z.x - half_width));
    const int d_hi = static_cast<int>(std::ceil(-c * z.x + half_width));
    for (int d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(c, std::abs(d)) != 1) continue;
      const Complex j = Complex(c, 0.0) * z.z() + Complex(d, 0.0);
      const double q = std::norm(j);
      if (q > bound) {
        largest_cut_term = std::max(largest_cut_term, psi_l(t, z.y / q));
        continue;
      }
      const double im = z.y / q;
      g += psi_l(t, im) * std::pow(j / std::abs(j), -2.0 * t);
    }
  }
  // Shell estimate of the dropped tail.
  const double edge = psi_l(t, z.y / bound);
  const double tail_estimate =
      std::max(largest_cut_term, edge) * (bound / z.y + 4.0) * 8.0;
  if (tail_estimate > 1e-10)
    throw InsufficientInputError("f_g_sums: enumeration bound too small");
  return {f, g};
}

double g_sum_bound(const UpperHalfPoint& z) {
  // psi_t(y/Q) ~ exp(-pi Q / y): solve exp(-pi Q / y) * (Q/y) ~ 1e-13.
  return z.y * 14.0 + 8.0;
}

}  // namespace wmb
