#include "wmb/whittaker.hpp"

#include <cmath>

#include "wmb/quadrature.hpp"

namespace wmb {

namespace {

bool near_integer(Complex z, double tol) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

// Small-argument route: W as the standard combination of the two regular
// confluent solutions. Requires 2 mu off the integers; the series in y
// terminates numerically within a few dozen terms for y <= 1/2.
Complex whittaker_w_series(Complex kappa, Complex mu, double y) {
  auto m_fn = [&](Complex m) {
    Complex term = 1.0, sum = 1.0;
    const Complex a = 0.5 + m - kappa, b = 1.0 + 2.0 * m;
    for (int k = 0; k < 120; ++k) {
      const double kk = k;
      term *= (a + kk) / (b + kk) * y / (kk + 1.0);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(Complex(y, 0.0), 0.5 + m) * std::exp(-0.5 * y) * sum;
  };
  const Complex c_plus =
      std::exp(log_gamma(-2.0 * mu) - log_gamma(0.5 - mu - kappa));
  const Complex c_minus =
      std::exp(log_gamma(2.0 * mu) - log_gamma(0.5 + mu - kappa));
  return c_plus * m_fn(mu) + c_minus * m_fn(-mu);
}

}  // namespace

WhittakerValue whittaker_w(const WhittakerIndex& idx, double tol) {
  if (idx.y <= 0.0) throw Error("whittaker_w: argument must be positive");
  if (idx.y > 1400.0) return {0.0, true};  // e^{-y/2} below the exponent range

  const Complex kappa = idx.kappa, mu = idx.mu;
  const Complex g1 = 0.5 + mu - kappa, g2 = 0.5 - mu - kappa;
  if (near_nonpositive_integer(g1) || near_nonpositive_integer(g2))
    throw PinchError("whittaker_w: pole families pinch at these indices");

  if (idx.y < 0.5 && !near_integer(2.0 * mu, 1e-6))
    return {whittaker_w_series(kappa, mu, idx.y), false};

  BarnesIntegrand f;
  f.add_num(0.5 + mu, 1).add_num(0.5 - mu, 1).add_num(-kappa, -1);
  f.power_base = 1.0 / idx.y;
  const GammaFactor left[] = {f.numerator[0], f.numerator[1]};
  const GammaFactor right[] = {f.numerator[2]};
  const Complex integral = integrate_separated(f, left, right, tol);
  const Complex value = std::exp(Complex(-0.5 * idx.y, 0.0) - log_gamma(g1) -
                                 log_gamma(g2)) *
                        integral;
  return {value, false};
}

double psi_l(int l, double y) {
  if (y <= 0.0) throw Error("psi_l: y must be positive");
  double sum = 0.0;
  const double lfact = std::tgamma(l + 1.0);
  for (int m = 1; m < 100000; ++m) {
    const double q = pi * m * m / y;
    const double term = std::exp(-q + l * std::log(q));
    sum += term;
    if (term < 1e-17 * sum || (term == 0.0 && m > 1)) break;
  }
  return sum / lfact;
}

Complex whittaker_pair_mellin(Complex S, int n, int sign, int m,
                              const SpectralParams& sp, double tol) {
  if (S.real() <= 0.0)
    throw RegionError("whittaker_pair_mellin: Re S must be positive");
  if (m <= 0) throw Error("whittaker_pair_mellin: m must be positive");
  if (sign != 1 && sign != -1) throw Error("whittaker_pair_mellin: sign is +-1");

  const double scale = 4.0 * pi * m;
  const Complex kappa1 = static_cast<double>(n * sign);
  const Complex mu1(0.0, sp.t1), mu2(0.0, sp.t2);
  const double wtol = std::min(tol * 1e-2, 1e-10);

  // y = e^v. The integrand decays like e^{v Re S} at the left end and
  // double-exponentially at the right end.
  const double v_hi = std::log(1420.0 / scale);
  const double v_lo = -(42.0 + std::abs(std::log(scale))) / S.real();

  auto integrand = [&](double v) -> Complex {
    const double y = std::exp(v);
    const WhittakerValue w1 = whittaker_w({kappa1, mu1, scale * y}, wtol);
    if (w1.underflowed) return 0.0;
    const WhittakerValue w2 = whittaker_w({0.0, mu2, scale * y}, wtol);
    return std::exp((S - 1.0) * v) * w1.value * w2.value;
  };

  QuadratureOptions opt;
  opt.initial_panels =
      std::max(32, static_cast<int>(std::ceil((v_hi - v_lo) / 0.7)));
  opt.max_refinements = 6;
  return integrate_gl(integrand, v_lo, v_hi, tol, opt);
}

Complex zeta(Complex s) {
  if (s.real() <= 0.5)
    throw RegionError("zeta: only Re s > 0.5 is supported");
  if (near_nonpositive_integer(s - 1.0, 1e-13))
    throw PoleError("zeta: pole at s = 1", s);

  // Euler-Maclaurin with N = 24 and four Bernoulli corrections.
  constexpr int N = 24;
  Complex sum = 0.0;
  for (int k = 1; k < N; ++k)
    sum += std::exp(-s * std::log(static_cast<double>(k)));
  const double lnN = std::log(static_cast<double>(N));
  const Complex Nms = std::exp(-s * lnN);
  sum += Nms * (static_cast<double>(N) / (s - 1.0) + 0.5);
  static const double bern[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
  Complex fac = s;          // (s)_{2j-1} / N^{s+2j-1}, built incrementally
  Complex Npow = Nms / static_cast<double>(N);
  double factorial = 2.0;   // (2j)!
  for (int j = 1; j <= 4; ++j) {
    sum += bern[j - 1] / factorial * fac * Npow;
    fac *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    Npow /= static_cast<double>(N) * static_cast<double>(N);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

}  // namespace wmb
