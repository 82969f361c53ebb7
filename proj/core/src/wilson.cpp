#include "wmb/wilson.hpp"

#include <cmath>

#include "wmb/quadrature.hpp"

namespace wmb {

Complex wilson_phi(const WilsonParams& p, double tol) {
  const Complex at = p.a_dual(), dt = p.d_dual();
  const Complex il = Complex(0, 1) * p.lambda, ix = Complex(0, 1) * p.x;

  // Prefactor gammas must be finite.
  for (Complex g : {p.a + ix, p.a - ix, at + il, at - il, 1.0 - p.d + ix,
                    1.0 - p.d - ix, 1.0 - dt + il, 1.0 - dt - il})
    if (near_nonpositive_integer(g))
      throw PoleError("wilson_phi: prefactor gamma at a pole", g);

  BarnesIntegrand f;
  f.add_num(p.a + ix, 1).add_num(p.a - ix, 1);
  f.add_num(at + il, 1).add_num(at - il, 1);
  f.add_num(0.0, -1);                 // Gamma(-R)
  f.add_num(1.0 - p.a - p.d, -1);     // Gamma(1-a-d-R)
  f.add_den(p.a + p.b, 1).add_den(p.a + p.c, 1);

  const GammaFactor left[] = {f.numerator[0], f.numerator[1], f.numerator[2],
                              f.numerator[3]};
  const GammaFactor right[] = {f.numerator[4], f.numerator[5]};
  const Complex integral = integrate_separated(f, left, right, tol);

  const Complex log_pref = log_gamma(p.a + ix) + log_gamma(p.a - ix) +
                           log_gamma(at + il) + log_gamma(at - il) +
                           log_gamma(1.0 - p.d + ix) + log_gamma(1.0 - p.d - ix) +
                           log_gamma(1.0 - dt + il) + log_gamma(1.0 - dt - il);
  return integral * std::exp(-log_pref);
}

Complex phi_plus(Complex lambda, Complex t, const SpectralParams& sp, double tol) {
  const Complex it1(0.0, sp.t1), it2(0.0, sp.t2);
  return wilson_phi({0.75 + it2, 0.25 + it1, 0.25 - it1, 0.75 - it2, lambda, t},
                    tol);
}

Complex phi_minus(Complex lambda, Complex t, const SpectralParams& sp, double tol) {
  const Complex it1(0.0, sp.t1), it2(0.0, sp.t2);
  return wilson_phi({0.75 - it2, 0.25 + it1, 0.25 - it1, 0.75 + it2, lambda, t},
                    tol);
}

namespace {

// Shared shell of N+-: sign +1 selects N+, -1 selects N-.
Complex n_signed(Complex S, Complex t, const SpectralParams& sp, int sign,
                 double tol) {
  const Complex it1(0.0, sp.t1);
  const Complex it2 = Complex(0.0, sp.t2) * static_cast<double>(sign);
  auto phi_at = [&](Complex SS) {
    const Complex lambda = Complex(0, 1) * (0.5 - SS);
    return sign > 0 ? phi_plus(lambda, t, sp, tol)
                    : phi_minus(lambda, t, sp, tol);
  };
  Complex phi;
  try {
    phi = phi_at(S);
  } catch (const Error&) {
    // The representation degenerates at isolated S (lambda = 0 pinches);
    // the function itself is entire there, so take the symmetric limit.
    const double delta = 1e-6;
    phi = 0.5 * (phi_at(S + delta) + phi_at(S - delta));
  }
  const Complex gammas = gamma_pm(S + it2, it1) * gamma_pm(0.25 + it2, t * Complex(0, 1));
  const Complex trig = sin_pi(sp.s1()) + sin_pi(0.5 - it2 - S);
  return gammas / sin_pi(2.0 * it2) * trig * phi;
}

}  // namespace

Complex n_plus(Complex S, Complex t, const SpectralParams& sp, double tol) {
  return n_signed(S, t, sp, +1, tol);
}

Complex n_minus(Complex S, Complex t, const SpectralParams& sp, double tol) {
  return n_signed(S, t, sp, -1, tol);
}

Complex n_kernel(Complex S, Complex t, const SpectralParams& sp, double tol) {
  return n_plus(S, t, sp, tol) + n_minus(S, t, sp, tol);
}

double spectral_weight(double t, double T) {
  // Entire through 1/Gamma factors; vanishes like t^2 at t = 0.
  const Complex it(0.0, t), iT(0.0, T);
  const Complex lg = log_gamma(0.25 + it) + log_gamma(0.25 - it) +
                     log_gamma(0.25 + it + iT) + log_gamma(0.25 + it - iT) +
                     log_gamma(0.25 - it + iT) + log_gamma(0.25 - it - iT);
  const Complex rg = rgamma(2.0 * it) * rgamma(-2.0 * it);
  return (std::exp(lg) * rg).real();
}

Complex h_chi(Complex S, const ChiSpec& chi, const SpectralParams& sp,
              double tol) {
  if (chi.zero) return 0.0;
  if (S.real() < 0.5 - 0.011 || S.real() > 0.5 + 1e-12)
    throw RegionError("h_chi: Re S must lie in [1/2 - 1/100, 1/2]");

  // chi decay dominates the polynomially bounded kernel; the weight also
  // decays like e^{-pi|t|}.
  const double T = std::min(chi.support_radius(), 40.0);
  auto integrand = [&](double t) -> Complex {
    const double w = spectral_weight(t, sp.t1);
    if (w == 0.0) return 0.0;
    return w * chi(t) * n_kernel(S, Complex(t, 0.0), sp, tol * 1e-2);
  };
  QuadratureOptions opt;
  opt.initial_panels = std::max(16, static_cast<int>(std::ceil(T / 0.5)));
  opt.max_refinements = 5;
  return integrate_gl(integrand, -T, T, tol, opt);
}

}  // namespace wmb
