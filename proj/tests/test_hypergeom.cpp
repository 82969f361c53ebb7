#include <doctest.h>

#include <cmath>
#include <random>

#include "wmb/hypergeom.hpp"
#include "wmb/quadrature.hpp"

using wmb::Complex;
using wmb::HahnParams;

TEST_CASE("gauss_2f1 basics") {
  CHECK(wmb::gauss_2f1(Complex(0.3, 1.0), 0.7, 1.2, 0.0) == Complex(1.0));

  // Chu-Vandermonde: F(-n, b; c; 1) = (c-b)_n / (c)_n.
  const Complex b(0.4, 0.3), c(1.3, -0.2);
  for (int n : {1, 3, 6}) {
    const Complex lhs = wmb::gauss_2f1(-static_cast<double>(n), b, c, 1.0);
    const Complex rhs = wmb::pochhammer(c - b, n) / wmb::pochhammer(c, n);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
  }

  CHECK_THROWS_AS(wmb::gauss_2f1(0.3, 0.7, 1.2, Complex(1.5, 0.0)),
                  wmb::RegionError);
  CHECK_THROWS_AS(wmb::gauss_2f1(0.3, 0.7, -2.0, 0.5), wmb::PoleError);
}

TEST_CASE("gauss_2f1 negative axis cross-check") {
  // Transformed series against the large-argument split.
  const Complex a(0.75, -1.0), b(0.75, 1.0);
  const Complex direct = wmb::gauss_2f1(a, b, 1.0, -5.0);
  Complex split = 0.0;
  for (const auto& br : wmb::hyp2f1_large_neg(a, b, 1.0, 60)) {
    Complex s = 0.0, up = 1.0;
    for (const Complex& coeff : br.series) {
      s += coeff * up;
      up /= 5.0;
    }
    split += br.coef * std::pow(Complex(5.0, 0.0), -br.expo) * s;
  }
  CHECK(std::abs(direct - split) < 1e-10 * std::abs(direct));
  CHECK(std::abs(direct.imag()) < 1e-12);
}

TEST_CASE("gauss_2f1 contiguous relation") {
  // c(1-z) F(a,b;c;z) - c F(a-1,b;c;z) + (c-b) z F(a,b;c+1;z) = 0.
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 40; ++i) {
    const Complex a(u(rng) + 1.0, u(rng)), b(u(rng) + 0.8, u(rng)),
        c(u(rng) + 2.0, u(rng));
    const Complex z(u(rng), u(rng));
    if (std::abs(z) > 0.7) continue;
    const Complex r = c * (1.0 - z) * wmb::gauss_2f1(a, b, c, z) -
                      c * wmb::gauss_2f1(a - 1.0, b, c, z) +
                      (c - b) * z * wmb::gauss_2f1(a, b, c + 1.0, z);
    CHECK(std::abs(r) < 1e-10);
  }
}

TEST_CASE("f3f2_unit terminating and closed forms") {
  CHECK(wmb::f3f2_unit(0.0, 0.7, 0.9, 1.1, 1.3) == Complex(1.0));

  // Dixon's well-poised sum as an independent oracle for the accelerated
  // non-terminating series.
  const double a = 0.5, b = 0.3, c = 0.2;
  const Complex lhs = wmb::f3f2_unit(a, b, c, 1.0 + a - b, 1.0 + a - c);
  const Complex rhs = std::exp(
      wmb::log_gamma(1.0 + a / 2) + wmb::log_gamma(1.0 + a - b) +
      wmb::log_gamma(1.0 + a - c) + wmb::log_gamma(1.0 + a / 2 - b - c) -
      wmb::log_gamma(1.0 + a) - wmb::log_gamma(1.0 + a / 2 - b) -
      wmb::log_gamma(1.0 + a / 2 - c) - wmb::log_gamma(1.0 + a - b - c));
  CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(rhs));

  CHECK_THROWS_AS(wmb::f3f2_unit(0.9, 0.8, 0.7, 0.5, 0.4), wmb::RegionError);
}

TEST_CASE("terminating 3F2 parameter swap") {
  // 3F2(-n, 1/4+it0+it, 1/4+it0-it; 1/2+it0, 1/2; 1)
  //   = ((1/2-it0)_n / (1/2)_n) 3F2(-n, 1/4+it, 1/4-it; 1/2+it0, 1/2-it0; 1).
  const int n = 3;
  const double t = 0.7, t0 = 1.1;
  const Complex it(0, t), it0(0, t0);
  const Complex lhs = wmb::f3f2_unit(-static_cast<double>(n), 0.25 + it0 + it,
                                     0.25 + it0 - it, 0.5 + it0, 0.5);
  const Complex fn = wmb::f3f2_unit(-static_cast<double>(n), 0.25 + it,
                                    0.25 - it, 0.5 + it0, 0.5 - it0);
  const Complex rhs =
      wmb::pochhammer(0.5 - it0, n) / wmb::pochhammer(0.5, n) * fn;
  CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(rhs));
}

TEST_CASE("cdh_poly basics and equivalence with the 3F2 definition") {
  const HahnParams p(0.25, Complex(0.25, -0.8), Complex(0.25, 0.8));
  CHECK(wmb::cdh_poly(0, 0.49, p) == Complex(1.0));

  // S_1(x^2) = (a+b)(a+c) - (a^2 + x^2).
  const Complex x2(0.3, 0.1);
  const Complex s1 = wmb::cdh_poly(1, x2, p);
  const Complex expect = (p.a + p.b) * (p.a + p.c) - (p.a * p.a + x2);
  CHECK(std::abs(s1 - expect) < 1e-14 * std::abs(expect));

  for (int n : {2, 5, 11, 17, 20}) {
    for (double x : {0.35, 1.2, 3.1}) {
      const Complex ix(0, x);
      const Complex via_f =
          wmb::f3f2_unit(-static_cast<double>(n), p.a + ix, p.a - ix, p.a + p.b,
                         p.a + p.c) *
          wmb::pochhammer(p.a + p.b, n) * wmb::pochhammer(p.a + p.c, n);
      const Complex via_rec = wmb::cdh_poly(n, x * x, p);
      CHECK(std::abs(via_f - via_rec) < 1e-10 * std::abs(via_rec));
    }
  }
}

TEST_CASE("cdh_poly difference equation") {
  const double T = 0.9;
  const HahnParams p(0.25, Complex(0.25, -T), Complex(0.25, T));
  for (int n : {1, 4, 9, 15, 20}) {
    for (double t : {0.45, 1.3, 2.6}) {
      const Complex it(0, t);
      const Complex B = (p.a - it) * (p.b - it) * (p.c - it) /
                        ((-2.0 * it) * (1.0 - 2.0 * it));
      const Complex D = (p.a + it) * (p.b + it) * (p.c + it) /
                        ((2.0 * it) * (1.0 + 2.0 * it));
      // (t + i)^2 = t^2 - 1 + 2it and (t - i)^2 = t^2 - 1 - 2it.
      const Complex xp(t * t - 1.0, 2.0 * t);
      const Complex xm(t * t - 1.0, -2.0 * t);
      const Complex lhs = static_cast<double>(n) * wmb::cdh_poly(n, t * t, p);
      const Complex rhs = B * wmb::cdh_poly(n, xp, p) -
                          (B + D) * wmb::cdh_poly(n, t * t, p) +
                          D * wmb::cdh_poly(n, xm, p);
      CHECK(std::abs(lhs - rhs) <=
            1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0}));
    }
  }
}

TEST_CASE("cdh orthogonality norm by quadrature") {
  // (1/2 pi) int_0^inf w(t) S_n^2 dt = Gamma(n+1/2) |Gamma(n+1/2+iT)|^2 n!.
  const int n = 4;
  const double T = 0.9;
  const HahnParams p(0.25, Complex(0.25, -T), Complex(0.25, T));
  auto w = [&](double t) {
    const Complex it(0, t);
    return std::exp(2.0 * (wmb::log_gamma(0.25 + it) +
                           wmb::log_gamma(Complex(0.25, T + t)) +
                           wmb::log_gamma(Complex(0.25, -T + t)) -
                           wmb::log_gamma(2.0 * it))
                              .real());
  };
  auto integrand = [&](double t) {
    if (t == 0.0) return 0.0;
    const Complex s = wmb::cdh_poly(n, t * t, p);
    return w(t) * (s * s).real();
  };
  wmb::QuadratureOptions opt;
  opt.initial_panels = 64;
  const double got =
      wmb::integrate_gl_real(integrand, 0.0, 40.0, 1e-10, opt) / (2.0 * wmb::pi);
  const double expect =
      std::exp(wmb::log_gamma(n + 0.5).real() +
               2.0 * wmb::log_gamma(Complex(n + 0.5, T)).real() +
               wmb::log_gamma(n + 1.0).real());
  CHECK(std::abs(got - expect) < 1e-8 * expect);
}

TEST_CASE("jacobi_kernel") {
  CHECK(wmb::jacobi_kernel(0.7, 0.0) == 1.0);
  CHECK(wmb::jacobi_kernel(0.7, 0.3) == wmb::jacobi_kernel(-0.7, 0.3));

  // t = 1, u = 5: the split path against the slowly converging Pfaff series.
  const double lib = wmb::jacobi_kernel(1.0, 5.0);
  const Complex a(0.75, -1.0);
  const Complex pfaff = std::pow(Complex(6.0, 0.0), -a) *
                        wmb::gauss_2f1(a, Complex(0.25, -1.0), 1.0, 5.0 / 6.0);
  CHECK(std::abs(lib - pfaff.real()) < 1e-10 * std::abs(lib));

  // Overlap region: both branches agree on 0.5 <= u <= 1 (library takes the
  // series) against the split formula evaluated by hand.
  for (double t : {0.3, 1.0, 2.7}) {
    for (double u : {0.5, 0.75, 1.0}) {
      const Complex at(0.75, -t);
      const Complex i2t(0.0, -2.0 * t);
      const Complex front = std::exp(wmb::log_gamma(Complex(0.25, -t)) +
                                     wmb::log_gamma(Complex(0.75, -t)) -
                                     wmb::log_gamma(i2t) +
                                     Complex(0.0, t) * std::log(u)) *
                            std::pow(u, -0.75);
      const Complex inner = std::pow(Complex(1.0 + 1.0 / u, 0.0), -at) *
                            wmb::gauss_2f1(at, Complex(0.25, -t), 1.0 + i2t,
                                           1.0 / (1.0 + u));
      const double weight =
          std::exp(2.0 * (wmb::log_gamma(Complex(0.25, t)) +
                          wmb::log_gamma(Complex(0.75, t)) -
                          wmb::log_gamma(Complex(0.0, 2.0 * t)))
                             .real());
      const double split_path = 2.0 * (front * inner).real() / weight;
      const double small_path = wmb::jacobi_kernel(t, u);
      CHECK(std::abs(small_path - split_path) <
            1e-10 * std::max(1.0, std::abs(small_path)));
    }
  }

  // u > 1 at t = 0 goes through the removable-limit route.
  const double at_zero = wmb::jacobi_kernel(0.0, 5.0);
  const double nearby = wmb::jacobi_kernel(2e-4, 5.0);
  CHECK(std::abs(at_zero - nearby) < 1e-6 * std::abs(at_zero));
}
