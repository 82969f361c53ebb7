#include <doctest.h>

#include <cmath>

#include "wmb/barnes.hpp"

using wmb::BarnesIntegrand;
using wmb::Complex;
using wmb::Contour;
using wmb::GammaFactor;

namespace {

// First Barnes lemma closed form:
//   (1/2 pi i) int Gamma(a+s)Gamma(b+s)Gamma(c-s)Gamma(d-s) ds
//     = Gamma(a+c)Gamma(a+d)Gamma(b+c)Gamma(b+d)/Gamma(a+b+c+d).
Complex barnes_lemma_rhs(Complex a, Complex b, Complex c, Complex d) {
  return std::exp(wmb::log_gamma(a + c) + wmb::log_gamma(a + d) +
                  wmb::log_gamma(b + c) + wmb::log_gamma(b + d) -
                  wmb::log_gamma(a + b + c + d));
}

BarnesIntegrand barnes_lemma_integrand(Complex a, Complex b, Complex c,
                                       Complex d) {
  BarnesIntegrand f;
  f.add_num(a, 1).add_num(b, 1).add_num(c, -1).add_num(d, -1);
  return f;
}

}  // namespace

TEST_CASE("eval_integrand basics") {
  BarnesIntegrand unit;
  CHECK(unit.eval(Complex(0.37, -2.0)) == Complex(1.0));

  BarnesIntegrand g;
  g.add_num(0.0, -1);  // Gamma(-s)
  const Complex v = g.eval(Complex(-0.5, 0.0));
  CHECK(std::abs(v - std::sqrt(wmb::pi)) < 1e-13);
  CHECK_THROWS_AS(g.eval(Complex(2.0, 0.0)), wmb::PoleError);
}

TEST_CASE("integrand decay matches the Stirling prediction") {
  // The first-lemma integrand decays like e^{-2 pi |Im s|}; doubling the
  // height from 20 to 40 shrinks the magnitude by the predicted factor.
  const BarnesIntegrand f = barnes_lemma_integrand(0.7, 0.9, 0.6, 0.8);
  CHECK(f.stirling_count() == 4);
  CHECK(f.decay_rate() == doctest::Approx(2.0 * wmb::pi));
  const double m20 = std::abs(f.eval(Complex(0.0, 20.0)));
  const double m40 = std::abs(f.eval(Complex(0.0, 40.0)));
  const double predicted =
      std::pow(10.0, f.log10_magnitude_estimate(0.0, 40.0) -
                         f.log10_magnitude_estimate(0.0, 20.0));
  CHECK(std::abs(std::log(m40 / m20) - std::log(predicted)) < 0.1);
}

TEST_CASE("first Barnes lemma") {
  const Complex a = 0.7, b = 0.9, c = 0.6, d = 0.8;
  const BarnesIntegrand f = barnes_lemma_integrand(a, b, c, d);
  const Complex expect = barnes_lemma_rhs(a, b, c, d);
  const Complex got = integrate(f, Contour{0.0, {}}, 1e-11);
  CHECK(std::abs(got - expect) < 1e-10 * std::abs(expect));
}

TEST_CASE("abscissa independence and conjugation") {
  const Complex a(0.7, 0.3), b(0.9, -0.3), c(0.6, 0.1), d(0.8, -0.1);
  const BarnesIntegrand f = barnes_lemma_integrand(a, b, c, d);
  const double tol = 1e-10;
  const Complex v1 = integrate(f, Contour{0.0, {}}, tol);
  const Complex v2 = integrate(f, Contour{-0.25, {}}, tol);
  CHECK(std::abs(v1 - v2) < 10.0 * tol * std::abs(v1));

  // Shifts in conjugate pairs and real positive base: real result.
  BarnesIntegrand g = barnes_lemma_integrand(a, std::conj(a), c, std::conj(c));
  g.power_base = 2.0;
  const Complex vg = integrate(g, Contour{0.0, {}}, tol);
  CHECK(std::abs(vg.imag()) < 10.0 * tol * std::abs(vg));
}

TEST_CASE("second Barnes lemma instance") {
  // Saalschuetzian instance with parameters drawn from the Wilson layer.
  const double t1 = 0.8, t = 0.5;
  const Complex R(-0.125, 0.0);
  const Complex it1(0, t1), it(0, t);
  BarnesIntegrand f;
  f.add_num(0.25 - it1, 1).add_num(0.25, 1).add_num(0.25 + it1 + R, 1);
  f.add_num(it, -1).add_num(-it, -1);
  f.add_den(0.75 + R, 1);
  const Complex got = integrate(f, Contour{-0.05, {}}, 1e-11);
  const Complex expect =
      std::exp(wmb::log_gamma(0.25 - it1 + it) + wmb::log_gamma(0.25 - it1 - it) +
               wmb::log_gamma(0.25 + it) + wmb::log_gamma(0.25 - it) +
               wmb::log_gamma(0.25 + it1 + R + it) +
               wmb::log_gamma(0.25 + it1 + R - it) - wmb::log_gamma(0.5 + R) -
               wmb::log_gamma(0.5 + it1 + R) - wmb::log_gamma(0.5 - it1));
  CHECK(std::abs(got - expect) < 1e-9 * std::abs(expect));
}

TEST_CASE("plan_contour straight line cases") {
  // Separating hint is used unchanged.
  BarnesIntegrand f = barnes_lemma_integrand(0.7, 0.9, 0.6, 0.8);
  const GammaFactor left[] = {f.numerator[0], f.numerator[1]};
  const GammaFactor right[] = {f.numerator[2], f.numerator[3]};
  const Contour c = plan_contour(f, left, right, -0.05);
  CHECK(c.abscissa == -0.05);
  CHECK(c.indentations.empty());

  // Without a hint the midpoint of the gap is taken.
  const Contour c2 = plan_contour(f, left, right, {});
  CHECK(c2.abscissa == doctest::Approx(-0.05));
  CHECK(c2.indentations.empty());
}

TEST_CASE("plan_contour indentation for a constructed conflict") {
  // Left pole at Re -0.2 (Im 0.5), right pole at Re -0.3 (Im -0.4): no
  // straight line separates, so the hint line picks up indentations.
  BarnesIntegrand f;
  f.add_num(Complex(0.2, -0.5), 1);    // left pole at -0.2 + 0.5i
  f.add_num(Complex(-0.3, -0.4), -1);  // right pole at -0.3 - 0.4i
  f.add_num(0.9, 1).add_num(0.9, -1);  // padding for decay
  const GammaFactor left[] = {f.numerator[0], f.numerator[2]};
  const GammaFactor right[] = {f.numerator[1], f.numerator[3]};
  const Contour c = plan_contour(f, left, right, -0.25);
  REQUIRE(c.indentations.size() == 2);
  CHECK(left_of_contour(c, Complex(-0.2, 0.5)));
  CHECK(!left_of_contour(c, Complex(-0.3, -0.4)));
  // All k >= 1 poles stay on their natural sides.
  CHECK(left_of_contour(c, Complex(-1.2, 0.5)));
  CHECK(!left_of_contour(c, Complex(0.7, -0.4)));

  // The indented contour and the residue-corrected straight line agree.
  const Complex via_arcs = integrate(f, c, 1e-10);
  const Complex via_residues = integrate_separated(f, left, right, 1e-10);
  CHECK(std::abs(via_arcs - via_residues) <
        1e-8 * std::max(std::abs(via_arcs), 1e-12));
}

TEST_CASE("plan_contour accepts the text lines of the contour identities") {
  // First identity at n = 0: the line at -1/4 - eps/2 separates.
  const Complex S(0.49, 0.0), it1(0, 0.8), it2(0, 1.3), B(0.747, 0.0);
  BarnesIntegrand f;
  f.add_num_pm(S - 0.5, it1, -1);
  f.add_num_pm(0.5, it2, 1);
  f.add_num(1.0 - S, 1);
  f.add_num(B - 1.0, -1);
  const GammaFactor left[] = {f.numerator[2], f.numerator[3], f.numerator[4]};
  const GammaFactor right[] = {f.numerator[0], f.numerator[1], f.numerator[5]};
  const Contour c = plan_contour(f, left, right, -0.255);
  CHECK(c.abscissa == -0.255);
  CHECK(c.indentations.empty());

  // Inner integral of the nested identities: straight line at -c with
  // 1/4 - eps/2 < c < 1/4.
  const Complex it(0, 0.4);
  BarnesIntegrand g;
  g.add_num_pm(0.25, it, 1);
  g.add_num(S, 1);
  g.add_num(0.0, -1);
  g.add_num(1.0 - S + Complex(-0.255, 0.0), 1);
  g.add_num(-0.5 - Complex(-0.255, 0.0), -1);
  g.add_den_pm(0.5, it1);
  const GammaFactor gl[] = {g.numerator[0], g.numerator[1], g.numerator[2],
                            g.numerator[4]};
  const GammaFactor gr[] = {g.numerator[3], g.numerator[5]};
  const Contour ci = plan_contour(g, gl, gr, -0.2475);
  CHECK(ci.abscissa == -0.2475);
  CHECK(ci.indentations.empty());
}

TEST_CASE("pinched contour is rejected") {
  BarnesIntegrand f;
  f.add_num(0.25, 1);
  f.add_num(-1.25, -1);  // right pole lands exactly on a left pole
  const GammaFactor left[] = {f.numerator[0]};
  const GammaFactor right[] = {f.numerator[1]};
  CHECK_THROWS_AS(plan_contour(f, left, right, {}), wmb::PinchError);
}

TEST_CASE("no-decay integrand is rejected") {
  BarnesIntegrand f;
  f.add_num(0.5, 1);
  f.add_den(0.9, 1);
  CHECK_THROWS_AS(integrate(f, Contour{0.2, {}}, 1e-8), wmb::NoDecayError);
}

TEST_CASE("spurious indentation equals the straight line") {
  const BarnesIntegrand f = barnes_lemma_integrand(0.7, 0.9, 0.6, 0.8);
  const double tol = 1e-10;
  const Complex straight = integrate(f, Contour{0.0, {}}, tol);
  Contour bent{0.0, {{Complex(0.0, 1.3), 0.15, wmb::Indentation::Side::left}}};
  const Complex indented = integrate(f, bent, tol);
  CHECK(std::abs(straight - indented) < 10.0 * tol * std::abs(straight));
}

TEST_CASE("residue corrections reproduce contour shifts") {
  const Complex a = 0.7, b = 0.9, c = 0.6, d = 0.8;
  BarnesIntegrand f = barnes_lemma_integrand(a, b, c, d);
  const GammaFactor left[] = {f.numerator[0], f.numerator[1]};
  const GammaFactor right[] = {f.numerator[2], f.numerator[3]};
  // A line at 0.65 has the k = 0 pole of Gamma(c-s) wrongly on its left;
  // subtracting the residue restores the separated value.
  const Complex shifted = integrate(f, Contour{0.65, {}}, 1e-11);
  const Complex corrected = shifted - residue_at(f, f.numerator[2], 0);
  const Complex reference = integrate(f, Contour{0.0, {}}, 1e-11);
  CHECK(std::abs(corrected - reference) < 1e-9 * std::abs(reference));

  // integrate_separated picks its own line and lands on the same value.
  const Complex sep = integrate_separated(f, left, right, 1e-11);
  CHECK(std::abs(sep - reference) < 1e-9 * std::abs(reference));
}

TEST_CASE("refinement monotonicity") {
  const BarnesIntegrand f = barnes_lemma_integrand(0.7, 0.9, 0.6, 0.8);
  const Complex tight = integrate(f, Contour{0.0, {}}, 1e-12);
  double prev_dev = 1e300;
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    const Complex v = integrate(f, Contour{0.0, {}}, tol);
    const double dev = std::abs(v - tight);
    CHECK(dev <= std::max(prev_dev * 1.5, 5e-13));
    prev_dev = std::max(dev, 1e-15);
  }
}
