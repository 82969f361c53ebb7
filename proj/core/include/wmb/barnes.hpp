#pragma once

// Representation, contour planning and numerical evaluation of
// Mellin-Barnes integrals
//
//   (1/2 pi i) \int_C scalar * base^s * prod Gamma(num) / prod Gamma(den) ds
//
// along curves C from -i inf to +i inf that separate an ascending and a
// descending family of gamma poles. Two evaluation paths are provided:
//
//  * integrate() works on an explicit Contour (a vertical line, optionally
//    with circular indentations around poles sitting close to it);
//  * integrate_separated() picks a line automatically and accounts for any
//    stray poles that end up on the wrong side with exact residue
//    corrections, which is how contours with no separating straight line
//    (shifted-parameter cases) are handled.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wmb/gamma.hpp"

namespace wmb {

// One factor Gamma(shift + coeff*s) with coeff in {+1, -1}. The pole set is
// { s : shift + coeff*s = -k, k >= 0 }: ascending factors (coeff +1) have
// poles marching to the left, descending ones (coeff -1) to the right.
struct GammaFactor {
  Complex shift;
  int coeff = 1;

  Complex argument(Complex s) const { return shift + static_cast<double>(coeff) * s; }
  Complex pole(int k) const {
    const Complex a = -shift - static_cast<double>(k);
    return coeff == 1 ? a : -a;
  }
};

struct BarnesIntegrand {
  std::vector<GammaFactor> numerator;
  std::vector<GammaFactor> denominator;
  std::optional<Complex> power_base;          // contributes power_base^s
  Complex scalar = 1.0;
  std::function<Complex(Complex)> extra;      // optional subexponential factor

  // log of the gamma/power/scalar part (extra excluded).
  Complex log_term(Complex s) const;
  // Full integrand value; throws PoleError within 1e-12 of a numerator pole.
  Complex eval(Complex s) const;

  // #numerator - #denominator factors; each net factor contributes
  // exp(-pi |Im s| / 2) of decay along vertical lines.
  int stirling_count() const {
    return static_cast<int>(numerator.size()) - static_cast<int>(denominator.size());
  }
  // Exponential decay rate of |integrand| as |Im s| -> infinity (worst of
  // the two directions). Must be positive for a convergent line integral.
  double decay_rate() const;
  // log10 |integrand| estimate at s = abscissa + i*height from Stirling.
  double log10_magnitude_estimate(double abscissa, double height) const;

  BarnesIntegrand& add_num(Complex shift, int coeff) {
    numerator.push_back({shift, coeff});
    return *this;
  }
  BarnesIntegrand& add_den(Complex shift, int coeff) {
    denominator.push_back({shift, coeff});
    return *this;
  }
  // Gamma(x + y + coeff*s) Gamma(x - y + coeff*s) numerator pair.
  BarnesIntegrand& add_num_pm(Complex x, Complex y, int coeff) {
    return add_num(x + y, coeff), add_num(x - y, coeff);
  }
  BarnesIntegrand& add_den_pm(Complex x, Complex y, int coeff = 1) {
    return add_den(x + y, coeff), add_den(x - y, coeff);
  }
};

struct Indentation {
  Complex center;   // the pole walked around
  double radius = 0.0;
  // Family of the enclosed pole. A `left` pole must end up left of the
  // path, so the path bulges to the right of it, and vice versa.
  enum class Side { left, right } side = Side::left;
};

struct Contour {
  double abscissa = 0.0;
  std::vector<Indentation> indentations;
};

// True if `p` lies to the left of the contour path.
bool left_of_contour(const Contour& c, Complex p);

// Plans a contour that keeps every pole of `left` strictly left and every
// pole of `right` strictly right. Uses the straight line at hint_abscissa
// when it already separates; otherwise picks a line and adds
// minimal-radius indentations around the finitely many offending poles.
// Throws PinchError when the two families collide, and Error when the
// offenders cannot be enclosed in disjoint disks.
Contour plan_contour(const BarnesIntegrand& f, std::span<const GammaFactor> left,
                     std::span<const GammaFactor> right,
                     std::optional<double> hint_abscissa = {});

// (1/2 pi i) \int_c f over an explicit contour.
Complex integrate(const BarnesIntegrand& f, const Contour& c, double tol);

// (1/2 pi i) \int f over any curve separating the two families: straight
// line plus exact residue corrections for stray poles.
Complex integrate_separated(const BarnesIntegrand& f,
                            std::span<const GammaFactor> left,
                            std::span<const GammaFactor> right, double tol,
                            std::optional<double> hint_abscissa = {});

// Residue of f at the k-th pole of `fac` (times the orientation factor
// 1/coeff), with every other factor evaluated at the pole.
Complex residue_at(const BarnesIntegrand& f, const GammaFactor& fac, int k);

void check_no_pinch(std::span<const GammaFactor> left,
                    std::span<const GammaFactor> right, double tol = 1e-10);

}  // namespace wmb
