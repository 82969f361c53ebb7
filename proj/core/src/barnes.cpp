#include "wmb/barnes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wmb/concurrency.hpp"
#include "wmb/quadrature.hpp"

namespace wmb {

namespace {

constexpr double on_contour_tol = 1e-8;
constexpr double pinch_tol = 1e-10;

bool near_nonpos_int(Complex z, double tol) {
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.imag()) <= tol && std::abs(z.real() - r) <= tol;
}

}  // namespace

Complex BarnesIntegrand::log_term(Complex s) const {
  Complex acc = 0.0;
  for (const auto& g : numerator) acc += log_gamma(g.argument(s));
  for (const auto& g : denominator) acc -= log_gamma(g.argument(s));
  if (power_base) acc += s * std::log(*power_base);
  return acc;
}

Complex BarnesIntegrand::eval(Complex s) const {
  // A denominator pole is a zero of the integrand.
  for (const auto& g : denominator)
    if (near_nonpositive_integer(g.argument(s), 1e-12)) return 0.0;
  Complex v = scalar * std::exp(log_term(s));
  if (extra) v *= extra(s);
  return v;
}

double BarnesIntegrand::decay_rate() const {
  double rate = 0.5 * pi * stirling_count();
  if (power_base) rate -= std::abs(std::arg(*power_base));
  return rate;
}

double BarnesIntegrand::log10_magnitude_estimate(double abscissa, double height) const {
  // |Gamma(x+iy)| ~ sqrt(2 pi) |y|^{x-1/2} e^{-pi |y| / 2} for |y| large.
  auto lg = [&](const GammaFactor& g) {
    const double x = g.shift.real() + g.coeff * abscissa;
    const double y = std::abs(g.shift.imag() + g.coeff * height);
    const double yy = std::max(y, 2.0);
    return 0.919 + (x - 0.5) * std::log(yy) - 0.5 * pi * yy;
  };
  double acc = std::log(std::max(std::abs(scalar), 1e-300));
  for (const auto& g : numerator) acc += lg(g);
  for (const auto& g : denominator) acc -= lg(g);
  if (power_base)
    acc += abscissa * std::log(std::abs(*power_base)) -
           height * std::arg(*power_base);
  return acc / std::log(10.0);
}

void check_no_pinch(std::span<const GammaFactor> left,
                    std::span<const GammaFactor> right, double tol) {
  for (const auto& l : left)
    for (const auto& r : right)
      if (near_nonpos_int(l.shift + r.shift, tol))
        throw PinchError("contour pinched: left and right pole families collide");
}

namespace {

void check_families(std::span<const GammaFactor> left,
                    std::span<const GammaFactor> right) {
  for (const auto& g : left)
    if (g.coeff != 1)
      throw Error("left family factors must ascend (coeff +1)");
  for (const auto& g : right)
    if (g.coeff != -1)
      throw Error("right family factors must descend (coeff -1)");
}

// Poles of `fac` whose real part falls in [lo, hi].
std::vector<Complex> poles_in_band(const GammaFactor& fac, double lo, double hi) {
  std::vector<Complex> out;
  const double base = -fac.shift.real() * fac.coeff;  // Re of k = 0 pole
  // Re pole(k) = base - k for coeff +1, base + k for coeff -1.
  for (int k = 0; k < 4000; ++k) {
    const double re = fac.coeff == 1 ? base - k : base + k;
    if (fac.coeff == 1 && re < lo) break;
    if (fac.coeff == -1 && re > hi) break;
    if (re >= lo && re <= hi) out.push_back(fac.pole(k));
  }
  return out;
}

}  // namespace

bool left_of_contour(const Contour& c, Complex p) {
  for (const auto& ind : c.indentations)
    if (std::abs(p - ind.center) < ind.radius)
      return ind.side == Indentation::Side::left;
  return p.real() < c.abscissa;
}

Contour plan_contour(const BarnesIntegrand& f, std::span<const GammaFactor> left,
                     std::span<const GammaFactor> right,
                     std::optional<double> hint_abscissa) {
  (void)f;
  check_families(left, right);
  check_no_pinch(left, right);

  double left_max = -1e300, right_min = 1e300;
  for (const auto& g : left) left_max = std::max(left_max, -g.shift.real());
  for (const auto& g : right) right_min = std::min(right_min, g.shift.real());

  // A separating straight line, preferring the caller's hint.
  if (hint_abscissa && left_max < *hint_abscissa - on_contour_tol &&
      right_min > *hint_abscissa + on_contour_tol)
    return {*hint_abscissa, {}};
  if (left_max < right_min - 2.0 * on_contour_tol && !hint_abscissa)
    return {0.5 * (left_max + right_min), {}};

  const double abscissa = hint_abscissa
                              ? *hint_abscissa
                              : 0.5 * (left_max + right_min);

  // Collect offenders: poles on (or too close to) the wrong side of the line.
  struct Offender {
    Complex p;
    Indentation::Side side;
  };
  std::vector<Offender> offenders;
  const double margin = 1e-6;
  for (const auto& g : left)
    for (const Complex p : poles_in_band(g, abscissa - margin, 1e300))
      offenders.push_back({p, Indentation::Side::left});
  for (const auto& g : right)
    for (const Complex p : poles_in_band(g, -1e300, abscissa + margin))
      offenders.push_back({p, Indentation::Side::right});

  // All remaining poles, for radius limits.
  std::vector<Complex> all_poles;
  for (const auto& g : left)
    for (const Complex p : poles_in_band(g, abscissa - 6.0, 1e300)) all_poles.push_back(p);
  for (const auto& g : right)
    for (const Complex p : poles_in_band(g, -1e300, abscissa + 6.0)) all_poles.push_back(p);

  Contour c{abscissa, {}};
  for (const auto& o : offenders) {
    const double off = std::abs(o.p.real() - abscissa);
    double radius = std::max(2.0 * off, 0.05);
    // Keep every other pole out of the disk by a factor 2 margin.
    for (const Complex q : all_poles) {
      const double d = std::abs(q - o.p);
      if (d > 1e-12) radius = std::min(radius, d / 2.0);
    }
    if (radius <= off + on_contour_tol)
      throw Error("plan_contour: offending pole cannot be enclosed without "
                  "capturing a neighbour; no indented line exists here");
    c.indentations.push_back({o.p, radius, o.side});
  }

  // Indentation disks must be pairwise disjoint and separated in height so
  // the path alternates line segments and arcs.
  for (std::size_t i = 0; i < c.indentations.size(); ++i)
    for (std::size_t j = i + 1; j < c.indentations.size(); ++j) {
      const auto& a = c.indentations[i];
      const auto& b = c.indentations[j];
      if (std::abs(a.center - b.center) <= a.radius + b.radius ||
          std::abs(a.center.imag() - b.center.imag()) <= a.radius + b.radius)
        throw Error("plan_contour: indentation disks overlap");
    }

  // Final pole-side audit.
  for (const auto& g : left)
    for (const Complex p : poles_in_band(g, abscissa - 6.0, 1e300))
      if (!left_of_contour(c, p))
        throw Error("plan_contour: left pole ends up right of the contour");
  for (const auto& g : right)
    for (const Complex p : poles_in_band(g, -1e300, abscissa + 6.0))
      if (left_of_contour(c, p))
        throw Error("plan_contour: right pole ends up left of the contour");
  return c;
}

namespace {

// One parameterized piece of a contour path: a vertical segment or an arc.
struct PathPiece {
  bool is_arc = false;
  // segment: from abscissa + i y0 to abscissa + i y1
  double y0 = 0.0, y1 = 0.0, abscissa = 0.0;
  // arc: s(theta) = center + radius e^{i theta}, theta from t0 to t1 (signed)
  Complex center;
  double radius = 0.0, t0 = 0.0, t1 = 0.0;
  double preferred_width = 1.0;  // panel width hint (segment only)
};

Complex piece_sum(const BarnesIntegrand& f, const PathPiece& pc, int level,
                  double* abs_acc) {
  const GaussRule& rule = gauss_legendre(16);
  auto eval_panels = [&](double a, double b, int panels, auto to_point,
                         auto jacobian) {
    struct Part {
      Complex v;
      double a;
    };
    auto parts = parallel_map<Part>(panels, [&](std::size_t p) {
      const double h = (b - a) / panels;
      const double lo = a + h * static_cast<double>(p);
      Complex s = 0.0;
      double sa = 0.0;
      for (std::size_t j = 0; j < rule.node.size(); ++j) {
        const double x = lo + 0.5 * h * (rule.node[j] + 1.0);
        const Complex v = f.eval(to_point(x)) * jacobian(x);
        s += rule.weight[j] * v;
        sa += rule.weight[j] * std::abs(v);
      }
      return Part{s * (0.5 * h), sa * (0.5 * h)};
    });
    Complex total = 0.0;
    for (const auto& q : parts) {
      total += q.v;
      *abs_acc += q.a;
    }
    return total;
  };

  if (pc.is_arc) {
    const int panels = std::max(4, static_cast<int>(std::ceil(
                                       std::abs(pc.t1 - pc.t0) / 0.4)))
                       << level;
    return eval_panels(
        pc.t0, pc.t1, panels,
        [&](double th) { return pc.center + pc.radius * std::exp(Complex(0, th)); },
        [&](double th) { return Complex(0, 1) * pc.radius * std::exp(Complex(0, th)); });
  }
  const int panels =
      std::max(1, static_cast<int>(std::ceil((pc.y1 - pc.y0) / pc.preferred_width)))
      << level;
  return eval_panels(
      pc.y0, pc.y1, panels,
      [&](double y) { return Complex(pc.abscissa, y); },
      [&](double) { return Complex(0, 1); });
}

double endpoint_magnitude(const BarnesIntegrand& f, double abscissa, double h) {
  double m = 0.0;
  for (double sgn : {1.0, -1.0}) {
    try {
      m = std::max(m, std::abs(f.eval(Complex(abscissa, sgn * h))));
    } catch (const Error&) {
      m = 1e300;  // forces a larger height
    }
  }
  return m;
}

// Probe a typical magnitude scale of the integrand near the real axis.
double probe_scale(const BarnesIntegrand& f, double abscissa) {
  double m = 0.0;
  for (double y : {0.6, 1.7, 3.4}) {
    try {
      m = std::max(m, std::abs(f.eval(Complex(abscissa, y))));
    } catch (const Error&) {
    }
  }
  return m > 0.0 ? m : 1.0;
}

}  // namespace

Complex integrate(const BarnesIntegrand& f, const Contour& c, double tol) {
  if (tol < 1e-14) throw Error("integrate: tol below double precision floor");
  const double rate = f.decay_rate();
  if (rate < 0.05)
    throw NoDecayError("integrate: Stirling count predicts no decay along the contour");

  // Path validity: numerator poles must keep clear of the line and of arcs.
  for (const auto& g : f.numerator)
    for (const Complex p : poles_in_band(g, c.abscissa - 6.0, c.abscissa + 6.0)) {
      bool indented = false;
      for (const auto& ind : c.indentations) {
        const double d = std::abs(p - ind.center);
        if (d < 1e-12 || d <= 0.5 * ind.radius) {
          indented = true;
          break;
        }
        if (d < 1.5 * ind.radius)
          throw Error("integrate: pole too close to an indentation arc");
      }
      if (!indented && std::abs(p.real() - c.abscissa) < on_contour_tol)
        throw Error("integrate: pole on the contour");
    }

  auto sorted_ind = c.indentations;
  std::sort(sorted_ind.begin(), sorted_ind.end(),
            [](const Indentation& a, const Indentation& b) {
              return a.center.imag() < b.center.imag();
            });

  // Truncation height: a-priori Stirling estimate, then checked against the
  // actual integrand (including any extra factor) and grown as needed.
  const double scale = probe_scale(f, c.abscissa);
  double indent_top = 2.0;
  for (const auto& ind : sorted_ind)
    indent_top = std::max(indent_top, std::abs(ind.center.imag()) + ind.radius + 1.0);
  auto target_endpoint = [&](double sc) { return 0.05 * tol * rate * sc; };
  double H = indent_top + 2.0;
  {
    const double goal = std::log10(std::max(target_endpoint(scale), 1e-290));
    while (H < 400.0 && f.log10_magnitude_estimate(c.abscissa, H) > goal) H *= 1.2;
  }
  while (H < 2000.0 && endpoint_magnitude(f, c.abscissa, H) > target_endpoint(scale))
    H *= 1.3;
  // The estimate ignores any extra factor; when the actual integrand decays
  // faster, pull the height back in.
  while (H / 1.3 > indent_top + 2.0 &&
         endpoint_magnitude(f, c.abscissa, H / 1.3) < target_endpoint(scale))
    H /= 1.3;

  // Oscillation-aware base panel width.
  const double osc =
      (f.numerator.size() + f.denominator.size()) * std::log(2.0 + H) +
      (f.power_base ? std::abs(std::log(std::abs(*f.power_base))) : 0.0);
  double min_gap = 2.0;
  for (const auto& g : f.numerator)
    for (const Complex p : poles_in_band(g, c.abscissa - 2.0, c.abscissa + 2.0))
      min_gap = std::min(min_gap, std::max(std::abs(p.real() - c.abscissa), 0.02));
  const double width =
      std::min({2.0, 6.4 / std::max(osc, 1.0), 2.0 * min_gap});

  for (int attempt = 0; attempt < 5; ++attempt) {
    // Assemble pieces: segments split by indentations.
    std::vector<PathPiece> pieces;
    double cursor = -H;
    for (const auto& ind : sorted_ind) {
      const double dx = c.abscissa - ind.center.real();
      const double half = std::sqrt(std::max(ind.radius * ind.radius - dx * dx, 0.0));
      const double ylo = ind.center.imag() - half;
      const double yhi = ind.center.imag() + half;
      if (ylo < cursor) throw Error("integrate: indentations overlap in height");
      PathPiece seg;
      seg.abscissa = c.abscissa;
      seg.y0 = cursor;
      seg.y1 = ylo;
      seg.preferred_width = std::min(width, std::max(ind.radius / 4.0, 1e-3));
      if (seg.y1 > seg.y0) pieces.push_back(seg);
      const double ta = std::atan2(-half, dx);
      const double tb = std::atan2(half, dx);
      PathPiece arc;
      arc.is_arc = true;
      arc.center = ind.center;
      arc.radius = ind.radius;
      arc.t0 = ta;
      arc.t1 = ind.side == Indentation::Side::left ? tb : tb - 2.0 * pi;
      pieces.push_back(arc);
      cursor = yhi;
    }
    PathPiece last;
    last.abscissa = c.abscissa;
    last.y0 = cursor;
    last.y1 = H;
    last.preferred_width = width;
    pieces.push_back(last);

    Complex prev = 0.0;
    double prev_abs = 0.0;
    bool have_prev = false;
    for (int level = 0; level <= 9; ++level) {
      Complex total = 0.0;
      double abs_acc = 0.0;
      for (const auto& pc : pieces) total += piece_sum(f, pc, level, &abs_acc);
      if (have_prev) {
        const double sc =
            std::max({std::abs(total), 1e-8 * abs_acc, 1e-300});
        const double diff = std::abs(total - prev);
        // 2e-16 * abs_acc is the roundoff floor of the panel sums; below it
        // further refinement only reshuffles noise.
        if (diff <= tol * sc || diff <= 2e-16 * abs_acc) {
          // Tail audit: the result may be much smaller than the probe scale.
          const Complex result = total / Complex(0.0, 2.0 * pi);
          const double tail =
              endpoint_magnitude(f, c.abscissa, H) / rate / (2.0 * pi);
          if (tail <= 0.5 * tol * std::max(std::abs(result), 1e-10 * abs_acc / (2.0 * pi)))
            return result;
          break;  // grow H and retry
        }
      }
      prev = total;
      prev_abs = abs_acc;
      have_prev = true;
      if (level == 9)
        throw ConvergenceError("integrate: refinement cap reached");
    }
    (void)prev_abs;
    H *= 1.6;
  }
  throw ConvergenceError("integrate: truncation height kept growing without convergence");
}

Complex residue_at(const BarnesIntegrand& f, const GammaFactor& fac, int k) {
  const Complex p = fac.pole(k);
  Complex log_rest = 0.0;
  Complex linear = f.scalar;
  bool skipped = false;  // fac matched by value; skip exactly one copy
  for (const auto& g : f.numerator) {
    if (!skipped && g.coeff == fac.coeff && std::abs(g.shift - fac.shift) < 1e-14) {
      skipped = true;
      continue;
    }
    const Complex a = g.argument(p);
    if (near_nonpositive_integer(a, 1e-9))
      throw Error("residue_at: pole of order >= 2");
    log_rest += log_gamma(a);
  }
  if (!skipped) throw Error("residue_at: factor is not part of the integrand");
  for (const auto& g : f.denominator) {
    const Complex a = g.argument(p);
    if (near_nonpositive_integer(a, 0.1)) {
      linear *= rgamma(a);  // possibly an exact zero
    } else {
      log_rest -= log_gamma(a);
    }
  }
  if (f.power_base) log_rest += p * std::log(*f.power_base);
  // Res Gamma at -k is (-1)^k / k!; the chain rule contributes 1/coeff.
  log_rest -= log_gamma(static_cast<double>(k + 1));
  const double sign = (k % 2 == 0 ? 1.0 : -1.0) / fac.coeff;
  Complex v = sign * linear * std::exp(log_rest);
  if (f.extra) v *= f.extra(p);
  return v;
}

namespace {

struct Stray {
  const GammaFactor* fac;
  int k;
  bool left_family;
};

std::vector<Stray> find_strays(std::span<const GammaFactor> left,
                               std::span<const GammaFactor> right,
                               double abscissa) {
  std::vector<Stray> out;
  for (const auto& g : left) {
    const int kmax = static_cast<int>(std::floor(-g.shift.real() - abscissa));
    for (int k = 0; k <= kmax; ++k) out.push_back({&g, k, true});
  }
  for (const auto& g : right) {
    const int kmax = static_cast<int>(std::floor(abscissa - g.shift.real()));
    for (int k = 0; k <= kmax; ++k) out.push_back({&g, k, false});
  }
  return out;
}

// Family lists may carry "virtual" separators describing the pole structure
// of an extra closure; those steer the line choice but cannot be crossed
// (no residue formula for them).
bool is_integrand_factor(const BarnesIntegrand& f, const GammaFactor& fac) {
  for (const auto& g : f.numerator)
    if (g.coeff == fac.coeff && std::abs(g.shift - fac.shift) < 1e-14)
      return true;
  return false;
}

}  // namespace

Complex integrate_separated(const BarnesIntegrand& f,
                            std::span<const GammaFactor> left,
                            std::span<const GammaFactor> right, double tol,
                            std::optional<double> hint_abscissa) {
  check_families(left, right);
  check_no_pinch(left, right);

  // Candidate abscissas: midpoints between adjacent pole projections plus
  // the caller's hint. Score by distance to the nearest pole projection,
  // lightly penalizing residue corrections.
  std::set<double> res;
  double window_lo = 1e300, window_hi = -1e300;
  for (const auto& g : left) {
    window_hi = std::max(window_hi, -g.shift.real());
    window_lo = std::min(window_lo, -g.shift.real());
  }
  for (const auto& g : right) {
    window_lo = std::min(window_lo, g.shift.real());
    window_hi = std::max(window_hi, g.shift.real());
  }
  window_lo -= 1.5;
  window_hi += 1.5;
  for (const auto& g : left)
    for (const Complex p : poles_in_band(g, window_lo, window_hi))
      res.insert(p.real());
  for (const auto& g : right)
    for (const Complex p : poles_in_band(g, window_lo, window_hi))
      res.insert(p.real());

  std::vector<double> projections(res.begin(), res.end());
  std::vector<double> candidates;
  if (hint_abscissa) candidates.push_back(*hint_abscissa);
  for (std::size_t i = 0; i + 1 < projections.size(); ++i)
    if (projections[i + 1] - projections[i] > 1e-7)
      candidates.push_back(0.5 * (projections[i] + projections[i + 1]));
  if (!projections.empty()) {
    candidates.push_back(projections.front() - 0.7);
    candidates.push_back(projections.back() + 0.7);
  }
  if (candidates.empty()) candidates.push_back(0.0);

  double best_score = -1e300, best_abscissa = 0.0;
  std::vector<Stray> best_strays;
  for (const double a : candidates) {
    double dmin = 1e300;
    for (const double x : projections) dmin = std::min(dmin, std::abs(x - a));
    if (dmin < on_contour_tol) continue;
    auto strays = find_strays(left, right, a);
    bool crossable = true;
    for (const auto& st : strays)
      if (!is_integrand_factor(f, *st.fac)) crossable = false;
    if (!crossable) continue;
    const double score =
        std::min(dmin, 0.25) - 0.02 * static_cast<double>(strays.size());
    if (score > best_score) {
      best_score = score;
      best_abscissa = a;
      best_strays = std::move(strays);
    }
  }
  if (best_score == -1e300)
    throw Error("integrate_separated: no admissible abscissa found");

  Complex correction = 0.0;
  for (const auto& st : best_strays) {
    const Complex r = residue_at(f, *st.fac, st.k);
    correction += st.left_family ? r : -r;
  }
  return integrate(f, Contour{best_abscissa, {}}, tol) + correction;
}

}  // namespace wmb
