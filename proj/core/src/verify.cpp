#include "wmb/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "wmb/barnes.hpp"
#include "wmb/quadrature.hpp"
#include "wmb/whittaker.hpp"
#include "wmb/wilson.hpp"

namespace wmb {

namespace {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_complex(Complex z) {
  std::ostringstream ss;
  ss.precision(17);
  ss << z.real();
  if (z.imag() != 0.0) ss << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
  return ss.str();
}

}  // namespace

VerificationReport VerificationReport::make(std::string id, std::string inputs,
                                            Complex lhs, Complex rhs, double tol,
                                            double runtime_ms) {
  VerificationReport r;
  r.id = std::move(id);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.runtime_ms = runtime_ms;
  r.abs_dev = std::abs(lhs - rhs);
  r.rel_dev = r.abs_dev / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  r.passed = r.rel_dev <= tol ||
             (std::abs(lhs) < 1.0 && std::abs(rhs) < 1.0 && r.abs_dev <= tol);
  return r;
}

std::string VerificationReport::to_record() const {
  std::ostringstream ss;
  ss.precision(17);
  ss << "id='" << id << "' inputs='" << inputs << "' lhs=" << lhs.real() << ","
     << lhs.imag() << " rhs=" << rhs.real() << "," << rhs.imag()
     << " abs_dev=" << abs_dev << " rel_dev=" << rel_dev << " tol=" << tol
     << " passed=" << (passed ? 1 : 0) << " runtime_ms=" << runtime_ms;
  return ss.str();
}

VerificationReport VerificationReport::parse_record(const std::string& line) {
  VerificationReport r;
  auto quoted = [&](const char* key) {
    const std::string tag = std::string(key) + "='";
    const auto pos = line.find(tag);
    if (pos == std::string::npos)
      throw ConfigError("report record: missing field " + std::string(key));
    const auto end = line.find('\'', pos + tag.size());
    if (end == std::string::npos)
      throw ConfigError("report record: unterminated field " + std::string(key));
    return line.substr(pos + tag.size(), end - pos - tag.size());
  };
  auto scalar = [&](const char* key) {
    const std::string tag = std::string(key) + "=";
    auto pos = line.find(" " + tag);
    if (pos == std::string::npos)
      throw ConfigError("report record: missing field " + std::string(key));
    pos += tag.size() + 1;
    return std::stod(line.substr(pos));
  };
  auto pair_field = [&](const char* key) {
    const std::string tag = std::string(key) + "=";
    auto pos = line.find(" " + tag);
    if (pos == std::string::npos)
      throw ConfigError("report record: missing field " + std::string(key));
    pos += tag.size() + 1;
    const double re = std::stod(line.substr(pos));
    const auto comma = line.find(',', pos);
    const double im = std::stod(line.substr(comma + 1));
    return Complex(re, im);
  };
  r.id = quoted("id");
  r.inputs = quoted("inputs");
  r.lhs = pair_field("lhs");
  r.rhs = pair_field("rhs");
  r.abs_dev = scalar("abs_dev");
  r.rel_dev = scalar("rel_dev");
  r.tol = scalar("tol");
  r.passed = scalar("passed") != 0.0;
  r.runtime_ms = scalar("runtime_ms");
  return r;
}

namespace {

// Right side shared by the two contour identities: prefactor, the C
// coefficients, and the Wilson values Q+-.
struct WilsonSide {
  Complex pref;     // (-1)^{n-1} Gamma(B-S) Gamma(1-S) Gamma(1/2-n+-it1)
                    //   * sin(pi s2)/sin(pi s1)
  Complex c1p, c1m, c2p, c2m;
  Complex qp, qm;
};

WilsonSide wilson_side(int n, Complex B, Complex S, const SpectralParams& sp,
                       double tol) {
  WilsonSide w;
  const Complex it1(0.0, sp.t1);
  const double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n-1}
  w.pref = sgn * gamma(B - S) * gamma(1.0 - S) *
           gamma_pm(0.5 - static_cast<double>(n), it1) * sin_pi(sp.s2()) /
           sin_pi(sp.s1());

  for (int sign : {+1, -1}) {
    const Complex it2 = Complex(0.0, sp.t2) * static_cast<double>(sign);
    const Complex block = gamma(B - 0.5 + static_cast<double>(n) + it2) *
                          gamma(0.5 + static_cast<double>(n) + it2) *
                          gamma_pm(S + it2, it1) / sin_pi(2.0 * it2);
    const Complex c1 = block * sin_pi(sp.s1());
    const Complex c2 = block * sin_pi(0.5 - it2 - S);
    WilsonParams q;
    q.a = 1.0 - B / 2.0 + it2;
    q.b = B / 2.0 + it1;
    q.c = B / 2.0 - it1;
    q.d = 1.0 - B / 2.0 - it2;
    q.lambda = Complex(0, 1) * (0.5 - S);
    q.x = Complex(0, 1) * ((1.0 - B) / 2.0 - static_cast<double>(n));
    const Complex qv = wilson_phi(q, tol);
    if (sign > 0) {
      w.c1p = c1;
      w.c2p = c2;
      w.qp = qv;
    } else {
      w.c1m = c1;
      w.c2m = c2;
      w.qm = qv;
    }
  }
  return w;
}

}  // namespace

std::pair<VerificationReport, VerificationReport> verify_lemma_5_1(
    int n, Complex B, Complex S, const SpectralParams& sp, double tol) {
  if (n < 0) throw Error("verify_lemma_5_1: n must be >= 0");
  if (n >= 1 && std::abs(B - 0.5) > 1e-12)
    throw Error("verify_lemma_5_1: n >= 1 requires B = 1/2");
  const Stopwatch clock;
  const Complex it1(0.0, sp.t1), it2(0.0, sp.t2);
  const double nn = n;
  const double qtol = tol * 1e-2;

  // Left sides.
  BarnesIntegrand f1;
  f1.add_num_pm(S - 0.5, it1, -1);
  f1.add_num_pm(0.5, it2, 1);
  f1.add_num(1.0 - nn - S, 1);
  f1.add_num(nn - 1.0 + B, -1);
  f1.add_den(1.0 - nn, 1);
  f1.add_den(nn - 1.0 + B + S, -1);
  const GammaFactor left1[] = {f1.numerator[2], f1.numerator[3], f1.numerator[4]};
  const GammaFactor right1[] = {f1.numerator[0], f1.numerator[1], f1.numerator[5]};
  const Complex lhs1 = integrate_separated(f1, left1, right1, qtol, -0.255);

  BarnesIntegrand f2;
  f2.add_num_pm(S - 0.5, it2, -1);
  f2.add_num_pm(0.5, it1, 1);
  f2.add_num(1.0 + nn - S, 1);
  f2.add_num(B - S + nn, 1);
  f2.add_den(B + nn, 1);
  f2.add_den(1.0 + nn, 1);
  f2.scalar = sin_pi(sp.s2()) / sin_pi(sp.s1());
  const GammaFactor left2[] = {f2.numerator[2], f2.numerator[3], f2.numerator[4],
                               f2.numerator[5]};
  const GammaFactor right2[] = {f2.numerator[0], f2.numerator[1]};
  const Complex lhs2 = integrate_separated(f2, left2, right2, qtol, -0.255);

  // Right sides.
  const WilsonSide w = wilson_side(n, B, S, sp, qtol);
  const Complex rhs1 = w.pref * (w.c1p * w.qp + w.c1m * w.qm);
  const Complex rhs2 = w.pref * (w.c2p * w.qp + w.c2m * w.qm);

  std::ostringstream in;
  in << "n=" << n << " B=" << fmt_complex(B) << " S=" << fmt_complex(S)
     << " t1=" << sp.t1 << " t2=" << sp.t2;
  const double ms = clock.ms() / 2.0;
  return {VerificationReport::make("lemma5.1/first", in.str(), lhs1, rhs1, tol, ms),
          VerificationReport::make("lemma5.1/second", in.str(), lhs2, rhs2, tol, ms)};
}

std::pair<VerificationReport, VerificationReport> verify_lemma_5_2(
    double t, Complex S, const SpectralParams& sp, double tol) {
  const Stopwatch clock;
  const Complex it(0.0, t), it1(0.0, sp.t1), it2(0.0, sp.t2);
  const double qtol = tol * 3e-2;
  // Inner noise enters the outer refinement comparison directly, so the
  // closures run three orders tighter than the outer quadrature.
  const double inner_tol = qtol * 1e-3;

  auto inner_f1 = [&](Complex s) {
    BarnesIntegrand g;
    g.add_num_pm(0.25, it, 1);     // ascending
    g.add_num(S, 1);               // ascending
    g.add_num(0.0, -1);            // Gamma(-T), descending
    g.add_num(1.0 - S + s, 1);     // ascending
    g.add_num(-0.5 - s, -1);       // descending
    g.add_den_pm(0.5, it1);
    const GammaFactor left[] = {g.numerator[0], g.numerator[1], g.numerator[2],
                                g.numerator[4]};
    const GammaFactor right[] = {g.numerator[3], g.numerator[5]};
    return integrate_separated(g, left, right, inner_tol, -0.2475);
  };
  auto inner_f2 = [&](Complex s) {
    BarnesIntegrand g;
    g.add_num_pm(0.25, it, 1);
    g.add_num(S, 1);
    g.add_num(0.0, -1);
    g.add_num(-s, 1);
    g.add_num(0.5 - S + s, -1);
    g.add_den_pm(0.5, it1);
    const GammaFactor left[] = {g.numerator[0], g.numerator[1], g.numerator[2],
                                g.numerator[4]};
    const GammaFactor right[] = {g.numerator[3], g.numerator[5]};
    return integrate_separated(g, left, right, inner_tol, -0.2475);
  };

  // The closures have their own poles in s wherever the inner contour
  // pinches (one per left-right pair of inner factors with an s-dependent
  // shift sum). Declared as virtual separator families so the outer line
  // never crosses them: for F_1 the right-marching family at -1/4 +- it + k
  // starts a hair to the right of the text's line.
  BarnesIntegrand o1;
  o1.add_num_pm(S - 0.5, it1, -1);
  o1.add_num_pm(0.5, it2, 1);
  o1.add_den(1.0, 1);
  o1.add_den(S - 0.5, -1);
  o1.extra = inner_f1;
  const GammaFactor left1[] = {o1.numerator[2], o1.numerator[3],
                               {1.0 - S, 1}};
  const GammaFactor right1[] = {o1.numerator[0], o1.numerator[1],
                                {-0.25 + it, -1}, {-0.25 - it, -1},
                                {S - 0.5, -1}};
  const Complex lhs1 = integrate_separated(o1, left1, right1, qtol);

  BarnesIntegrand o2;
  o2.add_num_pm(S - 0.5, it2, -1);
  o2.add_num_pm(0.5, it1, 1);
  o2.add_num(1.0 - S, 1);
  o2.add_den(1.0, 1);
  o2.add_den(0.0, -1);
  o2.add_den(0.5, 1);
  o2.scalar = sin_pi(sp.s2()) / sin_pi(sp.s1());
  o2.extra = inner_f2;
  const GammaFactor left2[] = {o2.numerator[2], o2.numerator[3],
                               o2.numerator[4],
                               {0.75 - S + it, 1}, {0.75 - S - it, 1},
                               {0.5, 1}};
  const GammaFactor right2[] = {o2.numerator[0], o2.numerator[1],
                                {0.0, -1}};
  const Complex lhs2 = integrate_separated(o2, left2, right2, qtol);

  // Right sides from the Wilson specializations.
  const Complex lambda = Complex(0, 1) * (0.5 - S);
  const Complex phip = phi_plus(lambda, Complex(t, 0.0), sp, qtol);
  const Complex phim = phi_minus(lambda, Complex(t, 0.0), sp, qtol);
  const Complex ap = gamma_pm(S + it2, it1) * gamma_pm(0.25 + it2, it) /
                     sin_pi(2.0 * it2) * phip;
  const Complex am = gamma_pm(S - it2, it1) * gamma_pm(0.25 - it2, it) /
                     sin_pi(-2.0 * it2) * phim;
  const Complex bp = ap * sin_pi(0.5 - it2 - S);
  const Complex bm = am * sin_pi(0.5 + it2 - S);
  const Complex shared = -gamma_pm(0.25, it) * gamma(0.5 - S) * gamma(S) *
                         gamma(1.0 - S);
  const Complex rhs1 = shared * (ap + am) * sin_pi(sp.s2());
  const Complex rhs2 = shared * sin_pi(sp.s2()) / sin_pi(sp.s1()) * (bp + bm);

  std::ostringstream in;
  in << "t=" << t << " S=" << fmt_complex(S) << " t1=" << sp.t1
     << " t2=" << sp.t2;
  const double ms = clock.ms() / 2.0;
  return {VerificationReport::make("lemma5.2/first", in.str(), lhs1, rhs1, tol, ms),
          VerificationReport::make("lemma5.2/second", in.str(), lhs2, rhs2, tol, ms)};
}

VerificationReport verify_lemma_6_5(int n, double t, double t0, double tol) {
  if (n < 0 || n > 8) throw Error("verify_lemma_6_5: need 0 <= n <= 8");
  const Stopwatch clock;
  const Complex it(0.0, t), it0(0.0, t0);
  const double nn = n;

  // Numeric head of the integral.
  const double cut = 40.0;
  auto f2 = [&](double u) {
    return gauss_2f1(0.5 + nn + it0, 0.5 + nn - it0, 1.0 + nn, -u).real();
  };
  auto integrand = [&](double u) {
    return jacobi_kernel(t, u) * std::pow(u, nn) * f2(u);
  };
  QuadratureOptions opt;
  opt.initial_panels = 64;
  const double head = integrate_gl_real(integrand, 0.0, cut, tol * 1e-2, opt);

  // Analytic tail from the large-argument branches of both factors.
  const int terms = 40;
  const auto br1 = hyp2f1_large_neg(Complex(0.75, -t), Complex(0.75, t), 1.0, terms);
  const auto br2 = hyp2f1_large_neg(0.5 + nn + it0, 0.5 + nn - it0, 1.0 + nn, terms);
  Complex tail = 0.0;
  for (const auto& b1 : br1)
    for (const auto& b2 : br2) {
      // sum_m (sum_{k+l=m} a_k b_l) int_cut^inf u^{n - p1 - p2 - m} du
      for (int m = 0; m < terms; ++m) {
        Complex conv = 0.0;
        for (int k = 0; k <= m; ++k) conv += b1.series[k] * b2.series[m - k];
        const Complex expn = nn - b1.expo - b2.expo - static_cast<double>(m) + 1.0;
        tail -= b1.coef * b2.coef * conv * std::pow(cut, expn) / expn;
      }
    }
  const Complex lhs = head + tail;

  const Complex g = gamma_pm2(0.25, it, it0);
  const Complex rhs = g * std::exp(-log_gamma(Complex(0.75, t)) -
                                   log_gamma(Complex(0.75, -t)) -
                                   log_gamma(Complex(0.5, t0)) -
                                   log_gamma(Complex(0.5, -t0))) *
                      std::exp(log_gamma(1.0 + nn) - log_gamma(0.5 + nn)) *
                      f3f2_unit(-nn, Complex(0.25, t), Complex(0.25, -t),
                                Complex(0.5, t0), Complex(0.5, -t0));

  std::ostringstream in;
  in << "n=" << n << " t=" << t << " t0=" << t0;
  return VerificationReport::make("lemma6.5", in.str(), lhs, rhs, tol, clock.ms());
}

namespace {

// Minimal complex quad-precision arithmetic for the alternating binomial
// sum below, whose cancellation can eat 8-9 digits.
struct Quad2 {
  __float128 re = 0, im = 0;
  Quad2() = default;
  Quad2(double r, double i) : re(r), im(i) {}
  Quad2& operator+=(const Quad2& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Quad2& operator*=(const Quad2& o) {
    const __float128 r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
};

}  // namespace

VerificationReport verify_claim_6_6(int N, Complex a, Complex s) {
  const Stopwatch clock;
  // Gamma(a+N)/Gamma(a+j) = (a+j)_{N-j} and Gamma(a+j+s)/Gamma(a+s) =
  // (a+s)_j: exact finite products, summed in quad precision since the
  // alternating binomial sum cancels heavily.
  // a + s is formed in quad too: the cancelling sum amplifies even a 1-ulp
  // rounding of that argument by ~|sum of terms| / |result|.
  const Quad2 apss(a.real(), a.imag());
  Quad2 lhs;
  double binom = 1.0;
  for (int j = 0; j <= N; ++j) {
    Quad2 term(j % 2 == 0 ? binom : -binom, 0.0);
    for (int k = j; k < N; ++k) {
      Quad2 f(a.real(), a.imag());
      f.re += k;
      term *= f;
    }
    for (int k = 0; k < j; ++k) {
      Quad2 f = apss;
      f.re += s.real();
      f.im += s.imag();
      f.re += k;
      term *= f;
    }
    lhs += term;
    binom = binom * (N - j) / (j + 1.0);
  }
  const Complex rhs = pochhammer(-s, N);
  std::ostringstream in;
  in << "N=" << N << " a=" << fmt_complex(a) << " s=" << fmt_complex(s);
  return VerificationReport::make(
      "claim6.6", in.str(),
      Complex(static_cast<double>(lhs.re), static_cast<double>(lhs.im)), rhs,
      1e-11, clock.ms());
}

VerificationReport verify_lemma_6_3(const HahnParams& p, Complex gamma_,
                                    Complex A, Complex B, double x, int n_trunc,
                                    double tol) {
  const Stopwatch clock;
  const Complex ix(0.0, x);

  // Series side. The 3F2 factor is bounded (it oscillates and slowly
  // decays), so the weight envelope (gamma)_n (A)_n / ((A+B)_n n!) controls
  // both the stopping point and the tail. Summing far past the envelope
  // collapse only accumulates cancellation noise from the terminating sums.
  Complex series = 0.0;
  Complex weight = 1.0;
  double f_scale = 0.0;
  int n = 0;
  for (; n <= n_trunc; ++n) {
    const Complex f = f3f2_unit(-static_cast<double>(n), p.a + ix, p.a - ix,
                                p.a + p.b, p.a + p.c);
    if (n <= 40) f_scale = std::max(f_scale, std::abs(f));
    series += f * weight;
    const double nn = n;
    weight *= (gamma_ + nn) * (A + nn) / ((A + B + nn) * (nn + 1.0));
    if (n >= 8 && std::abs(weight) * 3.0 * f_scale <
                      0.002 * tol * std::max(1.0, std::abs(series)))
      break;
  }
  const double envelope = (B + 1.0 - gamma_).real();
  const double bound =
      envelope > 1.2
          ? std::abs(weight) * 3.0 * f_scale * (n + 1) / (envelope - 1.0)
          : 1e300;
  if (bound > 0.1 * tol * std::max(1.0, std::abs(series)))
    throw InsufficientInputError("verify_lemma_6_3: truncation insufficient");

  // Integral side.
  BarnesIntegrand f;
  f.add_num(gamma_, 1);
  f.add_num(A, 1);
  f.add_num(p.a + ix, 1);
  f.add_num(p.a - ix, 1);
  f.add_num(0.0, -1);
  f.add_num(B - gamma_, -1);
  f.add_den(p.a + p.b, 1);
  f.add_den(p.a + p.c, 1);
  const GammaFactor left[] = {f.numerator[0], f.numerator[1], f.numerator[2],
                              f.numerator[3]};
  const GammaFactor right[] = {f.numerator[4], f.numerator[5]};
  const double c = std::min({p.a.real(), gamma_.real(), A.real()}) / 2.0;
  const Complex integral = integrate_separated(f, left, right, tol * 1e-2, -c);
  const Complex pref =
      std::exp(log_gamma(p.a + p.b) + log_gamma(p.a + p.c) + log_gamma(A + B) -
               log_gamma(gamma_) - log_gamma(A) - log_gamma(B) -
               log_gamma(p.a + ix) - log_gamma(p.a - ix) -
               log_gamma(A + B - gamma_));
  const Complex rhs = pref * integral;

  std::ostringstream in;
  in << "a=" << fmt_complex(p.a) << " b=" << fmt_complex(p.b)
     << " c=" << fmt_complex(p.c) << " gamma=" << fmt_complex(gamma_)
     << " A=" << fmt_complex(A) << " B=" << fmt_complex(B) << " x=" << x
     << " N=" << n_trunc;
  return VerificationReport::make("lemma6.3", in.str(), series, rhs, tol,
                                  clock.ms());
}

VerificationReport verify_whittaker_mellin(Complex S, int m, int sign,
                                           const SpectralParams& sp, double tol) {
  const Stopwatch clock;
  const Complex it1(0.0, sp.t1), it2(0.0, sp.t2);
  const Complex lhs = whittaker_pair_mellin(S, 0, sign, m, sp, tol * 0.03);

  BarnesIntegrand f;
  const Complex hi = sign > 0 ? it2 : it1;
  const Complex lo = sign > 0 ? it1 : it2;
  f.add_num_pm(S - 0.5, hi, -1);
  f.add_num_pm(0.5, lo, 1);
  f.add_num(1.0 - S, 1);
  f.add_den(1.0, 1);
  const GammaFactor left[] = {f.numerator[2], f.numerator[3], f.numerator[4]};
  const GammaFactor right[] = {f.numerator[0], f.numerator[1]};
  const Complex integral = integrate_separated(f, left, right, tol * 1e-2);
  const double scale = 4.0 * pi * m;
  const Complex rhs = std::pow(Complex(scale, 0.0), 1.0 - S) *
                      std::exp(-log_gamma(0.5 + hi) - log_gamma(0.5 - hi)) *
                      integral;

  std::ostringstream in;
  in << "S=" << fmt_complex(S) << " m=" << m << " sign=" << sign
     << " t1=" << sp.t1 << " t2=" << sp.t2;
  return VerificationReport::make("whittaker4.20", in.str(), lhs, rhs, tol,
                                  clock.ms());
}

VerificationReport verify_trig_5_16(Complex S, int n, double t2) {
  const Stopwatch clock;
  const Complex it2(0.0, t2);
  const double nn = n;
  const Complex d1 = sin_pi(0.5 + it2 - nn - S);
  const Complex d2a = sin_pi(0.5 - it2 - nn);
  const Complex d2b = sin_pi(1.5 + it2 - nn - S);
  if (std::abs(d1) < 1e-12 || std::abs(d2a) < 1e-12 || std::abs(d2b) < 1e-12)
    throw Error("verify_trig_5_16: denominator vanishes at these parameters");
  const Complex term1 = sin_pi(0.5 - it2 - nn - S) / d1;
  const Complex term2 = sin_pi(S) * sin_pi(1.0 + 2.0 * it2) / (d2a * d2b);
  std::ostringstream in;
  in << "S=" << fmt_complex(S) << " n=" << n << " t2=" << t2;
  return VerificationReport::make("trig5.16", in.str(), 1.0, term1 + term2, 1e-12,
                                  clock.ms());
}

VerificationReport verify_residue_4_28(double t1) {
  const Stopwatch clock;
  const Complex it1(0.0, t1);
  const Complex lhs = pi / (2.0 * gamma_pm(0.5, it1));
  const Complex rhs = (pi * pi / 6.0) / (gamma_pm(0.5, it1) * (pi / 3.0));
  std::ostringstream in;
  in << "t1=" << t1;
  return VerificationReport::make("residue4.28", in.str(), lhs, rhs, 1e-14,
                                  clock.ms());
}

}  // namespace wmb
