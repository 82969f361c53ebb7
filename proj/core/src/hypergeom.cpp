#include "wmb/hypergeom.hpp"

#include <cmath>

namespace wmb {

namespace {

using LComplex = std::complex<long double>;

// If z is within 1e-12 of a non-positive integer, reports -z rounded.
bool terminating_index(Complex z, int* n) {
  const double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.imag()) > 1e-12 || std::abs(z.real() - r) > 1e-12)
    return false;
  *n = static_cast<int>(-r);
  return true;
}

// Exact finite sum of F(-n, b; c; z) in extended precision; the alternating
// binomial structure cancels heavily for larger n.
Complex gauss_terminating(int n, Complex b, Complex c, Complex z) {
  LComplex term = 1.0L, sum = 1.0L;
  const LComplex lb(b.real(), b.imag()), lc(c.real(), c.imag());
  const LComplex lz(z.real(), z.imag());
  for (int k = 0; k < n; ++k) {
    const long double kk = k;
    term *= (kk - n) * (lb + kk) / ((lc + kk) * (kk + 1.0L)) * lz;
    sum += term;
  }
  return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

Complex gauss_series(Complex a, Complex b, Complex c, Complex z) {
  Complex term = 1.0, sum = 1.0;
  int small_streak = 0;
  for (int k = 0; k < 20000; ++k) {
    const double kk = k;
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge");
}

Complex eval_large_neg(Complex a, Complex b, Complex c, double u) {
  Complex total = 0.0;
  for (const auto& br : hyp2f1_large_neg(a, b, c, 64)) {
    Complex s = 0.0, up = 1.0;
    const double iu = 1.0 / u;
    for (const Complex& coeff : br.series) {
      s += coeff * up;
      up *= iu;
    }
    total += br.coef * std::pow(Complex(u, 0.0), -br.expo) * s;
  }
  return total;
}

bool near_int(Complex z, double tol = 1e-6) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex gauss_core(Complex a, Complex b, Complex c, Complex z);

// Connection formula at z = 1; c - a - b off integers by construction.
Complex gauss_near_one(Complex a, Complex b, Complex c, Complex z) {
  const Complex w = 1.0 - z;
  const Complex cab = c - a - b;
  const Complex t1 = gamma(c) * gamma(cab) * rgamma(c - a) * rgamma(c - b) *
                     gauss_series(a, b, 1.0 - cab, w);
  const Complex t2 = gamma(c) * gamma(-cab) * rgamma(a) * rgamma(b) *
                     std::pow(w, cab) * gauss_series(c - a, c - b, 1.0 + cab, w);
  return t1 + t2;
}

Complex gauss_core(Complex a, Complex b, Complex c, Complex z) {
  int n = 0;
  if (near_nonpositive_integer(c))
    throw PoleError("gauss_2f1: lower parameter at a non-positive integer", c);
  if (terminating_index(a, &n)) return gauss_terminating(n, b, c, z);
  if (terminating_index(b, &n)) return gauss_terminating(n, a, c, z);
  if (z == Complex(0.0)) return 1.0;
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw RegionError("gauss_2f1: z on [1, inf) is not supported");

  if (std::abs(1.0 - z) <= 0.35) {
    const Complex cab = c - a - b;
    if (!near_int(cab)) return gauss_near_one(a, b, c, z);
    // Logarithmic case: removable in the average of c +- delta.
    const double delta = 1e-5;
    return 0.5 * (gauss_near_one(a, b, c + delta, z) +
                  gauss_near_one(a, b, c - delta, z));
  }
  if (z.real() < 0.0) {
    const Complex w = z / (z - 1.0);
    if (std::abs(w) <= 0.9)
      return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
    if (z.imag() == 0.0 && !near_int(a - b, 1e-8))
      return eval_large_neg(a, b, c, -z.real());
    if (std::abs(w) <= 0.97)
      return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
    throw RegionError("gauss_2f1: argument too far into the slow region");
  }
  if (std::abs(z) <= 0.9) return gauss_series(a, b, c, z);
  throw RegionError("gauss_2f1: z too close to the unit circle");
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z) {
  return gauss_core(a, b, c, z);
}

std::vector<LargeArgBranch> hyp2f1_large_neg(Complex a, Complex b, Complex c,
                                             int terms) {
  if (near_int(a - b, 1e-8))
    throw Error("hyp2f1_large_neg: a - b must not be an integer");
  std::vector<LargeArgBranch> out;
  auto make = [&](Complex p, Complex q) {
    LargeArgBranch br;
    br.coef = gamma(c) * gamma(q - p) * rgamma(q) * rgamma(c - p);
    br.expo = p;
    br.series.resize(terms);
    Complex t = 1.0;
    for (int k = 0; k < terms; ++k) {
      br.series[k] = t;
      const double kk = k;
      t *= -(p + kk) * (1.0 - c + p + kk) / ((1.0 - q + p + kk) * (kk + 1.0));
    }
    out.push_back(std::move(br));
  };
  make(a, b);
  make(b, a);
  return out;
}

Complex f3f2_unit(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2) {
  // Terminating case: use the smallest terminating upper index.
  int n = -1;
  for (Complex a : {a1, a2, a3}) {
    int m = 0;
    if (terminating_index(a, &m) && (n < 0 || m < n)) n = m;
  }
  for (Complex b : {b1, b2}) {
    int m = 0;
    if (terminating_index(b, &m) && (n < 0 || m < n))
      throw PoleError("f3f2_unit: lower parameter terminates first", b);
  }
  if (n >= 0) {
    // Put the terminating parameter first.
    LComplex u1(a1.real(), a1.imag()), u2(a2.real(), a2.imag()),
        u3(a3.real(), a3.imag());
    int m = 0;
    if (terminating_index(a2, &m) && m == n) std::swap(u1, u2);
    else if (terminating_index(a3, &m) && m == n) std::swap(u1, u3);
    const LComplex l1(b1.real(), b1.imag()), l2(b2.real(), b2.imag());
    LComplex term = 1.0L, sum = 1.0L;
    for (int k = 0; k < n; ++k) {
      const long double kk = k;
      term *= (u1 + kk) * (u2 + kk) * (u3 + kk) /
              ((l1 + kk) * (l2 + kk) * (kk + 1.0L));
      sum += term;
    }
    return Complex(static_cast<double>(sum.real()),
                   static_cast<double>(sum.imag()));
  }

  const Complex margin = b1 + b2 - a1 - a2 - a3;
  if (margin.real() <= 1e-9)
    throw RegionError("f3f2_unit: series at unit argument diverges");

  // Levin-u acceleration of the partial sums.
  constexpr int cap = 240;
  std::vector<LComplex> s(cap), w(cap);
  LComplex term = 1.0L, partial = 0.0L;
  Complex best = 0.0;
  double best_err = 1e300;
  const long double beta = 1.0L;
  for (int k = 0; k < cap; ++k) {
    partial += term;
    s[k] = partial;
    w[k] = (beta + k) * term;
    const long double kk = k;
    const LComplex la1(a1.real(), a1.imag()), la2(a2.real(), a2.imag()),
        la3(a3.real(), a3.imag()), lb1(b1.real(), b1.imag()),
        lb2(b2.real(), b2.imag());
    term *= (la1 + kk) * (la2 + kk) * (la3 + kk) /
            ((lb1 + kk) * (lb2 + kk) * (kk + 1.0L));
    if (k >= 4 && k % 2 == 0) {
      // Explicit Levin-u estimate of order k.
      LComplex nsum = 0.0L, dsum = 0.0L;
      long double binom = 1.0L;
      for (int j = 0; j <= k; ++j) {
        const long double base = (beta + j) / (beta + k);
        long double fac = binom;
        for (int e = 0; e < k - 1; ++e) fac *= base;
        const long double sgn = (j % 2 == 0) ? 1.0L : -1.0L;
        nsum += sgn * fac * s[j] / w[j];
        dsum += sgn * fac / w[j];
        binom = binom * (k - j) / (j + 1.0L);
      }
      if (std::abs(dsum) > 0.0L) {
        const LComplex est = nsum / dsum;
        const Complex e(static_cast<double>(est.real()),
                        static_cast<double>(est.imag()));
        const double err = std::abs(e - best);
        if (err < best_err || best_err == 1e300) {
          if (err < 1e-13 * std::max(1.0, std::abs(e))) return e;
          best_err = err;
          best = e;
        }
      }
    }
  }
  if (best_err < 1e-10 * std::max(1.0, std::abs(best))) return best;
  throw ConvergenceError("f3f2_unit: acceleration did not settle");
}

Complex cdh_poly(int n, Complex x2, const HahnParams& p) {
  // Three-term recurrence on the normalized polynomials
  //   St_n = S_n / ((a+b)_n (a+c)_n):
  //   -(a^2 + x^2) St_n = A_n St_{n+1} - (A_n + C_n) St_n + C_n St_{n-1}.
  const Complex a = p.a, b = p.b, c = p.c;
  Complex prev = 0.0, cur = 1.0;
  for (int m = 0; m < n; ++m) {
    const double mm = m;
    const Complex A = (mm + a + b) * (mm + a + c);
    const Complex C = mm * (mm + b + c - 1.0);
    const Complex next = ((A + C - (a * a + x2)) * cur - C * prev) / A;
    prev = cur;
    cur = next;
  }
  return cur * pochhammer(a + b, n) * pochhammer(a + c, n);
}

double jacobi_kernel(double t, double u) {
  if (u < 0.0) throw Error("jacobi_kernel: u must be non-negative");
  if (u == 0.0) return 1.0;
  t = std::abs(t);
  if (u <= 1.0) {
    // Pfaff transformation; the new argument stays below 1/2.
    const Complex a(0.75, -t);
    const double w = u / (1.0 + u);
    const Complex v = std::pow(Complex(1.0 + u, 0.0), -a) *
                      gauss_2f1(a, Complex(0.25, -t), 1.0, w);
    return v.real();
  }
  if (t < 1e-9) t = 1e-6;  // removable limit of the split below
  // u^{it - 3/4} split: F * |weight|^2 = phi(u, t) + phi(u, -t) = 2 Re phi.
  const Complex a(0.75, -t);
  const Complex i2t(0.0, -2.0 * t);
  const Complex front =
      std::exp(log_gamma(Complex(0.25, -t)) + log_gamma(Complex(0.75, -t)) -
               log_gamma(i2t) + Complex(0.0, t) * std::log(u)) *
      std::pow(u, -0.75);
  const double w = 1.0 / (1.0 + u);
  const Complex inner = std::pow(Complex(1.0 + 1.0 / u, 0.0), -a) *
                        gauss_2f1(a, Complex(0.25, -t), 1.0 + i2t, w);
  const Complex phi = front * inner;
  // Divide out the squared weight to return F alone.
  const double weight = std::exp(
      2.0 * (log_gamma(Complex(0.25, t)) + log_gamma(Complex(0.75, t)) -
             log_gamma(Complex(0.0, 2.0 * t)))
                .real());
  return 2.0 * phi.real() / weight;
}

}  // namespace wmb
