#include "wmb/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "wmb/concurrency.hpp"
#include "wmb/quadrature.hpp"

namespace wmb {

namespace {

// |Gamma(1/4+it) Gamma(3/4+it) / Gamma(2it)|^2, entire in t, zero at t = 0.
double jacobi_weight(double t) {
  if (t == 0.0) return 0.0;
  const Complex it(0.0, t);
  return std::exp(2.0 * (log_gamma(0.25 + it) + log_gamma(0.75 + it) -
                         log_gamma(2.0 * it))
                            .real());
}

// |Gamma(1/4+it)/Gamma(2it)|^2 * Gamma(1/4+-it+-iT), real and even in t.
double spectral_weight_quarter(double t, double T) {
  if (t == 0.0) return 0.0;
  const Complex it(0.0, t), iT(0.0, T);
  const Complex lg = log_gamma(0.25 + it) + log_gamma(0.25 - it) +
                     log_gamma(0.25 + it + iT) + log_gamma(0.25 + it - iT) +
                     log_gamma(0.25 - it + iT) + log_gamma(0.25 - it - iT);
  return (std::exp(lg) * rgamma(2.0 * it) * rgamma(-2.0 * it)).real();
}

// Natural cubic spline through (x_i, y_i), strictly increasing x.
struct CubicSpline {
  std::vector<double> x, y, y2;

  CubicSpline(std::vector<double> xs, std::vector<double> ys)
      : x(std::move(xs)), y(std::move(ys)) {
    const std::size_t n = x.size();
    y2.assign(n, 0.0);
    if (n < 2) return;
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
      const double p = sig * y2[i - 1] + 2.0;
      y2[i] = (sig - 1.0) / p;
      u[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) -
             (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
      u[i] = (6.0 * u[i] / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t i = n - 1; i-- > 0;) y2[i] = y2[i] * y2[i + 1] + u[i];
  }

  double operator()(double xq) const {
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    std::size_t hi = std::clamp<std::size_t>(it - x.begin(), 1, x.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double a = (x[hi] - xq) / h, b = (xq - x[lo]) / h;
    return a * y[lo] + b * y[hi] +
           ((a * a * a - a) * y2[lo] + (b * b * b - b) * y2[hi]) * h * h / 6.0;
  }
};

double chi_cutoff(const ChiSpec& chi) {
  return std::min(chi.support_radius(1e-20) + 1.0, 45.0);
}

// Power-law bound on the inversion tail beyond the last grid point, fitted
// on the trailing grid points. The kernel decays faster than any power, so
// the fit overestimates. Returns +inf when no decay is visible yet.
double fitted_tail(const std::vector<double>& u, const std::vector<double>& k) {
  const std::size_t n = u.size();
  if (n < 10) return 1e300;
  const double kN = std::abs(k[n - 1]), kM = std::abs(k[n - 9]);
  if (kN == 0.0) return 0.0;
  if (kM <= kN) return 1e300;
  const double p = std::log(kM / kN) / std::log(u[n - 1] / u[n - 9]);
  // The inversion integrand is ~ u^{-1/2} k(u); its tail integral from uN is
  // kN uN^{1/2} / (p - 1/2) when p > 1/2.
  const double decay = p - 0.5;
  if (decay <= 0.2) return 1e300;
  return kN * std::sqrt(u[n - 1]) / decay;
}

}  // namespace

double k_chi(double u, const ChiSpec& chi, double tol) {
  if (chi.zero) return 0.0;
  const double T = chi_cutoff(chi);
  auto integrand = [&](double t) {
    const double w = jacobi_weight(t);
    return w == 0.0 ? 0.0 : jacobi_kernel(t, u) * w * chi(t);
  };
  QuadratureOptions opt;
  opt.initial_panels = std::max(12, static_cast<int>(std::ceil(T / 0.5)));
  opt.max_refinements = 6;
  opt.abs_tol = 1e-13;   // far-tail values only need absolute accuracy
  opt.parallel = false;  // caller parallelizes over u
  const double integral = integrate_gl_real(integrand, 0.0, T, tol, opt);
  return integral * std::pow(u + 1.0, 0.25) / pi;
}

KernelTable KernelTable::build(const ChiSpec& chi, double tol, double u_min,
                               double u_max_initial, int initial_nodes) {
  if (chi.zero) {
    KernelTable t;
    t.u = {0.0, 1.0, 2.0, 4.0};
    t.k = {0.0, 0.0, 0.0, 0.0};
    t.chi = chi;
    t.tol = tol;
    return t;
  }
  KernelTable table;
  table.chi = chi;
  table.tol = tol;
  table.u.push_back(0.0);
  const double dv = std::log(u_max_initial / u_min) / (initial_nodes - 2);
  for (int i = 0; i < initial_nodes - 1; ++i)
    table.u.push_back(u_min * std::exp(dv * i));

  const double ktol = std::min(tol * 1e-2, 1e-8);
  auto fill = [&](std::size_t from) {
    auto vals = parallel_map<double>(table.u.size() - from, [&](std::size_t i) {
      return k_chi(table.u[from + i], chi, ktol);
    });
    table.k.insert(table.k.end(), vals.begin(), vals.end());
  };
  fill(0);

  // Extend until the fitted power tail drops below tol/10. Narrow gaussians
  // decay log-normally in u and can need a grid far past the default span.
  while (fitted_tail(table.u, table.k) >= 0.1 * tol) {
    if (table.u.size() > 4000)
      throw InsufficientInputError("KernelTable: kernel tail does not decay");
    const double uN = table.u.back();
    const std::size_t from = table.u.size();
    for (int i = 0; i < 40; ++i)
      table.u.push_back(uN * std::exp(dv * (i + 1)));
    fill(from);
  }
  return table;
}

void KernelTable::save(std::ostream& os) const {
  os << "# wmb kernel table chi={" << chi.describe() << "} tol=" << tol << "\n";
  os.precision(17);
  for (std::size_t i = 0; i < u.size(); ++i)
    os << u[i] << " " << k[i] << "\n";
}

KernelTable KernelTable::load(std::istream& is) {
  KernelTable t;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# wmb kernel table", 0) != 0)
    throw ConfigError("KernelTable: missing header line");
  const auto lbrace = line.find('{'), rbrace = line.find('}');
  const auto tolpos = line.find("tol=");
  if (lbrace == std::string::npos || rbrace == std::string::npos ||
      tolpos == std::string::npos)
    throw ConfigError("KernelTable: malformed header");
  t.chi = ChiSpec::parse(line.substr(lbrace + 1, rbrace - lbrace - 1));
  t.tol = std::stod(line.substr(tolpos + 4));
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double uu = 0.0, kk = 0.0;
    if (!(ss >> uu >> kk))
      throw ConfigError("KernelTable: bad row " + std::to_string(row));
    t.u.push_back(uu);
    t.k.push_back(kk);
  }
  if (t.u.size() < 4) throw ConfigError("KernelTable: too few rows");
  return t;
}

namespace {

struct TableView {
  CubicSpline spline;   // k as a function of v = ln u over u > 0 nodes
  double u1, k0, k1;
  double u_last, k_last;

  explicit TableView(const KernelTable& t)
      : spline(std::vector<double>(), std::vector<double>()),
        u1(t.u[1]),
        k0(t.k[0]),
        k1(t.k[1]),
        u_last(t.u.back()),
        k_last(t.k.back()) {
    std::vector<double> v(t.u.begin() + 1, t.u.end());
    for (double& x : v) x = std::log(x);
    spline = CubicSpline(std::move(v), {t.k.begin() + 1, t.k.end()});
  }

  double operator()(double u) const {
    if (u <= u1) return k0 + (k1 - k0) * (u / u1);
    return spline(std::log(u));
  }
};

void check_table(const KernelTable& t) {
  if (t.u.size() != t.k.size() || t.u.size() < 4)
    throw InsufficientInputError("kernel table: too few grid points");
  for (std::size_t i = 1; i < t.u.size(); ++i)
    if (t.u[i] <= t.u[i - 1])
      throw InsufficientInputError("kernel table: u grid must increase");
  if (t.u.front() != 0.0)
    throw InsufficientInputError("kernel table: grid must start at u = 0");
}

bool all_zero(const KernelTable& t) {
  for (double v : t.k)
    if (v != 0.0) return false;
  return true;
}

}  // namespace

double inverse_check(double t, const KernelTable& table) {
  check_table(table);
  if (all_zero(table)) return 0.0;
  if (fitted_tail(table.u, table.k) > 0.1 * table.tol)
    throw InsufficientInputError("inverse_check: table tail above tolerance");

  const TableView view(table);
  t = std::abs(t);

  const GaussRule& rule = gauss_legendre(8);
  auto piece = [&](double a, double b) {
    double s = 0.0;
    for (std::size_t j = 0; j < rule.node.size(); ++j) {
      const double u = a + 0.5 * (b - a) * (rule.node[j] + 1.0);
      s += rule.weight[j] * std::pow(u + 1.0, 0.25) * jacobi_kernel(t, u) *
           view(u);
    }
    return s * 0.5 * (b - a);
  };

  auto parts = parallel_map<double>(table.u.size() - 1, [&](std::size_t i) {
    return piece(table.u[i], table.u[i + 1]);
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return 0.5 * total;
}

double l_k(double t, const KernelTable& table) {
  check_table(table);
  if (all_zero(table)) return 0.0;
  if (fitted_tail(table.u, table.k) > 0.1 * table.tol)
    throw InsufficientInputError("l_k: table tail above tolerance");
  const TableView view(table);
  t = std::abs(t);
  const Complex s(0.5, t);

  const GaussRule& rule = gauss_legendre(8);
  auto piece = [&](double ua, double ub) {
    const double ra = std::sqrt(ua / (1.0 + ua));
    const double rb = std::sqrt(ub / (1.0 + ub));
    Complex acc = 0.0;
    for (std::size_t j = 0; j < rule.node.size(); ++j) {
      const double r = ra + 0.5 * (rb - ra) * (rule.node[j] + 1.0);
      const double r2 = r * r;
      const double u = r2 / (1.0 - r2);
      acc += rule.weight[j] * view(u) *
             std::pow(Complex(1.0 - r2, 0.0), s - 2.0) *
             gauss_2f1(s + 0.25, s - 0.25, 1.0, r2) * r;
    }
    return acc * 0.5 * (rb - ra);
  };

  auto parts = parallel_map<Complex>(table.u.size() - 1, [&](std::size_t i) {
    return piece(table.u[i], table.u[i + 1]);
  });
  Complex total = 0.0;
  for (const Complex& p : parts) total += p;
  return total.real();
}

namespace {

Complex c_n_core(int n, double T, const ChiSpec& chi, double tol,
                 bool hahn_route) {
  if (chi.zero) return 0.0;
  const double cutoff = chi_cutoff(chi);
  const HahnParams hp(0.25, Complex(0.25, -T), Complex(0.25, T));

  auto integrand = [&](double t) -> Complex {
    const double w = spectral_weight_quarter(t, T);
    if (w == 0.0) return 0.0;
    if (!hahn_route) {
      const Complex f =
          f3f2_unit(-static_cast<double>(n), Complex(0.25, t), Complex(0.25, -t),
                    Complex(0.5, T), Complex(0.5, -T));
      return w * chi(t) * f;
    }
    return w * chi(t) * cdh_poly(n, Complex(t * t, 0.0), hp);
  };

  QuadratureOptions opt;
  opt.initial_panels = std::max(24, static_cast<int>(std::ceil(cutoff / 0.35)));
  opt.max_refinements = 6;
  opt.abs_tol = 1e-13;
  Complex integral = 2.0 * integrate_gl(integrand, 0.0, cutoff, tol, opt);
  if (hahn_route)
    integral /= pochhammer(Complex(0.5, T), n) * pochhammer(Complex(0.5, -T), n);
  return integral;
}

}  // namespace

Complex c_n_chi(int n, double T, const ChiSpec& chi, double tol) {
  return c_n_core(n, T, chi, tol, false);
}

Complex c_n_chi_hahn(int n, double T, const ChiSpec& chi, double tol) {
  return c_n_core(n, T, chi, tol, true);
}

}  // namespace wmb
