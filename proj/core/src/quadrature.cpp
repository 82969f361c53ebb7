#include "wmb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "wmb/concurrency.hpp"

namespace wmb {

namespace {

GaussRule compute_rule(int n) {
  GaussRule r;
  r.node.resize(n);
  r.weight.resize(n);
  const double eps = 1e-15;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < eps) break;
    }
    r.node[i] = -x;
    r.node[n - 1 - i] = x;
    r.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weight[n - 1 - i] = r.weight[i];
  }
  return r;
}

std::map<int, GaussRule> g_rules;
std::mutex g_rules_mutex;

}  // namespace

const GaussRule& gauss_legendre(int order) {
  std::lock_guard<std::mutex> lock(g_rules_mutex);
  auto it = g_rules.find(order);
  if (it == g_rules.end()) it = g_rules.emplace(order, compute_rule(order)).first;
  return it->second;
}

namespace {

struct LevelSum {
  std::complex<double> value;
  double abs_value;
};

LevelSum level_sum(const std::function<std::complex<double>(double)>& f,
                   double a, double b, int panels, const GaussRule& rule,
                   bool parallel) {
  const double h = (b - a) / panels;
  auto one_panel = [&](std::size_t p) {
    const double lo = a + h * static_cast<double>(p);
    std::complex<double> s = 0.0;
    double sa = 0.0;
    for (std::size_t j = 0; j < rule.node.size(); ++j) {
      const double x = lo + 0.5 * h * (rule.node[j] + 1.0);
      const std::complex<double> v = f(x);
      s += rule.weight[j] * v;
      sa += rule.weight[j] * std::abs(v);
    }
    return LevelSum{s * (0.5 * h), sa * (0.5 * h)};
  };
  std::vector<LevelSum> parts;
  if (parallel) {
    parts = parallel_map<LevelSum>(panels, one_panel);
  } else {
    parts.reserve(panels);
    for (int p = 0; p < panels; ++p) parts.push_back(one_panel(p));
  }
  LevelSum total{0.0, 0.0};
  for (const auto& ps : parts) {
    total.value += ps.value;
    total.abs_value += ps.abs_value;
  }
  return total;
}

}  // namespace

std::complex<double> integrate_gl(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, const QuadratureOptions& opt) {
  if (a == b) return 0.0;
  const GaussRule& rule = gauss_legendre(opt.order);
  int panels = std::max(1, opt.initial_panels);
  LevelSum prev = level_sum(f, a, b, panels, rule, opt.parallel);
  for (int level = 0; level < opt.max_refinements; ++level) {
    panels *= 2;
    const LevelSum cur = level_sum(f, a, b, panels, rule, opt.parallel);
    const double scale =
        std::max({std::abs(cur.value), 1e-8 * cur.abs_value, 1e-300});
    const double diff = std::abs(cur.value - prev.value);
    if (diff <= tol * scale || diff <= opt.abs_tol ||
        diff <= 2e-16 * cur.abs_value)
      return cur.value;
    prev = cur;
  }
  throw ConvergenceError("integrate_gl: refinement cap reached");
}

double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, double tol, const QuadratureOptions& opt) {
  return integrate_gl([&](double x) { return std::complex<double>(f(x), 0.0); },
                      a, b, tol, opt)
      .real();
}

}  // namespace wmb
