#pragma once

// Composite Gauss-Legendre quadrature with fixed panelization per
// refinement level. Deterministic: node layout depends only on the
// interval, the initial panel count, and the refinement level, and panel
// sums are reduced in panel order.

#include <complex>
#include <functional>
#include <vector>

#include "wmb/errors.hpp"

namespace wmb {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed once per order by Newton iteration and cached.
struct GaussRule {
  std::vector<double> node;
  std::vector<double> weight;
};
const GaussRule& gauss_legendre(int order);

struct QuadratureOptions {
  int order = 16;             // Gauss-Legendre points per panel
  int initial_panels = 8;     // panels at refinement level 0
  int max_refinements = 10;   // each level doubles the panel count
  double abs_tol = 0.0;       // absolute refinement-difference escape
  bool parallel = true;
};

// Integral of f over [a, b]; refines until two successive levels agree to
// tol relative (with a scale floor from the accumulated |f| integral).
std::complex<double> integrate_gl(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, const QuadratureOptions& opt = {});

double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, double tol, const QuadratureOptions& opt = {});

}  // namespace wmb
