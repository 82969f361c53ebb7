#pragma once

// The kernel transform: k_chi and its inversion (both the u-form and the
// R-form), plus the spectral coefficients C_{n,chi}(T) in their two
// equivalent shapes.

#include <iosfwd>
#include <vector>

#include "wmb/chi.hpp"
#include "wmb/gamma.hpp"
#include "wmb/hypergeom.hpp"

namespace wmb {

// k_chi(u) = (1/pi) (u+1)^{1/4}
//            int_0^inf F(3/4-it, 3/4+it, 1, -u)
//                      |Gamma(1/4+it) Gamma(3/4+it) / Gamma(2it)|^2 chi(t) dt.
double k_chi(double u, const ChiSpec& chi, double tol = 1e-9);

// Tabulated kernel on a u-grid: u = 0 followed by log-spaced nodes. The
// builder extends the grid until the fitted power tail is below tol/10.
struct KernelTable {
  std::vector<double> u;
  std::vector<double> k;
  ChiSpec chi;
  double tol = 1e-6;

  static KernelTable build(const ChiSpec& chi, double tol = 1e-6,
                           double u_min = 1e-3, double u_max_initial = 200.0,
                           int initial_nodes = 241);

  void save(std::ostream& os) const;
  static KernelTable load(std::istream& is);
};

// (1/2) int_0^inf (u+1)^{1/4} F(3/4-it, 3/4+it, 1, -u) k(u) du; reproduces
// chi(t) within the table tolerance. Cubic interpolation of k between grid
// points; the truncated tail is bounded by a fitted power law.
double inverse_check(double t, const KernelTable& table);

// The R-form int_0^1 k(R^2/(1-R^2)) (1-R^2)^{s-2} F(s+1/4, s-1/4, 1, R^2)
// R dR with s = 1/2 + it; equal to inverse_check under u = R^2/(1-R^2).
double l_k(double t, const KernelTable& table);

// C_{n,chi}(T) = int |Gamma(1/4+it)/Gamma(2it)|^2 Gamma(1/4+-it+-iT) chi(t)
//                * 3F2(-n, 1/4+it, 1/4-it; 1/2+iT, 1/2-iT; 1) dt.
Complex c_n_chi(int n, double T, const ChiSpec& chi, double tol = 1e-10);

// Same coefficient through the continuous dual Hahn weight and polynomial.
Complex c_n_chi_hahn(int n, double T, const ChiSpec& chi, double tol = 1e-10);

}  // namespace wmb
