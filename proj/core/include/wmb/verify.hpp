#pragma once

// Both-sides evaluation of the identity catalog. Each verifier computes its
// left side through the quadrature engine and its right side through closed
// gamma/Wilson forms on a disjoint code path, then records the deviation.

#include <string>
#include <utility>

#include "wmb/chi.hpp"
#include "wmb/gamma.hpp"
#include "wmb/hypergeom.hpp"

namespace wmb {

struct VerificationReport {
  std::string id;
  std::string inputs;
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tol = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;

  static VerificationReport make(std::string id, std::string inputs, Complex lhs,
                                 Complex rhs, double tol, double runtime_ms);

  // One-record serialization; runtime_ms is carried but not semantically
  // significant.
  std::string to_record() const;
  static VerificationReport parse_record(const std::string& line);
};

// The two contour identities relating gamma-quotient integrals to Wilson
// functions: returns the reports for the pair.
std::pair<VerificationReport, VerificationReport> verify_lemma_5_1(
    int n, Complex B, Complex S, const SpectralParams& sp, double tol);

// The nested double-integral identities; inner integrals are closures
// evaluated at each outer node.
std::pair<VerificationReport, VerificationReport> verify_lemma_5_2(
    double t, Complex S, const SpectralParams& sp, double tol);

// Kernel moment integral against its closed 3F2 form.
VerificationReport verify_lemma_6_5(int n, double t, double t0, double tol);

// Binomial gamma-quotient sum against Gamma(N-s)/Gamma(-s).
VerificationReport verify_claim_6_6(int N, Complex a, Complex s);

// Weighted 3F2 series against its Barnes integral form.
VerificationReport verify_lemma_6_3(const HahnParams& p, Complex gamma_,
                                    Complex A, Complex B, double x, int n_trunc,
                                    double tol);

// Whittaker pair Mellin transform against the Barnes form (n = 0).
VerificationReport verify_whittaker_mellin(Complex S, int m, int sign,
                                           const SpectralParams& sp, double tol);

// Partial-fraction sine identity; residual against 1.
VerificationReport verify_trig_5_16(Complex S, int n, double t2);

// Closed-form residue constant check.
VerificationReport verify_residue_4_28(double t1);

}  // namespace wmb
