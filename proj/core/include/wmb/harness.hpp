#pragma once

// Data ingestion (coefficient and L-sample tables), the main-theorem
// right-hand-side evaluators, and the verification suite runner behind the
// command line tool.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmb/chi.hpp"
#include "wmb/gamma.hpp"
#include "wmb/verify.hpp"

namespace wmb {

struct CoefficientRow {
  long m = 0;
  Complex rho1;
  Complex rho2;
};

// Fourier-coefficient products; rows `m rho1_re rho1_im rho2_re rho2_im`,
// '#' comments, m strictly increasing.
struct CoefficientTable {
  std::vector<CoefficientRow> rows;
  static CoefficientTable load(std::istream& is);
  static CoefficientTable load_file(const std::string& path);
};

struct LSample {
  double tau = 0.0;
  Complex value;
};

// Samples of zeta(2S) L(S) on S = 1/2 + i tau; rows `tau re im`.
struct LSampleTable {
  std::vector<LSample> samples;
  static LSampleTable load(std::istream& is);
  static LSampleTable load_file(const std::string& path);
};

struct ValueWithBound {
  Complex value;
  double tail_bound = 0.0;
};

// Truncated Dirichlet sum sum_m rho1(m) conj(rho2(m)) (4 pi m)^{1-S} with a
// fitted power-law tail bound. Requires Re S > 1.2.
ValueWithBound z_truncated(Complex S, const CoefficientTable& table);

// Diagonal term of the main identity:
//   3/(2 pi^{3/2}) / Gamma(1/2+-it1)
//     * int Gamma(1/4+-it) Gamma(1/4+-it+-it1) / Gamma(+-2it) chi(t) dt.
Complex eval_diagonal_term(const ChiSpec& chi, const SpectralParams& sp,
                           double tol = 1e-8);

// Off-diagonal term: -6/Gamma(1/2+-it2) (1/2 pi i) int zeta(2S) L(S)
//   (2 pi)^{-2S} Gamma(S) Gamma(1-S) H_chi(S) dS over the sample grid,
// trapezoid in tau, with a truncation bound estimate.
ValueWithBound eval_offdiag_term(const ChiSpec& chi, const SpectralParams& sp,
                                 const LSampleTable& samples, double tol = 1e-6);

struct SuiteConfig {
  double t1 = 0.8;
  double t2 = 1.3;
  std::string filter;       // substring match on case ids; empty = all
  double tol_scale = 1.0;   // multiplies every case tolerance
  int threads = 0;          // 0 = default
  bool quick = false;       // skip the long-running families
};

struct SuiteCase {
  std::string id;
  std::function<std::vector<VerificationReport>()> run;
  bool slow = false;
};

// The registered identity catalog for these spectral parameters.
std::vector<SuiteCase> suite_catalog(const SuiteConfig& cfg);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> skipped;  // contour planning failures, by case id
  bool all_passed = true;
};

// Runs every case matching the filter; reports in catalog order.
SuiteResult run_suite(const SuiteConfig& cfg, std::ostream& log);

// Serialization of report batches (one record per line, '#' header).
void write_reports(std::ostream& os, const std::vector<VerificationReport>& rs);
std::vector<VerificationReport> read_reports(std::istream& is);
void print_summary_table(std::ostream& os,
                         const std::vector<VerificationReport>& rs);

// "re", "re+imi" or "re-imi" complex literals used by CLI flags.
Complex parse_complex(const std::string& text);

}  // namespace wmb
