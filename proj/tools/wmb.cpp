// wmb: evaluate the library's special functions from the command line and
// run the identity verification suite.
//
//   wmb verify <id|all> [--t1 --t2 --tol-scale --out --threads --quick]
//   wmb eval <wilson|nkernel|hchi|kernel|theta|diag|offdiag> [flags]
//   wmb selftest
//
// Exit codes: 0 all requested checks passed, 1 verification failure,
// 2 configuration or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wmb/concurrency.hpp"
#include "wmb/harness.hpp"
#include "wmb/kernel.hpp"
#include "wmb/theta.hpp"
#include "wmb/wilson.hpp"

namespace {

int cmd_verify(const std::string& what, wmb::SuiteConfig cfg,
               const std::string& out_path, bool summary) {
  if (what != "all") cfg.filter = what;
  wmb::SuiteResult result = wmb::run_suite(cfg, std::cout);
  if (result.reports.empty() && result.skipped.empty()) {
    std::cerr << "no verification case matches '" << what << "'\n";
    return 2;
  }
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    wmb::write_reports(os, result.reports);
  }
  if (summary) wmb::print_summary_table(std::cout, result.reports);
  int passed = 0;
  for (const auto& r : result.reports) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << result.reports.size() << " checks passed";
  if (!result.skipped.empty())
    std::cout << ", " << result.skipped.size() << " skipped";
  std::cout << "\n";
  return result.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson / Mellin-Barnes special function toolkit"};
  app.require_subcommand(1);

  double t1 = 0.8, t2 = 1.3, tol = 1e-8, tol_scale = 1.0;
  int threads = 0;
  std::string s_text = "0.49", t_text = "0.4", out_path;
  bool quick = false, summary = false;

  app.add_option("--t1", t1, "first spectral parameter")->capture_default_str();
  app.add_option("--t2", t2, "second spectral parameter")->capture_default_str();
  app.add_option("--t", t_text, "kernel argument t");
  app.add_option("--S", s_text, "complex S, e.g. 0.49+0.7i");
  app.add_option("--tol", tol, "evaluation tolerance")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = auto)");
  app.add_option("--out", out_path, "report output file");

  auto* verify = app.add_subcommand("verify", "run identity verifications");
  verify->fallthrough();
  std::string verify_what = "all";
  verify->add_option("id", verify_what, "identity id substring or 'all'");
  verify->add_option("--tol-scale", tol_scale, "scale all tolerances");
  verify->add_flag("--quick", quick, "skip the long-running families");
  verify->add_flag("--summary", summary, "print the per-check table");

  auto* eval = app.add_subcommand("eval", "evaluate one object");
  eval->fallthrough();
  std::string eval_what;
  eval->add_option("what", eval_what,
                   "wilson|nkernel|hchi|kernel|theta|diag|offdiag|ztrunc")
      ->required();
  std::string a_text = "0.75+1.3i", b_text = "0.25+0.8i", c_text = "0.25-0.8i",
              d_text = "0.75-1.3i", lambda_text = "0.01i", x_text = "0.5",
              z_text = "0.3+0.7i", chi_text = "gaussian A=1";
  int n_order = 0;
  std::string coeff_path, lsample_path;
  eval->add_option("--a", a_text, "Wilson parameter a");
  eval->add_option("--b", b_text, "Wilson parameter b");
  eval->add_option("--c", c_text, "Wilson parameter c");
  eval->add_option("--d", d_text, "Wilson parameter d");
  eval->add_option("--lambda", lambda_text, "Wilson order");
  eval->add_option("--x", x_text, "Wilson argument");
  eval->add_option("--z", z_text, "upper half-plane point");
  eval->add_option("--n", n_order, "series/coefficient order");
  eval->add_option("--chi", chi_text, "test function, e.g. 'gaussian A=1'");
  eval->add_option("--coeffs", coeff_path, "coefficient table file");
  eval->add_option("--lsamples", lsample_path, "L-sample table file");

  auto* selftest = app.add_subcommand("selftest", "fast smoke checks");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) wmb::set_max_threads(threads);
    const wmb::SpectralParams sp(t1, t2);

    if (verify->parsed()) {
      wmb::SuiteConfig cfg;
      cfg.t1 = t1;
      cfg.t2 = t2;
      cfg.tol_scale = tol_scale;
      cfg.threads = threads;
      cfg.quick = quick;
      return cmd_verify(verify_what, cfg, out_path, summary);
    }

    if (selftest->parsed()) {
      wmb::SuiteConfig cfg;
      cfg.t1 = t1;
      cfg.t2 = t2;
      cfg.quick = true;
      return cmd_verify("all", cfg, out_path, false);
    }

    // eval subcommands
    std::cout.precision(15);
    const wmb::Complex S = wmb::parse_complex(s_text);
    const double t = wmb::parse_complex(t_text).real();
    const wmb::ChiSpec chi = wmb::ChiSpec::parse(chi_text);

    if (eval_what == "wilson") {
      wmb::WilsonParams p;
      p.a = wmb::parse_complex(a_text);
      p.b = wmb::parse_complex(b_text);
      p.c = wmb::parse_complex(c_text);
      p.d = wmb::parse_complex(d_text);
      p.lambda = wmb::parse_complex(lambda_text);
      p.x = wmb::parse_complex(x_text);
      std::cout << wmb::wilson_phi(p, tol) << "\n";
    } else if (eval_what == "nkernel") {
      std::cout << wmb::n_kernel(S, t, sp, tol) << "\n";
    } else if (eval_what == "hchi") {
      std::cout << wmb::h_chi(S, chi, sp, tol) << "\n";
    } else if (eval_what == "kernel") {
      const wmb::KernelTable table = wmb::KernelTable::build(chi, tol);
      if (out_path.empty()) {
        table.save(std::cout);
      } else {
        std::ofstream os(out_path);
        if (!os) throw wmb::ConfigError("cannot write " + out_path);
        table.save(os);
        std::cout << "kernel table with " << table.u.size() << " nodes -> "
                  << out_path << "\n";
      }
    } else if (eval_what == "theta") {
      const wmb::Complex z = wmb::parse_complex(z_text);
      const wmb::UpperHalfPoint p(z.real(), z.imag());
      if (n_order == 0)
        std::cout << wmb::b0(p) << "\n";
      else
        std::cout << wmb::b_n(p, n_order) << "\n";
    } else if (eval_what == "diag") {
      std::cout << wmb::eval_diagonal_term(chi, sp, tol) << "\n";
    } else if (eval_what == "offdiag") {
      if (lsample_path.empty())
        throw wmb::ConfigError("offdiag needs --lsamples FILE");
      const auto table = wmb::LSampleTable::load_file(lsample_path);
      const auto r = wmb::eval_offdiag_term(chi, sp, table, tol);
      std::cout << r.value << "  (truncation bound " << r.tail_bound << ")\n";
    } else if (eval_what == "ztrunc") {
      if (coeff_path.empty()) throw wmb::ConfigError("ztrunc needs --coeffs FILE");
      const auto table = wmb::CoefficientTable::load_file(coeff_path);
      const auto r = wmb::z_truncated(S, table);
      std::cout << r.value << "  (tail bound " << r.tail_bound << ")\n";
    } else {
      throw wmb::ConfigError("unknown eval target: " + eval_what);
    }
    return 0;
  } catch (const wmb::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const wmb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
