#include <doctest.h>

#include <cmath>

#include "wmb/verify.hpp"

using wmb::Complex;
using wmb::SpectralParams;
using wmb::VerificationReport;

TEST_CASE("report construction and serialization") {
  const VerificationReport r = VerificationReport::make(
      "demo", "n=1 t=0.5", Complex(2.0, 0.1), Complex(2.0, 0.1000001), 1e-5,
      12.5);
  CHECK(r.passed);
  CHECK(r.rel_dev < 1e-6);

  const std::string line = r.to_record();
  const VerificationReport back = VerificationReport::parse_record(line);
  CHECK(back.id == r.id);
  CHECK(back.inputs == r.inputs);
  CHECK(back.lhs == r.lhs);
  CHECK(back.rhs == r.rhs);
  CHECK(back.tol == r.tol);
  CHECK(back.passed == r.passed);

  // Small-magnitude sides switch to the absolute test.
  const VerificationReport tiny = VerificationReport::make(
      "demo2", "", Complex(1e-9, 0.0), Complex(2e-9, 0.0), 1e-6, 0.0);
  CHECK(tiny.passed);
  CHECK_THROWS_AS(VerificationReport::parse_record("id='x' junk"),
                  wmb::ConfigError);
}

TEST_CASE("binomial gamma-quotient sum") {
  // N = 0 and N = 1 close in trivial forms.
  const VerificationReport r0 = wmb::verify_claim_6_6(0, Complex(1.2, 0.7), 0.9);
  CHECK(r0.passed);
  CHECK(std::abs(r0.lhs - 1.0) < 1e-14);
  const Complex s(-0.4, 1.9);
  const VerificationReport r1 = wmb::verify_claim_6_6(1, Complex(1.2, 0.7), s);
  CHECK(r1.passed);
  CHECK(std::abs(r1.rhs - (-s)) < 1e-14);

  const VerificationReport r6 =
      wmb::verify_claim_6_6(6, Complex(1.2, 0.7), Complex(-0.4, 1.9));
  CHECK(r6.passed);
  CHECK(r6.rel_dev <= 1e-12);
}

TEST_CASE("sine identity and residue constants") {
  const VerificationReport at0 = wmb::verify_trig_5_16(0.0, 2, 1.3);
  CHECK(at0.passed);
  const VerificationReport gen =
      wmb::verify_trig_5_16(Complex(0.49, 0.7), 2, 1.3);
  CHECK(gen.passed);
  const VerificationReport neg =
      wmb::verify_trig_5_16(Complex(0.49, 0.7), 2, -1.3);
  CHECK(neg.passed);

  CHECK(wmb::verify_residue_4_28(0.8).passed);
  CHECK(wmb::verify_residue_4_28(2.5).passed);
}

TEST_CASE("kernel moment integral against the closed 3F2 form") {
  const VerificationReport r = wmb::verify_lemma_6_5(0, 0.7, 1.1, 1e-7);
  CHECK(r.passed);
  const VerificationReport r3 = wmb::verify_lemma_6_5(3, 0.3, 0.9, 1e-6);
  CHECK(r3.passed);
}

TEST_CASE("weighted 3F2 series equals its Barnes integral") {
  const wmb::HahnParams p(0.25, Complex(0.25, -0.8), Complex(0.25, 0.8));
  const VerificationReport r =
      wmb::verify_lemma_6_3(p, 0.9, 1.1, 7.0, 0.6, 80, 1e-6);
  CHECK(r.passed);
  // Too-short truncation is reported, not silently accepted.
  CHECK_THROWS_AS(wmb::verify_lemma_6_3(p, 0.9, 1.1, 7.0, 0.6, 4, 1e-8),
                  wmb::InsufficientInputError);
}

TEST_CASE("contour identity, straight-line case") {
  const SpectralParams sp(0.8, 1.3);
  auto [r1, r2] = wmb::verify_lemma_5_1(0, 0.745, Complex(0.49, 0.7), sp, 1e-6);
  CHECK(r1.passed);
  CHECK(r2.passed);
  // The first side is invariant under t1 -> -t1 (it enters in +- pairs).
  const SpectralParams flipped(-0.8, 1.3);
  auto [f1, f2] = wmb::verify_lemma_5_1(0, 0.745, Complex(0.49, 0.7), flipped,
                                        1e-6);
  CHECK(std::abs(f1.lhs - r1.lhs) < 1e-6 * std::abs(r1.lhs));
  CHECK(f2.passed);
}

TEST_CASE("pair Mellin identity at moderate S") {
  const SpectralParams sp(0.8, 1.3);
  const VerificationReport r =
      wmb::verify_whittaker_mellin(Complex(1.2, 0.0), 1, +1, sp, 1e-6);
  CHECK(r.passed);
}

TEST_CASE("verifications are deterministic") {
  const VerificationReport a = wmb::verify_lemma_6_5(1, 0.7, 0.9, 1e-6);
  const VerificationReport b = wmb::verify_lemma_6_5(1, 0.7, 0.9, 1e-6);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.rel_dev == b.rel_dev);
}

TEST_CASE("tightening the tolerance tightens a nested identity") {
  // Convergence evidence on the nested pair-Mellin identity: a 10x tol
  // drop shrinks the deviation by at least 3x unless it already sits at
  // the accuracy floor.
  const SpectralParams sp(0.8, 1.3);
  const VerificationReport loose =
      wmb::verify_whittaker_mellin(Complex(1.2, 0.0), 1, +1, sp, 1e-3);
  const VerificationReport tight =
      wmb::verify_whittaker_mellin(Complex(1.2, 0.0), 1, +1, sp, 1e-4);
  CHECK((tight.rel_dev <= loose.rel_dev / 3.0 || tight.rel_dev <= 1e-8));
}
