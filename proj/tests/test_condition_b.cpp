// A/B quotient bounds, both evaluation paths, the chain search and its
// verifier, necessary conditions, the spike construction, and the stretch
// invariance of certificates.

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lusky/condition_b.hpp"
#include "lusky/log_domain.hpp"

using namespace lusky;

namespace {

const double kLn2 = std::log(2.0);

WeightSequence mu_2pow(int horizon) {
  std::vector<double> lambda;
  for (int p = 1; p <= horizon; ++p) lambda.push_back(p * kLn2);
  return WeightSequence::from_log_quotients("mu-2pow", std::move(lambda));
}

WeightSequence random_lc(std::mt19937_64& rng, int horizon) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> lambda;
  double acc = u(rng);
  for (int p = 0; p < horizon; ++p) {
    lambda.push_back(acc);
    acc += 0.5 * u(rng);
  }
  return WeightSequence::from_log_quotients("random-lc", std::move(lambda));
}

}  // namespace

TEST_CASE("log_ab: hand values") {
  const WeightSequence ws = mu_2pow(12);
  const LogAB r = log_ab(ws, 1, 3);
  // (l-k) lambda_4 - (lambda_2 + lambda_3) = (8 - 5) ln 2
  CHECK(r.log_a == doctest::Approx(3 * kLn2).epsilon(1e-14));
  CHECK(r.log_b == doctest::Approx(kLn2).epsilon(1e-14));

  const WeightSequence qg = make_family(FamilySpec::parse("qgevrey:2"), 32);
  const LogAB q = log_ab(qg, 3, 5);
  CHECK(q.log_a == doctest::Approx(6 * kLn2).epsilon(1e-14));
  CHECK(q.log_b == doctest::Approx(2 * kLn2).epsilon(1e-14));

  CHECK_THROWS_AS(log_ab(ws, 0, 3), Error);
  CHECK_THROWS_AS(log_ab(ws, 3, 3), Error);
  CHECK_THROWS_AS(log_ab(ws, 3, 12), Error);  // needs lambda_{l+1}

  const WeightSequence wig =
      WeightSequence::from_log_quotients("wiggle", {1.0, 0.5, 2.0, 2.5});
  CHECK_THROWS_AS(log_ab(wig, 1, 2), Error);
}

TEST_CASE("both evaluation paths agree, and the product identity holds") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightSequence ws = random_lc(rng, 900);
    const DeltaSeq d = to_deltas(ws);
    std::uniform_int_distribution<int> pick(1, 898);
    for (int i = 0; i < 10; ++i) {
      int k = pick(rng), l = pick(rng);
      if (k == l) continue;
      if (k > l) std::swap(k, l);
      const LogAB a = log_ab(ws, k, l);
      const LogAB b = log_ab_delta(d, k, l);
      CHECK(approx_rel(a.log_a, b.log_a, 1e-9));
      CHECK(approx_rel(a.log_b, b.log_b, 1e-9));
      const double rhs = (l - k) * (ws.lambda(l + 1) - ws.lambda(k + 1));
      CHECK(approx_rel(a.log_a + a.log_b, rhs, 1e-9));
      CHECK(a.log_a >= -1e-12);  // log-convexity makes both non-negative
      CHECK(a.log_b >= -1e-12);
    }
  }
}

TEST_CASE("wide windows switch to the prefix path and stay consistent") {
  std::mt19937_64 rng(41);
  const WeightSequence ws = random_lc(rng, 2000);
  const DeltaSeq d = to_deltas(ws);
  const LogAB wide = log_ab(ws, 5, 1500);   // window >> 512
  const LogAB dual = log_ab_delta(d, 5, 1500);
  CHECK(approx_rel(wide.log_a, dual.log_a, 1e-9));
  CHECK(approx_rel(wide.log_b, dual.log_b, 1e-9));
  const double rhs = (1500 - 5) * (ws.lambda(1501) - ws.lambda(6));
  CHECK(approx_rel(wide.log_a + wide.log_b, rhs, 1e-9));
}

TEST_CASE("sequence_oracle is a plain view of log_ab") {
  const WeightSequence ws = mu_2pow(12);
  const AbOracle oracle = sequence_oracle(ws);
  const LogAB a = oracle(2, 5);
  const LogAB b = log_ab(ws, 2, 5);
  CHECK(a.log_a == b.log_a);
  CHECK(a.log_b == b.log_b);
}

TEST_CASE("search finds the gap-2 chain on the q-Gevrey window") {
  const WeightSequence ws = make_family(FamilySpec::parse("qgevrey:2"), 60);
  const SearchResult res =
      search_lusky(sequence_oracle(ws), ws.horizon(), 1.0, 10.0, 1, 64, ws.name());
  REQUIRE(res.ok());
  const LuskyCertificate& cert = *res.certificate;
  CHECK(cert.sequence == "qgevrey:2");
  CHECK(cert.a.front() == 1);
  CHECK(cert.max_gap() == 2);
  for (std::size_t j = 0; j + 1 < cert.a.size(); ++j)
    CHECK(cert.a[j + 1] - cert.a[j] == 2);
  for (const CertRow& row : cert.rows) {
    CHECK(row.log_a == doctest::Approx(6 * kLn2).epsilon(1e-12));
    CHECK(row.log_b == doctest::Approx(2 * kLn2).epsilon(1e-12));
  }
  const VerifyResult vr = verify_certificate(ws, cert);
  CHECK(vr.ok);
  CHECK(vr.max_gap == 2);
  CHECK(vr.gaps_bounded_like);

  CHECK_THROWS_AS(search_lusky(sequence_oracle(ws), 60, 0.5, 10.0, 1, 64, "x"),
                  Error);  // requires log b > ln 2
  CHECK_THROWS_AS(search_lusky(sequence_oracle(ws), 60, 1.0, 0.9, 1, 64, "x"),
                  Error);  // requires log K >= log b
}

TEST_CASE("search dead-ends on the fast q-alpha family with a full trace") {
  const WeightSequence ws = make_family(FamilySpec::parse("qalpha:2,3"), 500);
  const SearchResult res =
      search_lusky(sequence_oracle(ws), ws.horizon(), 1.0, 10.0, 1, 64, ws.name());
  REQUIRE_FALSE(res.ok());
  const FailureTrace& t = *res.failure;
  CHECK(t.stuck_index == 0);
  CHECK(t.stuck_at == 1);
  REQUIRE(t.candidates.size() == 63);  // gaps 2..64, all rejected
  CHECK(t.candidates.front().gap == 2);
  CHECK(t.candidates.front().violation == Violation::AHigh);
  // Every recorded violation is re-checkable through log_ab.
  for (const FailureCandidate& c : t.candidates) {
    if (c.violation == Violation::Horizon) {
      CHECK(std::isnan(c.log_a));
      continue;
    }
    const LogAB ab = log_ab(ws, 1, 1 + c.gap);
    CHECK(approx_rel(ab.log_a, c.log_a, 1e-12));
    CHECK(approx_rel(ab.log_b, c.log_b, 1e-12));
  }
}

TEST_CASE("verify rejects tampered windows and foreign sequences") {
  const WeightSequence ws = make_family(FamilySpec::parse("qgevrey:2"), 60);
  const SearchResult res =
      search_lusky(sequence_oracle(ws), 60, 1.0, 10.0, 1, 64, ws.name());
  REQUIRE(res.ok());

  LuskyCertificate narrow = *res.certificate;
  narrow.log_k_bound = 4.0;  // rows recompute to 6 ln 2 ~ 4.16 > 4
  const VerifyResult bad = verify_certificate(ws, narrow);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_bad_row == 0);
  CHECK(bad.recomputed[0].log_a == doctest::Approx(6 * kLn2).epsilon(1e-12));

  LuskyCertificate foreign = *res.certificate;
  foreign.sequence = "someone-else";
  CHECK_THROWS_AS(verify_certificate(ws, foreign), Error);

  LuskyCertificate broken = *res.certificate;
  broken.a[1] = broken.a[0];  // chain must increase strictly
  CHECK_THROWS_AS(verify_certificate(ws, broken), Error);

  LuskyCertificate malformed = *res.certificate;
  malformed.rows.pop_back();
  CHECK_THROWS_AS(verify_certificate(ws, malformed), Error);
}

TEST_CASE("necessary conditions on the chain alone") {
  const std::vector<int> bad{1, 3, 4, 9};
  const NecessaryReport nr = necessary_check(bad);
  CHECK(nr.min_gap == 1);
  CHECK_FALSE(nr.gaps_ok);
  REQUIRE(nr.bad_gap_index.has_value());
  CHECK(*nr.bad_gap_index == 1);

  std::vector<int> uniform{1};
  for (int j = 0; j < 100; ++j) uniform.push_back(uniform.back() + 2);
  const NecessaryReport ok = necessary_check(uniform);
  CHECK(ok.gaps_ok);
  CHECK(ok.min_gap == 2);
  CHECK(ok.divergent_like);  // sum of 1/2 diverges linearly
  CHECK(ok.partial_sums.size() == 100);

  std::vector<int> doubling;
  for (int k = 1; k <= 14; ++k) doubling.push_back(1 << k);
  const NecessaryReport conv = necessary_check(doubling);
  CHECK(conv.gaps_ok);
  CHECK_FALSE(conv.divergent_like);  // sum of 2^{-k} converges
}

TEST_CASE("spike construction realizes a prescribed chain exactly") {
  std::vector<int> a{1};
  for (int j = 1; j <= 30; ++j) a.push_back(a.back() + j + 2);
  const double C = 3.0;
  const WeightSequence ws = build_from_lusky(a, C, a.back() + 1);
  CHECK(ws.name().rfind("spikes", 0) == 0);
  CHECK(ws.normalized());
  CHECK(ws.log_convex());
  LuskyCertificate cert;
  cert.sequence = ws.name();
  cert.a = a;
  cert.log_b_bound = 1.0;
  cert.log_k_bound = C;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    const LogAB ab = log_ab(ws, a[j], a[j + 1]);
    CHECK(ab.log_a == doctest::Approx(C).epsilon(1e-12));
    const int g = a[j + 1] - a[j];
    CHECK(ab.log_b == doctest::Approx((g - 1) * C / (g + 1)).epsilon(1e-11));
    cert.rows.push_back({ab.log_a, ab.log_b});
  }
  // Rows sit exactly on both bounds; the verifier's relative slack must
  // accept that even though it recomputes through floating arithmetic.
  const VerifyResult vr = verify_certificate(ws, cert);
  CHECK(vr.ok);

  CHECK_THROWS_AS(build_from_lusky(a, 2.0, a.back() + 1), Error);  // C >= 3
  CHECK_THROWS_AS(build_from_lusky(a, C, a.back()), Error);  // horizon short
  const std::vector<int> gap1{1, 2};
  CHECK_THROWS_AS(build_from_lusky(gap1, C, 10), Error);
}

TEST_CASE("uniform-delta two-scale sufficiency") {
  CHECK(uniform_delta_sufficient(1.0, 1.0, 2.0, 2.0));
  // Second scale far above the first: the window collapses.
  CHECK_FALSE(uniform_delta_sufficient(0.1, 50.0, 2.0, 8.0));
  CHECK_THROWS_AS(uniform_delta_sufficient(-1.0, 1.0, 2.0, 2.0), Error);
  CHECK_THROWS_AS(uniform_delta_sufficient(1.0, 1.0, 1.0, 2.0), Error);
}

TEST_CASE("certificates survive stretching") {
  const WeightSequence ws = make_family(FamilySpec::parse("qgevrey:2"), 80);
  const SearchResult res =
      search_lusky(sequence_oracle(ws), 80, 1.0, 10.0, 1, 64, ws.name());
  REQUIRE(res.ok());
  CHECK(stretch_check(ws, 2, *res.certificate));
  CHECK(stretch_check(ws, 3, *res.certificate));
}
