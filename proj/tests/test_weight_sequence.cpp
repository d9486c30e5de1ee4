// Weight sequences: construction, flags, the difference view, pointwise
// transforms, interpolation, and the built-in families.

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lusky/weight_sequence.hpp"

using namespace lusky;

namespace {
const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);
}  // namespace

TEST_CASE("construction: prefix sums, conventions, and flags") {
  const WeightSequence ws =
      WeightSequence::from_log_quotients("ramp", {1.0, 2.0, 3.0});
  CHECK(ws.horizon() == 3);
  CHECK(ws.lambda(0) == 0.0);  // mu_0 := 1
  CHECK(ws.lambda(2) == 2.0);
  CHECK(ws.log_m(0) == 0.0);
  CHECK(ws.log_m(3) == 6.0);
  CHECK(ws.normalized());
  CHECK(ws.log_convex());
  CHECK_NOTHROW(ws.require_admissible("test"));

  CHECK_THROWS_AS(ws.lambda(4), HorizonError);
  CHECK_THROWS_AS(ws.log_m(-1), HorizonError);

  const WeightSequence neg =
      WeightSequence::from_log_quotients("neg", {-0.5, 0.0, 1.0});
  CHECK_FALSE(neg.normalized());
  CHECK(neg.log_convex());
  CHECK_THROWS_AS(neg.require_admissible("test"), Error);

  const WeightSequence wig =
      WeightSequence::from_log_quotients("wiggle", {1.0, 0.5, 2.0});
  CHECK_FALSE(wig.log_convex());

  CHECK_THROWS_AS(WeightSequence::from_log_quotients("empty", {}), Error);
  CHECK_THROWS_WITH_AS(
      WeightSequence::from_log_quotients("bad", {1.0, std::nan(""), 2.0}),
      doctest::Contains("index 2"), Error);
}

TEST_CASE("delta view round-trips the lambda array exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> lambda;
  double acc = 0.0;
  for (int p = 0; p < 300; ++p) {
    acc += u(rng);
    lambda.push_back(acc);
  }
  const WeightSequence ws =
      WeightSequence::from_log_quotients("random", lambda);
  const DeltaSeq d = to_deltas(ws);
  CHECK(d.non_negative());
  const WeightSequence back = from_deltas("random", d);
  REQUIRE(back.horizon() == ws.horizon());
  for (int p = 1; p <= ws.horizon(); ++p)
    CHECK(back.lambda(p) == ws.lambda(p));  // sum-of-differences is exact
}

TEST_CASE("power_scale and combine") {
  const WeightSequence ws =
      WeightSequence::from_log_quotients("ramp", {1.0, 2.0, 3.0});
  const WeightSequence sq = power_scale(ws, 2.0);
  CHECK(sq.lambda(3) == 6.0);
  CHECK_THROWS_AS(power_scale(ws, 0.0), Error);
  CHECK_THROWS_AS(power_scale(ws, -1.0), Error);

  const WeightSequence other =
      WeightSequence::from_log_quotients("short", {0.5, 0.5});
  const WeightSequence prod = combine(ws, other, CombineMode::Product);
  CHECK(prod.horizon() == 2);  // common horizon
  CHECK(prod.lambda(2) == 2.5);
  const WeightSequence quot = combine(ws, other, CombineMode::Quotient);
  CHECK(quot.lambda(1) == 0.5);
  CHECK(quot.lambda(2) == 1.5);
}

TEST_CASE("interpolate splits each quotient into r equal log-steps") {
  const WeightSequence ws =
      WeightSequence::from_log_quotients("pair", {1.0, 2.0});
  const WeightSequence r2 = interpolate(ws, 2);
  REQUIRE(r2.horizon() == 4);
  CHECK(r2.lambda(1) == 0.5);
  CHECK(r2.lambda(2) == 0.5);
  CHECK(r2.lambda(3) == 1.0);
  CHECK(r2.lambda(4) == 1.0);
  // logM matches on the coarse grid: logM'_{r j} = logM_j.
  for (int j = 0; j <= 2; ++j)
    CHECK(r2.log_m(2 * j) == doctest::Approx(ws.log_m(j)).epsilon(1e-15));

  const WeightSequence r1 = interpolate(ws, 1);
  CHECK(r1.lambda(2) == ws.lambda(2));

  CHECK_THROWS_AS(interpolate(ws, 0), Error);
  CHECK_THROWS_AS(interpolate(ws, 3, /*max_horizon=*/5), Error);
}

TEST_CASE("built-in families: hand values") {
  const WeightSequence gev = make_family(FamilySpec::parse("gevrey:1"), 10);
  CHECK(gev.lambda(4) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(gev.log_m(4) == doctest::Approx(std::log(24.0)).epsilon(1e-14));

  const WeightSequence har = make_family(FamilySpec::parse("harmonic:1"), 10);
  CHECK(har.lambda(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));

  const WeightSequence qg = make_family(FamilySpec::parse("qgevrey:2"), 10);
  CHECK(qg.lambda(5) == doctest::Approx(9 * kLn2).epsilon(1e-15));
  CHECK(qg.log_m(3) == doctest::Approx(9 * kLn2).epsilon(1e-14));  // q^{p^2}

  const WeightSequence qa = make_family(FamilySpec::parse("qalpha:2,3"), 10);
  CHECK(qa.lambda(2) == doctest::Approx(7 * kLn2).epsilon(1e-15));
  CHECK(qa.log_m(2) == doctest::Approx(8 * kLn2).epsilon(1e-14));  // q^{p^3}

  const WeightSequence bg = make_family(FamilySpec::parse("blockgeom:2,2"), 20);
  CHECK(bg.lambda(1) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(bg.lambda(3) == doctest::Approx(2 * kLn2).epsilon(1e-15));
  CHECK(bg.lambda(7) == doctest::Approx(4 * kLn2).epsilon(1e-15));
  CHECK(bg.log_convex());

  const WeightSequence bd = make_family(FamilySpec::parse("blockdyadic:3"), 20);
  CHECK(bd.lambda(1) == 0.0);
  CHECK(bd.lambda(3) == doctest::Approx(kLn3).epsilon(1e-15));
  CHECK(bd.lambda(4) == doctest::Approx(2 * kLn3).epsilon(1e-15));
  CHECK(bd.normalized());
}

TEST_CASE("family parsing accepts the documented spellings only") {
  CHECK(FamilySpec::parse("gevrey:1.5").display() == "gevrey:1.5");
  CHECK(FamilySpec::parse("harmonic-gevrey:1").display() == "harmonic:1");
  CHECK(FamilySpec::parse("qalpha:2,3").display() == "qalpha:2,3");
  CHECK_THROWS_AS(FamilySpec::parse("qgevrey"), Error);       // missing param
  CHECK_THROWS_AS(FamilySpec::parse("bogus:1"), Error);       // unknown kind
  CHECK_THROWS_AS(FamilySpec::parse("qgevrey:1"), Error);     // q must be > 1
  CHECK_THROWS_AS(FamilySpec::parse("qalpha:2,2"), Error);    // a must be > 2
  CHECK_THROWS_AS(FamilySpec::parse("blockgeom:1,2"), Error); // Q must be >= 2
  CHECK_THROWS_AS(FamilySpec::parse("gevrey:0"), Error);      // s must be > 0
}

TEST_CASE("block_steps guards its block structure") {
  const std::vector<long long> b{1, 3, 6};
  const std::vector<double> logc{0.5, 1.0, 2.0};
  const WeightSequence ws = block_steps("steps", b, logc, 8);
  CHECK(ws.lambda(1) == 0.5);
  CHECK(ws.lambda(3) == 1.0);  // second block starts at p = 3
  CHECK(ws.lambda(7) == 2.0);  // last level extends to the horizon
  CHECK(ws.log_convex());

  const std::vector<long long> bad_start{2, 4};
  const std::vector<double> two_levels{0.5, 1.0};
  CHECK_THROWS_AS(block_steps("bad", bad_start, two_levels, 8), Error);
  const std::vector<long long> not_increasing{1, 1};
  CHECK_THROWS_AS(block_steps("bad", not_increasing, two_levels, 8), Error);
}
