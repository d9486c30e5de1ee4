// Associated weight function omega, its dual h and the counting function,
// stretched sequences, weight grids, and the conjugate round trip.

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lusky/assoc_weight.hpp"
#include "lusky/log_domain.hpp"
#include "lusky/weight_sequence.hpp"

using namespace lusky;

namespace {

WeightSequence ramp() {
  return WeightSequence::from_log_quotients("ramp", {1.0, 2.0, 3.0, 4.0});
}

// Definition-level evaluation: omega(e^x) = max_{0<=p<=P} (p x - logM_p).
double omega_brute(const WeightSequence& ws, double x) {
  double best = kNegInf;
  for (int p = 0; p <= ws.horizon(); ++p)
    best = std::max(best, p * x - ws.log_m(p));
  return best;
}

}  // namespace

TEST_CASE("omega: hand values and the horizon guard") {
  const WeightSequence ws = ramp();
  CHECK(omega_log(ws, 3.5) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(omega_log(ws, -0.5) == 0.0);           // flat part
  CHECK(omega_log(ws, 4.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(omega(ws, std::exp(3.5)) == doctest::Approx(4.5).epsilon(1e-12));
  CHECK_THROWS_AS(omega_log(ws, 4.0 + 1e-9), HorizonError);

  const WeightSequence wig =
      WeightSequence::from_log_quotients("wiggle", {1.0, 0.5, 2.0});
  CHECK_THROWS_AS(omega_log(wig, 0.1), Error);  // not admissible
}

TEST_CASE("omega matches the definition on random admissible sequences") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> lambda;
    double acc = 0.2 * u(rng);
    for (int p = 0; p < 120; ++p) {
      lambda.push_back(acc);
      acc += 0.3 * u(rng);
    }
    const WeightSequence ws =
        WeightSequence::from_log_quotients("random", lambda);
    const double top = ws.lambda(ws.horizon());
    for (int i = 0; i < 25; ++i) {
      const double x = -0.5 + (top + 0.5) * u(rng);
      CHECK(approx_rel(omega_log(ws, x), omega_brute(ws, x), 1e-12));
    }
  }
}

TEST_CASE("omega is non-decreasing and convex in x") {
  const WeightSequence ws =
      make_family(FamilySpec::parse("qgevrey:2"), 40);
  const double top = ws.lambda(ws.horizon());
  std::vector<double> xs, ys;
  for (int i = 0; i <= 200; ++i) xs.push_back(-1.0 + (top + 1.0) * i / 200);
  for (double x : xs) ys.push_back(omega_log(ws, x));
  double prev_slope = kNegInf;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    CHECK(ys[i] >= ys[i - 1] - 1e-12);
    const double slope = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    CHECK(slope >= prev_slope - 1e-9);
    prev_slope = std::max(prev_slope, slope);
  }
}

TEST_CASE("log h is omega reflected through t -> 1/t") {
  const WeightSequence ws = ramp();
  CHECK(log_h(ws, -3.5) == doctest::Approx(-4.5).epsilon(1e-15));
  CHECK(log_h(ws, 0.5) == 0.0);   // 1/t below mu_1
  CHECK(log_h(ws, -0.5) == 0.0);  // x >= -lambda_1
  for (double x : {-4.0, -2.2, -1.0, 0.3})
    CHECK(log_h(ws, x) == -omega_log(ws, -x));
}

TEST_CASE("counting function and its behavior at the horizon") {
  const WeightSequence ws = ramp();
  CHECK(counting(ws, 2.5).count == 2);
  CHECK(counting(ws, 0.5).count == 0);
  CHECK_FALSE(counting(ws, 2.5).saturated);
  CHECK(counting(ws, 4.0).count == 4);
  CHECK(counting(ws, 4.0).saturated);
  CHECK(counting(ws, 100.0).saturated);  // beyond the data: flagged, not thrown
}

TEST_CASE("stretching: omega and the counting function transform exactly") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 25);
  const int r = 3;
  const WeightSequence stretched = interpolate(ws, r);

  // Sigma_{P^{M,r}}(e^x) = r * Sigma_M(e^{rx}) while unsaturated.
  CHECK(counting(stretched, 1.0).count == r * counting(ws, 3.0).count);
  CHECK(counting(ws, 3.0).count == 20);  // e^3 ~ 20.09: mu_p = p up to 20

  // omega_{P^{M,r}}(x) = omega_M(r x): between the coarse knots the
  // objective is linear in the inserted index, so nothing new wins.
  // Back the top sample off by an ulp's worth so r*x cannot round past
  // lambda_P and trip the horizon guard.
  const double top = ws.lambda(ws.horizon()) / r * (1 - 1e-12);
  for (int i = 0; i <= 40; ++i) {
    const double x = top * i / 40;
    const double lhs = omega_log(stretched, x);
    const double rhs = omega_log(ws, r * x);
    CHECK(approx_rel(lhs, rhs, 1e-12));
    // Convexity with omega(0) = 0 gives the one-sided bound r*omega <= lhs.
    CHECK(lhs >= r * omega_log(ws, x) - 1e-12);
  }
}

TEST_CASE("ramification report measures the unit ratio and says so") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 200);
  std::vector<double> xs;
  const double top = ws.lambda(ws.horizon()) / 2;
  for (int i = 0; i < 12; ++i) xs.push_back(top * (0.5 + 0.45 * i / 11));
  const RamificationReport rep = ramification_check(ws, 2, xs);
  CHECK(rep.consistent_with_unit);
  CHECK_FALSE(rep.consistent_with_r_squared);
  CHECK(rep.ratio_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.ratio_max == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.note.find("NOT observed") != std::string::npos);
  CHECK(rep.rows.size() == xs.size());

  // Samples where the stretched omega vanishes are rejected outright.
  const std::vector<double> flat{-5.0};
  CHECK_THROWS_AS(ramification_check(ws, 2, flat), Error);
}

TEST_CASE("weight grid construction guards and interpolation") {
  const std::vector<double> lt{0.0, 1.0, 2.0};
  const std::vector<double> lv{0.0, -1.0, -3.0};
  const WeightFunctionGrid w(lt, lv, true);
  CHECK(w.convex_checked());
  CHECK(w.value_at(0.5) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(w.value_at(1.5) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(w.value_at(-0.3) == 0.0);  // normalized: v == 1 left of the grid
  CHECK_THROWS_AS(w.value_at(2.1), Error);

  const WeightFunctionGrid unnorm(lt, lv, false);
  CHECK_THROWS_AS(unnorm.value_at(-0.3), Error);

  CHECK_THROWS_AS(WeightFunctionGrid({0.0}, {0.0}, true), Error);
  CHECK_THROWS_AS(WeightFunctionGrid({0.0, 0.0}, {0.0, 0.0}, true), Error);
  CHECK_THROWS_AS(WeightFunctionGrid({0.0, 1.0}, {0.0}, true), Error);

  // Concave -log v (here: logv convex upward bump) fails the check.
  const WeightFunctionGrid bump({0.0, 1.0, 2.0}, {0.0, -2.0, -3.0}, true);
  CHECK_FALSE(bump.convex_checked());
}

TEST_CASE("from_sequence samples log v = -omega") {
  const WeightSequence ws = ramp();
  const std::vector<double> xs{0.5, 2.5};
  const WeightFunctionGrid w = WeightFunctionGrid::from_sequence(ws, xs);
  CHECK(w.normalized());
  CHECK(w.logv()[0] == 0.0);
  CHECK(w.logv()[1] == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("conjugate of exp(-t) reproduces p ln p - p") {
  std::vector<double> lt, lv;
  for (int i = 0; i <= 6700; ++i) {
    const double x = -3.0 + 6.7 * i / 6700;
    lt.push_back(x);
    lv.push_back(-std::exp(x));
  }
  const WeightFunctionGrid w(lt, lv, false);
  REQUIRE(w.convex_checked());
  const WeightSequence conj = conjugate_sequence(w, 10);
  for (int p = 1; p <= 10; ++p) {
    const double expect = p * std::log(static_cast<double>(p)) - p;
    CHECK(conj.log_m(p) == doctest::Approx(expect).epsilon(1e-5));
  }
  CHECK(conj.log_convex());
}

TEST_CASE("conjugate escapes when the weight decays too slowly") {
  // log v = -a ln(1 + t) with a = 5.5: fine through p = 5, escapes at 6.
  std::vector<double> lt, lv;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -3.0 + 9.0 * i / 2000;
    lt.push_back(x);
    lv.push_back(-5.5 * std::log1p(std::exp(x)));
  }
  const WeightFunctionGrid w(lt, lv, false);
  REQUIRE(w.convex_checked());
  CHECK_NOTHROW(conjugate_sequence(w, 5));
  CHECK_THROWS_WITH_AS(conjugate_sequence(w, 6), doctest::Contains("p = 6"),
                       Error);
}

TEST_CASE("conjugate round trip reproduces the sequence within 1e-6") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 400);
  std::vector<double> xs;
  const double top = ws.lambda(ws.horizon());
  for (int i = 0; i <= 3000; ++i) xs.push_back(-1.0 + (top + 1.0) * i / 3000);
  const WeightFunctionGrid w = WeightFunctionGrid::from_sequence(ws, xs);
  const WeightSequence conj = conjugate_sequence(w, 30);
  for (int p = 1; p <= 30; ++p)
    CHECK(conj.log_m(p) == doctest::Approx(ws.log_m(p)).epsilon(1e-6));

  // Sandwich: on the reconstructed range, omega_{M^v} <= omega^v and
  // omega^v <= 2 omega_{M^v} + log A with log A ~ 0.
  std::vector<double> samples;
  const double edge = conj.lambda(conj.horizon()) - 0.02;
  for (double x : xs)
    if (x <= edge) samples.push_back(x);
  const SandwichResult res = sandwich_check(w, conj, samples, 1e-6);
  CHECK(res.max_violation <= 1e-6);
  CHECK(res.log_a <= 1e-6);

  // A deflated conjugate candidate overshoots omega^v and is rejected.
  const WeightSequence bad = power_scale(conj, 0.5);
  CHECK_THROWS_AS(sandwich_check(w, bad, samples, 1e-6), Error);
}

TEST_CASE("numeric A/B on a knot grid matches the sequence bounds") {
  const WeightSequence ws = make_family(FamilySpec::parse("qgevrey:2"), 12);
  std::vector<double> xs{-1.0, 0.0};
  for (int p = 1; p <= 12; ++p) xs.push_back(ws.lambda(p));
  const WeightFunctionGrid w = WeightFunctionGrid::from_sequence(ws, xs);

  const WeightAbResult r = weight_ab_numeric(w, 3, 5);
  CHECK(r.log_a == doctest::Approx(6 * std::log(2.0)).epsilon(1e-8));
  CHECK(r.log_b == doctest::Approx(2 * std::log(2.0)).epsilon(1e-8));
  // Plateau ties resolve to the canonical right end: t_k = mu_{k+1}.
  CHECK(r.log_t_k == doctest::Approx(ws.lambda(4)).epsilon(1e-9));
  CHECK(r.log_t_l == doctest::Approx(ws.lambda(6)).epsilon(1e-9));

  CHECK_THROWS_AS(weight_ab_numeric(w, 11, 12), Error);  // edge maximizer
  CHECK_THROWS_AS(weight_ab_numeric(w, 0, 3), Error);
  CHECK_THROWS_AS(weight_ab_numeric(w, 3, 3), Error);
}
