#pragma once

// Growth and regularity conditions of a weight sequence, reported as
// statistics over a finite horizon.  Nothing here proves an asymptotic
// statement: a verdict is always "on the horizon", produced by pinned
// heuristics (documented at each site) from windowed statistics.
//
// Conditions covered, in the difference view delta_p = lambda_p - lambda_{p-1}:
//   (mg)     sup_p  sum_{l=p+1}^{2p} delta_l < inf      (moderate growth)
//   (beta1)  liminf sum_{l=p+1}^{Qp} delta_l > ln Q
//   (beta3)  liminf sum_{l=p+1}^{Qp} delta_l > 0
//   (gamma1) sup_j (mu_j / j) * sum_{k>=j} 1/mu_k < inf
//   (slc)    lambda_p - ln p non-decreasing             (M_p / p! log-convex)
//   (dc)     lambda_p <= p ln D for some D              (derivative closed)
//   (omega6) 2 omega(t) <= omega(Ht) + H for some H     (equivalent to (mg))
// plus the partial order M1 <= M2 given by sup_j (logM1_j - logM2_j)/j < inf.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lusky/weight_sequence.hpp"

namespace lusky {

enum class Verdict { HoldsOnHorizon, Fails, Inconclusive };

const char* verdict_name(Verdict v);

struct PropertyReport {
  std::string property;
  double statistic;
  int window_lo = 0;  // index range the statistic was taken over
  int window_hi = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> witness_index;
  std::optional<double> witness_value;
  double error_bar = 0.0;  // only (gamma1): discarded-tail bound
};

// normalized, log-convex, (slc), (dc).
std::vector<PropertyReport> structural_checks(const WeightSequence& ws);

// (mg), (beta1), (beta3), (gamma1).  Q is the ratio in the beta conditions;
// statistics are taken over the last `tail_fraction` of the valid index
// range, verdicts over the full range (see bounded_trend below).
std::vector<PropertyReport> asymptotic_stats(const WeightSequence& ws,
                                             int Q = 2,
                                             double tail_fraction = 0.5);

struct CompareReport {
  double stat_forward;   // max_j (logM1_j - logM2_j) / j
  double stat_backward;  // max_j (logM2_j - logM1_j) / j
  Verdict forward;       // M1 <= M2 on the horizon
  Verdict backward;      // M2 <= M1 on the horizon
  bool equivalent;       // both directions hold
};

CompareReport compare_sequences(const WeightSequence& m1,
                                const WeightSequence& m2);

// Scans H candidates in increasing order for 2*omega(e^x) <= omega(H e^x) + H
// at every sample; the first workable H is the statistic.  Throws
// HorizonError when x + ln H leaves the horizon.  Fails (with the nearest
// miss as witness) when no candidate works.
PropertyReport omega6_check(const WeightSequence& ws,
                            std::span<const double> h_candidates,
                            std::span<const double> x_samples);

// Shared verdict heuristic for "sup bounded": split the statistic sequence
// at 90%, compare the tail max against the head max with 1% slack (relative,
// floored at 1).  A new maximum in the last decile reads as growth -> Fails.
struct TrendResult {
  Verdict verdict;
  int witness_index;     // position of the overall max, in caller indexing
  double witness_value;  // the overall max
};

TrendResult bounded_trend(std::span<const double> stats, int first_index,
                          double slack_frac = 0.01);

}  // namespace lusky
