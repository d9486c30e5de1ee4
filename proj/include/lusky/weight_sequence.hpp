#pragma once

// =====================================================================
//  Weight sequences M = (M_p), stored in the log domain
// =====================================================================
//
//  A weight sequence is determined by its quotients mu_p = M_p / M_{p-1}.
//  We store lambda_p = log mu_p (nats) for p = 1..P on a finite horizon P,
//  together with the compensated prefix sums logM_p = sum_{i<=p} lambda_i
//  (logM_0 = 0, i.e. M_0 = 1).  By convention mu_0 := 1 and lambda_0 := 0.
//
//  The class never exponentiates: M_p for interesting examples (q-Gevrey,
//  block steps) overflows double almost immediately, while lambda_p stays
//  tame.  Flags are derived, not asserted:
//
//    normalized : lambda_1 >= 0            (M_0 = 1 <= M_1)
//    log_convex : lambda non-decreasing    (quotients non-decreasing)
//
//  Differences delta_p = lambda_p - lambda_{p-1} form the DeltaSeq view;
//  delta_p >= 0 for all p is exactly log-convexity, and several growth
//  conditions and the A/B quotient bounds have clean expressions in delta.
// =====================================================================

#include <span>
#include <string>
#include <vector>

#include "lusky/errors.hpp"

namespace lusky {

// Difference view: delta[p-1] holds delta_p = lambda_p - lambda_{p-1},
// p = 1..P (lambda_0 = 0, so delta_1 = lambda_1).
struct DeltaSeq {
  std::vector<double> delta;

  int horizon() const { return static_cast<int>(delta.size()); }
  bool non_negative() const;
};

class WeightSequence {
 public:
  // lambda[p-1] holds lambda_p, p = 1..P.  Every entry must be finite;
  // the index of the first offending entry is reported otherwise.
  static WeightSequence from_log_quotients(std::string name,
                                           std::vector<double> lambda);

  const std::string& name() const { return name_; }
  int horizon() const { return static_cast<int>(lambda_.size()); }

  // lambda_p, valid for p in [0, P]; lambda_0 == 0 by convention.
  double lambda(int p) const;
  // logM_p, valid for p in [0, P]; logM_0 == 0.
  double log_m(int p) const;

  std::span<const double> lambdas() const { return lambda_; }
  std::span<const double> log_ms() const { return log_m_; }  // size P + 1

  bool normalized() const { return normalized_; }
  bool log_convex() const { return log_convex_; }

  // Throws unless both flags hold; `who` names the caller in the message.
  void require_admissible(const char* who) const;

 private:
  WeightSequence() = default;

  std::string name_;
  std::vector<double> lambda_;  // size P
  std::vector<double> log_m_;   // size P + 1, compensated prefix sums
  bool normalized_ = false;
  bool log_convex_ = false;
};

// ---------------------------------------------------------------------
// Difference-view conversions.  from_deltas(to_deltas(ws)) reproduces the
// lambda array exactly (the round trip is sum-of-differences in order).
// ---------------------------------------------------------------------
DeltaSeq to_deltas(const WeightSequence& ws);
WeightSequence from_deltas(std::string name, const DeltaSeq& d);

// ---------------------------------------------------------------------
// Pointwise transforms
// ---------------------------------------------------------------------

// M^s for s > 0: lambda_p -> s * lambda_p.  Rejects s <= 0 (the power of a
// weight sequence is only a weight sequence for positive exponents).
WeightSequence power_scale(const WeightSequence& ws, double s);

enum class CombineMode { Product, Quotient };

// Pointwise product (lambda1 + lambda2) or quotient (lambda1 - lambda2) of
// two sequences on a common horizon (the shorter of the two).  Quotients
// need not stay log-convex; flags are recomputed from scratch.
WeightSequence combine(const WeightSequence& a, const WeightSequence& b,
                       CombineMode mode);

// r-interpolating sequence on horizon r*P: each quotient is split into r
// equal log-steps, lambda'_{r*k + j} = lambda_{k+1} / r for j = 1..r.
// Consequently logM'_{r*j} = logM_j for all j <= P.  Guards r >= 1 and
// r*P <= max_horizon.
WeightSequence interpolate(const WeightSequence& ws, int r,
                           long long max_horizon = 10'000'000);

// ---------------------------------------------------------------------
// Built-in families
// ---------------------------------------------------------------------
//
//   gevrey:s            lambda_p = s * ln p                  (M_p = p!^s)
//   harmonic:s          lambda_p = s * (1 + 1/2 + ... + 1/p)
//   qgevrey:q           lambda_p = (2p - 1) * ln q           (M_p = q^{p^2})
//   qalpha:q,a          lambda_p = (p^a - (p-1)^a) * ln q    (M_p = q^{p^a})
//   blockgeom:Q,D       steps on blocks b_1 = 1, b_{j+1} = Q b_j with
//                       level c_j = D^{b_j}  (lambda_p = b_j ln D on block j)
//   blockdyadic:Q       lambda_p = i * ln Q on p in [2^i, 2^{i+1})
//
// Parameter ranges: s > 0, q > 1, a > 2, Q >= 2 integer, D > 1.
struct FamilySpec {
  enum class Kind {
    Gevrey,
    HarmonicGevrey,
    QGevrey,
    QAlphaGevrey,
    BlockGeometric,
    BlockDyadic,
  };
  Kind kind{};
  double s = 0;      // Gevrey / HarmonicGevrey exponent
  double q = 0;      // QGevrey / QAlphaGevrey / BlockDyadic base
  double alpha = 0;  // QAlphaGevrey exponent
  long long Q = 0;   // BlockGeometric block-length ratio
  double D = 0;      // BlockGeometric level base

  // Parses the colon spellings listed above, e.g. "qalpha:2,3".
  static FamilySpec parse(const std::string& text);
  std::string display() const;
};

WeightSequence make_family(const FamilySpec& spec, int horizon);

// Generic step sequence: lambda_p = logc[j] for b[j] <= p < b[j+1] (within
// the horizon; the last level extends to P).  Requires b strictly
// increasing starting at 1, logc strictly increasing, and a horizon that
// contains at least the first full block.
WeightSequence block_steps(std::string name, std::span<const long long> b,
                           std::span<const double> logc, int horizon);

}  // namespace lusky
