#pragma once

// Block statistics deciding membership of a Taylor-coefficient sequence in
// the solid hull / solid core of a weighted space.  Given a verified chain
// (a_j), radius parameter c > 0, and coefficient moduli (|b_l|) as logs,
// each block (a_j, a_{j+1}] contributes
//
//   prefactor_j = logM_{a_j+1} - (a_j + 1) * lambda_{a_j+1}
//   x_j         = lambda_{a_j+1} - ln c            (log of mu_{a_j+1} / c)
//   hull_j = prefactor_j + (1/2) * LSE_l { 2 (log|b_l| + l x_j) }
//   core_j = prefactor_j +         LSE_l {    log|b_l| + l x_j  }
//
// (l^2- vs l^1-style block sums of the same terms, so always
// 0 <= core_j - hull_j <= (1/2) log(block size)).  Hull membership is
// "sup_j hull_j < inf", core likewise; on a finite prefix the reports carry
// the sup and a fitted tail slope instead of a claim at infinity.

#include <span>
#include <vector>

#include "lusky/condition_b.hpp"
#include "lusky/weight_sequence.hpp"

namespace lusky {

// log |b_l| for l = 0..N; -inf encodes a zero coefficient.
struct CoefficientPrefix {
  std::vector<double> logabs;

  int max_index() const { return static_cast<int>(logabs.size()) - 1; }
};

// Which chain point anchors the block weight: the default uses mu_{a_j+1}
// (left end); the forward-shifted variant uses mu_{a_{j+1}+1} (right end),
// matching a chain whose first entries were dropped.
enum class PrefactorAnchor { Low, High };

struct BlockRow {
  int j;  // 1-based block number
  int a_lo;
  int a_hi;
  double log_hull;
  double log_core;
};

struct BlockReport {
  std::vector<BlockRow> rows;
  double sup_hull;
  double sup_core;
  double tail_slope_hull;  // least-squares slope over the last third
  double tail_slope_core;
  bool bounded_like_hull;  // |slope| below the threshold handed in
  bool bounded_like_core;
};

// Verifies the certificate against ws first (wrong sequence or broken rows
// throw).  Coefficients must cover the first two full blocks; blocks beyond
// the coefficient prefix are skipped.
BlockReport block_stats(const WeightSequence& ws, const LuskyCertificate& cert,
                        double c, const CoefficientPrefix& coeffs,
                        PrefactorAnchor anchor = PrefactorAnchor::Low,
                        double slope_threshold = 0.01);

// Direct grid evaluation of the core norm candidate:
//   sup over the r-grid of  LSE_j { log|b_j| + j ln r } - omega_M(c r),
// r passed as ln r values.  Needs ln r + ln c within the horizon.
double core_sup_grid(const WeightSequence& ws, double c,
                     const CoefficientPrefix& coeffs,
                     std::span<const double> log_r_grid);

// Largest coefficient against the weighted-class bound:
//   max_j ( log|b_j| + logM_j - j ln c );  -inf when all coefficients vanish.
double coeff_class_bound(const WeightSequence& ws, double c,
                         const CoefficientPrefix& coeffs);

// Shared by the disk variant: assemble a report from per-block inner terms.
BlockReport assemble_block_report(const WeightSequence& ws,
                                  const LuskyCertificate& cert,
                                  const CoefficientPrefix& coeffs,
                                  std::span<const double> block_log_radius,
                                  std::span<const double> block_prefactor,
                                  double slope_threshold);

}  // namespace lusky
