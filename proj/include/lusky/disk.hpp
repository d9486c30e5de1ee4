#pragma once

// =====================================================================
//  Disk-type weights  v(r) = exp(-omega_M(1/(1 - c r)))  on [0, 1/c)
// =====================================================================
//
//  The monomial maximum  max_r r^k v(r)  is attained at
//  s_{k,p,c} = k / (c (k + p))  while that point lies in the p-th radius
//  band; in k this means  p (mu_p - 1) < k <= p (mu_{p+1} - 1) =: k_p.
//  At the integer-anchored k_p the maximizer is the band edge
//
//    r_{k_p} = (1/c) (1 - 1/mu_{p+1}),   log v(r_{k_p}) = logM_{p+1} - (p+1) lambda_{p+1},
//
//  and for k between k_p and k_{p+1} it parks at that edge.  The A/B
//  quotient bounds at anchor pairs (p, q) have closed forms in
//  k_p = p (mu_{p+1} - 1) and L_x = ln(mu_x - 1):
//
//    log A_D = k_p (L_{p+1} - L_{q+1}) + (k_p + q) lambda_{q+1}
//              - (k_p + p + 1) lambda_{p+1} - sum_{i=p+2}^{q} lambda_i
//    log B_D = k_q (L_{q+1} - L_{p+1}) + (k_q + p + 1) lambda_{p+1}
//              + sum_{i=p+2}^{q} lambda_i - (k_q + q) lambda_{q+1}
//
//  both equal to the direct definition k (log r_p - log r_q) + log v(r_p)
//  - log v(r_q) with the matching anchor; the implementation keeps the two
//  evaluation paths separate so they can be cross-checked.
//
//  L_x is evaluated as lambda_x + log(1 - e^{-lambda_x}), which never
//  overflows; k_p itself uses expm1 and may round to +inf once
//  lambda_{p+1} > ~709, in which case the row carries an overflow note.
// =====================================================================

#include "lusky/condition_b.hpp"
#include "lusky/hull_core.hpp"
#include "lusky/weight_sequence.hpp"

namespace lusky {

struct DiskMaxRow {
  int p;
  double k_p;    // p * (mu_{p+1} - 1); +inf once lambda_{p+1} > ~709
  double log_r;  // ln r_{k_p} = ln(1 - 1/mu_{p+1}) - ln c
  double log_v;  // log v(r_{k_p})
  bool k_overflow;
};

// Anchor row for 1 <= p <= P-1.  Requires an admissible sequence with
// mu_{p+1} > 1 (a unit quotient makes the anchor radius degenerate).
DiskMaxRow disk_geometry(const WeightSequence& ws, double c, int p);

struct DiskMaximizer {
  int p;               // band index; 0 means the flat part (k <= mu_1 - 1)
  bool at_band_edge;   // k fell between k_{p-1} and k_p: maximizer parked
  double log_r;
};

// Maximizer of r^k v(r) for real k > 0 by scanning the bands in order.
// Throws HorizonError when k exceeds the last representable anchor.
DiskMaximizer disk_maximizer(const WeightSequence& ws, double c, double k);

// Closed forms above; `direct` recomputes from disk_geometry rows.
LogAB disk_log_ab(const WeightSequence& ws, int p, int q);
LogAB disk_log_ab_direct(const WeightSequence& ws, int p, int q);

// Oracle view for the generic chain search / verifier.
AbOracle disk_oracle(const WeightSequence& ws);

// Hull/core block statistics against the disk weight: identical block sums,
// but the block radius anchors at r_{k_{a_j}} (c fixed), i.e. the log-radius
// term is ln(1 - 1/mu_{a_j+1}) - ln c.  The certificate must verify under
// the disk oracle.
BlockReport disk_block_stats(const WeightSequence& ws,
                             const LuskyCertificate& cert, double c,
                             const CoefficientPrefix& coeffs,
                             double slope_threshold = 0.01);

}  // namespace lusky
