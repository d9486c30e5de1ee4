#pragma once

// =====================================================================
//  Associated weight function of a sequence, and weight-function grids
// =====================================================================
//
//  omega_M(t) = sup_j log(t^j / M_j).  On [0, mu_1] the sup is attained at
//  j = 0 and omega = 0; beyond, with j_t = max{ p : lambda_p <= ln t },
//  omega_M(t) = j_t * ln t - logM_{j_t}.  Everything is evaluated at
//  x = ln t, so fast-growing sequences never force exp overflow.
//
//  h_M(t) = exp(-omega_M(1/t)) is the dual small-disk weight and
//  Sigma_M(t) = #{ p : mu_p <= t } the quotient-counting function.
//
//  Sampled weight functions come in as grids (log t, log v) and go back to
//  sequences through the conjugate  logM^v_p = sup_x (p x + log v(e^x)),
//  evaluated on the grid and refined by golden-section on the linear
//  interpolant (the objective is concave in x when -log v(e^x) is convex).
// =====================================================================

#include <span>
#include <string>
#include <vector>

#include "lusky/weight_sequence.hpp"

namespace lusky {

// omega_M(e^x).  Requires an admissible (normalized, log-convex) sequence
// and x <= lambda_P; beyond the horizon the value would be a lie, so it
// throws HorizonError instead.
double omega_log(const WeightSequence& ws, double x);

// Convenience wrapper for positive t.
double omega(const WeightSequence& ws, double t);

// log h_M(e^x) = -omega_M(e^{-x}); zero for x >= -lambda_1.
double log_h(const WeightSequence& ws, double x);

struct CountResult {
  int count;
  bool saturated;  // count hit the horizon: the true value may be larger
};

// Sigma_M(e^x) = #{ p <= P : lambda_p <= x }; saturates at P with a flag.
CountResult counting(const WeightSequence& ws, double x);

// ---------------------------------------------------------------------
// Ramification experiment
// ---------------------------------------------------------------------
// Compares omega_M(t^r) against omega_{P^{M,r}}(t) on given samples.  The
// measured ratio is reported, never asserted: the r^2-scaled form of the
// ramification identity (omega_M(t^r) = r^2 * omega_{P^{M,r}}(t)) is NOT
// what the numbers show, and the report's note says so explicitly.
struct RamificationRow {
  double x;  // ln t
  double omega_m_tr;
  double omega_interp_t;
  double ratio;
};

struct RamificationReport {
  int r;
  std::vector<RamificationRow> rows;
  double ratio_min;
  double ratio_max;
  bool consistent_with_unit;       // all ratios within 1e-9 of 1
  bool consistent_with_r_squared;  // all ratios within 1e-9 of r^2
  std::string note;
};

// Samples where omega_{P^{M,r}} vanishes are rejected (ratio undefined);
// pick x in (lambda_1 / r, lambda_P / r].
RamificationReport ramification_check(const WeightSequence& ws, int r,
                                      std::span<const double> x_samples);

// ---------------------------------------------------------------------
// Sampled weight functions
// ---------------------------------------------------------------------
class WeightFunctionGrid {
 public:
  // logt strictly increasing, logv finite, same lengths (>= 2).
  // `normalized` declares v == 1 on t <= 1.
  WeightFunctionGrid(std::vector<double> logt, std::vector<double> logv,
                     bool normalized);

  // Grid sampled from a sequence's own weight: logv = -omega_M(e^x).
  static WeightFunctionGrid from_sequence(const WeightSequence& ws,
                                          std::span<const double> xs);

  std::span<const double> logt() const { return logt_; }
  std::span<const double> logv() const { return logv_; }
  bool normalized() const { return normalized_; }

  // Checked at construction: -log v non-increasing would be decay; what we
  // verify is convexity of -log v(e^x) in x up to `tol` on second
  // differences, and eventual decay of k x + log v for the probe k = 1.
  bool convex_checked() const { return convex_checked_; }
  bool rapid_decay_checked() const { return rapid_decay_checked_; }

  // Linear interpolation of log v at x; normalized grids extend by 0 to the
  // left of both the grid and x = 0.  Outside the covered range: Error.
  double value_at(double x) const;

 private:
  std::vector<double> logt_, logv_;
  bool normalized_;
  bool convex_checked_;
  bool rapid_decay_checked_;
};

// Legendre-type conjugate: logM^v_p = max over the grid of (p x + log v),
// p = 1..P.  Requires a grid that passed the convexity check; a normalized
// grid yields a normalized sequence.  If the maximizer for some p sits on
// the right edge of the grid the sup is escaping (v decays too slowly, as
// for log v = -a log(1+t) with p > a); that raises an Error identifying p.
WeightSequence conjugate_sequence(const WeightFunctionGrid& w, int P);

struct SandwichResult {
  double log_a;          // sup over samples of (omega^v - 2 * omega_{M^v})
  double max_violation;  // sup over samples of (omega_{M^v} - omega^v)
};

// Checks omega_{M^v} <= omega^v pointwise on the samples (up to tol) and
// reports the constant in omega^v <= 2 * omega_{M^v} + log A.
// omega^v(e^x) := -log v(e^x) read off the grid.
SandwichResult sandwich_check(const WeightFunctionGrid& w,
                              const WeightSequence& conj,
                              std::span<const double> x_samples,
                              double tol = 1e-6);

struct WeightAbResult {
  double log_t_k;  // maximizer abscissa for exponent k
  double log_t_l;
  double log_a;  // k (ln t_k - ln t_l) + log v(t_k) - log v(t_l)
  double log_b;  // l (ln t_l - ln t_k) + log v(t_l) - log v(t_k)
};

// Numeric A/B for a sampled weight: locates t_m = argmax t^m v(t) on the
// grid (golden-section refined; plateau ties resolve to the largest t,
// matching the canonical choice r_k = mu_{k+1}) and evaluates the quotient
// bounds from the definition.  Errors when a maximizer touches either grid
// edge.
WeightAbResult weight_ab_numeric(const WeightFunctionGrid& w, int k, int l);

}  // namespace lusky
