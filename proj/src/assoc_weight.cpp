#include "lusky/assoc_weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lusky/log_domain.hpp"

namespace lusky {

double omega_log(const WeightSequence& ws, double x) {
  ws.require_admissible("omega");
  if (!std::isfinite(x)) throw Error("omega: ln t must be finite");
  const auto lam = ws.lambdas();
  if (x > lam.back())
    throw HorizonError("omega: ln t beyond lambda_P of '" + ws.name() + "'");
  // j_t = max{ p : lambda_p <= x }; ties included.
  const auto it = std::upper_bound(lam.begin(), lam.end(), x);
  const int jt = static_cast<int>(it - lam.begin());
  if (jt == 0) return 0.0;  // t <= mu_1
  return jt * x - ws.log_m(jt);
}

double omega(const WeightSequence& ws, double t) {
  if (!(t > 0)) throw Error("omega: t must be positive");
  return omega_log(ws, std::log(t));
}

double log_h(const WeightSequence& ws, double x) { return -omega_log(ws, -x); }

CountResult counting(const WeightSequence& ws, double x) {
  ws.require_admissible("counting");
  const auto lam = ws.lambdas();
  const auto it = std::upper_bound(lam.begin(), lam.end(), x);
  const int n = static_cast<int>(it - lam.begin());
  return {n, n == ws.horizon()};
}

RamificationReport ramification_check(const WeightSequence& ws, int r,
                                      std::span<const double> x_samples) {
  if (r < 1) throw Error("ramification_check: r must be >= 1");
  const WeightSequence interp = interpolate(ws, r);
  RamificationReport rep;
  rep.r = r;
  rep.ratio_min = kPosInf;
  rep.ratio_max = kNegInf;
  for (double x : x_samples) {
    const double om_interp = omega_log(interp, x);
    if (!(om_interp > 0))
      throw Error(
          "ramification_check: sample with vanishing omega_{P^{M,r}}; pick "
          "ln t > lambda_1 / r");
    const double om_m = omega_log(ws, r * x);
    const double ratio = om_m / om_interp;
    rep.rows.push_back({x, om_m, om_interp, ratio});
    rep.ratio_min = std::min(rep.ratio_min, ratio);
    rep.ratio_max = std::max(rep.ratio_max, ratio);
  }
  if (rep.rows.empty()) throw Error("ramification_check: no samples");
  const double r2 = static_cast<double>(r) * r;
  rep.consistent_with_unit =
      approx_rel(rep.ratio_min, 1.0, 1e-9) && approx_rel(rep.ratio_max, 1.0, 1e-9);
  rep.consistent_with_r_squared =
      approx_rel(rep.ratio_min, r2, 1e-9) && approx_rel(rep.ratio_max, r2, 1e-9);
  std::ostringstream note;
  note << "measured omega_M(t^r)/omega_{P^{M,r}}(t) in [" << format_real(rep.ratio_min)
       << ", " << format_real(rep.ratio_max) << "]; the r^2-scaled form "
       << "omega_M(t^r) = r^2 * omega_{P^{M,r}}(t) predicts " << format_real(r2)
       << " and is "
       << (rep.consistent_with_r_squared ? "consistent with" : "NOT observed in")
       << " these samples"
       << (rep.consistent_with_unit ? "; the data match the factor-1 identity"
                                    : "");
  rep.note = note.str();
  return rep;
}

// ---------------------------------------------------------------------
// WeightFunctionGrid
// ---------------------------------------------------------------------

WeightFunctionGrid::WeightFunctionGrid(std::vector<double> logt,
                                       std::vector<double> logv,
                                       bool normalized)
    : logt_(std::move(logt)), logv_(std::move(logv)), normalized_(normalized) {
  if (logt_.size() < 2 || logt_.size() != logv_.size())
    throw Error("weight grid: need matching logt/logv arrays, length >= 2");
  for (std::size_t i = 0; i < logt_.size(); ++i) {
    if (!std::isfinite(logt_[i]) || !std::isfinite(logv_[i]))
      throw Error("weight grid: non-finite entry at index " +
                  std::to_string(i));
    if (i > 0 && logt_[i] <= logt_[i - 1])
      throw Error("weight grid: logt must increase strictly");
  }
  // Convexity of -log v in x: chord slopes non-decreasing (tolerance on the
  // slope comparison absorbs sampling rounding).
  convex_checked_ = true;
  double prev_slope = kNegInf;
  for (std::size_t i = 1; i < logt_.size(); ++i) {
    const double slope =
        (-logv_[i] + logv_[i - 1]) / (logt_[i] - logt_[i - 1]);
    if (slope < prev_slope - 1e-8) {
      convex_checked_ = false;
      break;
    }
    prev_slope = std::max(prev_slope, slope);
  }
  // Probe decay: x + log v decreasing across the last grid cell.
  const std::size_t n = logt_.size();
  rapid_decay_checked_ =
      (logt_[n - 1] + logv_[n - 1]) < (logt_[n - 2] + logv_[n - 2]);
}

WeightFunctionGrid WeightFunctionGrid::from_sequence(
    const WeightSequence& ws, std::span<const double> xs) {
  std::vector<double> logt(xs.begin(), xs.end());
  std::vector<double> logv(logt.size());
  for (std::size_t i = 0; i < logt.size(); ++i)
    logv[i] = -omega_log(ws, logt[i]);
  return WeightFunctionGrid(std::move(logt), std::move(logv),
                            ws.normalized());
}

double WeightFunctionGrid::value_at(double x) const {
  if (x < logt_.front()) {
    if (normalized_ && x <= 0.0) return 0.0;  // v == 1 left of the grid
    throw Error("weight grid: query left of the covered range");
  }
  if (x > logt_.back())
    throw Error("weight grid: query right of the covered range");
  const auto it = std::upper_bound(logt_.begin(), logt_.end(), x);
  if (it == logt_.end()) return logv_.back();
  const std::size_t hi = static_cast<std::size_t>(it - logt_.begin());
  if (hi == 0) return logv_.front();
  const double w = (x - logt_[hi - 1]) / (logt_[hi] - logt_[hi - 1]);
  return logv_[hi - 1] + w * (logv_[hi] - logv_[hi - 1]);
}

namespace {

// Argmax over the grid of g_i = m * logt_i + logv_i.  The objective is
// concave in x, so values equal to the max within a tiny band form one
// plateau; ties resolve to the rightmost plateau point (canonical
// r_k = mu_{k+1} choice).  Returns the index.
std::size_t grid_argmax(const WeightFunctionGrid& w, double m) {
  const auto lt = w.logt();
  const auto lv = w.logv();
  std::size_t best = 0;
  double best_v = kNegInf;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    const double g = m * lt[i] + lv[i];
    if (g > best_v) {
      best_v = g;
      best = i;
    }
  }
  const double band = 1e-12 * std::max(1.0, std::abs(best_v));
  std::size_t i = best;
  while (i + 1 < lt.size() && m * lt[i + 1] + lv[i + 1] >= best_v - band) ++i;
  return i;
}

}  // namespace

WeightSequence conjugate_sequence(const WeightFunctionGrid& w, int P) {
  if (P < 1) throw Error("conjugate_sequence: horizon must be >= 1");
  if (!w.convex_checked())
    throw Error("conjugate_sequence: -log v(e^x) fails the convexity check");
  const auto lt = w.logt();
  std::vector<double> log_m(static_cast<std::size_t>(P));
  for (int p = 1; p <= P; ++p) {
    const std::size_t i = grid_argmax(w, p);
    if (i + 1 == lt.size())
      throw Error("conjugate_sequence: sup escapes the grid at p = " +
                  std::to_string(p) + " (weight decays too slowly)");
    double x_star = lt[i];
    if (i > 0) {
      // Concave objective: refine on the bracketing cells.  With linear
      // interpolation this lands on a knot; it guards against coarse grids.
      x_star = golden_section_max(
          [&](double x) { return p * x + w.value_at(x); }, lt[i - 1],
          lt[i + 1], 1e-10);
      const double at_knot = p * lt[i] + w.value_at(lt[i]);
      if (p * x_star + w.value_at(x_star) < at_knot) x_star = lt[i];
    }
    log_m[static_cast<std::size_t>(p) - 1] = p * x_star + w.value_at(x_star);
  }
  // Back to quotients: lambda_p = logM_p - logM_{p-1}.
  std::vector<double> lambda(log_m.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    lambda[i] = log_m[i] - prev;
    prev = log_m[i];
  }
  return WeightSequence::from_log_quotients("conjugate", std::move(lambda));
}

SandwichResult sandwich_check(const WeightFunctionGrid& w,
                              const WeightSequence& conj,
                              std::span<const double> x_samples, double tol) {
  SandwichResult res{kNegInf, kNegInf};
  for (double x : x_samples) {
    const double om_v = -w.value_at(x);
    const double om_conj = omega_log(conj, x);
    res.max_violation = std::max(res.max_violation, om_conj - om_v);
    res.log_a = std::max(res.log_a, om_v - 2.0 * om_conj);
  }
  if (res.max_violation > tol)
    throw Error(
        "sandwich_check: omega_{M^v} exceeds omega^v beyond tolerance (" +
        format_real(res.max_violation) + ")");
  return res;
}

WeightAbResult weight_ab_numeric(const WeightFunctionGrid& w, int k, int l) {
  if (k < 1 || l <= k) throw Error("weight_ab_numeric: need 1 <= k < l");
  const auto lt = w.logt();
  WeightAbResult r{};
  double xs[2], vs[2];
  const int ms[2] = {k, l};
  for (int s = 0; s < 2; ++s) {
    const std::size_t i = grid_argmax(w, ms[s]);
    if (i == 0 || i + 1 == lt.size())
      throw Error("weight_ab_numeric: maximizer for exponent " +
                  std::to_string(ms[s]) + " touches the grid edge");
    // Refine on the bracketing cells; keep the knot unless the interpolant
    // is strictly better there (plateau ties stay on the canonical
    // rightmost knot).
    const double m = ms[s];
    const double refined = golden_section_max(
        [&](double x) { return m * x + w.value_at(x); }, lt[i - 1], lt[i + 1],
        1e-10);
    const double knot_val = m * lt[i] + w.logv()[i];
    if (m * refined + w.value_at(refined) > knot_val) {
      xs[s] = refined;
      vs[s] = w.value_at(refined);
    } else {
      xs[s] = lt[i];
      vs[s] = w.logv()[i];
    }
  }
  r.log_t_k = xs[0];
  r.log_t_l = xs[1];
  r.log_a = k * (xs[0] - xs[1]) + vs[0] - vs[1];
  r.log_b = l * (xs[1] - xs[0]) + vs[1] - vs[0];
  return r;
}

}  // namespace lusky
