#pragma once

// Small numeric kernel shared by every module.  All quantities in this
// project live in the natural-log domain (nats); the helpers here keep that
// arithmetic stable: compensated prefix sums, log-sum-exp with -inf as the
// additive zero, log(1 - e^{-x}) without overflow, and a golden-section
// maximizer for concave one-dimensional objectives.

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace lusky {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Compensated (Kahan) accumulator.  Used wherever long prefix sums feed
// later cancellation-prone differences.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Compensated sum of a whole range.
double kahan_total(std::span<const double> xs);

// log(sum_i exp(x_i)) with the conventions: empty span and all -inf give
// -inf; +inf entries propagate.  Stable under large offsets.
double log_sum_exp(std::span<const double> xs);

// log(1 - e^{-x}) for x > 0.  Switches between log(-expm1(-x)) and
// log1p(-exp(-x)) at x = ln 2 so both branches stay in their accurate range.
double log1mexp(double x);

// Max of a concave function on [lo, hi] via golden-section search; returns
// the abscissa.  `tol` is the absolute window width on x at which to stop.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-10);

// Fixed-width shortest-faithful formatting: 17 significant digits for finite
// reals, the literals "-inf" / "inf" / "nan" otherwise.  Every file the CLI
// writes goes through this so outputs are byte-deterministic.
std::string format_real(double x);

// Strict inverse of format_real for the few places that read "-inf" back.
double parse_real(const std::string& s);

// |a - b| <= tol * max(1, |a|, |b|): relative comparison with an absolute
// floor at 1 so values near zero do not demand impossible precision.
bool approx_rel(double a, double b, double tol);

// Least-squares slope of y against x; 0 when fewer than two points.
double lsq_slope(std::span<const double> x, std::span<const double> y);

}  // namespace lusky
