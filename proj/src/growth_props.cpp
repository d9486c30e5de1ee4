#include "lusky/growth_props.hpp"

#include <algorithm>
#include <cmath>

#include "lusky/assoc_weight.hpp"
#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

// log(e^a + e^b) without overflow.
double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

int tail_start(int lo, int hi, double tail_fraction) {
  const int n = hi - lo + 1;
  const int keep = std::max(1, static_cast<int>(n * tail_fraction));
  return hi - keep + 1;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnHorizon: return "holds-on-horizon";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

TrendResult bounded_trend(std::span<const double> stats, int first_index,
                          double slack_frac) {
  TrendResult r{Verdict::Inconclusive, first_index, kNegInf};
  if (stats.empty()) return r;
  const std::size_t split =
      std::max<std::size_t>(1, static_cast<std::size_t>(0.9 * stats.size()));
  double head = kNegInf, tail = kNegInf;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (i < split)
      head = std::max(head, stats[i]);
    else
      tail = std::max(tail, stats[i]);
    if (stats[i] > stats[arg]) arg = i;
  }
  const double slack = slack_frac * std::max(1.0, std::abs(head));
  r.verdict = (tail <= head + slack) ? Verdict::HoldsOnHorizon : Verdict::Fails;
  r.witness_index = first_index + static_cast<int>(arg);
  r.witness_value = stats[arg];
  return r;
}

std::vector<PropertyReport> structural_checks(const WeightSequence& ws) {
  const int P = ws.horizon();
  std::vector<PropertyReport> out;

  {
    PropertyReport r;
    r.property = "normalized";
    r.statistic = ws.lambda(1);
    r.window_lo = r.window_hi = 1;
    r.verdict = ws.normalized() ? Verdict::HoldsOnHorizon : Verdict::Fails;
    r.witness_index = 1;
    r.witness_value = ws.lambda(1);
    out.push_back(std::move(r));
  }

  {
    PropertyReport r;
    r.property = "log-convex";
    r.window_lo = 2;
    r.window_hi = P;
    double worst = kPosInf;
    int arg = 2;
    for (int p = 2; p <= P; ++p) {
      const double d = ws.lambda(p) - ws.lambda(p - 1);
      if (d < worst) {
        worst = d;
        arg = p;
      }
    }
    r.statistic = P >= 2 ? worst : 0.0;
    r.verdict = ws.log_convex() ? Verdict::HoldsOnHorizon : Verdict::Fails;
    r.witness_index = arg;
    r.witness_value = r.statistic;
    out.push_back(std::move(r));
  }

  {
    // (slc): increments of lambda_p - ln p must be >= 0.  The reference
    // increment ln p - ln(p-1) is computed exactly as written so a Gevrey
    // sequence built from std::log reports 0, not rounding noise.
    PropertyReport r;
    r.property = "slc";
    r.window_lo = 2;
    r.window_hi = P;
    double worst = kPosInf;
    int arg = 2;
    for (int p = 2; p <= P; ++p) {
      const double inc = (ws.lambda(p) - ws.lambda(p - 1)) -
                         (std::log(static_cast<double>(p)) -
                          std::log(static_cast<double>(p - 1)));
      if (inc < worst) {
        worst = inc;
        arg = p;
      }
    }
    r.statistic = P >= 2 ? worst : 0.0;
    r.verdict = (P < 2 || worst >= 0.0) ? Verdict::HoldsOnHorizon : Verdict::Fails;
    r.witness_index = arg;
    r.witness_value = r.statistic;
    out.push_back(std::move(r));
  }

  {
    // (dc): lambda_p / p bounded; the statistic is its max, the verdict the
    // bounded-trend heuristic.
    PropertyReport r;
    r.property = "dc";
    r.window_lo = 1;
    r.window_hi = P;
    std::vector<double> ratio(static_cast<std::size_t>(P));
    for (int p = 1; p <= P; ++p)
      ratio[static_cast<std::size_t>(p) - 1] = ws.lambda(p) / p;
    const TrendResult t = bounded_trend(ratio, 1);
    r.statistic = t.witness_value;
    r.verdict = t.verdict;
    r.witness_index = t.witness_index;
    r.witness_value = t.witness_value;
    out.push_back(std::move(r));
  }

  std::sort(out.begin(), out.end(),
            [](const PropertyReport& a, const PropertyReport& b) {
              return a.property < b.property;
            });
  return out;
}

std::vector<PropertyReport> asymptotic_stats(const WeightSequence& ws, int Q,
                                             double tail_fraction) {
  if (Q < 2) throw Error("asymptotic_stats: Q must be >= 2");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw Error("asymptotic_stats: tail_fraction must be in (0, 1]");
  const int P = ws.horizon();
  std::vector<PropertyReport> out;

  {
    // (mg): s_p = lambda_{2p} - lambda_p = sum_{l=p+1}^{2p} delta_l.
    PropertyReport r;
    r.property = "mg";
    const int hi = P / 2;
    if (hi < 1) throw Error("asymptotic_stats: horizon too small for (mg)");
    std::vector<double> s(static_cast<std::size_t>(hi));
    for (int p = 1; p <= hi; ++p)
      s[static_cast<std::size_t>(p) - 1] = ws.lambda(2 * p) - ws.lambda(p);
    const int lo = tail_start(1, hi, tail_fraction);
    r.window_lo = lo;
    r.window_hi = hi;
    r.statistic = *std::max_element(s.begin() + (lo - 1), s.end());
    const TrendResult t = bounded_trend(s, 1);
    r.verdict = t.verdict;
    r.witness_index = t.witness_index;
    r.witness_value = t.witness_value;
    out.push_back(std::move(r));
  }

  for (int which = 0; which < 2; ++which) {
    // (beta1) with threshold ln Q; (beta3) with threshold 0.
    PropertyReport r;
    r.property = which == 0 ? "beta1" : "beta3";
    const double thr = which == 0 ? std::log(static_cast<double>(Q)) : 0.0;
    const int hi = P / Q;
    if (hi < 1) throw Error("asymptotic_stats: horizon too small for (beta)");
    std::vector<double> s(static_cast<std::size_t>(hi));
    for (int p = 1; p <= hi; ++p)
      s[static_cast<std::size_t>(p) - 1] = ws.lambda(Q * p) - ws.lambda(p);
    const int lo = tail_start(1, hi, tail_fraction);
    r.window_lo = lo;
    r.window_hi = hi;
    double stat = kPosInf;
    int arg = lo;
    bool monotone_tail = true;
    for (int p = lo; p <= hi; ++p) {
      const double v = s[static_cast<std::size_t>(p) - 1];
      if (p > lo && v < s[static_cast<std::size_t>(p) - 2]) monotone_tail = false;
      if (v < stat) {
        stat = v;
        arg = p;
      }
    }
    r.statistic = stat;
    r.witness_index = arg;
    r.witness_value = stat;
    const double margin = 0.1 * std::max(1.0, std::abs(thr));
    if (!monotone_tail && std::abs(stat - thr) <= margin)
      r.verdict = Verdict::Inconclusive;
    else
      r.verdict = stat > thr ? Verdict::HoldsOnHorizon : Verdict::Fails;
    out.push_back(std::move(r));
  }

  {
    // (gamma1): s_j = (mu_j / j) * sum_{k=j}^{P} 1/mu_k, evaluated as
    // exp(lambda_j + logT_j) / j with the inner series accumulated in the
    // log domain from the right.  The discarded tail k > P is reported as
    // the error bar (P - j + 1)/mu_P terms-worth at the last kept size.
    PropertyReport r;
    r.property = "gamma1";
    std::vector<double> log_t(static_cast<std::size_t>(P));
    double acc = kNegInf;
    for (int k = P; k >= 1; --k) {
      acc = log_add_exp(acc, -ws.lambda(k));
      log_t[static_cast<std::size_t>(k) - 1] = acc;
    }
    std::vector<double> s(static_cast<std::size_t>(P));
    for (int j = 1; j <= P; ++j)
      s[static_cast<std::size_t>(j) - 1] =
          std::exp(ws.lambda(j) + log_t[static_cast<std::size_t>(j) - 1]) / j;
    const int lo = tail_start(1, P, tail_fraction);
    r.window_lo = lo;
    r.window_hi = P;
    r.statistic = *std::max_element(s.begin() + (lo - 1), s.end());
    double bar = 0.0;
    for (int j = lo; j <= P; ++j)
      bar = std::max(bar, (P - j + 1) *
                              std::exp(ws.lambda(j) - ws.lambda(P)) / j);
    r.error_bar = bar;
    const TrendResult t = bounded_trend(s, 1);
    r.verdict = t.verdict;
    r.witness_index = t.witness_index;
    r.witness_value = t.witness_value;
    out.push_back(std::move(r));
  }

  std::sort(out.begin(), out.end(),
            [](const PropertyReport& a, const PropertyReport& b) {
              return a.property < b.property;
            });
  return out;
}

CompareReport compare_sequences(const WeightSequence& m1,
                                const WeightSequence& m2) {
  const int P = std::min(m1.horizon(), m2.horizon());
  std::vector<double> fwd(static_cast<std::size_t>(P)),
      bwd(static_cast<std::size_t>(P));
  for (int j = 1; j <= P; ++j) {
    const double d = (m1.log_m(j) - m2.log_m(j)) / j;
    fwd[static_cast<std::size_t>(j) - 1] = d;
    bwd[static_cast<std::size_t>(j) - 1] = -d;
  }
  CompareReport rep;
  const TrendResult tf = bounded_trend(fwd, 1);
  const TrendResult tb = bounded_trend(bwd, 1);
  rep.stat_forward = tf.witness_value;
  rep.stat_backward = tb.witness_value;
  rep.forward = tf.verdict;
  rep.backward = tb.verdict;
  rep.equivalent = tf.verdict == Verdict::HoldsOnHorizon &&
                   tb.verdict == Verdict::HoldsOnHorizon;
  return rep;
}

PropertyReport omega6_check(const WeightSequence& ws,
                            std::span<const double> h_candidates,
                            std::span<const double> x_samples) {
  if (h_candidates.empty() || x_samples.empty())
    throw Error("omega6_check: need candidates and samples");
  PropertyReport r;
  r.property = "omega6";
  r.window_lo = 1;
  r.window_hi = static_cast<int>(x_samples.size());
  double best_miss = kPosInf;
  int best_miss_idx = 0;
  for (double H : h_candidates) {
    if (!(H > 1)) throw Error("omega6_check: candidates must satisfy H > 1");
    const double ln_h = std::log(H);
    double worst = kNegInf;
    int worst_idx = 0;
    for (std::size_t i = 0; i < x_samples.size(); ++i) {
      const double x = x_samples[i];
      const double gap = 2.0 * omega_log(ws, x) - omega_log(ws, x + ln_h) - H;
      if (gap > worst) {
        worst = gap;
        worst_idx = static_cast<int>(i);
      }
    }
    if (worst <= 0.0) {
      r.statistic = H;
      r.verdict = Verdict::HoldsOnHorizon;
      return r;
    }
    if (worst < best_miss) {
      best_miss = worst;
      best_miss_idx = worst_idx;
    }
  }
  r.statistic = kPosInf;
  r.verdict = Verdict::Fails;
  r.witness_index = best_miss_idx;
  r.witness_value = best_miss;
  return r;
}

}  // namespace lusky
