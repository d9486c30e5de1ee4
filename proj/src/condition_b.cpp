#include "lusky/condition_b.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

// Below this window width the quotients are summed term by term instead of
// differencing long prefix sums; the direct sums keep the error at the
// scale of the window, not of logM_P.
constexpr int kDirectWindow = 512;

void check_pair(const WeightSequence& ws, int k, int l) {
  ws.require_admissible("log_ab");
  if (k < 1 || l <= k)
    throw Error("log_ab: need integers 1 <= k < l");
  if (l + 1 > ws.horizon())
    throw HorizonError("log_ab: l + 1 exceeds horizon of '" + ws.name() + "'");
}

}  // namespace

LogAB log_ab(const WeightSequence& ws, int k, int l) {
  check_pair(ws, k, l);
  const double lam_hi = ws.lambda(l + 1);
  const double lam_lo = ws.lambda(k + 1);
  if (l - k <= kDirectWindow) {
    KahanSum a, b;
    for (int i = k + 1; i <= l; ++i) {
      const double lam = ws.lambda(i);
      a.add(lam_hi - lam);
      b.add(lam - lam_lo);
    }
    return {a.value(), b.value()};
  }
  const double window = ws.log_m(l) - ws.log_m(k);
  const double width = static_cast<double>(l - k);
  return {width * lam_hi - window, window - width * lam_lo};
}

LogAB log_ab_delta(const DeltaSeq& d, int k, int l) {
  if (k < 1 || l <= k) throw Error("log_ab_delta: need integers 1 <= k < l");
  if (l + 1 > d.horizon())
    throw HorizonError("log_ab_delta: l + 1 exceeds horizon");
  const double width = static_cast<double>(l - k);
  KahanSum ramp;   // sum_{i=1}^{l-k-1} i * delta_{k+1+i}
  KahanSum inner;  // sum_{i=k+2}^{l} delta_i
  for (int i = 1; i <= l - k - 1; ++i) {
    const double dv = d.delta[static_cast<std::size_t>(k + i)];  // delta_{k+1+i}
    ramp.add(static_cast<double>(i) * dv);
    inner.add(dv);
  }
  const double log_a =
      width * d.delta[static_cast<std::size_t>(l)] + ramp.value();
  const double log_b = width * inner.value() - ramp.value();
  return {log_a, log_b};
}

AbOracle sequence_oracle(const WeightSequence& ws) {
  return [&ws](int k, int l) { return log_ab(ws, k, l); };
}

int LuskyCertificate::max_gap() const {
  int g = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) g = std::max(g, a[j + 1] - a[j]);
  return g;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::ALow: return "A-low";
    case Violation::AHigh: return "A-high";
    case Violation::BLow: return "B-low";
    case Violation::BHigh: return "B-high";
    case Violation::Horizon: return "horizon";
  }
  return "?";
}

SearchResult search_lusky(const AbOracle& oracle, int horizon, double log_b,
                          double log_k, int a1, int gap_max,
                          std::string sequence_name) {
  constexpr double kLn2 = 0.6931471805599453;
  if (!(log_b > kLn2))
    throw Error("search_lusky: lower bound must satisfy b > 2 (log b > ln 2)");
  if (!(log_k >= log_b)) throw Error("search_lusky: need K >= b");
  if (a1 < 1) throw Error("search_lusky: a1 must be >= 1");
  if (gap_max < 2) throw Error("search_lusky: gap_max must be >= 2");

  LuskyCertificate cert;
  cert.sequence = std::move(sequence_name);
  cert.a.push_back(a1);
  cert.log_b_bound = log_b;
  cert.log_k_bound = log_k;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  while (true) {
    const int aj = cert.a.back();
    if (aj + 3 > horizon) {
      // Even the smallest extension needs lambda beyond P: chain complete.
      SearchResult r;
      r.certificate = std::move(cert);
      return r;
    }
    bool extended = false;
    std::vector<FailureCandidate> cands;
    for (int g = 2; g <= gap_max; ++g) {
      const int l = aj + g;
      if (l + 1 > horizon) {
        cands.push_back({g, nan, nan, Violation::Horizon});
        continue;
      }
      const LogAB ab = oracle(aj, l);
      if (ab.log_a < log_b)
        cands.push_back({g, ab.log_a, ab.log_b, Violation::ALow});
      else if (ab.log_a > log_k)
        cands.push_back({g, ab.log_a, ab.log_b, Violation::AHigh});
      else if (ab.log_b < log_b)
        cands.push_back({g, ab.log_a, ab.log_b, Violation::BLow});
      else if (ab.log_b > log_k)
        cands.push_back({g, ab.log_a, ab.log_b, Violation::BHigh});
      else {
        cert.a.push_back(l);
        cert.rows.push_back({ab.log_a, ab.log_b});
        extended = true;
        break;
      }
    }
    if (!extended) {
      SearchResult r;
      FailureTrace t;
      t.stuck_index = static_cast<int>(cert.rows.size());
      t.stuck_at = aj;
      t.candidates = std::move(cands);
      r.failure = std::move(t);
      return r;
    }
  }
}

VerifyResult verify_certificate(const AbOracle& oracle,
                                const LuskyCertificate& cert) {
  if (cert.a.empty() || cert.a.size() != cert.rows.size() + 1)
    throw Error("verify_certificate: malformed certificate");
  VerifyResult res;
  res.ok = true;
  res.first_bad_row = -1;
  res.max_gap = cert.max_gap();
  res.recomputed.reserve(cert.rows.size());
  std::vector<int> gaps;
  for (std::size_t j = 0; j + 1 < cert.a.size(); ++j) {
    if (cert.a[j + 1] <= cert.a[j])
      throw Error("verify_certificate: chain must increase strictly");
    gaps.push_back(cert.a[j + 1] - cert.a[j]);
    const LogAB ab = oracle(cert.a[j], cert.a[j + 1]);
    res.recomputed.push_back({ab.log_a, ab.log_b});
    // Constructions that sit exactly on a bound (log A == log K) must still
    // verify when recomputed through a different evaluation path, so the
    // window check carries a pinned relative slack.
    constexpr double kBoundSlack = 1e-9;
    const double lo = cert.log_b_bound -
                      kBoundSlack * std::max(1.0, std::abs(cert.log_b_bound));
    const double hi = cert.log_k_bound +
                      kBoundSlack * std::max(1.0, std::abs(cert.log_k_bound));
    const bool in_window = ab.log_a >= lo && ab.log_a <= hi &&
                           ab.log_b >= lo && ab.log_b <= hi;
    if (!in_window && res.ok) {
      res.ok = false;
      res.first_bad_row = static_cast<int>(j);
    }
  }
  // Bounded-gap trend: no strictly larger gap appears in the last decile.
  const std::size_t split =
      std::max<std::size_t>(1, static_cast<std::size_t>(0.9 * gaps.size()));
  int head_max = 0, tail_max = 0;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (j < split)
      head_max = std::max(head_max, gaps[j]);
    else
      tail_max = std::max(tail_max, gaps[j]);
  }
  res.gaps_bounded_like = tail_max <= head_max;
  return res;
}

VerifyResult verify_certificate(const WeightSequence& ws,
                                const LuskyCertificate& cert) {
  if (ws.name() != cert.sequence)
    throw Error("verify_certificate: certificate names sequence '" +
                cert.sequence + "' but got '" + ws.name() + "'");
  return verify_certificate(sequence_oracle(ws), cert);
}

NecessaryReport necessary_check(std::span<const int> a) {
  if (a.size() < 2) throw Error("necessary_check: need at least one gap");
  NecessaryReport rep;
  rep.min_gap = std::numeric_limits<int>::max();
  rep.gaps_ok = true;
  KahanSum acc;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    const int g = a[j + 1] - a[j];
    if (g <= 0) throw Error("necessary_check: chain must increase strictly");
    if (g < 2 && rep.gaps_ok) {
      rep.gaps_ok = false;
      rep.bad_gap_index = static_cast<int>(j);
    }
    rep.min_gap = std::min(rep.min_gap, g);
    acc.add(1.0 / g);
    rep.partial_sums.push_back(acc.value());
  }
  // Divergence trend: slope of partial sums against log count over the
  // second half.  Harmonic-like chains give slope >= 1, geometric gaps
  // give a vanishing slope.
  const std::size_t n = rep.partial_sums.size();
  const std::size_t lo = n / 2;
  std::vector<double> xs, ys;
  for (std::size_t j = lo; j < n; ++j) {
    xs.push_back(std::log(static_cast<double>(j + 1)));
    ys.push_back(rep.partial_sums[j]);
  }
  rep.tail_slope = lsq_slope(xs, ys);
  rep.divergent_like = n >= 2 && rep.tail_slope >= 0.25;
  return rep;
}

WeightSequence build_from_lusky(std::span<const int> a, double C,
                                int horizon) {
  if (!(C >= 3.0)) throw Error("build_from_lusky: need C >= 3");
  if (a.size() < 2) throw Error("build_from_lusky: need at least one block");
  if (a[0] < 1) throw Error("build_from_lusky: chain must start at a_1 >= 1");
  const int last = a[a.size() - 1];
  if (horizon < last + 1)
    throw HorizonError("build_from_lusky: horizon must reach a_last + 1");
  DeltaSeq d;
  d.delta.assign(static_cast<std::size_t>(horizon), 0.0);
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    const int gap = a[j + 1] - a[j];
    if (gap < 2) throw Error("build_from_lusky: gaps must be >= 2");
    const double dj = C / (gap + 1);
    d.delta[static_cast<std::size_t>(a[j] + 2) - 1] = dj;      // delta_{a_j + 2}
    d.delta[static_cast<std::size_t>(a[j + 1] + 1) - 1] = dj;  // delta_{a_{j+1} + 1}
  }
  std::ostringstream nm;
  nm << "spikes-C" << format_real(C) << "-n" << (a.size() - 1);
  return from_deltas(nm.str(), d);
}

bool uniform_delta_sufficient(double d1, double d2, double C1, double C2) {
  if (!(d1 > 0 && d1 <= d2)) throw Error("uniform_delta_sufficient: need 0 < d1 <= d2");
  if (!(C1 >= 2 && C1 <= C2)) throw Error("uniform_delta_sufficient: need 2 <= C1 <= C2");
  const bool lower_ok = 2.0 <= d1 * C1 * (1.0 + C1);
  const bool upper_ok = 1.0 + d2 * C2 * (C2 - 1.0) / 2.0 <= d1 * C1 * (C1 - 1.0);
  return lower_ok && upper_ok;
}

bool stretch_check(const WeightSequence& ws, int r,
                   const LuskyCertificate& cert, double tol) {
  if (r < 1) throw Error("stretch_check: r must be >= 1");
  const WeightSequence stretched = interpolate(ws, r);
  const int last = cert.a.empty() ? 0 : cert.a.back();
  if (static_cast<long long>(r) * last + 1 > stretched.horizon())
    throw HorizonError("stretch_check: stretched chain exceeds r * horizon");
  for (std::size_t j = 0; j + 1 < cert.a.size(); ++j) {
    const LogAB base = log_ab(ws, cert.a[j], cert.a[j + 1]);
    const LogAB wide = log_ab(stretched, r * cert.a[j], r * cert.a[j + 1]);
    if (!approx_rel(base.log_a, wide.log_a, tol) ||
        !approx_rel(base.log_b, wide.log_b, tol))
      return false;
  }
  return true;
}

}  // namespace lusky
