#include "lusky/disk.hpp"

#include <cmath>
#include <string>

#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

constexpr double kOverflowLambda = 700.0;  // expm1 overflows near 709.78

double require_positive_quotient(const WeightSequence& ws, int idx,
                                 const char* who) {
  const double lam = ws.lambda(idx);
  if (!(lam > 0.0))
    throw Error(std::string(who) + ": mu_" + std::to_string(idx) +
                " = 1 makes the disk anchor degenerate");
  return lam;
}

// ln(mu_x - 1) = lambda_x + log(1 - e^{-lambda_x}); safe for any lambda > 0.
double log_mu_minus_1(double lam) { return lam + log1mexp(lam); }

// Window sum sum_{i=p+2}^{q} lambda_i (empty when q < p + 2).
double window_sum(const WeightSequence& ws, int p, int q) {
  if (q - p > 512) return ws.log_m(q) - ws.log_m(p + 1);
  KahanSum s;
  for (int i = p + 2; i <= q; ++i) s.add(ws.lambda(i));
  return s.value();
}

void check_anchor_pair(const WeightSequence& ws, int p, int q,
                       const char* who) {
  ws.require_admissible(who);
  if (p < 1 || q <= p)
    throw Error(std::string(who) + ": need integers 1 <= p < q");
  if (q + 1 > ws.horizon())
    throw HorizonError(std::string(who) + ": q + 1 exceeds horizon");
}

}  // namespace

DiskMaxRow disk_geometry(const WeightSequence& ws, double c, int p) {
  ws.require_admissible("disk_geometry");
  if (!(c > 0)) throw Error("disk_geometry: c must be > 0");
  if (p < 1 || p + 1 > ws.horizon())
    throw HorizonError("disk_geometry: need 1 <= p <= horizon - 1");
  const double lam = require_positive_quotient(ws, p + 1, "disk_geometry");
  DiskMaxRow row;
  row.p = p;
  row.k_p = p * std::expm1(lam);
  row.k_overflow = lam > kOverflowLambda;
  row.log_r = log1mexp(lam) - std::log(c);
  row.log_v = ws.log_m(p + 1) - (p + 1) * lam;
  if (!row.k_overflow) {
    // Consistency of the two radius expressions: s_{k_p, p, c} = r_{k_p}.
    const double via_k = std::log(row.k_p / (c * (row.k_p + p)));
    if (!approx_rel(via_k, row.log_r, 1e-12))
      throw Error("disk_geometry: radius consistency check failed");
  }
  return row;
}

DiskMaximizer disk_maximizer(const WeightSequence& ws, double c, double k) {
  ws.require_admissible("disk_maximizer");
  if (!(c > 0)) throw Error("disk_maximizer: c must be > 0");
  if (!(k > 0)) throw Error("disk_maximizer: k must be > 0");
  const double ln_c = std::log(c);
  if (ws.lambda(1) > 0 && k <= 1.0 * std::expm1(ws.lambda(1)))
    return {0, true, log1mexp(ws.lambda(1)) - ln_c};
  for (int p = 1; p + 1 <= ws.horizon(); ++p) {
    const double lam_hi = ws.lambda(p + 1);
    if (!(lam_hi > 0)) continue;  // band empty while mu_{p+1} = 1
    const double hi = p * std::expm1(lam_hi);
    if (k <= hi) {
      const double lam_lo = ws.lambda(p);
      const double lo = lam_lo > 0 ? p * std::expm1(lam_lo) : 0.0;
      if (k > lo) return {p, false, std::log(k / (c * (k + p)))};
      // k fell in the gap below this band: maximizer parks at the edge
      // r_{k_{p-1}} = (1/c)(1 - 1/mu_p).
      return {p, true, log1mexp(lam_lo) - ln_c};
    }
  }
  throw HorizonError("disk_maximizer: k beyond the last anchor on horizon");
}

LogAB disk_log_ab(const WeightSequence& ws, int p, int q) {
  check_anchor_pair(ws, p, q, "disk_log_ab");
  const double lam_p = require_positive_quotient(ws, p + 1, "disk_log_ab");
  const double lam_q = ws.lambda(q + 1);  // >= lam_p > 0 by log-convexity
  const double kp = p * std::expm1(lam_p);
  const double kq = q * std::expm1(lam_q);
  if (!std::isfinite(kq))  // kq >= kp
    throw Error("disk_log_ab: anchor exponent k_q overflows double "
                "(lambda_{q+1} > ~709); the bounds are not representable");
  const double l_p = log_mu_minus_1(lam_p);
  const double l_q = log_mu_minus_1(lam_q);
  const double win = window_sum(ws, p, q);
  const double log_a =
      kp * (l_p - l_q) + (kp + q) * lam_q - (kp + p + 1) * lam_p - win;
  const double log_b =
      kq * (l_q - l_p) + (kq + p + 1) * lam_p + win - (kq + q) * lam_q;
  return {log_a, log_b};
}

LogAB disk_log_ab_direct(const WeightSequence& ws, int p, int q) {
  check_anchor_pair(ws, p, q, "disk_log_ab_direct");
  const DiskMaxRow rp = disk_geometry(ws, 1.0, p);
  const DiskMaxRow rq = disk_geometry(ws, 1.0, q);
  const double log_a = rp.k_p * (rp.log_r - rq.log_r) + rp.log_v - rq.log_v;
  const double log_b = rq.k_p * (rq.log_r - rp.log_r) + rq.log_v - rp.log_v;
  return {log_a, log_b};
}

AbOracle disk_oracle(const WeightSequence& ws) {
  return [&ws](int p, int q) { return disk_log_ab(ws, p, q); };
}

BlockReport disk_block_stats(const WeightSequence& ws,
                             const LuskyCertificate& cert, double c,
                             const CoefficientPrefix& coeffs,
                             double slope_threshold) {
  if (!(c > 0)) throw Error("disk_block_stats: c must be > 0");
  if (ws.name() != cert.sequence)
    throw Error("disk_block_stats: certificate names sequence '" +
                cert.sequence + "' but got '" + ws.name() + "'");
  const VerifyResult vr = verify_certificate(disk_oracle(ws), cert);
  if (!vr.ok)
    throw Error("disk_block_stats: certificate fails under the disk oracle "
                "at row " + std::to_string(vr.first_bad_row));
  if (cert.a.size() >= 3 && coeffs.max_index() < cert.a[2])
    throw Error("disk_block_stats: coefficients must cover the first two blocks");
  const double ln_c = std::log(c);
  const std::size_t blocks = cert.a.size() - 1;
  std::vector<double> radius(blocks), prefactor(blocks);
  for (std::size_t j = 0; j < blocks; ++j) {
    const int anchor = cert.a[j] + 1;
    const double lam =
        require_positive_quotient(ws, anchor, "disk_block_stats");
    radius[j] = log1mexp(lam) - ln_c;
    prefactor[j] = ws.log_m(anchor) - anchor * lam;
  }
  return assemble_block_report(ws, cert, coeffs, radius, prefactor,
                               slope_threshold);
}

}  // namespace lusky
