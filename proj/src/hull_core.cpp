#include "lusky/hull_core.hpp"

#include <algorithm>
#include <cmath>

#include "lusky/assoc_weight.hpp"
#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

void check_inputs(const WeightSequence& ws, const LuskyCertificate& cert,
                  double c, const CoefficientPrefix& coeffs) {
  if (!(c > 0)) throw Error("block_stats: radius parameter c must be > 0");
  const VerifyResult vr = verify_certificate(ws, cert);
  if (!vr.ok)
    throw Error("block_stats: certificate fails at row " +
                std::to_string(vr.first_bad_row));
  if (cert.a.size() >= 3 && coeffs.max_index() < cert.a[2])
    throw Error("block_stats: coefficients must cover the first two blocks");
  for (double v : coeffs.logabs)
    if (std::isnan(v) || v == kPosInf)
      throw Error("block_stats: coefficient logs must be finite or -inf");
}

}  // namespace

BlockReport assemble_block_report(const WeightSequence& ws,
                                  const LuskyCertificate& cert,
                                  const CoefficientPrefix& coeffs,
                                  std::span<const double> block_log_radius,
                                  std::span<const double> block_prefactor,
                                  double slope_threshold) {
  (void)ws;
  BlockReport rep;
  rep.sup_hull = kNegInf;
  rep.sup_core = kNegInf;
  const int n = coeffs.max_index();
  for (std::size_t j = 0; j + 1 < cert.a.size(); ++j) {
    const int lo = cert.a[j];
    const int hi = cert.a[j + 1];
    if (hi > n) break;  // coefficient prefix ends: skip partial blocks
    std::vector<double> core_terms, hull_terms;
    for (int l = lo + 1; l <= hi; ++l) {
      const double term =
          coeffs.logabs[static_cast<std::size_t>(l)] + l * block_log_radius[j];
      core_terms.push_back(term);
      hull_terms.push_back(2.0 * term);
    }
    BlockRow row;
    row.j = static_cast<int>(j) + 1;
    row.a_lo = lo;
    row.a_hi = hi;
    row.log_core = block_prefactor[j] + log_sum_exp(core_terms);
    row.log_hull = block_prefactor[j] + 0.5 * log_sum_exp(hull_terms);
    rep.sup_core = std::max(rep.sup_core, row.log_core);
    rep.sup_hull = std::max(rep.sup_hull, row.log_hull);
    rep.rows.push_back(row);
  }
  if (rep.rows.empty())
    throw Error("block_stats: no complete block inside the coefficient prefix");
  // Tail slope over the last third of finite rows, per norm.
  const std::size_t cut = rep.rows.size() - rep.rows.size() / 3;
  std::vector<double> xs, hull_ys, core_ys;
  for (std::size_t i = (rep.rows.size() >= 3 ? cut : 0); i < rep.rows.size();
       ++i) {
    if (!std::isfinite(rep.rows[i].log_hull) ||
        !std::isfinite(rep.rows[i].log_core))
      continue;
    xs.push_back(static_cast<double>(rep.rows[i].j));
    hull_ys.push_back(rep.rows[i].log_hull);
    core_ys.push_back(rep.rows[i].log_core);
  }
  rep.tail_slope_hull = lsq_slope(xs, hull_ys);
  rep.tail_slope_core = lsq_slope(xs, core_ys);
  rep.bounded_like_hull = std::abs(rep.tail_slope_hull) < slope_threshold;
  rep.bounded_like_core = std::abs(rep.tail_slope_core) < slope_threshold;
  return rep;
}

BlockReport block_stats(const WeightSequence& ws, const LuskyCertificate& cert,
                        double c, const CoefficientPrefix& coeffs,
                        PrefactorAnchor anchor, double slope_threshold) {
  check_inputs(ws, cert, c, coeffs);
  const double ln_c = std::log(c);
  const std::size_t blocks = cert.a.size() - 1;
  std::vector<double> radius(blocks), prefactor(blocks);
  for (std::size_t j = 0; j < blocks; ++j) {
    const int p = (anchor == PrefactorAnchor::Low ? cert.a[j] : cert.a[j + 1]) + 1;
    if (p > ws.horizon())
      throw HorizonError("block_stats: anchor index beyond horizon");
    radius[j] = ws.lambda(p) - ln_c;
    prefactor[j] = ws.log_m(p) - p * ws.lambda(p);
  }
  return assemble_block_report(ws, cert, coeffs, radius, prefactor,
                               slope_threshold);
}

double core_sup_grid(const WeightSequence& ws, double c,
                     const CoefficientPrefix& coeffs,
                     std::span<const double> log_r_grid) {
  if (!(c > 0)) throw Error("core_sup_grid: c must be > 0");
  if (log_r_grid.empty()) throw Error("core_sup_grid: empty grid");
  const double ln_c = std::log(c);
  double best = kNegInf;
  std::vector<double> terms(coeffs.logabs.size());
  for (double x : log_r_grid) {
    for (std::size_t j = 0; j < coeffs.logabs.size(); ++j)
      terms[j] = coeffs.logabs[j] + static_cast<double>(j) * x;
    best = std::max(best, log_sum_exp(terms) - omega_log(ws, x + ln_c));
  }
  return best;
}

double coeff_class_bound(const WeightSequence& ws, double c,
                         const CoefficientPrefix& coeffs) {
  if (!(c > 0)) throw Error("coeff_class_bound: c must be > 0");
  if (coeffs.max_index() > ws.horizon())
    throw HorizonError("coeff_class_bound: coefficients beyond horizon");
  const double ln_c = std::log(c);
  double best = kNegInf;
  for (std::size_t j = 0; j < coeffs.logabs.size(); ++j)
    best = std::max(best, coeffs.logabs[j] + ws.log_m(static_cast<int>(j)) -
                              static_cast<double>(j) * ln_c);
  return best;
}

}  // namespace lusky
