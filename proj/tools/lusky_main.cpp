// =====================================================================
//  lusky — command-line surface over the weight-sequence library
// =====================================================================
//
//  One subcommand per library operation, file-based I/O throughout.
//  Sequences come either from a built-in family (--family qgevrey:2,
//  --horizon 200) or from a sequence JSON file (--seq m.json); results go
//  to stdout or --out.  Every real is printed through format_real, so
//  identical inputs produce byte-identical outputs.
//
//  Exit codes:  0 success — 1 domain error (bad data, horizon violation,
//  failed search/verification) — 2 usage error (bad flags, bad subcommand).
// =====================================================================

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lusky/assoc_weight.hpp"
#include "lusky/condition_b.hpp"
#include "lusky/disk.hpp"
#include "lusky/errors.hpp"
#include "lusky/growth_props.hpp"
#include "lusky/hull_core.hpp"
#include "lusky/io.hpp"
#include "lusky/log_domain.hpp"
#include "lusky/scenarios.hpp"
#include "lusky/weight_sequence.hpp"

namespace {

using namespace lusky;

// Flag problems detected after parsing (missing --family/--seq, bad enum
// values, ...).  Mapped to exit 2, like CLI11's own parse errors.
struct UsageError {
  std::string msg;
};

// ---------------------------------------------------------------------
// Option state.  A single bundle shared by all subcommands: exactly one
// subcommand parses per invocation, so there is no cross-talk.  Values
// that need per-subcommand defaults are optionals resolved at use.
// ---------------------------------------------------------------------
struct Options {
  // Sequence input
  std::string family;
  std::string seq_path;
  long long horizon = 256;

  // Output
  std::string out;
  std::string format;
  std::optional<double> tol;

  // ab / disk-ab anchors
  int k = 0, l = 0;
  int p = 0, q = 0;

  // Chain search window (linear or log spellings)
  std::optional<double> b_lin, big_k_lin, log_b, log_k;
  int a1 = 1;
  int gap_max = 64;

  // File inputs
  std::string cert_path, coeffs_path, grid_path;

  // Block statistics
  double c = 1.0;
  std::string norm;
  std::string anchor = "low";
  double slope_threshold = 0.01;

  // Interpolation / ramification
  int r = 2;
  int samples = 20;

  // Grids over x = ln t (resp. ln r for core-sup)
  std::optional<int> points;
  std::optional<double> lo, hi;
  int conj_horizon = 50;

  // disk-geom anchor range (p_hi == 0 means "to the horizon")
  int p_lo = 1, p_hi = 0;

  // repro
  std::string scenario;
  bool list_scenarios = false;
  std::string gaps = "linear";
  double big_c = 3.0;
  int blocks = 30;
};

// ---------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------

WeightSequence sequence_from(const Options& o) {
  if (!o.family.empty() && !o.seq_path.empty())
    throw UsageError{"--family and --seq are mutually exclusive"};
  if (!o.family.empty()) {
    if (o.horizon < 1 || o.horizon > 100'000'000)
      throw UsageError{"--horizon must be in [1, 1e8]"};
    return make_family(FamilySpec::parse(o.family),
                       static_cast<int>(o.horizon));
  }
  if (!o.seq_path.empty()) return read_sequence_json(o.seq_path);
  throw UsageError{"need a sequence: --family <spec> or --seq <file>"};
}

// Runs `emit` against stdout or the --out file.
int with_output(const Options& o, const std::function<void(std::ostream&)>& emit) {
  if (o.out.empty()) {
    emit(std::cout);
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot open '" + o.out + "' for writing");
  emit(f);
  return 0;
}

// Each payload has one natural format; --format only confirms it.
void require_format(const Options& o, const char* natural) {
  if (!o.format.empty() && o.format != natural)
    throw UsageError{"--format " + o.format +
                     " is not available for this subcommand (emits " +
                     natural + ")"};
}

// Bare JSON token for a real: numbers stay bare, infinities are quoted so
// the summary objects remain valid JSON.
std::string json_real_out(double x) {
  if (std::isfinite(x)) return format_real(x);
  return "\"" + format_real(x) + "\"";
}

std::vector<double> linspace(double lo, double hi, int n, const char* what) {
  if (n < 2) throw UsageError{std::string(what) + ": need --points >= 2"};
  if (!(hi > lo))
    throw UsageError{std::string(what) + ": need lo < hi (got [" +
                     format_real(lo) + ", " + format_real(hi) + "])"};
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  xs.back() = hi;
  return xs;
}

double resolve_log_bound(const std::optional<double>& lin,
                         const std::optional<double>& log,
                         const char* lin_name, const char* log_name) {
  if (lin && log)
    throw UsageError{std::string("--") + lin_name + " and --" + log_name +
                     " are mutually exclusive"};
  if (lin) {
    if (!(*lin > 0))
      throw UsageError{std::string("--") + lin_name + " must be > 0"};
    return std::log(*lin);
  }
  if (log) return *log;
  throw UsageError{std::string("need --") + lin_name + " or --" + log_name};
}

NormColumns parse_norm(const std::string& s, NormColumns fallback) {
  if (s.empty()) return fallback;
  if (s == "hull") return NormColumns::Hull;
  if (s == "core") return NormColumns::Core;
  if (s == "both") return NormColumns::Both;
  throw UsageError{"--norm must be hull, core, or both"};
}

PrefactorAnchor parse_anchor(const std::string& s) {
  if (s == "low") return PrefactorAnchor::Low;
  if (s == "high") return PrefactorAnchor::High;
  throw UsageError{"--anchor must be low or high"};
}

// ---------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------

int run_family(const Options& o) {
  require_format(o, "json");
  const WeightSequence ws = sequence_from(o);
  return with_output(o, [&](std::ostream& os) { write_sequence_json(ws, os); });
}

int run_props(const Options& o, int ratio_q, double tail_fraction) {
  require_format(o, "csv");
  if (ratio_q < 2) throw UsageError{"--q must be >= 2"};
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw UsageError{"--tail-fraction must be in (0, 1]"};
  const WeightSequence ws = sequence_from(o);
  std::vector<PropertyReport> reports = structural_checks(ws);
  for (auto& r : asymptotic_stats(ws, ratio_q, tail_fraction))
    reports.push_back(std::move(r));
  std::sort(reports.begin(), reports.end(),
            [](const PropertyReport& a, const PropertyReport& b) {
              return a.property < b.property;
            });
  return with_output(o, [&](std::ostream& os) { write_property_csv(reports, os); });
}

int run_ab(const Options& o) {
  require_format(o, "text");
  const WeightSequence ws = sequence_from(o);
  const LogAB r = log_ab(ws, o.k, o.l);
  return with_output(o, [&](std::ostream& os) {
    os << "logA = " << format_real(r.log_a) << "\n"
       << "logB = " << format_real(r.log_b) << "\n";
  });
}

int run_search(const Options& o) {
  require_format(o, "json");
  const double log_b = resolve_log_bound(o.b_lin, o.log_b, "b", "logb");
  const double log_k = resolve_log_bound(o.big_k_lin, o.log_k, "K", "logK");
  const WeightSequence ws = sequence_from(o);
  const SearchResult res = search_lusky(sequence_oracle(ws), ws.horizon(),
                                        log_b, log_k, o.a1, o.gap_max,
                                        ws.name());
  if (res.ok()) {
    return with_output(o, [&](std::ostream& os) {
      write_certificate_json(*res.certificate, os);
    });
  }
  const FailureTrace& t = *res.failure;
  with_output(o, [&](std::ostream& os) { write_failure_csv(t, os); });
  std::cerr << "lusky-search: dead end at chain position " << t.stuck_index
            << " (a_j = " << t.stuck_at << "): every gap in [2, " << o.gap_max
            << "] leaves the window [" << format_real(log_b) << ", "
            << format_real(log_k) << "]; per-gap trace "
            << (o.out.empty() ? "above" : "written to " + o.out) << "\n";
  return 1;
}

int run_verify(const Options& o) {
  require_format(o, "json");
  if (o.cert_path.empty()) throw UsageError{"need --cert <file>"};
  const WeightSequence ws = sequence_from(o);
  const LuskyCertificate cert = read_certificate_json(o.cert_path);
  const VerifyResult vr = verify_certificate(ws, cert);
  with_output(o, [&](std::ostream& os) {
    os << "{\n  \"ok\": " << (vr.ok ? "true" : "false")
       << ",\n  \"rows\": " << cert.rows.size()
       << ",\n  \"first_bad_row\": " << vr.first_bad_row
       << ",\n  \"max_gap\": " << vr.max_gap
       << ",\n  \"gaps_bounded_like\": "
       << (vr.gaps_bounded_like ? "true" : "false") << "\n}\n";
  });
  if (!vr.ok) {
    const CertRow& bad = vr.recomputed[static_cast<std::size_t>(vr.first_bad_row)];
    std::cerr << "verify: row " << vr.first_bad_row << " recomputes to logA = "
              << format_real(bad.log_a) << ", logB = " << format_real(bad.log_b)
              << " outside [" << format_real(cert.log_b_bound) << ", "
              << format_real(cert.log_k_bound) << "]\n";
    return 1;
  }
  return 0;
}

int run_interp(const Options& o) {
  require_format(o, "json");
  if (o.r < 1) throw UsageError{"--r must be >= 1"};
  const WeightSequence ws = sequence_from(o);
  const WeightSequence out = interpolate(ws, o.r);
  return with_output(o, [&](std::ostream& os) { write_sequence_json(out, os); });
}

int run_ramify(const Options& o) {
  require_format(o, "csv");
  if (o.r < 2) throw UsageError{"--r must be >= 2"};
  if (o.samples < 1) throw UsageError{"--samples must be >= 1"};
  const WeightSequence ws = sequence_from(o);
  // Sample the upper half of the common domain: x in (top/2, 0.98*top]
  // with top = lambda_P / r keeps both omega's away from their flat part
  // and inside the stretched sequence's horizon.
  const double top = ws.lambda(ws.horizon()) / o.r;
  if (!(top > 0)) throw Error("ramify-check: lambda_P must be positive");
  std::vector<double> xs;
  for (int i = 0; i < o.samples; ++i) {
    const double f = o.samples == 1
                         ? 0.98
                         : 0.5 + 0.48 * static_cast<double>(i) / (o.samples - 1);
    xs.push_back(top * f);
  }
  const RamificationReport rep = ramification_check(ws, o.r, xs);
  return with_output(o, [&](std::ostream& os) { write_ramification_csv(rep, os); });
}

int run_convert(const Options& o) {
  require_format(o, "json");
  if (!o.grid_path.empty()) {
    // grid -> sequence (Legendre-type conjugate on the grid)
    if (!o.family.empty() || !o.seq_path.empty())
      throw UsageError{"--grid converts a grid; drop --family/--seq"};
    if (o.horizon < 1 || o.horizon > 1'000'000)
      throw UsageError{"--horizon must be in [1, 1e6] for the conjugate"};
    const WeightFunctionGrid grid = read_grid_json(o.grid_path);
    const WeightSequence conj =
        conjugate_sequence(grid, static_cast<int>(o.horizon));
    return with_output(o, [&](std::ostream& os) { write_sequence_json(conj, os); });
  }
  // sequence -> grid (sample log v_M = -omega_M on ln t points)
  const WeightSequence ws = sequence_from(o);
  const double hi = o.hi.value_or(ws.lambda(ws.horizon()));
  const double lo = o.lo.value_or(std::min(-1.0, hi - 1.0));
  const auto xs = linspace(lo, hi, o.points.value_or(1001), "convert");
  const WeightFunctionGrid grid = WeightFunctionGrid::from_sequence(ws, xs);
  return with_output(o, [&](std::ostream& os) { write_grid_json(grid, os); });
}

int run_sandwich(const Options& o) {
  require_format(o, "json");
  std::optional<WeightFunctionGrid> grid;
  std::optional<WeightSequence> conj;
  if (!o.grid_path.empty()) {
    // Check a given grid against a given candidate conjugate.
    grid = read_grid_json(o.grid_path);
    conj = sequence_from(o);
  } else {
    // Round trip: sample the sequence's own weight, conjugate it back.
    const WeightSequence ws = sequence_from(o);
    const double hi = o.hi.value_or(ws.lambda(ws.horizon()));
    const double lo = o.lo.value_or(std::min(-1.0, hi - 1.0));
    const auto xs = linspace(lo, hi, o.points.value_or(4001), "sandwich");
    grid = WeightFunctionGrid::from_sequence(ws, xs);
    if (o.conj_horizon < 1) throw UsageError{"--p must be >= 1"};
    conj = conjugate_sequence(*grid, o.conj_horizon);
  }
  // Sample at grid points, clear of the right edge where the reconstructed
  // horizon ends (the conjugate's lambda_P may sit a hair below the grid's
  // last knot).
  const double edge = conj->lambda(conj->horizon()) - 0.02;
  std::vector<double> samples;
  for (double x : grid->logt())
    if (x <= edge) samples.push_back(x);
  if (samples.size() < 2)
    throw Error("sandwich: no grid samples below the conjugate's horizon");
  const SandwichResult res =
      sandwich_check(*grid, *conj, samples, o.tol.value_or(1e-6));
  return with_output(o, [&](std::ostream& os) {
    os << "{\n  \"log_a\": " << json_real_out(res.log_a)
       << ",\n  \"max_violation\": " << json_real_out(res.max_violation)
       << ",\n  \"samples\": " << samples.size()
       << ",\n  \"conj_horizon\": " << conj->horizon() << "\n}\n";
  });
}

int run_block(const Options& o, NormColumns default_norm) {
  require_format(o, "csv");
  if (o.cert_path.empty()) throw UsageError{"need --cert <file>"};
  if (o.coeffs_path.empty()) throw UsageError{"need --coeffs <file>"};
  if (!(o.c > 0)) throw UsageError{"--c must be > 0"};
  const WeightSequence ws = sequence_from(o);
  const LuskyCertificate cert = read_certificate_json(o.cert_path);
  const CoefficientPrefix coeffs = read_coefficients_json(o.coeffs_path);
  const BlockReport rep = block_stats(ws, cert, o.c, coeffs,
                                      parse_anchor(o.anchor), o.slope_threshold);
  const NormColumns norm = parse_norm(o.norm, default_norm);
  return with_output(o, [&](std::ostream& os) { write_block_csv(rep, norm, os); });
}

int run_core_sup(const Options& o) {
  require_format(o, "json");
  if (o.coeffs_path.empty()) throw UsageError{"need --coeffs <file>"};
  if (!(o.c > 0)) throw UsageError{"--c must be > 0"};
  const WeightSequence ws = sequence_from(o);
  const CoefficientPrefix coeffs = read_coefficients_json(o.coeffs_path);
  // omega is evaluated at c*r, so the default radius grid stops where
  // ln c + ln r hits the horizon.
  const double hi = o.hi.value_or(ws.lambda(ws.horizon()) - std::log(o.c));
  const double lo = o.lo.value_or(std::min(-1.0, hi - 1.0));
  const auto grid = linspace(lo, hi, o.points.value_or(200), "core-sup");
  const double sup = core_sup_grid(ws, o.c, coeffs, grid);
  return with_output(o, [&](std::ostream& os) {
    os << "{\n  \"core_sup\": " << json_real_out(sup)
       << ",\n  \"points\": " << grid.size() << "\n}\n";
  });
}

int run_coeff_bound(const Options& o) {
  require_format(o, "json");
  if (o.coeffs_path.empty()) throw UsageError{"need --coeffs <file>"};
  if (!(o.c > 0)) throw UsageError{"--c must be > 0"};
  const WeightSequence ws = sequence_from(o);
  const CoefficientPrefix coeffs = read_coefficients_json(o.coeffs_path);
  const double bound = coeff_class_bound(ws, o.c, coeffs);
  return with_output(o, [&](std::ostream& os) {
    os << "{\n  \"bound\": " << json_real_out(bound) << "\n}\n";
  });
}

int run_disk_geom(const Options& o) {
  require_format(o, "csv");
  if (!(o.c > 0)) throw UsageError{"--c must be > 0"};
  const WeightSequence ws = sequence_from(o);
  const int p_hi = o.p_hi == 0 ? ws.horizon() - 1 : o.p_hi;
  if (o.p_lo < 1 || p_hi < o.p_lo)
    throw UsageError{"need 1 <= --p-lo <= --p-hi"};
  return with_output(o, [&](std::ostream& os) {
    write_disk_geometry_csv(ws, o.c, o.p_lo, p_hi, os);
  });
}

int run_disk_ab(const Options& o) {
  require_format(o, "text");
  const WeightSequence ws = sequence_from(o);
  const LogAB r = disk_log_ab(ws, o.p, o.q);
  return with_output(o, [&](std::ostream& os) {
    os << "logA = " << format_real(r.log_a) << "\n"
       << "logB = " << format_real(r.log_b) << "\n";
  });
}

int run_disk_hull(const Options& o) {
  require_format(o, "csv");
  if (o.cert_path.empty()) throw UsageError{"need --cert <file>"};
  if (o.coeffs_path.empty()) throw UsageError{"need --coeffs <file>"};
  if (!(o.c > 0)) throw UsageError{"--c must be > 0"};
  const WeightSequence ws = sequence_from(o);
  const LuskyCertificate cert = read_certificate_json(o.cert_path);
  const CoefficientPrefix coeffs = read_coefficients_json(o.coeffs_path);
  const BlockReport rep =
      disk_block_stats(ws, cert, o.c, coeffs, o.slope_threshold);
  const NormColumns norm = parse_norm(o.norm, NormColumns::Both);
  return with_output(o, [&](std::ostream& os) { write_block_csv(rep, norm, os); });
}

int run_trace(const Options& o) {
  require_format(o, "csv");
  const WeightSequence ws = sequence_from(o);
  const double hi = o.hi.value_or(ws.lambda(ws.horizon()));
  const double lo = o.lo.value_or(0.0);
  const auto xs = linspace(lo, hi, o.points.value_or(200), "trace");
  return with_output(o, [&](std::ostream& os) { write_trace_csv(ws, xs, os); });
}

int run_repro(const Options& o) {
  require_format(o, "text");
  if (o.list_scenarios) {
    for (const char* name : scenario_names()) std::cout << name << "\n";
    return 0;
  }
  if (o.scenario.empty())
    throw UsageError{"name a scenario (see `repro --list`)"};
  const ScenarioResult res =
      o.scenario == "prop-ajexample"
          ? run_ajexample({o.gaps, o.big_c, o.blocks})
          : run_scenario(o.scenario);
  return with_output(o, [&](std::ostream& os) {
           for (const auto& line : res.lines) os << line << "\n";
           os << (res.pass ? "PASS: " : "FAIL: ") << res.name << "\n";
         }) == 0 && res.pass
             ? 0
             : 1;
}

// ---------------------------------------------------------------------
// Wiring
// ---------------------------------------------------------------------

void add_sequence_opts(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family,
                  "built-in family: gevrey:s, harmonic:s, qgevrey:q, "
                  "qalpha:q,a, blockgeom:Q,D, blockdyadic:Q");
  sub->add_option("--seq", o.seq_path, "sequence JSON file");
  sub->add_option("--horizon", o.horizon,
                  "horizon P when building from --family (default 256)");
}

void add_output_opts(CLI::App* sub, Options& o, const char* natural) {
  sub->add_option("--out", o.out, "write to this file instead of stdout");
  sub->add_option("--format", o.format,
                  std::string("output format (only '") + natural +
                      "' here)");
  sub->add_option("--tol", o.tol, "tolerance, where the check takes one");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Log-convex weight sequences: associated weight functions, growth "
      "conditions, A/B quotient windows and Lusky chains, solid hull/core "
      "block statistics, and disk-type weights.  All reals live in the "
      "natural-log domain (nats)."};
  app.name("lusky");
  app.require_subcommand(1);

  Options o;
  int ratio_q = 2;
  double tail_fraction = 0.5;
  std::function<int()> action;

  {
    auto* sub = app.add_subcommand(
        "family", "emit a built-in sequence (or re-emit --seq) as JSON");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->callback([&] { action = [&] { return run_family(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "props", "structural and asymptotic growth-condition reports (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--q", ratio_q, "ratio in the beta conditions (default 2)");
    sub->add_option("--tail-fraction", tail_fraction,
                    "statistic window as a fraction of the horizon (default 0.5)");
    sub->callback([&] { action = [&] { return run_props(o, ratio_q, tail_fraction); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "ab", "print the quotient bounds logA(k,l), logB(k,l)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "text");
    sub->add_option("--k", o.k, "left index, 1 <= k")->required();
    sub->add_option("--l", o.l, "right index, k < l <= P-1")->required();
    sub->callback([&] { action = [&] { return run_ab(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "lusky-search",
        "greedy chain search in the window [log b, log K]; certificate JSON "
        "on success, per-gap failure trace (CSV) and exit 1 on a dead end");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--b", o.b_lin, "lower bound b > 2 (linear)");
    sub->add_option("--logb", o.log_b, "lower bound as log b");
    sub->add_option("--K", o.big_k_lin, "upper bound K >= b (linear)");
    sub->add_option("--logK", o.log_k, "upper bound as log K");
    sub->add_option("--a1", o.a1, "first chain point (default 1)");
    sub->add_option("--gap-max", o.gap_max,
                    "largest gap the search will try (default 64)");
    sub->callback([&] { action = [&] { return run_search(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "verify", "recompute a certificate's rows and check the window");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--cert", o.cert_path, "certificate JSON file")->required();
    sub->callback([&] { action = [&] { return run_verify(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "interp", "r-interpolating sequence on horizon r*P (JSON)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--r", o.r, "stretch factor r >= 1")->required();
    sub->callback([&] { action = [&] { return run_interp(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "ramify-check",
        "measure omega_M(t^r) against omega of the r-interpolation (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--r", o.r, "stretch factor r >= 2 (default 2)");
    sub->add_option("--samples", o.samples, "sample count (default 20)");
    sub->callback([&] { action = [&] { return run_ramify(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "convert",
        "sequence -> sampled weight grid, or --grid -> conjugate sequence");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--grid", o.grid_path, "weight grid JSON to conjugate");
    sub->add_option("--points", o.points, "grid size (default 1001)");
    sub->add_option("--lo", o.lo, "left edge in ln t (default -1)");
    sub->add_option("--hi", o.hi, "right edge in ln t (default lambda_P)");
    sub->callback([&] { action = [&] { return run_convert(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "sandwich",
        "two-sided weight comparison: v against its conjugate's weight");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--grid", o.grid_path,
                    "check this grid against --seq/--family as the conjugate "
                    "(default: round-trip the sequence's own weight)");
    sub->add_option("--points", o.points, "grid size (default 4001)");
    sub->add_option("--lo", o.lo, "left edge in ln t (default -1)");
    sub->add_option("--hi", o.hi, "right edge in ln t (default lambda_P)");
    sub->add_option("--p", o.conj_horizon,
                    "conjugate horizon for the round trip (default 50)");
    sub->callback([&] { action = [&] { return run_sandwich(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "hull", "solid-hull block statistics for a coefficient prefix (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--cert", o.cert_path, "verified chain certificate")->required();
    sub->add_option("--coeffs", o.coeffs_path, "coefficient JSON")->required();
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->add_option("--norm", o.norm, "columns: hull | core | both (default hull)");
    sub->add_option("--anchor", o.anchor, "block weight anchor: low | high");
    sub->add_option("--slope-threshold", o.slope_threshold,
                    "tail-slope threshold for the bounded-like flag");
    sub->callback([&] { action = [&] { return run_block(o, NormColumns::Hull); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "core", "solid-core block statistics for a coefficient prefix (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--cert", o.cert_path, "verified chain certificate")->required();
    sub->add_option("--coeffs", o.coeffs_path, "coefficient JSON")->required();
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->add_option("--norm", o.norm, "columns: hull | core | both (default core)");
    sub->add_option("--anchor", o.anchor, "block weight anchor: low | high");
    sub->add_option("--slope-threshold", o.slope_threshold,
                    "tail-slope threshold for the bounded-like flag");
    sub->callback([&] { action = [&] { return run_block(o, NormColumns::Core); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "core-sup", "direct sup over a radius grid of the core norm candidate");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--coeffs", o.coeffs_path, "coefficient JSON")->required();
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->add_option("--points", o.points, "radius grid size (default 200)");
    sub->add_option("--lo", o.lo, "left edge in ln r (default -1)");
    sub->add_option("--hi", o.hi, "right edge in ln r (default lambda_P - ln c)");
    sub->callback([&] { action = [&] { return run_core_sup(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "coeff-bound", "largest coefficient against the weighted-class bound");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "json");
    sub->add_option("--coeffs", o.coeffs_path, "coefficient JSON")->required();
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->callback([&] { action = [&] { return run_coeff_bound(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "disk-geom", "anchor table k_p, r_{k_p}, log v(r_{k_p}) (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->add_option("--p-lo", o.p_lo, "first anchor index (default 1)");
    sub->add_option("--p-hi", o.p_hi, "last anchor index (default P-1)");
    sub->callback([&] { action = [&] { return run_disk_geom(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "disk-ab", "print the disk quotient bounds logA_D(p,q), logB_D(p,q)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "text");
    sub->add_option("--p", o.p, "left anchor, 1 <= p")->required();
    sub->add_option("--q", o.q, "right anchor, p < q <= P-1")->required();
    sub->callback([&] { action = [&] { return run_disk_ab(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "disk-hull", "hull/core block statistics against the disk weight (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--cert", o.cert_path,
                    "certificate verified under the disk bounds")->required();
    sub->add_option("--coeffs", o.coeffs_path, "coefficient JSON")->required();
    sub->add_option("--c", o.c, "radius parameter c > 0 (default 1)");
    sub->add_option("--norm", o.norm, "columns: hull | core | both (default both)");
    sub->add_option("--slope-threshold", o.slope_threshold,
                    "tail-slope threshold for the bounded-like flag");
    sub->callback([&] { action = [&] { return run_disk_hull(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "trace", "tabulate t, omega, log h, and the counting function (CSV)");
    add_sequence_opts(sub, o);
    add_output_opts(sub, o, "csv");
    sub->add_option("--points", o.points, "sample count (default 200)");
    sub->add_option("--lo", o.lo, "left edge in ln t (default 0)");
    sub->add_option("--hi", o.hi, "right edge in ln t (default lambda_P)");
    sub->callback([&] { action = [&] { return run_trace(o); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "repro", "run a named reproduction scenario and print PASS/FAIL");
    add_output_opts(sub, o, "text");
    sub->add_option("scenario", o.scenario, "scenario name");
    sub->add_flag("--list", o.list_scenarios, "list scenario names and exit");
    sub->add_option("--gaps", o.gaps,
                    "prop-ajexample gap pattern: linear | const:<g>");
    sub->add_option("--C", o.big_c, "prop-ajexample level C >= 3 (default 3)");
    sub->add_option("--blocks", o.blocks, "prop-ajexample block count (default 30)");
    sub->callback([&] { action = [&] { return run_repro(o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& u) {
    std::cerr << "usage error: " << u.msg << "\n";
    return 2;
  } catch (const lusky::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
