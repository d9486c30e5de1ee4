#pragma once

// File formats the CLI speaks.  Writers are hand-rolled so every real is
// emitted through format_real (17 significant digits, "-inf" literal for
// log-zero) and the byte stream is deterministic; readers accept standard
// JSON with "-inf" allowed as a string where a log can be zero.

#include <iosfwd>
#include <string>

#include "lusky/assoc_weight.hpp"
#include "lusky/condition_b.hpp"
#include "lusky/growth_props.hpp"
#include "lusky/hull_core.hpp"
#include "lusky/disk.hpp"

namespace lusky {

// {"name": string, "horizon": int, "lambda": [real...]}
WeightSequence read_sequence_json(const std::string& path);
void write_sequence_json(const WeightSequence& ws, std::ostream& os);

// {"logt": [real...], "logv": [real...], "normalized": bool}
WeightFunctionGrid read_grid_json(const std::string& path);
void write_grid_json(const WeightFunctionGrid& w, std::ostream& os);

// {"sequence": string, "a": [int...], "logb": real, "logK": real,
//  "rows": [[logA, logB]...]}
LuskyCertificate read_certificate_json(const std::string& path);
void write_certificate_json(const LuskyCertificate& cert, std::ostream& os);

// {"logabs": [real-or-"-inf"...]}
CoefficientPrefix read_coefficients_json(const std::string& path);

// CSV: property, statistic, verdict, witness_index, witness_value
// (rows pre-sorted by property name by the producers).
void write_property_csv(std::span<const PropertyReport> reports,
                        std::ostream& os);

// CSV: j, a_j, gap, logA, logB, violation
void write_failure_csv(const FailureTrace& trace, std::ostream& os);

// CSV: j, a_j, a_j1 plus log_hull and/or log_core per `norm`.
enum class NormColumns { Hull, Core, Both };
void write_block_csv(const BlockReport& rep, NormColumns norm,
                     std::ostream& os);

// CSV: t, omega, logh, sigma — all four evaluated at the same t = e^x.
// Requires |x| <= lambda_P per sample (omega needs x <= lambda_P, log h
// needs -x <= lambda_P); t itself may print as "inf" past x ~ 709.
void write_trace_csv(const WeightSequence& ws, std::span<const double> xs,
                     std::ostream& os);

// CSV: p, k_p, r, logv
void write_disk_geometry_csv(const WeightSequence& ws, double c, int p_lo,
                             int p_hi, std::ostream& os);

// CSV rows of a ramification report plus the ratio summary and note.
void write_ramification_csv(const RamificationReport& rep, std::ostream& os);

}  // namespace lusky
