#include "lusky/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

// A real that may arrive as a JSON number or as the strings "-inf"/"inf".
double json_real(const json& v, const char* where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_real(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(std::string(where) + ": cannot parse '" +
                  v.get<std::string>() + "' as a real");
    }
  }
  throw Error(std::string(where) + ": expected a real");
}

// JSON has no literal for infinities, so non-finite reals travel as quoted
// format_real strings; readers fold them back through json_real above.
std::string json_real_str(double x) {
  if (std::isfinite(x)) return format_real(x);
  return "\"" + format_real(x) + "\"";
}

std::vector<double> json_real_array(const json& v, const char* where) {
  if (!v.is_array()) throw Error(std::string(where) + ": expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(json_real(e, where));
  return out;
}

}  // namespace

WeightSequence read_sequence_json(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("name") || !j.contains("horizon") || !j.contains("lambda"))
    throw Error(path + ": sequence JSON needs name/horizon/lambda");
  const auto lambda = json_real_array(j["lambda"], "lambda");
  const long long horizon = j["horizon"].get<long long>();
  if (horizon != static_cast<long long>(lambda.size()))
    throw Error(path + ": horizon does not match lambda length");
  return WeightSequence::from_log_quotients(j["name"].get<std::string>(),
                                            lambda);
}

void write_sequence_json(const WeightSequence& ws, std::ostream& os) {
  os << "{\n  \"name\": " << json(ws.name()).dump()
     << ",\n  \"horizon\": " << ws.horizon() << ",\n  \"lambda\": [";
  for (int p = 1; p <= ws.horizon(); ++p) {
    if (p > 1) os << ", ";
    os << json_real_str(ws.lambda(p));
  }
  os << "]\n}\n";
}

WeightFunctionGrid read_grid_json(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("logt") || !j.contains("logv") || !j.contains("normalized"))
    throw Error(path + ": grid JSON needs logt/logv/normalized");
  return WeightFunctionGrid(json_real_array(j["logt"], "logt"),
                            json_real_array(j["logv"], "logv"),
                            j["normalized"].get<bool>());
}

void write_grid_json(const WeightFunctionGrid& w, std::ostream& os) {
  const auto dump_array = [&os](std::span<const double> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ", ";
      os << json_real_str(xs[i]);
    }
  };
  os << "{\n  \"logt\": [";
  dump_array(w.logt());
  os << "],\n  \"logv\": [";
  dump_array(w.logv());
  os << "],\n  \"normalized\": " << (w.normalized() ? "true" : "false")
     << "\n}\n";
}

LuskyCertificate read_certificate_json(const std::string& path) {
  const json j = load_json(path);
  for (const char* key : {"sequence", "a", "logb", "logK", "rows"})
    if (!j.contains(key))
      throw Error(path + ": certificate JSON misses '" + std::string(key) + "'");
  LuskyCertificate cert;
  cert.sequence = j["sequence"].get<std::string>();
  for (const auto& e : j["a"]) cert.a.push_back(e.get<int>());
  cert.log_b_bound = json_real(j["logb"], "logb");
  cert.log_k_bound = json_real(j["logK"], "logK");
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.size() != 2)
      throw Error(path + ": certificate rows must be [logA, logB] pairs");
    cert.rows.push_back(
        {json_real(row[0], "rows"), json_real(row[1], "rows")});
  }
  if (cert.a.size() != cert.rows.size() + 1)
    throw Error(path + ": certificate needs len(a) == len(rows) + 1");
  return cert;
}

void write_certificate_json(const LuskyCertificate& cert, std::ostream& os) {
  os << "{\n  \"sequence\": " << json(cert.sequence).dump() << ",\n  \"a\": [";
  for (std::size_t i = 0; i < cert.a.size(); ++i) {
    if (i) os << ", ";
    os << cert.a[i];
  }
  os << "],\n  \"logb\": " << json_real_str(cert.log_b_bound)
     << ",\n  \"logK\": " << json_real_str(cert.log_k_bound)
     << ",\n  \"rows\": [";
  for (std::size_t i = 0; i < cert.rows.size(); ++i) {
    if (i) os << ", ";
    os << "[" << json_real_str(cert.rows[i].log_a) << ", "
       << json_real_str(cert.rows[i].log_b) << "]";
  }
  os << "]\n}\n";
}

CoefficientPrefix read_coefficients_json(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("logabs"))
    throw Error(path + ": coefficients JSON needs 'logabs'");
  CoefficientPrefix c;
  c.logabs = json_real_array(j["logabs"], "logabs");
  for (double v : c.logabs)
    if (std::isnan(v) || v == kPosInf)
      throw Error(path + ": coefficient logs must be finite or -inf");
  return c;
}

void write_property_csv(std::span<const PropertyReport> reports,
                        std::ostream& os) {
  os << "property,statistic,verdict,witness_index,witness_value\n";
  for (const auto& r : reports) {
    os << r.property << "," << format_real(r.statistic) << ","
       << verdict_name(r.verdict) << ",";
    if (r.witness_index) os << *r.witness_index;
    os << ",";
    if (r.witness_value) os << format_real(*r.witness_value);
    os << "\n";
  }
}

void write_failure_csv(const FailureTrace& trace, std::ostream& os) {
  os << "j,a_j,gap,logA,logB,violation\n";
  for (const auto& c : trace.candidates) {
    os << trace.stuck_index + 1 << "," << trace.stuck_at << "," << c.gap << ","
       << format_real(c.log_a) << "," << format_real(c.log_b) << ","
       << violation_name(c.violation) << "\n";
  }
}

void write_block_csv(const BlockReport& rep, NormColumns norm,
                     std::ostream& os) {
  os << "j,a_j,a_j1";
  if (norm != NormColumns::Core) os << ",log_hull";
  if (norm != NormColumns::Hull) os << ",log_core";
  os << "\n";
  for (const auto& row : rep.rows) {
    os << row.j << "," << row.a_lo << "," << row.a_hi;
    if (norm != NormColumns::Core) os << "," << format_real(row.log_hull);
    if (norm != NormColumns::Hull) os << "," << format_real(row.log_core);
    os << "\n";
  }
}

void write_trace_csv(const WeightSequence& ws, std::span<const double> xs,
                     std::ostream& os) {
  os << "t,omega,logh,sigma\n";
  for (double x : xs) {
    const double om = omega_log(ws, x);
    const CountResult cnt = counting(ws, x);
    os << format_real(std::exp(x)) << "," << format_real(om) << ","
       << format_real(log_h(ws, x)) << "," << cnt.count << "\n";
  }
}

void write_disk_geometry_csv(const WeightSequence& ws, double c, int p_lo,
                             int p_hi, std::ostream& os) {
  os << "p,k_p,r,logv\n";
  for (int p = p_lo; p <= p_hi; ++p) {
    const DiskMaxRow row = disk_geometry(ws, c, p);
    os << row.p << "," << format_real(row.k_p) << ","
       << format_real(std::exp(row.log_r)) << "," << format_real(row.log_v)
       << "\n";
  }
}

void write_ramification_csv(const RamificationReport& rep, std::ostream& os) {
  os << "logt,omega_m_tr,omega_interp_t,ratio\n";
  for (const auto& row : rep.rows) {
    os << format_real(row.x) << "," << format_real(row.omega_m_tr) << ","
       << format_real(row.omega_interp_t) << "," << format_real(row.ratio)
       << "\n";
  }
  os << "# ratio range [" << format_real(rep.ratio_min) << ", "
     << format_real(rep.ratio_max) << "]\n";
  os << "# " << rep.note << "\n";
}

}  // namespace lusky
