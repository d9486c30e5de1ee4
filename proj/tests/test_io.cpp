// File-format round trips and golden output strings.  Every real travels
// through format_real, so writers are byte-deterministic and readers must
// invert them exactly.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lusky/io.hpp"
#include "lusky/log_domain.hpp"

using namespace lusky;

namespace {

const double kLn2 = std::log(2.0);

// Self-deleting scratch file under the system temp directory.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& tag) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("lusky-io-" + tag + "-" + std::to_string(counter++) + ".json");
  }
  TempFile(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }

  void put(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
  std::string str() const { return path.string(); }
};

WeightSequence mu_2pow(int horizon) {
  std::vector<double> lambda;
  for (int p = 1; p <= horizon; ++p) lambda.push_back(p * kLn2);
  return WeightSequence::from_log_quotients("mu-2pow", std::move(lambda));
}

}  // namespace

TEST_CASE("sequence JSON: bit-exact round trip") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 0.3);
  std::vector<double> lambda;
  double acc = 1e-3;
  for (int p = 0; p < 200; ++p) {
    lambda.push_back(acc);
    acc += u(rng);
  }
  const WeightSequence ws =
      WeightSequence::from_log_quotients("round \"trip\"", lambda);

  TempFile f("seq");
  {
    std::ofstream out(f.path);
    write_sequence_json(ws, out);
  }
  const WeightSequence back = read_sequence_json(f.str());
  CHECK(back.name() == ws.name());
  REQUIRE(back.horizon() == ws.horizon());
  for (int p = 1; p <= ws.horizon(); ++p)
    CHECK(back.lambda(p) == ws.lambda(p));  // exact, not approximate
}

TEST_CASE("sequence JSON: malformed inputs raise descriptive errors") {
  TempFile f("bad-seq");

  f.put("{\"name\": \"x\", \"lambda\": [1.0]}");
  CHECK_THROWS_AS(read_sequence_json(f.str()), Error);  // missing horizon

  f.put("{\"name\": \"x\", \"horizon\": 3, \"lambda\": [1.0, 2.0]}");
  CHECK_THROWS_WITH_AS(read_sequence_json(f.str()),
                       doctest::Contains("horizon"), Error);

  // A decreasing lambda parses fine; admissibility is the caller's check.
  f.put("{\"name\": \"x\", \"horizon\": 2, \"lambda\": [2.0, 1.0]}");
  const WeightSequence loose = read_sequence_json(f.str());
  CHECK_FALSE(loose.log_convex());
  CHECK_THROWS_AS(loose.require_admissible("test"), Error);

  f.put("not json at all");
  CHECK_THROWS_WITH_AS(read_sequence_json(f.str()),
                       doctest::Contains("parse"), Error);

  CHECK_THROWS_WITH_AS(read_sequence_json("/nonexistent/nowhere.json"),
                       doctest::Contains("open"), Error);
}

TEST_CASE("certificate JSON: round trip and shape checks") {
  LuskyCertificate cert;
  cert.sequence = "qgevrey:2";
  cert.a = {1, 3, 5};
  cert.log_b_bound = 1.0;
  cert.log_k_bound = 10.0;
  cert.rows = {{6 * kLn2, 2 * kLn2}, {0.1234567890123456789, kNegInf}};

  TempFile f("cert");
  {
    std::ofstream out(f.path);
    write_certificate_json(cert, out);
  }
  const LuskyCertificate back = read_certificate_json(f.str());
  CHECK(back.sequence == cert.sequence);
  CHECK(back.a == cert.a);
  CHECK(back.log_b_bound == cert.log_b_bound);
  CHECK(back.log_k_bound == cert.log_k_bound);
  REQUIRE(back.rows.size() == cert.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(back.rows[i].log_a == cert.rows[i].log_a);
    CHECK(back.rows[i].log_b == cert.rows[i].log_b);
  }

  f.put("{\"sequence\": \"x\", \"a\": [1, 3], \"logb\": 1, \"rows\": []}");
  CHECK_THROWS_WITH_AS(read_certificate_json(f.str()),
                       doctest::Contains("logK"), Error);

  f.put("{\"sequence\": \"x\", \"a\": [1, 3], \"logb\": 1, \"logK\": 2, "
        "\"rows\": [[1.0]]}");
  CHECK_THROWS_WITH_AS(read_certificate_json(f.str()),
                       doctest::Contains("pairs"), Error);

  f.put("{\"sequence\": \"x\", \"a\": [1, 3, 5], \"logb\": 1, \"logK\": 2, "
        "\"rows\": [[1.0, 1.5]]}");
  CHECK_THROWS_WITH_AS(read_certificate_json(f.str()),
                       doctest::Contains("len(a)"), Error);
}

TEST_CASE("grid JSON: round trip preserves knots and the normalized flag") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 30);
  std::vector<double> xs;
  const double lo = -1.0, hi = ws.lambda(30);
  for (int i = 0; i < 100; ++i) xs.push_back(lo + (hi - lo) * i / 100.0);
  xs.push_back(hi);  // land exactly on lambda_P, not an ulp past it
  const WeightFunctionGrid grid = WeightFunctionGrid::from_sequence(ws, xs);

  TempFile f("grid");
  {
    std::ofstream out(f.path);
    write_grid_json(grid, out);
  }
  const WeightFunctionGrid back = read_grid_json(f.str());
  REQUIRE(back.logt().size() == grid.logt().size());
  for (std::size_t i = 0; i < grid.logt().size(); ++i) {
    CHECK(back.logt()[i] == grid.logt()[i]);
    CHECK(back.logv()[i] == grid.logv()[i]);
  }
  CHECK(back.normalized() == grid.normalized());

  f.put("{\"logt\": [0, 1], \"logv\": [0, -1]}");
  CHECK_THROWS_WITH_AS(read_grid_json(f.str()),
                       doctest::Contains("normalized"), Error);
}

TEST_CASE("coefficients JSON: '-inf' strings are log-zeros, junk is rejected") {
  TempFile f("coeffs");
  f.put("{\"logabs\": [0.5, \"-inf\", -2.25]}");
  const CoefficientPrefix c = read_coefficients_json(f.str());
  REQUIRE(c.logabs.size() == 3);
  CHECK(c.logabs[0] == 0.5);
  CHECK(c.logabs[1] == kNegInf);
  CHECK(c.logabs[2] == -2.25);
  CHECK(c.max_index() == 2);

  f.put("{\"logabs\": [\"inf\"]}");
  CHECK_THROWS_AS(read_coefficients_json(f.str()), Error);
  f.put("{\"logabs\": [\"nan\"]}");
  CHECK_THROWS_AS(read_coefficients_json(f.str()), Error);
  f.put("{\"logabs\": [\"oops\"]}");
  CHECK_THROWS_AS(read_coefficients_json(f.str()), Error);
  f.put("{\"wrong\": []}");
  CHECK_THROWS_WITH_AS(read_coefficients_json(f.str()),
                       doctest::Contains("logabs"), Error);
}

TEST_CASE("property CSV: golden bytes") {
  std::vector<PropertyReport> reports(2);
  reports[0].property = "dc";
  reports[0].statistic = 1.5;
  reports[0].verdict = Verdict::HoldsOnHorizon;
  reports[0].witness_index = 42;
  reports[0].witness_value = 0.25;
  reports[1].property = "mg";
  reports[1].statistic = kNegInf;
  reports[1].verdict = Verdict::Fails;

  std::ostringstream os;
  write_property_csv(reports, os);
  CHECK(os.str() ==
        "property,statistic,verdict,witness_index,witness_value\n"
        "dc,1.5,holds-on-horizon,42,0.25\n"
        "mg,-inf,fails,,\n");
}

TEST_CASE("failure CSV: golden bytes") {
  FailureTrace trace;
  trace.stuck_index = 0;
  trace.stuck_at = 1;
  trace.candidates.push_back(
      {2, 3.5, 0.5, Violation::BLow});
  trace.candidates.push_back(
      {3, std::numeric_limits<double>::quiet_NaN(),
       std::numeric_limits<double>::quiet_NaN(), Violation::Horizon});

  std::ostringstream os;
  write_failure_csv(trace, os);
  CHECK(os.str() ==
        "j,a_j,gap,logA,logB,violation\n"
        "1,1,2,3.5,0.5,B-low\n"
        "1,1,3,nan,nan,horizon\n");
}

TEST_CASE("block CSV: column set follows the norm selection") {
  BlockReport rep;
  rep.rows.push_back({1, 1, 3, -0.5, 0.25});

  std::ostringstream both;
  write_block_csv(rep, NormColumns::Both, both);
  CHECK(both.str() ==
        "j,a_j,a_j1,log_hull,log_core\n"
        "1,1,3,-0.5,0.25\n");

  std::ostringstream hull;
  write_block_csv(rep, NormColumns::Hull, hull);
  CHECK(hull.str() ==
        "j,a_j,a_j1,log_hull\n"
        "1,1,3,-0.5\n");

  std::ostringstream core;
  write_block_csv(rep, NormColumns::Core, core);
  CHECK(core.str() ==
        "j,a_j,a_j1,log_core\n"
        "1,1,3,0.25\n");
}

TEST_CASE("trace CSV: golden row on the factorial family") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 10);
  const std::vector<double> xs{kLn2};
  std::ostringstream os;
  write_trace_csv(ws, xs, os);
  CHECK(os.str() ==
        "t,omega,logh,sigma\n"
        "2,0.69314718055994529,0,2\n");
}

TEST_CASE("disk geometry CSV: golden row on the doubling sequence") {
  const WeightSequence ws = mu_2pow(4);
  std::ostringstream os;
  write_disk_geometry_csv(ws, 1.0, 1, 1, os);
  CHECK(os.str() ==
        "p,k_p,r,logv\n"
        "1,3,0.75,-0.6931471805599454\n");
}

TEST_CASE("ramification CSV carries the summary and the note") {
  const WeightSequence ws = make_family(FamilySpec::parse("gevrey:1"), 200);
  std::vector<double> xs;
  for (int i = 1; i <= 8; ++i) xs.push_back(0.3 * i);
  const RamificationReport rep = ramification_check(ws, 2, xs);

  std::ostringstream os;
  write_ramification_csv(rep, os);
  const std::string text = os.str();
  CHECK(text.rfind("logt,omega_m_tr,omega_interp_t,ratio\n", 0) == 0);
  CHECK(text.find("# ratio range [") != std::string::npos);
  CHECK(text.find("# " + rep.note) != std::string::npos);
  // One data line per sample plus header plus two comment lines.
  std::size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == xs.size() + 3);
}
