#pragma once

// =====================================================================
//  Regularity condition (b): A/B quotient bounds and Lusky numbers
// =====================================================================
//
//  For an admissible weight sequence M and integers 1 <= k < l <= P-1 set
//
//    log A(k,l) = (l-k) * lambda_{l+1} - sum_{i=k+1}^{l} lambda_i
//    log B(k,l) = sum_{i=k+1}^{l} lambda_i - (l-k) * lambda_{k+1}
//
//  (both >= 0 when M is log-convex).  A strictly increasing integer chain
//  (a_j) is a Lusky chain for bounds [log b, log K], K >= b > 2, when every
//  consecutive pair lands in the window:
//
//    log b <= min(log A, log B)(a_j, a_{j+1})  and  max(...) <= log K.
//
//  The product identity log A + log B = (l-k)(lambda_{l+1} - lambda_{k+1})
//  ties the two; in the difference view delta_p = lambda_p - lambda_{p-1},
//
//    log A = (l-k) delta_{l+1} + sum_{i=1}^{l-k-1} i * delta_{k+1+i}
//    log B = (l-k) * sum_{i=k+2}^{l} delta_i - sum_{i=1}^{l-k-1} i * delta_{k+1+i}
//
//  which the dual-form evaluator below implements as an independent path.
// =====================================================================

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lusky/weight_sequence.hpp"

namespace lusky {

struct LogAB {
  double log_a;
  double log_b;
};

// Prefix-sum form.  O(1) for wide windows; narrow windows (l - k <= 512)
// are summed directly over the window, which keeps the cancellation error
// near machine precision for the spike constructions below.
LogAB log_ab(const WeightSequence& ws, int k, int l);

// Difference form (independent evaluation path; see header comment).
LogAB log_ab_delta(const DeltaSeq& d, int k, int l);

// Any (k, l) -> (log A, log B) evaluator: the entire-case log_ab above, the
// disk-case variant, or a numeric-weight evaluator.  The search and the
// verifier are generic over this.
using AbOracle = std::function<LogAB(int, int)>;

// Oracle view of log_ab over a fixed sequence.
AbOracle sequence_oracle(const WeightSequence& ws);

struct CertRow {
  double log_a;
  double log_b;
};

struct LuskyCertificate {
  std::string sequence;  // name of the sequence the rows were computed on
  std::vector<int> a;    // strictly increasing chain, a.size() == rows.size() + 1
  double log_b_bound;
  double log_k_bound;
  std::vector<CertRow> rows;

  int max_gap() const;
};

enum class Violation { ALow, AHigh, BLow, BHigh, Horizon };

const char* violation_name(Violation v);

struct FailureCandidate {
  int gap;
  double log_a;  // nan when the candidate fell outside the horizon
  double log_b;
  Violation violation;
};

// Dead-end record: at chain position `stuck_index` (0-based row we failed
// to produce), starting from a_j = stuck_at, every gap in [2, gap_max] was
// rejected; `candidates` records one row per gap, in increasing gap order.
struct FailureTrace {
  int stuck_index;
  int stuck_at;
  std::vector<FailureCandidate> candidates;
};

struct SearchResult {
  std::optional<LuskyCertificate> certificate;
  std::optional<FailureTrace> failure;
  bool ok() const { return certificate.has_value(); }
};

// Greedy chain search: from a_1, scan gaps 2..gap_max in increasing order
// and accept the first candidate whose (log A, log B) both land in
// [log_b, log_k].  No backtracking.  Succeeds when the smallest candidate
// would need data beyond the horizon (a_j + 3 > horizon); a dead end while
// candidates remain in range yields a FailureTrace instead.  Requires
// log_b > ln 2 (i.e. b > 2), log_k >= log_b, a1 >= 1, gap_max >= 2.
SearchResult search_lusky(const AbOracle& oracle, int horizon, double log_b,
                          double log_k, int a1, int gap_max,
                          std::string sequence_name);

struct VerifyResult {
  bool ok;
  int first_bad_row;  // -1 when ok
  std::vector<CertRow> recomputed;
  int max_gap;
  bool gaps_bounded_like;  // no new maximum gap in the last decile of rows
};

// Recomputes every row through the oracle and checks the bounds (with a
// 1e-9 relative slack so exactly-on-the-boundary constructions still
// verify under an independent evaluation path).  The WeightSequence
// overload refuses certificates naming a different sequence.
VerifyResult verify_certificate(const AbOracle& oracle,
                                const LuskyCertificate& cert);
VerifyResult verify_certificate(const WeightSequence& ws,
                                const LuskyCertificate& cert);

// Necessary conditions on a chain alone (no sequence): all gaps >= 2, and
// sum_j 1/(a_{j+1} - a_j) should diverge.  On a finite chain divergence is
// reported as a trend: the slope of the reciprocal-gap partial sums against
// log of the count, fitted over the tail; slope >= 0.25 counts as
// divergent-like.  (The threshold is a pinned heuristic convention.)
struct NecessaryReport {
  int min_gap;
  bool gaps_ok;
  std::optional<int> bad_gap_index;  // first j with a_{j+1} - a_j < 2
  std::vector<double> partial_sums;
  double tail_slope;
  bool divergent_like;
};

NecessaryReport necessary_check(std::span<const int> a);

// Spike construction realizing a prescribed chain: for each block j place
//   delta_{a_j + 2} = delta_{a_{j+1} + 1} = d_j = C / (a_{j+1} - a_j + 1)
// and zero elsewhere.  Then log A(a_j, a_{j+1}) = C exactly and
// log B(a_j, a_{j+1}) = (g_j - 1) * C / (g_j + 1) with g_j the gap; since
// (g-1)/(g+1) >= 1/3 for g >= 2, C >= 3 keeps every row at log B >= 1.
// Requires C >= 3, gaps >= 2, and horizon >= a_last + 1.
WeightSequence build_from_lusky(std::span<const int> a, double C, int horizon);

// Sufficient two-scale test for condition (b) on uniform-delta blocks:
// block lengths C1 <= C2 and levels d1 <= d2 admit the window bounds iff
//   2 <= d1*C1*(1 + C1)   and   1 + d2*C2*(C2 - 1)/2 <= d1*C1*(C1 - 1).
// Requires 0 < d1 <= d2 and 2 <= C1 <= C2.
bool uniform_delta_sufficient(double d1, double d2, double C1, double C2);

// Stretch invariance: the r-interpolating sequence of ws reproduces every
// certificate row on the stretched chain (r*a_j), i.e.
// log_ab(P^{M,r}, r*k, r*l) == log_ab(M, k, l).  Checks all rows to `tol`
// (relative, floored at 1); throws HorizonError if r*a_last + 1 > r*P.
bool stretch_check(const WeightSequence& ws, int r,
                   const LuskyCertificate& cert, double tol = 1e-9);

}  // namespace lusky
