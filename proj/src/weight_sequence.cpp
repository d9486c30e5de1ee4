#include "lusky/weight_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lusky/log_domain.hpp"

namespace lusky {

namespace {

std::string idx_msg(const char* what, int p) {
  std::ostringstream os;
  os << what << " at index " << p;
  return os.str();
}

}  // namespace

bool DeltaSeq::non_negative() const {
  return std::all_of(delta.begin(), delta.end(),
                     [](double d) { return d >= 0.0; });
}

WeightSequence WeightSequence::from_log_quotients(std::string name,
                                                  std::vector<double> lambda) {
  if (lambda.empty()) throw Error("weight sequence needs horizon >= 1");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!std::isfinite(lambda[i]))
      throw Error(idx_msg("non-finite log quotient", static_cast<int>(i) + 1));
  }
  WeightSequence ws;
  ws.name_ = std::move(name);
  ws.lambda_ = std::move(lambda);
  ws.log_m_.resize(ws.lambda_.size() + 1);
  ws.log_m_[0] = 0.0;
  KahanSum acc;
  for (std::size_t p = 0; p < ws.lambda_.size(); ++p) {
    acc.add(ws.lambda_[p]);
    ws.log_m_[p + 1] = acc.value();
  }
  ws.normalized_ = ws.lambda_.front() >= 0.0;
  ws.log_convex_ = std::is_sorted(ws.lambda_.begin(), ws.lambda_.end());
  return ws;
}

double WeightSequence::lambda(int p) const {
  if (p == 0) return 0.0;
  if (p < 0 || p > horizon())
    throw HorizonError(idx_msg("lambda index out of horizon", p));
  return lambda_[static_cast<std::size_t>(p) - 1];
}

double WeightSequence::log_m(int p) const {
  if (p < 0 || p > horizon())
    throw HorizonError(idx_msg("logM index out of horizon", p));
  return log_m_[static_cast<std::size_t>(p)];
}

void WeightSequence::require_admissible(const char* who) const {
  if (!normalized_)
    throw Error(std::string(who) + ": sequence '" + name_ +
                "' is not normalized (lambda_1 < 0)");
  if (!log_convex_)
    throw Error(std::string(who) + ": sequence '" + name_ +
                "' is not log-convex (quotients decrease somewhere)");
}

DeltaSeq to_deltas(const WeightSequence& ws) {
  DeltaSeq d;
  d.delta.resize(static_cast<std::size_t>(ws.horizon()));
  double prev = 0.0;
  for (int p = 1; p <= ws.horizon(); ++p) {
    d.delta[static_cast<std::size_t>(p) - 1] = ws.lambda(p) - prev;
    prev = ws.lambda(p);
  }
  return d;
}

WeightSequence from_deltas(std::string name, const DeltaSeq& d) {
  std::vector<double> lambda(d.delta.size());
  double run = 0.0;
  for (std::size_t i = 0; i < d.delta.size(); ++i) {
    run += d.delta[i];
    lambda[i] = run;
  }
  return WeightSequence::from_log_quotients(std::move(name),
                                            std::move(lambda));
}

WeightSequence power_scale(const WeightSequence& ws, double s) {
  if (!(s > 0.0)) throw Error("power_scale: exponent must be positive");
  std::vector<double> lambda(ws.lambdas().begin(), ws.lambdas().end());
  for (double& l : lambda) l *= s;
  std::ostringstream nm;
  nm << ws.name() << "^" << format_real(s);
  return WeightSequence::from_log_quotients(nm.str(), std::move(lambda));
}

WeightSequence combine(const WeightSequence& a, const WeightSequence& b,
                       CombineMode mode) {
  const int p = std::min(a.horizon(), b.horizon());
  std::vector<double> lambda(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    const double x = a.lambda(i);
    const double y = b.lambda(i);
    lambda[static_cast<std::size_t>(i) - 1] =
        mode == CombineMode::Product ? x + y : x - y;
  }
  const char* op = mode == CombineMode::Product ? "*" : "/";
  return WeightSequence::from_log_quotients(
      "(" + a.name() + op + b.name() + ")", std::move(lambda));
}

WeightSequence interpolate(const WeightSequence& ws, int r,
                           long long max_horizon) {
  if (r < 1) throw Error("interpolate: r must be >= 1");
  const long long np = static_cast<long long>(r) * ws.horizon();
  if (np > max_horizon)
    throw Error("interpolate: r * horizon exceeds the configured maximum");
  std::vector<double> lambda(static_cast<std::size_t>(np));
  for (int k = 0; k < ws.horizon(); ++k) {
    const double step = ws.lambda(k + 1) / static_cast<double>(r);
    for (int j = 1; j <= r; ++j)
      lambda[static_cast<std::size_t>(k) * r + j - 1] = step;
  }
  std::ostringstream nm;
  nm << ws.name() << "~interp" << r;
  return WeightSequence::from_log_quotients(nm.str(), std::move(lambda));
}

// ---------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream is(rest);
    double v;
    while (is >> v) args.push_back(v);
    if (!is.eof()) throw Error("family: cannot parse arguments in '" + text + "'");
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error("family '" + head + "' expects " + std::to_string(n) +
                  " argument(s)");
  };
  FamilySpec f;
  if (head == "gevrey") {
    f.kind = Kind::Gevrey;
    need(1);
    f.s = args[0];
    if (!(f.s > 0)) throw Error("gevrey: s must be > 0");
  } else if (head == "harmonic" || head == "harmonic-gevrey") {
    f.kind = Kind::HarmonicGevrey;
    need(1);
    f.s = args[0];
    if (!(f.s > 0)) throw Error("harmonic: s must be > 0");
  } else if (head == "qgevrey") {
    f.kind = Kind::QGevrey;
    need(1);
    f.q = args[0];
    if (!(f.q > 1)) throw Error("qgevrey: q must be > 1");
  } else if (head == "qalpha") {
    f.kind = Kind::QAlphaGevrey;
    need(2);
    f.q = args[0];
    f.alpha = args[1];
    if (!(f.q > 1)) throw Error("qalpha: q must be > 1");
    if (!(f.alpha > 2)) throw Error("qalpha: alpha must be > 2");
  } else if (head == "blockgeom") {
    f.kind = Kind::BlockGeometric;
    need(2);
    f.Q = static_cast<long long>(args[0]);
    f.D = args[1];
    if (f.Q < 2 || static_cast<double>(f.Q) != args[0])
      throw Error("blockgeom: Q must be an integer >= 2");
    if (!(f.D > 1)) throw Error("blockgeom: D must be > 1");
  } else if (head == "blockdyadic") {
    f.kind = Kind::BlockDyadic;
    need(1);
    f.q = args[0];
    if (!(f.q > 2)) throw Error("blockdyadic: Q must be > 2");
  } else {
    throw Error("unknown family '" + head + "'");
  }
  return f;
}

std::string FamilySpec::display() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Gevrey:
      os << "gevrey:" << format_real(s);
      break;
    case Kind::HarmonicGevrey:
      os << "harmonic:" << format_real(s);
      break;
    case Kind::QGevrey:
      os << "qgevrey:" << format_real(q);
      break;
    case Kind::QAlphaGevrey:
      os << "qalpha:" << format_real(q) << "," << format_real(alpha);
      break;
    case Kind::BlockGeometric:
      os << "blockgeom:" << Q << "," << format_real(D);
      break;
    case Kind::BlockDyadic:
      os << "blockdyadic:" << format_real(q);
      break;
  }
  return os.str();
}

WeightSequence block_steps(std::string name, std::span<const long long> b,
                           std::span<const double> logc, int horizon) {
  if (b.size() < 2 || b.size() != logc.size())
    throw Error("block_steps: need matching b/logc arrays with >= 2 blocks");
  if (b[0] != 1) throw Error("block_steps: blocks must start at b_1 = 1");
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (b[j] <= b[j - 1]) throw Error("block_steps: b must increase strictly");
    if (logc[j] <= logc[j - 1])
      throw Error("block_steps: levels must increase strictly");
  }
  if (logc[0] < 0) throw Error("block_steps: first level must be >= log 1");
  if (horizon < b[1] - 1)
    throw Error("block_steps: horizon too small for one full block");
  std::vector<double> lambda(static_cast<std::size_t>(horizon));
  std::size_t j = 0;
  for (long long p = 1; p <= horizon; ++p) {
    while (j + 1 < b.size() && p >= b[j + 1]) ++j;
    lambda[static_cast<std::size_t>(p) - 1] = logc[j];
  }
  return WeightSequence::from_log_quotients(std::move(name),
                                            std::move(lambda));
}

WeightSequence make_family(const FamilySpec& spec, int horizon) {
  if (horizon < 1) throw Error("family: horizon must be >= 1");
  using Kind = FamilySpec::Kind;
  std::vector<double> lambda(static_cast<std::size_t>(horizon));
  switch (spec.kind) {
    case Kind::Gevrey:
      for (int p = 1; p <= horizon; ++p)
        lambda[p - 1] = spec.s * std::log(static_cast<double>(p));
      break;
    case Kind::HarmonicGevrey: {
      KahanSum h;
      for (int p = 1; p <= horizon; ++p) {
        h.add(1.0 / p);
        lambda[p - 1] = spec.s * h.value();
      }
      break;
    }
    case Kind::QGevrey: {
      const double lnq = std::log(spec.q);
      for (int p = 1; p <= horizon; ++p) lambda[p - 1] = (2.0 * p - 1.0) * lnq;
      break;
    }
    case Kind::QAlphaGevrey: {
      const double lnq = std::log(spec.q);
      for (int p = 1; p <= horizon; ++p) {
        const double hi = std::pow(static_cast<double>(p), spec.alpha);
        const double lo = std::pow(static_cast<double>(p - 1), spec.alpha);
        lambda[p - 1] = (hi - lo) * lnq;
      }
      break;
    }
    case Kind::BlockGeometric: {
      std::vector<long long> b{1};
      std::vector<double> logc;
      const double lnD = std::log(spec.D);
      while (b.back() <= horizon) {
        logc.push_back(static_cast<double>(b.back()) * lnD);
        b.push_back(b.back() * spec.Q);
      }
      logc.push_back(static_cast<double>(b.back()) * lnD);  // unread sentinel
      return block_steps(spec.display(), b, logc, horizon);
    }
    case Kind::BlockDyadic: {
      // lambda_p = i * ln Q on p in [2^i, 2^{i+1}); levels Q^i from i = 0.
      const double lnQ = std::log(spec.q);
      std::vector<long long> b;
      std::vector<double> logc;
      for (long long edge = 1, i = 0; edge <= horizon; edge *= 2, ++i) {
        b.push_back(edge);
        logc.push_back(static_cast<double>(i) * lnQ);
      }
      if (b.size() < 2) {
        b.push_back(2);
        logc.push_back(lnQ);
      }
      return block_steps(spec.display(), b, logc, horizon);
    }
  }
  return WeightSequence::from_log_quotients(spec.display(), std::move(lambda));
}

}  // namespace lusky
