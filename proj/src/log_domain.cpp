#include "lusky/log_domain.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace lusky {

double kahan_total(std::span<const double> xs) {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

double log_sum_exp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;  // empty or all zero terms
  if (m == kPosInf) return kPosInf;
  KahanSum acc;
  for (double x : xs) acc.add(std::exp(x - m));
  return m + std::log(acc.value());
}

double log1mexp(double x) {
  if (!(x > 0.0)) {
    if (x == 0.0) return kNegInf;
    throw std::invalid_argument("log1mexp: argument must be positive");
  }
  constexpr double kLn2 = 0.6931471805599453;
  return x > kLn2 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;   // (sqrt 5 - 1) / 2
  constexpr double invphi2 = 0.3819660112501051;  // 1 - invphi
  double a = lo, b = hi;
  double c = a + invphi2 * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = a + invphi2 * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // fold the sign of zero out of the output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const std::string& s) {
  if (s == "-inf") return kNegInf;
  if (s == "inf") return kPosInf;
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("parse_real: trailing junk in '" + s + "'");
  return v;
}

bool approx_rel(double a, double b, double tol) {
  if (a == b) return true;  // covers matching infinities
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double lsq_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double num = 0, den = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return den > 0 ? num / den : 0.0;
}

}  // namespace lusky
