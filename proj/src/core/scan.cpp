#include "walshnet/scan.hpp"

#include "walshnet/covkernel.hpp"
#include "walshnet/digits.hpp"
#include "walshnet/errors.hpp"

#include <cstdio>
#include <sstream>

namespace walshnet {

XGrid XGrid::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw ConfigError("x-grid must look like lo:hi:step, got '" + text + "'");
  XGrid g;
  try {
    g.lo = parse_rational(parts[0]);
    g.hi = parse_rational(parts[1]);
    g.step = parse_rational(parts[2]);
  } catch (const std::exception& e) {
    throw ConfigError("invalid x-grid '" + text + "': " + e.what());
  }
  if (g.step <= 0) throw ConfigError("x-grid step must be positive");
  if (g.hi < g.lo) throw ConfigError("x-grid upper end is below the lower end");
  return g;
}

std::vector<Rational> XGrid::points() const {
  if (step <= 0) throw ConfigError("x-grid step must be positive");
  if (hi < lo) throw ConfigError("x-grid upper end is below the lower end");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

namespace {

std::vector<Rational> range(int lo, int hi) {
  std::vector<Rational> out;
  for (int v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

std::vector<Rational> primes_up_to(int hi) {
  std::vector<Rational> out;
  for (int p = 2; p <= hi; ++p)
    if (is_prime(p)) out.emplace_back(p);
  return out;
}

}  // namespace

std::vector<std::string> figure_names() { return {"3a", "3b", "3c", "4", "5a", "5b", "5c"}; }

ScanSpec figure_spec(const std::string& figure) {
  ScanSpec spec;
  spec.name = figure;
  if (figure == "3a" || figure == "5a") {
    spec.varying = SweepParameter::b;
    spec.values = primes_up_to(53);
    spec.m = 3;
    spec.s = 3;
  } else if (figure == "3b" || figure == "5b") {
    spec.varying = SweepParameter::m;
    spec.values = range(1, 16);
    spec.b = 3;
    spec.s = 3;
  } else if (figure == "3c" || figure == "5c") {
    spec.varying = SweepParameter::s;
    spec.values = range(1, 16);
    spec.b = 3;
    spec.m = 3;
  } else if (figure == "4") {
    spec.varying = SweepParameter::a;
    for (int j = 1; j <= 16; ++j) spec.values.push_back(ratio(j, 16));
    spec.b = 3;
    spec.m = 3;
    spec.s = 3;
  } else {
    throw ConfigError("unknown figure '" + figure + "' (expected 3a, 3b, 3c, 4, 5a, 5b or 5c)");
  }
  if (figure[0] == '5') spec.a = Rational(1);
  return spec;
}

namespace {

struct Curve {
  int b, m, s;
  Rational a;
};

std::vector<Curve> curves(const ScanSpec& spec) {
  if (spec.values.empty()) throw ConfigError("parameter sweep is empty");
  std::vector<Curve> out;
  for (const auto& v : spec.values) {
    Curve c{spec.b, spec.m, spec.s, 0};
    if (spec.varying != SweepParameter::a && v.get_den() != 1) throw ConfigError("b, m and s sweeps need integers");
    switch (spec.varying) {
      case SweepParameter::b: c.b = static_cast<int>(v.get_num().get_si()); break;
      case SweepParameter::m: c.m = static_cast<int>(v.get_num().get_si()); break;
      case SweepParameter::s: c.s = static_cast<int>(v.get_num().get_si()); break;
      case SweepParameter::a: break;
    }
    if (spec.varying == SweepParameter::a) c.a = v;
    else c.a = spec.a ? *spec.a : Rational(c.b - 1, c.b);
    c.a.canonicalize();
    out.push_back(c);
  }
  return out;
}

Rational scale_factor(int b, int m) { return Rational(1) / Rational(ipow(b, static_cast<unsigned long>(m)) - 1); }

std::vector<ScanRow> scan_impl(const ScanSpec& spec, bool parallel) {
  const std::vector<Curve> cs = curves(spec);
  const std::vector<Rational> xs = spec.grid.points();
  std::vector<CovPolynomial> polys;
  for (const auto& c : cs) polys.push_back(cov_polynomial(c.b, c.m, c.s, c.a));
  std::vector<ScanRow> rows(cs.size() * xs.size());
  const long total = static_cast<long>(rows.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long idx = 0; idx < total; ++idx) {
    const std::size_t ci = static_cast<std::size_t>(idx) / xs.size();
    const std::size_t xi = static_cast<std::size_t>(idx) % xs.size();
    const Curve& c = cs[ci];
    Rational v = polys[ci](xs[xi]);
    if (spec.scale) v *= scale_factor(c.b, c.m);
    rows[idx] = {c.b, c.m, c.s, c.a, xs[xi], v};
  }
  return rows;
}

std::string format_double(const Rational& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
  return buf;
}

const char* parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::b: return "b";
    case SweepParameter::m: return "m";
    case SweepParameter::s: return "s";
    case SweepParameter::a: return "a";
  }
  return "?";
}

}  // namespace

std::vector<ScanRow> figure_scan(const ScanSpec& spec) { return scan_impl(spec, true); }
std::vector<ScanRow> serial::figure_scan(const ScanSpec& spec) { return scan_impl(spec, false); }

std::string scan_csv(const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  std::string out = "# figure=" + (spec.name.empty() ? std::string("custom") : spec.name) +
                    " varying=" + parameter_name(spec.varying);
  if (spec.varying != SweepParameter::b) out += " b=" + std::to_string(spec.b);
  if (spec.varying != SweepParameter::m) out += " m=" + std::to_string(spec.m);
  if (spec.varying != SweepParameter::s) out += " s=" + std::to_string(spec.s);
  if (spec.varying != SweepParameter::a) out += " a=" + (spec.a ? to_string(*spec.a) : std::string("(b-1)/b"));
  out += spec.scale ? " scale=1/(b^m-1)\n" : " scale=1\n";
  out += "b,m,s,a,x,value\n";
  for (const auto& r : rows) {
    out += std::to_string(r.b) + "," + std::to_string(r.m) + "," + std::to_string(r.s) + "," + to_string(r.a) + "," +
           to_string(r.x) + "," + format_double(r.value) + "\n";
  }
  return out;
}

bool sign_guaranteed(const ScanSpec& spec) {
  for (const auto& c : curves(spec))
    if (c.a != Rational(c.b - 1, c.b)) return false;
  return true;
}

std::string covpoly_csv(int base, int m, int s, const Rational& a, const XGrid& grid, bool scale) {
  const CovPolynomial p = cov_polynomial(base, m, s, a);
  const Rational factor = scale ? scale_factor(base, m) : Rational(1);
  std::string out = "x,value\n";
  for (const auto& x : grid.points()) out += to_string(x) + "," + format_double(p(x) * factor) + "\n";
  return out;
}

std::string qscan_csv(int base, int m, int s, const XGrid& grid) {
  std::string out = "x,value\n";
  for (const auto& x : grid.points()) out += to_string(x) + "," + format_double(q_s(base, m, s, x)) + "\n";
  return out;
}

namespace {

SignScan sign_scan_impl(int base, int m, int s, long denominator, bool parallel) {
  if (denominator < 1) throw ConfigError("sign scan needs a positive denominator");
  const BigInt q = denominator;
  long violations = 0;
  long first = denominator + 1;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : violations) reduction(min : first) if (parallel)
  for (long i = 0; i <= denominator; ++i) {
    if (sgn(q_s_scaled(base, m, s, BigInt(i), q)) > 0) {
      ++violations;
      first = std::min(first, i);
    }
  }
  SignScan out;
  out.points = denominator + 1;
  out.violations = violations;
  if (violations > 0) out.first_violation = ratio(first, denominator);
  return out;
}

}  // namespace

SignScan qs_sign_scan(int base, int m, int s, long denominator) {
  return sign_scan_impl(base, m, s, denominator, true);
}

SignScan serial::qs_sign_scan(int base, int m, int s, long denominator) {
  return sign_scan_impl(base, m, s, denominator, false);
}

}  // namespace walshnet
