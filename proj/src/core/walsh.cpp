#include "walshnet/walsh.hpp"

#include "walshnet/errors.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/scramble.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace walshnet {

int digit_length(std::uint64_t l, int base) {
  int k = 0;
  while (l > 0) {
    l /= static_cast<std::uint64_t>(base);
    ++k;
  }
  return k;
}

namespace {

std::uint64_t digitwise(std::uint64_t k, std::uint64_t l, int base, int sign) {
  const auto b = static_cast<std::uint64_t>(base);
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  while (k > 0 || l > 0) {
    const auto dk = static_cast<int>(k % b);
    const auto dl = static_cast<int>(l % b);
    const int d = ((dk + sign * dl) % base + base) % base;
    out += static_cast<std::uint64_t>(d) * place;
    place *= b;
    k /= b;
    l /= b;
  }
  return out;
}

}  // namespace

std::uint64_t digit_add(std::uint64_t k, std::uint64_t l, int base) { return digitwise(k, l, base, 1); }
std::uint64_t digit_sub(std::uint64_t k, std::uint64_t l, int base) { return digitwise(k, l, base, -1); }

WalshIndex::WalshIndex(int base, std::vector<std::uint64_t> components) : base_(base), l_(std::move(components)) {
  if (base < 2) throw ConfigError("Walsh base must be at least 2");
  if (l_.empty()) throw ConfigError("Walsh index needs at least one component");
  k_.reserve(l_.size());
  for (auto v : l_) {
    const int len = digit_length(v, base);
    k_.push_back(len);
    k_total_ += len;
    r_ += v > 0 ? 1 : 0;
  }
}

std::vector<int> WalshIndex::support() const {
  std::vector<int> r;
  r.reserve(l_.size());
  for (auto v : l_) r.push_back(v > 0 ? 1 : 0);
  return r;
}

int wal_exponent(std::uint64_t l, CoordinateView x) {
  const auto b = static_cast<std::uint64_t>(x.base);
  int acc = 0;
  int position = 0;
  while (l > 0) {
    if (position >= x.precision()) {
      const int needed = digit_length(l, x.base) + position;
      throw PrecisionError("Walsh evaluation needs " + std::to_string(needed) + " digits, point has " +
                               std::to_string(x.precision()),
                           needed);
    }
    acc += static_cast<int>(l % b) * x.digits[position];
    l /= b;
    ++position;
  }
  return acc % x.base;
}

int wal_exponent(const WalshIndex& l, const DigitPoint& x) {
  if (l.dimension() != x.dimension()) throw ConfigError("Walsh index and point dimensions differ");
  if (l.base() != x.base()) throw ConfigError("Walsh index and point bases differ");
  int acc = 0;
  for (int j = 0; j < x.dimension(); ++j) acc += wal_exponent(l.components()[j], x.coordinate(j));
  return acc % x.base();
}

std::complex<double> root_of_unity(int base, int exponent) {
  exponent = ((exponent % base) + base) % base;
  // Exact values on the real axis keep base-2 sums free of rounding noise.
  if (exponent == 0) return {1.0, 0.0};
  if (2 * exponent == base) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * exponent / base;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> wal_eval(const WalshIndex& l, const DigitPoint& x) {
  return root_of_unity(x.base(), wal_exponent(l, x));
}

BigInt L_k_size(int base, std::span<const int> k) {
  BigInt size = 1;
  for (int kj : k) {
    if (kj < 0) throw ConfigError("shell components must be non-negative");
    if (kj > 0) size *= (base - 1) * ipow(base, static_cast<unsigned long>(kj - 1));
  }
  return size;
}

std::vector<WalshIndex> enumerate_L_k(int base, std::span<const int> k) {
  const BigInt size = L_k_size(base, k);
  if (size > (1L << 24)) throw ConfigError("shell too large to enumerate");
  std::vector<std::uint64_t> lo(k.size()), hi(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    lo[j] = k[j] == 0 ? 0 : static_cast<std::uint64_t>(ipow(base, k[j] - 1).get_ui());
    hi[j] = static_cast<std::uint64_t>(ipow(base, k[j]).get_ui());
  }
  std::vector<WalshIndex> out;
  out.reserve(size.get_ui());
  std::vector<std::uint64_t> l = lo;
  while (true) {
    out.emplace_back(base, l);
    std::size_t j = k.size();
    while (j > 0) {
      --j;
      if (++l[j] < hi[j]) break;
      l[j] = lo[j];
      if (j == 0) return out;
    }
    if (k.empty()) return out;
  }
}

WalshPolynomial::WalshPolynomial(int base, int dimension) : base_(base), dimension_(dimension) {
  if (base < 2 || base > kMaxBase) throw ConfigError("Walsh polynomial base out of range");
  if (dimension < 1) throw ConfigError("Walsh polynomial needs dimension >= 1");
}

void WalshPolynomial::add(const WalshIndex& l, std::complex<double> coefficient) {
  if (l.base() != base_ || l.dimension() != dimension_) throw ConfigError("Walsh term does not match polynomial base/dimension");
  if (auto it = position_.find(l); it != position_.end()) {
    terms_[it->second].coefficient += coefficient;
    return;
  }
  position_.emplace(l, terms_.size());
  terms_.push_back({l, coefficient});
}

std::complex<double> WalshPolynomial::coefficient(const WalshIndex& l) const {
  auto it = position_.find(l);
  return it == position_.end() ? std::complex<double>{} : terms_[it->second].coefficient;
}

std::complex<double> WalshPolynomial::integral() const {
  return coefficient(WalshIndex(base_, std::vector<std::uint64_t>(dimension_, 0)));
}

int WalshPolynomial::max_digit_length() const {
  int out = 0;
  for (const auto& t : terms_)
    for (int k : t.index.digit_lengths()) out = std::max(out, k);
  return out;
}

std::complex<double> WalshPolynomial::operator()(const DigitPoint& x) const {
  std::complex<double> acc;
  for (const auto& t : terms_) acc += t.coefficient * root_of_unity(base_, wal_exponent(t.index, x));
  return acc;
}

std::map<std::vector<int>, Rational> WalshPolynomial::shell_masses() const {
  std::map<std::vector<int>, Rational> out;
  for (const auto& t : terms_) {
    const Rational re = from_double(t.coefficient.real());
    const Rational im = from_double(t.coefficient.imag());
    out[t.index.digit_lengths()] += re * re + im * im;
  }
  return out;
}

Rational WalshPolynomial::nonconstant_mass() const {
  Rational total;
  for (const auto& [k, mass] : shell_masses()) {
    bool zero = true;
    for (int v : k) zero = zero && v == 0;
    if (!zero) total += mass;
  }
  return total;
}

std::string WalshPolynomial::to_json() const {
  nlohmann::json j;
  j["base"] = base_;
  j["dimension"] = dimension_;
  j["metadata"] = metadata_;
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& t : terms_)
    terms.push_back({{"l", t.index.components()}, {"re", t.coefficient.real()}, {"im", t.coefficient.imag()}});
  return j.dump(2);
}

WalshPolynomial WalshPolynomial::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    WalshPolynomial f(j.at("base").get<int>(), j.at("dimension").get<int>());
    if (j.contains("metadata")) {
      for (auto& [key, value] : j["metadata"].items())
        f.metadata_[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    for (const auto& t : j.at("terms")) {
      WalshIndex l(f.base_, t.at("l").get<std::vector<std::uint64_t>>());
      f.add(l, {t.value("re", 0.0), t.value("im", 0.0)});
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed Walsh polynomial JSON: ") + e.what());
  }
}

DecayKind parse_decay_kind(const std::string& text) {
  if (text == "per-index" || text == "per_index") return DecayKind::per_index;
  if (text == "per-shell" || text == "per_shell") return DecayKind::per_shell;
  throw ConfigError("unknown decay kind '" + text + "' (expected per-index or per-shell)");
}

std::string to_string(DecayKind kind) { return kind == DecayKind::per_index ? "per-index" : "per-shell"; }

WalshPolynomial random_decay_polynomial(int base, int s, const DecaySpec& spec) {
  if (spec.a < 0 || spec.a > 1) throw ConfigError("decay parameter a must lie in [0, 1]");
  if (!(spec.alpha > 0.0)) throw ConfigError("decay scale alpha must be positive");
  if (spec.k_max < 0) throw ConfigError("k_max must be non-negative");
  if (!(spec.x >= 0.0) || !(spec.x * base < 1.0))
    throw ConfigError("decay parameter x must lie in [0, 1/b) for the Walsh series to converge");

  WalshPolynomial f(base, s);
  f.metadata()["kind"] = to_string(spec.kind);
  f.metadata()["a"] = to_string(spec.a);
  f.metadata()["x"] = nlohmann::json(spec.x).dump();
  f.metadata()["alpha"] = nlohmann::json(spec.alpha).dump();
  f.metadata()["k_max"] = std::to_string(spec.k_max);
  f.metadata()["seed"] = std::to_string(spec.seed);

  std::mt19937_64 rng(mix64(spec.seed ^ 0x5f0e1d2c3b4a5968ULL));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double a = to_double(spec.a);

  long budget = 1L << 22;
  for (const auto& k : enumerate_shapes(s, spec.k_max)) {
    int total = 0, r = 0;
    for (int v : k) {
      total += v;
      r += v > 0 ? 1 : 0;
    }
    if (spec.kind == DecayKind::per_index) {
      const double magnitude = std::sqrt(std::pow(spec.x, total) * spec.alpha);
      if (magnitude == 0.0) continue;
      const BigInt size = L_k_size(base, k);
      budget -= static_cast<long>(size.get_si());
      if (size > (1L << 22) || budget < 0) throw ConfigError("per-index decay polynomial too large; lower k_max");
      for (const auto& l : enumerate_L_k(base, k)) f.add(l, std::polar(magnitude, phase(rng)));
      continue;
    }
    const double shell = std::pow(a, r) * std::pow(base * spec.x, total) * spec.alpha;
    if (shell == 0.0) continue;
    const BigInt size = L_k_size(base, k);
    if (size <= static_cast<long>(kShellSupportCap)) {
      const double magnitude = std::sqrt(shell / size.get_d());
      for (const auto& l : enumerate_L_k(base, k)) f.add(l, std::polar(magnitude, phase(rng)));
      continue;
    }
    std::set<std::vector<std::uint64_t>> chosen;
    while (chosen.size() < kShellSupportCap) {
      std::vector<std::uint64_t> l(s, 0);
      for (int j = 0; j < s; ++j) {
        if (k[j] == 0) continue;
        const auto lo = static_cast<std::uint64_t>(ipow(base, k[j] - 1).get_ui());
        std::uniform_int_distribution<std::uint64_t> pick(lo, lo * base - 1);
        l[j] = pick(rng);
      }
      chosen.insert(std::move(l));
    }
    const double magnitude = std::sqrt(shell / static_cast<double>(kShellSupportCap));
    for (const auto& l : chosen) f.add(WalshIndex(base, l), std::polar(magnitude, phase(rng)));
  }
  return f;
}

}  // namespace walshnet
