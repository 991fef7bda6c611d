#include "uacg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "uacg/errors.hpp"
#include "uacg/search.hpp"

namespace uacg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n < 2) throw DomainError("factorize: n must be >= 2");
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.k;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t phi = n;
  for (const auto& [p, k] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z_p (coefficients low-to-high)

namespace {

using Poly = std::vector<std::uint32_t>;

void strip(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  strip(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    }
    strip(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return out;
}

Poly code_to_poly(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t poly_to_code(Poly a, std::uint32_t p, std::uint32_t k) {
  a.resize(k, 0);
  std::uint32_t code = 0;
  for (std::uint32_t i = k; i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  if (monic.size() < 2) return false;
  const std::size_t degree = monic.size() - 1;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    const auto lower_count = static_cast<std::uint32_t>(ipow(p, static_cast<std::uint32_t>(d)));
    for (std::uint32_t code = 0; code < lower_count; ++code) {
      Poly divisor = code_to_poly(code, p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Galois field tables

struct GaloisTables {
  std::uint32_t order = 0;
  std::vector<std::uint16_t> sum;  // order x order
  std::vector<std::uint16_t> negation;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, order-1)
  std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
};

namespace {

std::shared_ptr<const GaloisTables> build_tables(std::uint32_t p, std::uint32_t k, const Poly& modulus) {
  auto t = std::make_shared<GaloisTables>();
  const std::uint32_t q = static_cast<std::uint32_t>(ipow(p, k));
  t->order = q;
  t->sum.resize(static_cast<std::size_t>(q) * q);
  t->negation.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = code_to_poly(a, p, k);
    Poly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    t->negation[a] = static_cast<std::uint16_t>(poly_to_code(na, p, k));
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = code_to_poly(b, p, k);
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      t->sum[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(poly_to_code(s, p, k));
    }
  }

  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    return poly_to_code(poly_mod(poly_mul(code_to_poly(a, p, k), code_to_poly(b, p, k), p), modulus, p), p, k);
  };

  // Smallest primitive element by code.
  for (std::uint32_t g = 1; g < q; ++g) {
    std::vector<std::uint32_t> powers{1};
    std::uint32_t x = g;
    while (x != 1) {
      powers.push_back(x);
      x = mul(x, g);
      if (powers.size() > q) break;
    }
    if (powers.size() == q - 1) {
      t->exp = std::move(powers);
      break;
    }
  }
  if (t->exp.size() != q - 1) throw DomainError("GF: no primitive element found (polynomial not irreducible?)");
  t->log.assign(q, 0);
  for (std::uint32_t i = 0; i < t->exp.size(); ++i) t->log[t->exp[i]] = i;
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// LocalFactor

LocalFactor LocalFactor::residue(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p) || p == 2) throw DomainError("residue factor: p must be an odd prime, got " + std::to_string(p));
  if (k == 0) throw DomainError("residue factor: exponent must be >= 1");
  const std::uint64_t size = ipow(p, k);
  if (size > std::numeric_limits<std::int32_t>::max()) throw CapacityError("residue factor: p^k too large");
  LocalFactor f;
  f.kind_ = FactorKind::residue;
  f.p_ = p;
  f.k_ = k;
  f.size_ = static_cast<std::uint32_t>(size);
  return f;
}

LocalFactor LocalFactor::galois(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p) || p == 2) throw DomainError("galois factor: p must be an odd prime, got " + std::to_string(p));
  if (k == 0) throw DomainError("galois factor: degree must be >= 1");
  const std::uint64_t q = ipow(p, k);
  if (q > max_galois_order) throw CapacityError("galois factor: p^k exceeds " + std::to_string(max_galois_order));
  for (std::uint32_t code = 0; code < q; ++code) {
    Poly candidate = code_to_poly(code, p, k);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return galois(p, k, std::move(candidate));
  }
  throw DomainError("galois factor: no irreducible polynomial found");
}

LocalFactor LocalFactor::galois(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> polynomial) {
  if (!is_prime(p) || p == 2) throw DomainError("galois factor: p must be an odd prime, got " + std::to_string(p));
  if (k == 0) throw DomainError("galois factor: degree must be >= 1");
  const std::uint64_t q = ipow(p, k);
  if (q > max_galois_order) throw CapacityError("galois factor: p^k exceeds " + std::to_string(max_galois_order));
  if (polynomial.size() != k + 1) throw DomainError("galois factor: polynomial must have k+1 coefficients");
  for (auto c : polynomial) {
    if (c >= p) throw DomainError("galois factor: coefficient out of range [0,p)");
  }
  if (polynomial.back() != 1) throw DomainError("galois factor: polynomial must be monic");
  if (!is_irreducible(p, polynomial)) throw DomainError("galois factor: polynomial is reducible");
  LocalFactor f;
  f.kind_ = FactorKind::galois;
  f.p_ = p;
  f.k_ = k;
  f.size_ = static_cast<std::uint32_t>(q);
  f.polynomial_ = std::move(polynomial);
  f.tables_ = build_tables(p, k, f.polynomial_);
  return f;
}

LocalFactor LocalFactor::cyclic(std::uint32_t n) {
  if (n < 2) throw DomainError("cyclic factor: n must be >= 2");
  LocalFactor f;
  f.kind_ = FactorKind::cyclic;
  f.p_ = 0;
  f.k_ = 1;
  f.size_ = n;
  return f;
}

std::uint32_t LocalFactor::maximal_ideal_size() const {
  switch (kind_) {
    case FactorKind::residue: return size_ / p_;
    case FactorKind::galois: return 1;
    case FactorKind::cyclic: break;
  }
  throw DomainError("Z_n pseudo-factor is not a local ring");
}

std::uint32_t LocalFactor::unit_count() const {
  if (kind_ == FactorKind::cyclic) return static_cast<std::uint32_t>(euler_phi(size_));
  return size_ - maximal_ideal_size();
}

std::uint32_t LocalFactor::residue_field_size() const {
  return size_ / maximal_ideal_size();
}

std::uint32_t LocalFactor::add(std::uint32_t a, std::uint32_t b) const {
  if (kind_ == FactorKind::galois) return tables_->sum[static_cast<std::size_t>(a) * size_ + b];
  const std::uint32_t s = a + b;
  return s >= size_ ? s - size_ : s;
}

std::uint32_t LocalFactor::neg(std::uint32_t a) const {
  if (kind_ == FactorKind::galois) return tables_->negation[a];
  return a == 0 ? 0 : size_ - a;
}

std::uint32_t LocalFactor::mul(std::uint32_t a, std::uint32_t b) const {
  if (kind_ == FactorKind::galois) {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t e = (tables_->log[a] + tables_->log[b]) % (size_ - 1);
    return tables_->exp[e];
  }
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % size_);
}

bool LocalFactor::is_unit(std::uint32_t a) const {
  switch (kind_) {
    case FactorKind::residue: return a % p_ != 0;
    case FactorKind::galois: return a != 0;
    case FactorKind::cyclic: return std::gcd(a, size_) == 1;
  }
  return false;
}

bool LocalFactor::in_maximal_ideal(std::uint32_t a) const {
  if (kind_ == FactorKind::cyclic) throw DomainError("Z_n pseudo-factor is not a local ring");
  return !is_unit(a);
}

std::uint32_t LocalFactor::quotient_residue(std::uint32_t a) const {
  switch (kind_) {
    case FactorKind::residue: return a % p_;
    case FactorKind::galois: return a;
    case FactorKind::cyclic: break;
  }
  throw DomainError("Z_n pseudo-factor has no residue field");
}

const std::vector<std::uint32_t>& LocalFactor::generator_powers() const {
  if (kind_ != FactorKind::galois) throw DomainError("generator_powers: only defined for galois factors");
  return tables_->exp;
}

std::vector<std::uint32_t> LocalFactor::coefficients(std::uint32_t a) const {
  if (kind_ != FactorKind::galois) return {a};
  return code_to_poly(a, p_, k_);
}

std::uint32_t LocalFactor::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (kind_ != FactorKind::galois) {
    if (coeffs.size() != 1) throw DimensionError("expected a single residue");
    return coeffs[0] % size_;
  }
  if (coeffs.size() > k_) throw DimensionError("too many coefficients for GF element");
  Poly reduced(coeffs.begin(), coeffs.end());
  for (auto& c : reduced) c %= p_;
  return poly_to_code(reduced, p_, k_);
}

std::string LocalFactor::descriptor() const {
  std::ostringstream os;
  switch (kind_) {
    case FactorKind::residue:
      os << p_;
      if (k_ > 1) os << '^' << k_;
      break;
    case FactorKind::galois:
      os << "gf(" << p_ << ',' << k_ << ';';
      for (std::size_t i = 0; i < polynomial_.size(); ++i) os << (i ? "," : "") << polynomial_[i];
      os << ')';
      break;
    case FactorKind::cyclic:
      os << "zn(" << size_ << ')';
      break;
  }
  return os.str();
}

bool LocalFactor::operator==(const LocalFactor& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ && size_ == other.size_ &&
         polynomial_ == other.polynomial_;
}

std::strong_ordering LocalFactor::operator<=>(const LocalFactor& other) const {
  if (auto c = p_ <=> other.p_; c != 0) return c;
  if (auto c = size_ <=> other.size_; c != 0) return c;
  if (auto c = static_cast<int>(kind_) <=> static_cast<int>(other.kind_); c != 0) return c;
  return polynomial_ <=> other.polynomial_;
}

// ---------------------------------------------------------------------------
// RingSpec

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("mod_inverse: not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

}  // namespace

RingSpec RingSpec::zn(std::uint64_t n) {
  if (n < 3) throw DomainError("zn: n must be >= 3, got " + std::to_string(n));
  if (n % 2 == 0) throw DomainError("zn: n must be odd, got " + std::to_string(n) + " (use zmod_even)");
  if (n > std::numeric_limits<std::int32_t>::max()) throw CapacityError("zn: n too large");
  RingSpec r;
  for (const auto& [p, k] : factorize(n)) r.factors_.push_back(LocalFactor::residue(static_cast<std::uint32_t>(p), k));
  r.zn_ = true;
  r.finish();
  for (const auto& f : r.factors_) {
    const std::uint64_t m = f.size();
    const std::uint64_t rest = n / m;
    const std::uint64_t e = static_cast<std::uint64_t>(
        static_cast<detail::u128>(rest) * mod_inverse(rest % m, m) % n);
    r.crt_basis_.push_back(e);
  }
  return r;
}

RingSpec RingSpec::zmod_even(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw DomainError("zmod_even: n must be even and >= 2, got " + std::to_string(n));
  if (n > std::numeric_limits<std::int32_t>::max()) throw CapacityError("zmod_even: n too large");
  RingSpec r;
  r.factors_.push_back(LocalFactor::cyclic(static_cast<std::uint32_t>(n)));
  r.zn_ = true;
  r.crt_basis_.push_back(1);
  r.finish();
  return r;
}

RingSpec RingSpec::product(std::vector<LocalFactor> factors) {
  if (factors.empty()) throw DomainError("product: at least one factor required");
  for (const auto& f : factors) {
    if (!f.is_local()) throw DomainError("product: factors must be local rings");
  }
  std::sort(factors.begin(), factors.end());
  RingSpec r;
  r.factors_ = std::move(factors);
  r.finish();
  if (r.order_ % 2 == 0) throw DomainError("product: ring order must be odd");
  return r;
}

void RingSpec::finish() {
  order_ = 1;
  for (const auto& f : factors_) {
    order_ *= f.size();
    if (order_ > std::numeric_limits<std::int32_t>::max()) throw CapacityError("ring order too large");
  }
}

std::uint64_t RingSpec::unit_count() const {
  std::uint64_t u = 1;
  for (const auto& f : factors_) u *= f.unit_count();
  return u;
}

RingElement RingSpec::element(std::uint64_t index) const {
  if (index >= order_) throw DimensionError("element index out of range");
  RingElement x;
  x.coords.resize(factors_.size());
  if (zn_) {
    for (std::size_t i = 0; i < factors_.size(); ++i) x.coords[i] = static_cast<std::uint32_t>(index % factors_[i].size());
  } else {
    for (std::size_t i = factors_.size(); i-- > 0;) {
      x.coords[i] = static_cast<std::uint32_t>(index % factors_[i].size());
      index /= factors_[i].size();
    }
  }
  return x;
}

std::uint64_t RingSpec::index_of(const RingElement& x) const {
  validate(x);
  if (zn_) {
    detail::u128 acc = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) acc += static_cast<detail::u128>(x.coords[i]) * crt_basis_[i];
    return static_cast<std::uint64_t>(acc % order_);
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i].size() + x.coords[i];
  return index;
}

void RingSpec::validate(const RingElement& x) const {
  if (x.coords.size() != factors_.size()) {
    throw DimensionError("element has " + std::to_string(x.coords.size()) + " coordinates, ring has " +
                         std::to_string(factors_.size()) + " factors");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.coords[i] >= factors_[i].size()) throw DimensionError("element coordinate out of range");
  }
}

RingElement RingSpec::zero() const { return RingElement{std::vector<std::uint32_t>(factors_.size(), 0)}; }

RingElement RingSpec::one() const { return RingElement{std::vector<std::uint32_t>(factors_.size(), 1)}; }

RingElement RingSpec::add(const RingElement& x, const RingElement& y) const {
  validate(x);
  validate(y);
  RingElement out;
  out.coords.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] = factors_[i].add(x.coords[i], y.coords[i]);
  return out;
}

RingElement RingSpec::neg(const RingElement& x) const {
  validate(x);
  RingElement out;
  out.coords.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] = factors_[i].neg(x.coords[i]);
  return out;
}

bool RingSpec::is_unit(const RingElement& x) const {
  validate(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i].is_unit(x.coords[i])) return false;
  }
  return true;
}

std::string RingSpec::descriptor() const {
  if (zn_) return "zn:" + std::to_string(order_);
  std::string out = "prod:";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += factors_[i].descriptor();
  }
  return out;
}

std::string RingSpec::format(const RingElement& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.coords[i]);
  }
  return out + ")";
}

bool RingSpec::operator==(const RingSpec& other) const {
  return zn_ == other.zn_ && factors_ == other.factors_;
}

// ---------------------------------------------------------------------------
// Descriptor parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw FormatError("ring descriptor: bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw FormatError("ring descriptor: unbalanced parentheses");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw FormatError("ring descriptor: unbalanced parentheses");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

LocalFactor parse_factor(std::string_view item) {
  if (item.empty()) throw FormatError("ring descriptor: empty factor");
  if (item.starts_with("gf(")) {
    if (!item.ends_with(")")) throw FormatError("ring descriptor: unterminated gf(...)");
    const auto body = item.substr(3, item.size() - 4);
    const auto semi = body.find(';');
    const auto head = split_on(body.substr(0, semi), ',');
    if (head.size() != 2) throw FormatError("ring descriptor: gf expects gf(p,k) or gf(p,k;coeffs)");
    const auto p = static_cast<std::uint32_t>(parse_uint(head[0], "gf prime"));
    const auto k = static_cast<std::uint32_t>(parse_uint(head[1], "gf degree"));
    if (semi == std::string_view::npos) return LocalFactor::galois(p, k);
    std::vector<std::uint32_t> coeffs;
    for (auto c : split_on(body.substr(semi + 1), ',')) coeffs.push_back(static_cast<std::uint32_t>(parse_uint(c, "gf coefficient")));
    return LocalFactor::galois(p, k, std::move(coeffs));
  }
  const auto caret = item.find('^');
  const auto p = parse_uint(item.substr(0, caret), "prime");
  const auto k = caret == std::string_view::npos ? 1u : parse_uint(item.substr(caret + 1), "exponent");
  if (p > std::numeric_limits<std::int32_t>::max() || k > 64) throw CapacityError("ring descriptor: factor too large");
  // A bare prime power such as 9 names Z_9.
  if (caret == std::string_view::npos && p >= 2 && !is_prime(p)) {
    const auto f = factorize(p);
    if (f.size() != 1) throw FormatError("ring descriptor: '" + std::string(item) + "' is not a prime power");
    return LocalFactor::residue(static_cast<std::uint32_t>(f[0].p), f[0].k);
  }
  return LocalFactor::residue(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
}

}  // namespace

RingSpec parse_ring(std::string_view descriptor) {
  descriptor = trim(descriptor);
  if (descriptor.starts_with("zn:")) {
    const auto n = parse_uint(descriptor.substr(3), "modulus");
    return n % 2 == 0 ? RingSpec::zmod_even(n) : RingSpec::zn(n);
  }
  if (descriptor.starts_with("prod:")) {
    std::vector<LocalFactor> factors;
    for (auto item : split_top_level(descriptor.substr(5))) factors.push_back(parse_factor(item));
    return RingSpec::product(std::move(factors));
  }
  throw FormatError("ring descriptor must start with 'zn:' or 'prod:', got '" + std::string(descriptor) + "'");
}

}  // namespace uacg
