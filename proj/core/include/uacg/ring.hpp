#pragma once

// Finite commutative rings presented as products of local factors.
//
// A RingSpec is an ordered list of local factors R_1 x ... x R_m. Two kinds
// of local factor are supported: the residue ring Z_{p^k} (maximal ideal
// <p>) and the Galois field GF(p^k) (maximal ideal {0}). Elements are tuples
// of per-factor codes:
//
//   - Z_{p^k}: the residue in [0, p^k);
//   - GF(p^k): the coefficient vector c_0 + c_1 x + ... packed base p,
//     i.e. code = c_0 + c_1 p + c_2 p^2 + ...
//
// A third, non-local pseudo-factor (Z_n for even n) exists only so the
// bipartite even case can be built as a graph; every odd-order construction
// rejects it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace uacg {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n);
std::vector<PrimePower> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

enum class FactorKind { residue, galois, cyclic };

struct GaloisTables;

class LocalFactor {
 public:
  static constexpr std::uint32_t max_galois_order = 343;

  static LocalFactor residue(std::uint32_t p, std::uint32_t k = 1);
  // Uses the first monic irreducible polynomial of degree k in code order.
  static LocalFactor galois(std::uint32_t p, std::uint32_t k);
  // `polynomial` lists coefficients low-to-high; it must be monic of degree k.
  static LocalFactor galois(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> polynomial);
  static LocalFactor cyclic(std::uint32_t n);

  FactorKind kind() const { return kind_; }
  bool is_local() const { return kind_ != FactorKind::cyclic; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t maximal_ideal_size() const;
  std::uint32_t unit_count() const;
  // |R_i / M_i|
  std::uint32_t residue_field_size() const;
  const std::vector<std::uint32_t>& polynomial() const { return polynomial_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  bool is_unit(std::uint32_t a) const;
  bool sum_is_unit(std::uint32_t a, std::uint32_t b) const { return is_unit(add(a, b)); }
  bool in_maximal_ideal(std::uint32_t a) const;

  // Image of `a` under R_i -> R_i / M_i, encoded as an element of the residue
  // field: a mod p for Z_{p^k}; identity for GF(p^k).
  std::uint32_t quotient_residue(std::uint32_t a) const;
  // Residue field elements 1, g, g^2, ... for a fixed generator g (GF only).
  const std::vector<std::uint32_t>& generator_powers() const;

  std::vector<std::uint32_t> coefficients(std::uint32_t a) const;
  std::uint32_t from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  std::string descriptor() const;

  bool operator==(const LocalFactor& other) const;
  std::strong_ordering operator<=>(const LocalFactor& other) const;

 private:
  LocalFactor() = default;

  FactorKind kind_ = FactorKind::residue;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> polynomial_;
  std::shared_ptr<const GaloisTables> tables_;
};

// Exhaustive irreducibility test for small monic polynomials over Z_p
// (coefficients low-to-high).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

struct RingElement {
  std::vector<std::uint32_t> coords;
  auto operator<=>(const RingElement&) const = default;
};

class RingSpec {
 public:
  // Z_n for odd n >= 3, factored into ascending prime powers. Element index
  // i is the CRT image of the integer i.
  static RingSpec zn(std::uint64_t n);
  // Z_n for even n >= 2 as a single non-local pseudo-factor.
  static RingSpec zmod_even(std::uint64_t n);
  // Product of local factors in canonical order; total order must be odd.
  // Elements are enumerated mixed-radix, last factor fastest.
  static RingSpec product(std::vector<LocalFactor> factors);

  const std::vector<LocalFactor>& factors() const { return factors_; }
  const LocalFactor& factor(std::size_t i) const { return factors_[i]; }
  std::size_t factor_count() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  std::uint64_t unit_count() const;
  bool odd_order() const { return order_ % 2 == 1; }
  bool is_zn() const { return zn_; }

  RingElement element(std::uint64_t index) const;
  std::uint64_t index_of(const RingElement& x) const;
  void validate(const RingElement& x) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  bool is_unit(const RingElement& x) const;

  std::string descriptor() const;
  std::string format(const RingElement& x) const;

  bool operator==(const RingSpec& other) const;

 private:
  RingSpec() = default;
  void finish();

  std::vector<LocalFactor> factors_;
  std::uint64_t order_ = 1;
  bool zn_ = false;
  std::vector<std::uint64_t> crt_basis_;
};

inline RingSpec make_ring_zn(std::uint64_t n) { return RingSpec::zn(n); }

// Parses `zn:<n>`, `prod:<item>,<item>,...` where an item is `p`, `p^k`,
// `gf(p,k)` or `gf(p,k;c0,c1,...,ck)`.
RingSpec parse_ring(std::string_view descriptor);

}  // namespace uacg
