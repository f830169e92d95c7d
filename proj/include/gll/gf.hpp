#pragma once

// Finite fields GF(p^e) and the elementary number theory (orders, primitive
// roots) used to certify cyclotomic factorisations.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gll::gf {

/// An element of GF(p^e), encoded as the integer sum c_i p^i of its
/// coordinate vector (c_0, ..., c_{e-1}) over GF(p). The encoding is
/// canonical, so two elements are equal iff their codes are.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// GF(p) or GF(p^e) = GF(p)[X]/(modulus). Immutable once built.
class FieldCtx {
 public:
  /// Largest supported characteristic for prime fields.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;
  /// Largest supported cardinality for extension fields (log tables).
  static constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }

  /// Coefficients c_0..c_e of the defining polynomial (monic); empty for GF(p).
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer under Z -> GF(p) -> GF(q).
  FieldElem from_int(std::int64_t value) const noexcept;
  /// The class of X in GF(p)[X]/(modulus). Only defined when degree() > 1.
  FieldElem generator() const;

  std::vector<std::uint32_t> coords(FieldElem a) const;
  FieldElem from_coords(std::span<const std::uint32_t> coords) const;
  /// All q elements in code order (0 first, 1 second).
  std::vector<FieldElem> elements() const;

  bool is_zero(FieldElem a) const noexcept { return a.code == 0; }
  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws DivisionByZero for a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t exponent) const noexcept;

  /// "p" or "p^e".
  std::string name() const;

  bool same_as(const FieldCtx& other) const noexcept {
    return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
  }

 private:
  friend Field make_prime_field(std::uint64_t p);
  friend Field make_extension_field(std::uint64_t p, unsigned e);

  FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);
  FieldElem mul_slow(FieldElem a, FieldElem b) const;
  void build_log_tables();

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Extension fields only: exp_[i] = g^i for a primitive element g,
  // log_[code] = i (log_[0] unused).
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Throws NotPrime when p is composite or < 2.
Field make_prime_field(std::uint64_t p);

/// The modulus is the first monic irreducible of degree e found by scanning
/// the lower coefficients as a base-p counter (c_0 least significant).
/// Requires e >= 2; throws NotPrime / InvalidArgument.
Field make_extension_field(std::uint64_t p, unsigned e);

/// GF(p) when e == 1, otherwise GF(p^e).
Field make_field(std::uint64_t p, unsigned e);

inline bool same_field(const Field& a, const Field& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------------------
// Number theory

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept;
/// base^exponent, throwing Overflow instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);
/// Prime factorisation by trial division, ascending primes with multiplicity.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Least d >= 1 with g^d = 1 (mod n). Throws NotCoprime / InvalidArgument (n < 2).
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t n);
/// multiplicative_order(g, m) == phi(m). Throws NotCoprime.
bool is_primitive_root(std::uint64_t g, std::uint64_t m);
/// Odd primes p <= limit for which 2 generates (Z/p)^*.
std::vector<std::uint64_t> primes_with_primitive_root_two(std::uint64_t limit);

}  // namespace gll::gf
