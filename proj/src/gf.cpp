#include "gll/gf.hpp"

#include <algorithm>
#include <limits>

#include "gll/error.hpp"

namespace gll::gf {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `counter`.
Coeffs monic_from_counter(std::uint64_t counter, unsigned deg, std::uint32_t p) {
  Coeffs c(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = static_cast<std::uint32_t>(counter % p);
    counter /= p;
  }
  c[deg] = 1;
  return c;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const Coeffs& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_rem(f, monic_from_counter(c, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(checked_pow(p, e))), modulus_(std::move(modulus)) {
  if (e_ > 1) build_log_tables();
}

FieldElem FieldCtx::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::generator() const {
  if (e_ == 1) throw Error(ErrorKind::InvalidArgument, "prime field has no extension generator");
  return {p_};
}

std::vector<std::uint32_t> FieldCtx::coords(FieldElem a) const {
  std::vector<std::uint32_t> c(e_, 0);
  std::uint32_t v = a.code;
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElem FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != e_) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  std::uint32_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
    code = code * p_ + coords[i];
  }
  return {code};
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
  if (e_ == 1) {
    const std::uint64_t s = std::uint64_t{a.code} + b.code;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  if (p_ == 2) return {a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
  if (e_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  if (p_ == 2) return a;
  std::uint32_t x = a.code, out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
  if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  if (a.code == 0 || b.code == 0) return {0};
  std::uint32_t i = log_[a.code] + log_[b.code];
  if (i >= q_ - 1) i -= q_ - 1;
  return {exp_[i]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (e_ == 1) return {static_cast<std::uint32_t>(pow_mod(a.code, p_ - 2, p_))};
  const std::uint32_t i = log_[a.code];
  return {exp_[i == 0 ? 0 : q_ - 1 - i]};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t exponent) const noexcept {
  FieldElem result = one();
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1U;
  }
  return result;
}

std::string FieldCtx::name() const {
  return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(e_);
}

FieldElem FieldCtx::mul_slow(FieldElem a, FieldElem b) const {
  const Coeffs x = coords(a), y = coords(b);
  Coeffs prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
  Coeffs r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(e_, 0);
  return from_coords(r);
}

void FieldCtx::build_log_tables() {
  const auto group_factors = factorize(q_ - 1);
  auto slow_pow = [this](FieldElem a, std::uint64_t n) {
    FieldElem r = one();
    while (n > 0) {
      if (n & 1U) r = mul_slow(r, a);
      a = mul_slow(a, a);
      n >>= 1U;
    }
    return r;
  };
  FieldElem primitive{0};
  for (std::uint32_t c = 2; c < q_; ++c) {
    const bool ok = std::all_of(group_factors.begin(), group_factors.end(), [&](const auto& pf) {
      return slow_pow({c}, (q_ - 1) / pf.first) != one();
    });
    if (ok) {
      primitive = {c};
      break;
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  FieldElem cur = one();
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur.code;
    log_[cur.code] = i;
    cur = mul_slow(cur, primitive);
  }
}

Field make_prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > FieldCtx::kMaxPrime) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
  return Field(new FieldCtx(static_cast<std::uint32_t>(p), 1, {}));
}

Field make_extension_field(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 2) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 2");
  if (checked_pow(p, e) > FieldCtx::kMaxExtensionOrder)
    throw Error(ErrorKind::InvalidArgument, "extension field too large");
  const auto prime = static_cast<std::uint32_t>(p);
  const std::uint64_t count = checked_pow(p, e);
  for (std::uint64_t c = 0; c < count; ++c) {
    Coeffs candidate = monic_from_counter(c, e, prime);
    if (candidate[0] == 0) continue;  // divisible by X
    if (irreducible_by_trial_division(candidate, prime))
      return Field(new FieldCtx(prime, e, std::move(candidate)));
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

Field make_field(std::uint64_t p, unsigned e) {
  return e == 1 ? make_prime_field(p) : make_extension_field(p, e);
}

// ---------------------------------------------------------------------------
// Number theory

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(ErrorKind::Overflow,
                  std::to_string(base) + "^" + std::to_string(exponent) + " exceeds 64 bits");
    result *= base;
  }
  return result;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [prime, k] : factorize(n)) phi = phi / prime * (prime - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  if (gcd(g % n, n) != 1)
    throw Error(ErrorKind::NotCoprime, std::to_string(g) + " and " + std::to_string(n));
  // The order divides phi(n): strip prime factors while the power stays 1.
  std::uint64_t order = euler_phi(n);
  for (const auto& [prime, k] : factorize(order)) {
    for (unsigned i = 0; i < k; ++i) {
      if (pow_mod(g, order / prime, n) != 1) break;
      order /= prime;
    }
  }
  return order;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t m) {
  return multiplicative_order(g, m) == euler_phi(m);
}

std::vector<std::uint64_t> primes_with_primitive_root_two(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= limit; p += 2)
    if (is_prime(p) && is_primitive_root(2, p)) out.push_back(p);
  return out;
}

}  // namespace gll::gf
