#pragma once

// Sparse polynomials in one and two variables over a finite field.
//
// Bivariate terms are kept in the *local* term order: total degree
// ascending, then x-exponent descending. The first term is therefore the
// leading term of the initial form, which is what every local computation
// (order, initial form, standard-basis style reductions) needs. The same
// order fixes the monic convention: a polynomial is monic when its first
// term in this order has coefficient 1.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gll/gf.hpp"

namespace gll::poly {

using gf::Field;
using gf::FieldElem;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

class UniPoly {
 public:
  using Terms = std::map<unsigned, FieldElem>;

  explicit UniPoly(Field field);
  UniPoly(Field field, Terms terms);
  /// Dense coefficient list c_0, c_1, ... given as integers reduced into the field.
  static UniPoly from_ints(Field field, const std::vector<std::int64_t>& coeffs);
  static UniPoly monomial(Field field, FieldElem c, unsigned degree);
  static UniPoly constant(Field field, FieldElem c) { return monomial(std::move(field), c, 0); }
  static UniPoly x(Field field);

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;
  FieldElem coeff(unsigned degree) const;
  FieldElem leading_coeff() const;
  UniPoly monic() const;
  FieldElem eval(FieldElem at) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(FieldElem c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return gf::same_field(a.field_, b.field_) && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Field field_;
  Terms terms_;
};

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// base^exponent mod modulus by square-and-multiply.
UniPoly powmod(const UniPoly& base, std::uint64_t exponent, const UniPoly& modulus);
/// Monic gcd (Euclid). gcd(0, 0) is rejected with ZeroPolynomial.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);
/// Distinct-degree criterion; deg f >= 1 required (DegreeTooSmall).
bool is_irreducible_uni(const UniPoly& f);
/// Monic irreducible polynomials of the given degree over the field,
/// enumerated with lower coefficients as a base-q counter (c_0 fastest).
std::optional<UniPoly> first_irreducible(const Field& field, unsigned degree);

/// For squarefree f: number of irreducible factors of each degree, by
/// peeling gcd(x^{q^k} - x, f) for k = 1, 2, ...
std::map<unsigned, unsigned> distinct_degree_counts(const UniPoly& f);

/// Phi_{p^m} = sum_{i<p} x^{i p^{m-1}}. Throws CharacteristicDividesN if char k = p.
UniPoly cyclotomic_ppow(std::uint64_t p, unsigned m, const Field& field);
/// Phi_n over the field, by dividing x^n - 1 by Phi_d for the proper divisors d.
UniPoly cyclotomic(std::uint64_t n, const Field& field);

struct FactorPattern {
  std::uint64_t degree;  // common degree of the irreducible factors
  std::uint64_t count;   // number of factors
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};
/// Predicted factorisation shape of Phi_n over GF(q): degree = ord_n(q),
/// count = phi(n)/degree. Requires q prime; throws NotCoprime when q | n.
FactorPattern cyclotomic_factor_pattern(std::uint64_t n, std::uint64_t q);

// ---------------------------------------------------------------------------
// Bivariate

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned degree() const noexcept { return x + y; }
  friend bool operator==(Monomial, Monomial) = default;
};

/// Total degree ascending, then x-exponent descending.
struct LocalOrder {
  bool operator()(Monomial a, Monomial b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, FieldElem, LocalOrder>;

  explicit BiPoly(Field field);
  BiPoly(Field field, Terms terms);
  static BiPoly monomial(Field field, FieldElem c, unsigned xe, unsigned ye);
  static BiPoly constant(Field field, FieldElem c) { return monomial(std::move(field), c, 0, 0); }
  static BiPoly x(Field field);
  static BiPoly y(Field field);
  /// alpha*x + beta*y
  static BiPoly linear(Field field, FieldElem alpha, FieldElem beta);

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  FieldElem coeff(Monomial m) const;

  /// Least total degree of a term. Throws ZeroPolynomial.
  unsigned order() const;
  /// Largest total degree of a term. Throws ZeroPolynomial.
  unsigned total_degree() const;
  bool is_homogeneous() const noexcept;
  /// First term in the local order. Throws ZeroPolynomial.
  std::pair<Monomial, FieldElem> lead_term() const;

  /// Terms of exactly this total degree.
  BiPoly homogeneous_part(unsigned degree) const;
  /// Drops every term of total degree > max_degree.
  BiPoly truncated(unsigned max_degree) const;
  /// Divides by the first coefficient in the local order (zero stays zero).
  BiPoly monic() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(FieldElem c) const;
  BiPoly shifted(unsigned xe, unsigned ye) const;  // multiplication by x^xe y^ye
  BiPoly pow(unsigned exponent) const;

  FieldElem eval(FieldElem at_x, FieldElem at_y) const;
  /// f(x_image, y_image).
  BiPoly substitute(const BiPoly& x_image, const BiPoly& y_image) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return gf::same_field(a.field_, b.field_) && a.terms_ == b.terms_;
  }

  /// Canonical text ("x^2*y + 2*x*y^2"); parse_poly reads it back.
  std::string to_string() const;

 private:
  void add_term(Monomial m, FieldElem c);

  Field field_;
  Terms terms_;
};

/// Throws FieldMismatch unless the fields agree.
void require_same_field(const Field& a, const Field& b);

struct InitialForm {
  unsigned order;
  BiPoly form;
};
/// (order f, lowest-degree homogeneous part of f). Throws ZeroPolynomial.
InitialForm initial_form(const BiPoly& f);

/// y^degree f(x/y). Throws DegreeTooSmall when degree < deg f.
BiPoly homogenize_from_uni(const UniPoly& f, unsigned degree);

/// Quotient when g divides f exactly, nullopt otherwise. Throws
/// ZeroPolynomial for g = 0.
std::optional<BiPoly> divide_exact(const BiPoly& f, const BiPoly& g);

/// gcd of two forms: split off the y-adic valuation, take gcd_uni of the
/// dehomogenisations f(x,1), rehomogenise. Result is monic.
BiPoly bihom_gcd(const BiPoly& g, const BiPoly& h);

/// A point [alpha:beta] of P^1(k), standing for the linear form alpha*x + beta*y.
/// Normalised so the first nonzero coordinate is 1.
struct ProjPoint {
  FieldElem alpha;
  FieldElem beta;
  friend bool operator==(ProjPoint, ProjPoint) = default;
  friend auto operator<=>(ProjPoint, ProjPoint) = default;
};
/// [1:0] first, then [alpha:1] in code order.
std::vector<ProjPoint> projective_line(const Field& field);

/// Points [alpha:beta] for which alpha*x + beta*y is a zerodivisor on
/// k[[x,y]]/(f), i.e. f vanishes identically on the line alpha*x + beta*y = 0.
/// Throws ZeroPolynomial.
std::vector<ProjPoint> linear_zerodivisor_forms(const BiPoly& f);

/// Every homogeneous form of degree d up to scalar (first coefficient in
/// local order equal to 1), in a fixed order.
std::vector<BiPoly> forms_up_to_scalar(const Field& field, unsigned degree);

}  // namespace gll::poly
