#pragma once

// Invariants of one-dimensional hypersurface rings R = k[[x,y]]/(f) over a
// finite field: index, generalized Loewy length (bounds, exhaustive search
// and explicit witnesses), regularity on the associated graded ring
// gr(R) = k[x,y]/(f*), and the standard graded variant k[x,y]/(f) for a form f.
//
// Containment test. For z, f in S = k[[x,y]] with n = (x,y)S,
//   n^g  is contained in (z, f)   iff   n^g is contained in (z, f) + n^{g+1}.
// The right-hand inclusion self-improves: n^g in I + n^{g+1} gives
// n^{g+1} = n n^g in I + n^{g+2}, hence n^g in I + n^{g+k} for every k, and
// Krull's intersection theorem in the complete local ring S closes the gap.
// So a single rank computation in the finite-dimensional S/n^{g+1} decides it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gll/gf.hpp"
#include "gll/poly.hpp"

namespace gll::hyper {

using gf::Field;
using poly::BiPoly;

class HypersurfaceRing {
 public:
  /// Throws ZeroPolynomial for f = 0 and BadDegree when f is a unit.
  explicit HypersurfaceRing(BiPoly f);

  const Field& field() const noexcept { return f_.field(); }
  const BiPoly& f() const noexcept { return f_; }
  /// ord(f); equals the multiplicity and hence the index of R.
  unsigned e() const noexcept { return e_; }
  const BiPoly& f_star() const noexcept { return f_star_; }
  bool graded() const noexcept { return graded_; }

 private:
  BiPoly f_;
  unsigned e_;
  BiPoly f_star_;
  bool graded_;
};

/// index(R) = e(R) = ord(f) for a hypersurface.
unsigned index(const HypersurfaceRing& r);

/// m^g is contained in zR, decided in S/n^{truncation}. `truncation`
/// defaults to g + 1 and may be raised to cross-check stability.
/// Throws ZeroWitness (z = 0) and BadDegree (z a unit, g < 1, or
/// truncation <= g).
bool contains_power_in_principal(const HypersurfaceRing& r, const BiPoly& z, unsigned g,
                                 std::optional<unsigned> truncation = std::nullopt);

struct GrRegularity {
  unsigned t;    // ord(z)
  bool regular;  // z* is a nonzerodivisor on k[x,y]/(f*)
};
/// regular iff gcd(z*, f*) is a unit. Throws ZeroWitness / BadDegree.
GrRegularity is_gr_regular(const HypersurfaceRing& r, const BiPoly& z);

/// dim_k m^n/m^{n+1} = dim of the degree-n piece of k[x,y]/(f*); this is
/// also the minimal number of generators of m^n.
std::size_t gr_dimension(const HypersurfaceRing& r, unsigned n);

/// Multiplication by x* from gr(R)_{i-1} to gr(R)_{i+t-1} is injective for
/// 1 <= i <= s. Throws ZeroWitness / BadDegree.
bool graded_injectivity(const HypersurfaceRing& r, const BiPoly& x, unsigned s);

enum class WitnessMethod { Direct, RegularInitialForm, Constructed };
std::string to_string(WitnessMethod m);

struct WitnessReport {
  BiPoly z;
  unsigned ord_z;
  unsigned g;
  bool contained;
  unsigned truncation_degree;
  WitnessMethod method;
};
WitnessReport check_witness(const HypersurfaceRing& r, const BiPoly& z, unsigned g,
                            WitnessMethod method = WitnessMethod::Direct);

enum class BoundSide { Lower, Upper };
enum class CertSource {
  IndexLower,              // gll >= index for Gorenstein rings
  NoLinearNonzerodivisor,  // e >= 2 and every linear form divides f
  RegularInitialForm,      // gll <= e + t - 1 from a regular form of degree t
  Exhaustive,              // complete witness search ruled out smaller values
  ExplicitWitness,         // a verified containment m^g in (z)
};
std::string to_string(CertSource s);

struct Certificate {
  BoundSide side;
  unsigned value;
  CertSource source;
};

struct GllResult {
  unsigned lower = 0;
  std::optional<unsigned> upper;  // nullopt: no upper bound certified
  bool exact = false;
  std::optional<BiPoly> witness;  // set and verified when exact
  std::vector<Certificate> certificates;
  /// Degree-t form found regular on gr(R), if the search reached one.
  std::optional<BiPoly> regular_form;
  std::uint64_t candidates_tested = 0;
};

/// Lower bound e, raised to e+1 when no linear form is a nonzerodivisor;
/// upper bound e+t-1 for the least t <= max_t with a degree-t form coprime
/// to f*. An exact result carries the regular form as verified witness.
GllResult gll_bounds(const HypersurfaceRing& r, unsigned max_t);

struct GllSearchOptions {
  unsigned max_g = 0;
  bool enumerate = true;
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned max_t = 2;
};

/// Number of normalised candidates the exhaustive search visits at level g.
std::uint64_t witness_candidate_count(const HypersurfaceRing& r, unsigned g);

/// Exhaustive witness search for g = e, e+1, ..., max_g. Candidates z have
/// 1 <= ord z <= g-e+1, support in degrees <= g, leading coefficient 1 and
/// a tail reduced against the leading monomials of z and f (every other z
/// generates the same ideal (z, f) + n^{g+1} as one of these). Returns the
/// first witness; otherwise bounds, with the lower bound raised past max_g.
/// Throws SearchSpaceTooLarge when the budget would be exceeded.
GllResult gll_exact(const HypersurfaceRing& r, const GllSearchOptions& opts);

/// m^{n+2} = (x+2y) m^{n+1} in k[[x,y]]/(xy(x^n+y^n)), checked on the
/// degree-(n+2) piece. Throws HypothesisFailed when char k = 2 or
/// char k divides 1 + (-2)^n.
bool verify_linear_reduction_equality(const Field& k, unsigned n);

/// When x* is regular of degree t, s = index(R) and m^{s+t-1} needs at
/// least two generators, m^{s+t-1} lies in (x). Returns that containment,
/// or true when m^{s+t-1} is principal. Throws HypothesisFailed when x* is
/// not regular or the injectivity hypothesis fails.
bool principal_clause_holds(const HypersurfaceRing& r, const BiPoly& x);

// ---------------------------------------------------------------------------
// Example families

enum class Family {
  ProductOfLines,      // y * prod_{a in k} (x + a y)
  LinearWitness,       // xy(x^n + y^n), witness x + 2y
  LinearWitnessPPow,   // xy(x^{p^n} + y^{p^n}) over GF(p), p odd
  QuadraticWitness,    // xy(x^{2^n p^m} + y^{2^n p^m}) over GF(2), witness x^2+xy+y^2
};
std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

struct FamilyParams {
  Field field;         // ProductOfLines, LinearWitness
  std::uint64_t p = 0; // LinearWitnessPPow, QuadraticWitness
  unsigned m = 0;      // QuadraticWitness
  unsigned n = 0;      // LinearWitness, LinearWitnessPPow, QuadraticWitness
};

struct FamilyReport {
  Family family;
  std::string params;
  BiPoly f;
  unsigned expected_index;
  unsigned expected_gll;
  unsigned computed_index;
  GllResult bounds;
  BiPoly witness;
  bool witness_regular;
  bool witness_contained;  // m^{expected_gll} in (witness)
  std::optional<bool> equality;  // linear families: m^{e} = (x+2y) m^{e-1}
  bool matches;
};

/// Builds the family member, computes index and bounds, checks the explicit
/// witness, and compares with the closed form. Throws HypothesisFailed.
FamilyReport verify_family(Family family, const FamilyParams& params);

/// Builds f for a family member without verifying it.
BiPoly family_polynomial(Family family, const FamilyParams& params);

// ---------------------------------------------------------------------------
// Standard graded hypersurfaces k[x,y]/(f), f a form

struct GradedGll {
  unsigned gll;
  unsigned witness_degree;
  BiPoly witness;
};

/// Least n with m^n in (z) over homogeneous z of degree 1..max_d. Checks
/// that the minimum equals deg z + e - 1 (std::logic_error otherwise).
/// Throws InvalidArgument for a non-form, NoWitnessFound past max_d.
GradedGll gll_graded_hypersurface(const BiPoly& f, unsigned max_d);

/// Least n such that z R_{n-d} = R_n in k[x,y]/(f), searched up to `limit`.
std::optional<unsigned> graded_containment_degree(const BiPoly& f, const BiPoly& z,
                                                  unsigned limit);

}  // namespace gll::hyper
