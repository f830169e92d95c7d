#include "gll/hyper.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gll/error.hpp"
#include "gll/linalg.hpp"

namespace gll::hyper {

using gf::FieldElem;
using linalg::RowSpace;
using poly::Monomial;

namespace {

// Column of a monomial in the basis of S/n^T ordered as the local order:
// degree blocks ascending, x-exponent descending inside a block.
std::size_t column(Monomial m) {
  const std::size_t d = m.degree();
  return d * (d + 1) / 2 + m.y;
}

std::size_t truncated_dim(unsigned truncation) {
  return std::size_t{truncation} * (truncation + 1) / 2;
}

using TermList = std::vector<std::pair<Monomial, FieldElem>>;

TermList terms_below(const BiPoly& h, unsigned truncation) {
  TermList out;
  for (const auto& [m, c] : h.terms()) {
    if (m.degree() >= truncation) break;
    out.emplace_back(m, c);
  }
  return out;
}

// Inserts every monomial multiple of h that survives modulo n^truncation.
void insert_multiples(RowSpace& span, const TermList& h, unsigned truncation, const gf::Field& k) {
  if (h.empty()) return;
  const unsigned ord = h.front().first.degree();
  for (unsigned d = 0; d + ord < truncation; ++d) {
    for (unsigned ye = 0; ye <= d; ++ye) {
      std::vector<FieldElem> v(span.dim(), k->zero());
      for (const auto& [m, c] : h) {
        const Monomial shifted{m.x + d - ye, m.y + ye};
        if (shifted.degree() < truncation) v[column(shifted)] = c;
      }
      span.insert(std::move(v));
    }
  }
}

bool degree_piece_covered(const RowSpace& span, unsigned g, const gf::Field& k) {
  for (unsigned ye = 0; ye <= g; ++ye) {
    std::vector<FieldElem> v(span.dim(), k->zero());
    v[column({g - ye, ye})] = k->one();
    if (!span.contains(std::move(v))) return false;
  }
  return true;
}

void validate_witness(const BiPoly& z) {
  if (z.is_zero()) throw Error(ErrorKind::ZeroWitness, "witness is zero");
  if (z.order() < 1) throw Error(ErrorKind::BadDegree, "witness is a unit");
}

// Rows h * S_{n - deg h} inside the degree-n piece (dimension n + 1), for a form h.
void insert_form_multiples(RowSpace& span, const BiPoly& h, unsigned n, const gf::Field& k) {
  if (h.is_zero()) return;
  const unsigned dh = h.order();
  if (n < dh) return;
  const unsigned d = n - dh;
  for (unsigned ye = 0; ye <= d; ++ye) {
    std::vector<FieldElem> v(n + 1, k->zero());
    for (const auto& [m, c] : h.terms()) v[m.y + ye] = c;
    span.insert(std::move(v));
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

bool divides(Monomial a, Monomial b) { return a.x <= b.x && a.y <= b.y; }

struct CandidateShape {
  Monomial lead;
  std::vector<Monomial> tail;
  std::uint64_t count;
};

std::vector<CandidateShape> candidate_shapes(const HypersurfaceRing& r, unsigned g) {
  std::vector<CandidateShape> shapes;
  if (g + 1 < r.e() + 1) return shapes;
  const unsigned max_order = g - r.e() + 1;
  const Monomial f_lead = r.f().lead_term().first;
  const std::uint64_t q = r.field()->order();
  const poly::LocalOrder before;
  for (unsigned ord = 1; ord <= max_order; ++ord) {
    for (unsigned ye = 0; ye <= ord; ++ye) {
      CandidateShape shape{{ord - ye, ye}, {}, 1};
      for (unsigned d = ord; d <= g; ++d)
        for (unsigned y2 = 0; y2 <= d; ++y2) {
          const Monomial m{d - y2, y2};
          if (!before(shape.lead, m) || divides(shape.lead, m) || divides(f_lead, m)) continue;
          shape.tail.push_back(m);
          shape.count = saturating_mul(shape.count, q);
        }
      shapes.push_back(std::move(shape));
    }
  }
  return shapes;
}

GllResult finish(GllResult res) {
  res.exact = res.upper.has_value() && *res.upper == res.lower;
  if (!res.exact) res.witness.reset();
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------

HypersurfaceRing::HypersurfaceRing(BiPoly f) : f_(std::move(f)), e_(0), f_star_(f_.field()) {
  if (f_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "defining equation is zero");
  e_ = f_.order();
  if (e_ < 1) throw Error(ErrorKind::BadDegree, "defining equation is a unit");
  f_star_ = poly::initial_form(f_).form;
  graded_ = f_.is_homogeneous();
}

unsigned index(const HypersurfaceRing& r) { return r.e(); }

bool contains_power_in_principal(const HypersurfaceRing& r, const BiPoly& z, unsigned g,
                                 std::optional<unsigned> truncation) {
  poly::require_same_field(r.field(), z.field());
  validate_witness(z);
  if (g < 1) throw Error(ErrorKind::BadDegree, "power must be >= 1");
  const unsigned t = truncation.value_or(g + 1);
  if (t <= g) throw Error(ErrorKind::BadDegree, "truncation must exceed the power");
  RowSpace span(r.field(), truncated_dim(t));
  insert_multiples(span, terms_below(r.f(), t), t, r.field());
  insert_multiples(span, terms_below(z, t), t, r.field());
  return degree_piece_covered(span, g, r.field());
}

GrRegularity is_gr_regular(const HypersurfaceRing& r, const BiPoly& z) {
  poly::require_same_field(r.field(), z.field());
  validate_witness(z);
  const auto init = poly::initial_form(z);
  const BiPoly common = poly::bihom_gcd(init.form, r.f_star());
  return {init.order, common.total_degree() == 0};
}

std::size_t gr_dimension(const HypersurfaceRing& r, unsigned n) {
  RowSpace rel(r.field(), n + 1);
  insert_form_multiples(rel, r.f_star(), n, r.field());
  return n + 1 - rel.rank();
}

bool graded_injectivity(const HypersurfaceRing& r, const BiPoly& x, unsigned s) {
  poly::require_same_field(r.field(), x.field());
  validate_witness(x);
  const auto init = poly::initial_form(x);
  const unsigned t = init.order;
  for (unsigned i = 1; i <= s; ++i) {
    const unsigned j = i - 1;
    RowSpace image(r.field(), j + t + 1);
    insert_form_multiples(image, r.f_star(), j + t, r.field());
    const std::size_t relations = image.rank();
    insert_form_multiples(image, init.form, j + t, r.field());
    if (image.rank() - relations != gr_dimension(r, j)) return false;
  }
  return true;
}

std::string to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::Direct: return "direct";
    case WitnessMethod::RegularInitialForm: return "regular-initial-form";
    case WitnessMethod::Constructed: return "constructed";
  }
  return "unknown";
}

WitnessReport check_witness(const HypersurfaceRing& r, const BiPoly& z, unsigned g,
                            WitnessMethod method) {
  const bool contained = contains_power_in_principal(r, z, g);
  return {z, z.order(), g, contained, g + 1, method};
}

std::string to_string(CertSource s) {
  switch (s) {
    case CertSource::IndexLower: return "index-lower";
    case CertSource::NoLinearNonzerodivisor: return "no-linear-nonzerodivisor";
    case CertSource::RegularInitialForm: return "regular-initial-form";
    case CertSource::Exhaustive: return "exhaustive";
    case CertSource::ExplicitWitness: return "explicit-witness";
  }
  return "unknown";
}

GllResult gll_bounds(const HypersurfaceRing& r, unsigned max_t) {
  if (max_t < 1) throw Error(ErrorKind::InvalidArgument, "max_t must be >= 1");
  GllResult res;
  const unsigned e = r.e();
  res.lower = e;
  res.certificates.push_back({BoundSide::Lower, e, CertSource::IndexLower});
  if (e >= 2 && poly::linear_zerodivisor_forms(r.f()).size() == poly::projective_line(r.field()).size()) {
    res.lower = e + 1;
    res.certificates.push_back({BoundSide::Lower, e + 1, CertSource::NoLinearNonzerodivisor});
  }
  for (unsigned t = 1; t <= max_t && !res.upper; ++t) {
    for (const BiPoly& form : poly::forms_up_to_scalar(r.field(), t)) {
      ++res.candidates_tested;
      if (poly::bihom_gcd(form, r.f_star()).total_degree() != 0) continue;
      res.regular_form = form;
      res.upper = e + t - 1;
      res.certificates.push_back({BoundSide::Upper, e + t - 1, CertSource::RegularInitialForm});
      break;
    }
  }
  if (res.upper && *res.upper == res.lower) {
    // m^{e+t-1} needs e >= 2 generators unless e = 1, so the regular form
    // itself is a witness; confirm it.
    if (contains_power_in_principal(r, *res.regular_form, *res.upper)) {
      res.witness = res.regular_form;
      res.certificates.push_back({BoundSide::Upper, *res.upper, CertSource::ExplicitWitness});
    }
  }
  return finish(std::move(res));
}

std::uint64_t witness_candidate_count(const HypersurfaceRing& r, unsigned g) {
  std::uint64_t total = 0;
  for (const auto& shape : candidate_shapes(r, g)) total = saturating_add(total, shape.count);
  return total;
}

GllResult gll_exact(const HypersurfaceRing& r, const GllSearchOptions& opts) {
  if (opts.max_g < r.e())
    throw Error(ErrorKind::InvalidArgument, "max_g must be at least the order of f");
  if (!opts.enumerate) return gll_bounds(r, opts.max_t);

  const auto& k = r.field();
  const std::uint64_t q = k->order();
  std::uint64_t spent = 0;
  for (unsigned g = r.e(); g <= opts.max_g; ++g) {
    const auto shapes = candidate_shapes(r, g);
    std::uint64_t level = 0;
    for (const auto& s : shapes) level = saturating_add(level, s.count);
    if (saturating_add(spent, level) > opts.budget)
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "level g=" + std::to_string(g) + " needs " + std::to_string(level) +
                      " candidates beyond the budget of " + std::to_string(opts.budget));
    spent += level;

    const unsigned trunc = g + 1;
    RowSpace base(k, truncated_dim(trunc));
    insert_multiples(base, terms_below(r.f(), trunc), trunc, k);

    for (const auto& shape : shapes) {
      std::vector<std::uint32_t> digits(shape.tail.size(), 0);
      for (std::uint64_t c = 0; c < shape.count; ++c) {
        TermList z{{shape.lead, k->one()}};
        for (std::size_t i = 0; i < digits.size(); ++i)
          if (digits[i] != 0) z.emplace_back(shape.tail[i], FieldElem{digits[i]});
        // Tail monomials come after the lead in local order, so z is sorted.
        RowSpace span = base;
        insert_multiples(span, z, trunc, k);
        if (degree_piece_covered(span, g, k)) {
          BiPoly::Terms terms(z.begin(), z.end());
          GllResult res;
          res.lower = g;
          res.upper = g;
          res.witness = BiPoly(k, std::move(terms));
          res.candidates_tested = spent;
          res.certificates.push_back({BoundSide::Lower, r.e(), CertSource::IndexLower});
          res.certificates.push_back({BoundSide::Lower, g, CertSource::Exhaustive});
          res.certificates.push_back({BoundSide::Upper, g, CertSource::ExplicitWitness});
          return finish(std::move(res));
        }
        for (std::size_t i = 0; i < digits.size(); ++i) {
          if (++digits[i] < q) break;
          digits[i] = 0;
        }
      }
    }
  }

  GllResult res = gll_bounds(r, opts.max_t);
  res.candidates_tested += spent;
  if (opts.max_g + 1 > res.lower) {
    if (res.upper && *res.upper <= opts.max_g)
      throw std::logic_error("exhaustive search contradicts a certified upper bound");
    res.lower = opts.max_g + 1;
    res.certificates.push_back({BoundSide::Lower, res.lower, CertSource::Exhaustive});
  }
  return finish(std::move(res));
}

bool verify_linear_reduction_equality(const Field& k, unsigned n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const std::uint64_t p = k->characteristic();
  if (p == 2) throw Error(ErrorKind::HypothesisFailed, "characteristic 2");
  const std::uint64_t obstruction = (1 + gf::pow_mod(p - 2, n, p)) % p;
  if (obstruction == 0)
    throw Error(ErrorKind::HypothesisFailed,
                "characteristic " + std::to_string(p) + " divides 1+(-2)^" + std::to_string(n));
  const FieldElem two = k->from_int(2);
  const BiPoly f = family_polynomial(Family::LinearWitness, {k, 0, 0, n});
  const BiPoly ell = BiPoly::linear(k, k->one(), two);
  // Degree n+2 piece: f spans the relations, (x+2y) S_{n+1} the ideal.
  RowSpace span(k, n + 3);
  insert_form_multiples(span, f, n + 2, k);
  insert_form_multiples(span, ell, n + 2, k);
  return span.rank() == n + 3;
}

bool principal_clause_holds(const HypersurfaceRing& r, const BiPoly& x) {
  const auto reg = is_gr_regular(r, x);
  if (!reg.regular) throw Error(ErrorKind::HypothesisFailed, "initial form is not regular");
  const unsigned s = index(r);
  if (!graded_injectivity(r, x, s))
    throw Error(ErrorKind::HypothesisFailed, "multiplication is not injective in low degrees");
  const unsigned g = s + reg.t - 1;
  if (gr_dimension(r, g) < 2) return true;
  return contains_power_in_principal(r, x, g);
}

// ---------------------------------------------------------------------------
// Families

std::string to_string(Family f) {
  switch (f) {
    case Family::ProductOfLines: return "product-of-lines";
    case Family::LinearWitness: return "linear-witness";
    case Family::LinearWitnessPPow: return "linear-witness-ppow";
    case Family::QuadraticWitness: return "quadratic-witness";
  }
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : {Family::ProductOfLines, Family::LinearWitness, Family::LinearWitnessPPow,
                   Family::QuadraticWitness})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

namespace {

// xy(x^n + y^n)
BiPoly xy_binomial(const Field& k, unsigned n) {
  BiPoly::Terms t;
  t[{n + 1, 1}] = k->one();
  t[{1, n + 1}] = k->add(t[{1, n + 1}], k->one());
  return BiPoly(k, std::move(t));
}

std::uint64_t quadratic_family_exponent(const FamilyParams& p) {
  return gf::checked_pow(2, p.n) * gf::checked_pow(p.p, p.m);
}

void check_quadratic_hypotheses(const FamilyParams& params) {
  if (!gf::is_prime(params.p) || params.p <= 3)
    throw Error(ErrorKind::HypothesisFailed, "p must be a prime > 3");
  if (params.m == 0) return;
  const std::uint64_t p = params.p;
  if (params.m == 1) {
    if (!gf::is_primitive_root(2, p))
      throw Error(ErrorKind::HypothesisFailed, "2 is not a primitive root mod " + std::to_string(p));
    return;
  }
  // 2 generates (Z/p^2)^* iff it generates (Z/p)^* and 2^{p-1} != 1 mod p^2.
  const bool lifted = gf::is_primitive_root(2, p) && gf::pow_mod(2, p - 1, p * p) != 1;
  if (lifted != gf::is_primitive_root(2, p * p))
    throw std::logic_error("primitive root lifting criterion disagrees with direct order");
  if (!lifted)
    throw Error(ErrorKind::HypothesisFailed, "2 is not a primitive root mod " + std::to_string(p * p));
}

}  // namespace

BiPoly family_polynomial(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::ProductOfLines: {
      const Field& k = params.field;
      BiPoly f = BiPoly::y(k);
      for (const FieldElem a : k->elements()) f = f * BiPoly::linear(k, k->one(), a);
      return f;
    }
    case Family::LinearWitness:
      return xy_binomial(params.field, params.n);
    case Family::LinearWitnessPPow: {
      const auto k = gf::make_prime_field(params.p);
      return xy_binomial(k, static_cast<unsigned>(gf::checked_pow(params.p, params.n)));
    }
    case Family::QuadraticWitness:
      return xy_binomial(gf::make_prime_field(2),
                         static_cast<unsigned>(quadratic_family_exponent(params)));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

FamilyReport verify_family(Family family, const FamilyParams& params) {
  std::string label;
  unsigned expected_index = 0, expected_gll = 0, max_t = 1;
  Field k;
  FamilyParams effective = params;
  switch (family) {
    case Family::ProductOfLines:
      k = params.field;
      label = "q=" + k->name();
      expected_index = k->order() + 1;
      expected_gll = k->order() + 2;
      max_t = 2;
      break;
    case Family::LinearWitness:
    case Family::LinearWitnessPPow: {
      unsigned n = params.n;
      if (family == Family::LinearWitnessPPow) {
        if (!gf::is_prime(params.p) || params.p == 2)
          throw Error(ErrorKind::HypothesisFailed, "p must be an odd prime");
        k = gf::make_prime_field(params.p);
        n = static_cast<unsigned>(gf::checked_pow(params.p, params.n));
        label = "p=" + std::to_string(params.p) + ",n=" + std::to_string(params.n);
      } else {
        k = params.field;
        label = "k=GF(" + k->name() + "),n=" + std::to_string(n);
      }
      effective = {k, 0, 0, n};
      expected_index = expected_gll = n + 2;
      break;
    }
    case Family::QuadraticWitness: {
      check_quadratic_hypotheses(params);
      k = gf::make_prime_field(2);
      const unsigned n = static_cast<unsigned>(quadratic_family_exponent(params));
      label = "p=" + std::to_string(params.p) + ",m=" + std::to_string(params.m) +
              ",n=" + std::to_string(params.n);
      expected_index = n + 2;
      expected_gll = n + 3;
      max_t = 2;
      break;
    }
  }

  std::optional<bool> equality;
  BiPoly f(k);
  BiPoly witness(k);
  if (family == Family::LinearWitness || family == Family::LinearWitnessPPow) {
    equality = verify_linear_reduction_equality(k, effective.n);
    f = family_polynomial(Family::LinearWitness, effective);
    witness = BiPoly::linear(k, k->one(), k->from_int(2));
  } else {
    f = family_polynomial(family, params);
    const auto quad = poly::first_irreducible(k, 2);
    witness = poly::homogenize_from_uni(*quad, 2);
  }

  const HypersurfaceRing ring(f);
  FamilyReport rep{family, label, f, expected_index, expected_gll, index(ring),
                   gll_bounds(ring, max_t), witness, false, false, equality, false};
  rep.witness_regular = is_gr_regular(ring, witness).regular;
  rep.witness_contained = contains_power_in_principal(ring, witness, expected_gll);
  rep.matches = rep.computed_index == expected_index && rep.bounds.exact &&
                rep.bounds.lower == expected_gll && rep.witness_regular &&
                rep.witness_contained && equality.value_or(true);
  return rep;
}

// ---------------------------------------------------------------------------
// Standard graded

std::optional<unsigned> graded_containment_degree(const BiPoly& f, const BiPoly& z, unsigned limit) {
  poly::require_same_field(f.field(), z.field());
  validate_witness(z);
  if (!f.is_homogeneous() || !z.is_homogeneous() || f.is_zero())
    throw Error(ErrorKind::InvalidArgument, "graded containment needs forms");
  const unsigned d = z.order();
  for (unsigned n = d; n <= limit; ++n) {
    RowSpace span(f.field(), n + 1);
    insert_form_multiples(span, f, n, f.field());
    insert_form_multiples(span, z, n, f.field());
    if (span.rank() == n + 1) return n;
  }
  return std::nullopt;
}

GradedGll gll_graded_hypersurface(const BiPoly& f, unsigned max_d) {
  if (f.is_zero() || !f.is_homogeneous() || f.order() < 1)
    throw Error(ErrorKind::InvalidArgument, "expected a form of degree >= 1");
  const unsigned e = f.order();
  for (unsigned d = 1; d <= max_d; ++d) {
    std::optional<GradedGll> best;
    for (const BiPoly& z : poly::forms_up_to_scalar(f.field(), d)) {
      const auto n = graded_containment_degree(f, z, d + 2 * e);
      if (n && (!best || *n < best->gll)) best = GradedGll{*n, d, z};
    }
    if (best) {
      if (best->gll != d + e - 1)
        throw std::logic_error("graded witness of degree " + std::to_string(d) +
                               " gives gll " + std::to_string(best->gll));
      return *best;
    }
  }
  throw Error(ErrorKind::NoWitnessFound, "no homogeneous witness of degree <= " + std::to_string(max_d));
}

}  // namespace gll::hyper
