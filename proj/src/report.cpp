#include "gll/report.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "gll/error.hpp"
#include "gll/parser.hpp"

namespace gll::cli {

using nlohmann::json;
using poly::BiPoly;
using poly::Monomial;

json elem_json(const gf::FieldCtx& k, gf::FieldElem a) { return k.coords(a); }

json field_json(const gf::FieldCtx& k) {
  json modulus = json::array();
  for (const auto c : k.modulus()) modulus.push_back(c);
  return {{"p", k.characteristic()}, {"e", k.degree()}, {"q", k.order()}, {"modulus", modulus}};
}

json poly_json(const BiPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back({{"x", m.x}, {"y", m.y}, {"coeff", elem_json(*f.field(), c)}});
  return {{"text", f.to_string()}, {"terms", terms}};
}

namespace {

json opt_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

json certificates_json(const std::vector<hyper::Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs)
    out.push_back({{"side", c.side == hyper::BoundSide::Lower ? "lower" : "upper"},
                   {"value", c.value},
                   {"source", hyper::to_string(c.source)}});
  return out;
}

json gll_json(const hyper::GllResult& g) {
  return {{"lower", g.lower},
          {"upper", opt_json(g.upper)},
          {"exact", g.exact},
          {"witness", g.witness ? poly_json(*g.witness) : json(nullptr)},
          {"certificates", certificates_json(g.certificates)},
          {"candidates_tested", g.candidates_tested}};
}

}  // namespace

// ---------------------------------------------------------------------------
// analyze

json analyze(const BiPoly& f, const AnalyzeOptions& opts) {
  const hyper::HypersurfaceRing r(f);
  const auto& k = *r.field();

  hyper::GllResult g;
  if (opts.exact) {
    hyper::GllSearchOptions so;
    so.max_g = opts.max_g ? opts.max_g : r.e() + 3;
    so.budget = opts.budget;
    so.max_t = opts.max_t;
    g = hyper::gll_exact(r, so);
  } else {
    g = hyper::gll_bounds(r, opts.max_t);
  }

  json regular = nullptr;
  if (g.regular_form) regular = {{"degree", g.regular_form->order()}, {"form", poly_json(*g.regular_form)}};

  json zd = json::array();
  for (const auto& pt : poly::linear_zerodivisor_forms(f))
    zd.push_back({{"alpha", elem_json(k, pt.alpha)}, {"beta", elem_json(k, pt.beta)},
                  {"form", BiPoly::linear(r.field(), pt.alpha, pt.beta).to_string()}});

  return {{"schema_version", kSchemaVersion},
          {"command", "analyze"},
          {"field", field_json(k)},
          {"f", poly_json(f)},
          {"initial_form", poly_json(r.f_star())},
          {"graded", r.graded()},
          {"order", r.e()},
          {"index", hyper::index(r)},
          {"gr_regular_form_found", regular},
          {"gll", gll_json(g)},
          {"linear_zerodivisors", zd},
          {"projective_line_size", k.order() + 1}};
}

// ---------------------------------------------------------------------------
// semigroup

json semigroup_report(const std::vector<std::uint64_t>& gens, bool oracle) {
  const auto h = sgp::NumericalSemigroup::from_generators(gens);
  const auto g = sgp::ggl(h, oracle ? sgp::GglMode::Oracle : sgp::GglMode::Formula);
  const auto graded = sgp::gll_graded_semigroup(h);

  // Empirical table for the reduction question: for each witness exponent d
  // and each generator, the least i with t^d m_i = m_{i+d}.
  std::set<std::uint64_t> ds(g.witness_ideals.begin(), g.witness_ideals.end());
  ds.insert(h.gens().begin(), h.gens().end());
  ds.insert(graded.witness_d);
  json reductions = json::array();
  for (const auto d : ds) {
    const auto shift = sgp::graded_reduction_min_shift(h, d);
    reductions.push_back({{"d", d},
                          {"is_ggl_witness", std::count(g.witness_ideals.begin(), g.witness_ideals.end(), d) > 0},
                          {"min_shift", shift ? json(*shift) : json(nullptr)}});
  }

  return {{"schema_version", kSchemaVersion},
          {"command", "semigroup"},
          {"gens", h.gens()},
          {"multiplicity", h.multiplicity()},
          {"conductor", h.conductor()},
          {"frobenius", h.frobenius()},
          {"gaps", h.gaps()},
          {"apery", sgp::apery_set(h, h.multiplicity())},
          {"ggl", g.value},
          {"ggl_formula", g.formula_value},
          {"ggl_mode", oracle ? "oracle" : "formula"},
          {"ggl_witnesses", g.witness_ideals},
          {"gll_graded", {{"value", graded.gll}, {"witness_d", graded.witness_d}}},
          {"gll_ggl_bounds_ok", sgp::gll_ggl_bounds_hold(h)},
          {"reductions", reductions}};
}

// ---------------------------------------------------------------------------
// scan

namespace {

// Coefficient vector of a degree-e form: c[j] is the coefficient of x^{e-j} y^j.
using Coeffs = std::vector<gf::FieldElem>;

std::uint64_t code_of(const Coeffs& c, std::uint64_t q) {
  std::uint64_t code = 0;
  for (std::size_t j = c.size(); j-- > 0;) code = code * q + c[j].code;
  return code;
}

Coeffs coeffs_of_code(std::uint64_t code, std::uint64_t q, unsigned e) {
  Coeffs c(e + 1);
  for (unsigned j = 0; j <= e; ++j) {
    c[j] = {static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
  return c;
}

BiPoly form_of(const gf::Field& k, const Coeffs& c) {
  const auto e = static_cast<unsigned>(c.size() - 1);
  BiPoly::Terms t;
  for (unsigned j = 0; j <= e; ++j)
    if (!k->is_zero(c[j])) t[{e - j, j}] = c[j];
  return BiPoly(k, std::move(t));
}

Coeffs coeffs_of_form(const BiPoly& f, unsigned e) {
  Coeffs c(e + 1, f.field()->zero());
  for (const auto& [m, a] : f.terms()) c[m.y] = a;
  return c;
}

// Scales so the first nonzero coefficient is 1.
void normalise(const gf::FieldCtx& k, Coeffs& c) {
  for (const auto a : c)
    if (!k.is_zero(a)) {
      const auto inv = k.inv(a);
      for (auto& b : c) b = k.mul(b, inv);
      return;
    }
}

// Binomial expansion helper: coefficient vectors of (a x + b y)^i, degree i.
std::vector<Coeffs> linear_powers(const gf::FieldCtx& k, gf::FieldElem a, gf::FieldElem b, unsigned e) {
  std::vector<Coeffs> out{{k.one()}};
  for (unsigned i = 1; i <= e; ++i) {
    const auto& prev = out.back();
    Coeffs next(i + 1, k.zero());
    for (unsigned j = 0; j < prev.size(); ++j) {
      next[j] = k.add(next[j], k.mul(prev[j], a));
      next[j + 1] = k.add(next[j + 1], k.mul(prev[j], b));
    }
    out.push_back(std::move(next));
  }
  return out;
}

struct Matrix2 {
  gf::FieldElem a, b, c, d;  // x -> a x + b y, y -> c x + d y
};

std::vector<Matrix2> general_linear_group(const gf::FieldCtx& k) {
  std::vector<Matrix2> out;
  const auto el = k.elements();
  for (const auto a : el)
    for (const auto b : el)
      for (const auto c : el)
        for (const auto d : el)
          if (!k.is_zero(k.sub(k.mul(a, d), k.mul(b, c)))) out.push_back({a, b, c, d});
  return out;
}

// f(ax+by, cx+dy) on coefficient vectors.
Coeffs transform(const gf::FieldCtx& k, const Coeffs& f, const Matrix2& g) {
  const auto e = static_cast<unsigned>(f.size() - 1);
  const auto px = linear_powers(k, g.a, g.b, e);
  const auto py = linear_powers(k, g.c, g.d, e);
  Coeffs out(e + 1, k.zero());
  for (unsigned j = 0; j <= e; ++j) {
    if (k.is_zero(f[j])) continue;
    const Coeffs& u = px[e - j];
    const Coeffs& v = py[j];
    for (unsigned s = 0; s < u.size(); ++s) {
      if (k.is_zero(u[s])) continue;
      const auto us = k.mul(f[j], u[s]);
      for (unsigned t = 0; t < v.size(); ++t) out[s + t] = k.add(out[s + t], k.mul(us, v[t]));
    }
  }
  return out;
}

unsigned form_degree(const BiPoly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument, "expected a nonzero homogeneous form");
  return f.total_degree();
}

}  // namespace

BiPoly canonical_form(const BiPoly& f) {
  const unsigned e = form_degree(f);
  const auto& k = *f.field();
  const auto c = coeffs_of_form(f, e);
  std::optional<std::uint64_t> best;
  Coeffs best_c;
  for (const auto& g : general_linear_group(k)) {
    auto img = transform(k, c, g);
    normalise(k, img);
    const auto code = code_of(img, k.order());
    if (!best || code < *best) {
      best = code;
      best_c = std::move(img);
    }
  }
  return form_of(f.field(), best_c);
}

std::vector<ScanRow> scan_forms(const gf::Field& k, unsigned e, const ScanOptions& opts) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  const std::uint64_t q = k->order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= e; ++i) {
    if (total > opts.max_forms / q)
      throw Error(ErrorKind::InvalidArgument, "form space q^(e+1) exceeds the scan limit");
    total *= q;
  }

  const auto group = general_linear_group(*k);
  std::vector<bool> seen(total, false);
  std::vector<ScanRow> rows;
  for (std::uint64_t code = 1; code < total; ++code) {
    if (seen[code]) continue;
    auto c = coeffs_of_code(code, q, e);
    // Only scalar-normalised vectors stand for classes.
    const auto first = std::find_if(c.begin(), c.end(), [&](auto a) { return !k->is_zero(a); });
    if (*first != k->one()) continue;

    std::set<std::uint64_t> orbit;
    for (const auto& g : group) {
      auto img = transform(*k, c, g);
      normalise(*k, img);
      orbit.insert(code_of(img, q));
    }
    for (const auto m : orbit) seen[m] = true;

    const BiPoly f = form_of(k, c);
    const hyper::HypersurfaceRing r(f);
    hyper::GllResult g = hyper::gll_bounds(r, opts.max_t);
    if (!g.exact && opts.max_g >= r.e()) {
      hyper::GllSearchOptions so;
      so.max_g = opts.max_g;
      so.budget = opts.budget;
      so.max_t = opts.max_t;
      try {
        g = hyper::gll_exact(r, so);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::SearchSpaceTooLarge) throw;
      }
    }
    ScanRow row{f, orbit.size(), hyper::index(r), g.lower, g.upper, g.exact, std::nullopt, g.witness};
    if (g.exact) row.gap = g.lower - row.index;
    rows.push_back(std::move(row));
  }
  // Iterating codes upwards already yields canonical order; keep it explicit.
  std::stable_sort(rows.begin(), rows.end(), [&](const ScanRow& a, const ScanRow& b) {
    return code_of(coeffs_of_form(a.f, e), q) < code_of(coeffs_of_form(b.f, e), q);
  });
  return rows;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "f,orbit_size,index,gll_lower,gll_upper,exact,gap,witness\r\n";
  for (const auto& r : rows) {
    out << csv_escape(r.f.to_string()) << ',' << r.orbit_size << ',' << r.index << ',' << r.lower << ','
        << (r.upper ? std::to_string(*r.upper) : "") << ',' << (r.exact ? "true" : "false") << ','
        << (r.gap ? std::to_string(*r.gap) : "") << ','
        << csv_escape(r.witness ? r.witness->to_string() : "") << "\r\n";
  }
}

// ---------------------------------------------------------------------------
// verify

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::HypothesisFailed: return "hypothesis-failed";
    case RowStatus::BoundedOnly: return "bounded-only";
  }
  return "?";
}

namespace {

constexpr const char* kHypothesisFailed = "hypothesis-failed";

std::string gll_text(const hyper::GllResult& g) {
  if (g.exact) return std::to_string(g.lower);
  return "[" + std::to_string(g.lower) + "," + (g.upper ? std::to_string(*g.upper) : "inf") + "]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

ReportRow make_row(std::string group, std::string id, std::string params, std::string expected,
                   std::string source, std::string computed, bool bounded = false) {
  RowStatus status;
  if (expected == computed)
    status = expected == kHypothesisFailed ? RowStatus::HypothesisFailed : RowStatus::Match;
  else
    status = bounded ? RowStatus::BoundedOnly : RowStatus::Mismatch;
  return {std::move(group), std::move(id), std::move(params), std::move(expected),
          std::move(source), std::move(computed), status};
}

std::string family_computed(const hyper::FamilyReport& rep) {
  std::string s = "index=" + std::to_string(rep.computed_index) + " gll=" + gll_text(rep.bounds) +
                  " witness_regular=" + bool_text(rep.witness_regular) +
                  " witness_contained=" + bool_text(rep.witness_contained);
  if (rep.equality) s += " equality=" + bool_text(*rep.equality);
  return s;
}

std::string family_expected(const hyper::FamilyReport& rep) {
  std::string s = "index=" + std::to_string(rep.expected_index) + " gll=" + std::to_string(rep.expected_gll) +
                  " witness_regular=true witness_contained=true";
  if (rep.equality) s += " equality=true";
  return s;
}

void group_index_gll(std::vector<ReportRow>& rows) {
  const auto k = gf::make_prime_field(2);
  const hyper::HypersurfaceRing r(parse_poly("x*y*(x+y)", k));
  hyper::GllSearchOptions so;
  so.max_g = 6;
  const auto g = hyper::gll_exact(r, so);
  rows.push_back(make_row("index-gll", "three-lines-gf2", "f=xy(x+y) k=GF(2)", "index=3 gll=4",
                          "known example: three lines over GF(2), exhaustive witness search",
                          "index=" + std::to_string(hyper::index(r)) + " gll=" + gll_text(g), !g.exact));
}

void group_product_of_lines(std::vector<ReportRow>& rows) {
  for (const unsigned q : {2u, 3u, 4u, 5u}) {
    hyper::FamilyParams params;
    params.field = parse_field(std::to_string(q));
    const auto rep = hyper::verify_family(hyper::Family::ProductOfLines, params);
    rows.push_back(make_row("product-of-lines", "y*prod(x+a*y)", rep.params, family_expected(rep),
                            "every linear form divides f (gll >= e+1); an irreducible quadratic is "
                            "gr-regular (gll <= e+1)",
                            family_computed(rep), !rep.bounds.exact));
    if (q == 2) {
      hyper::GllSearchOptions so;
      so.max_g = 5;
      const auto g = hyper::gll_exact(hyper::HypersurfaceRing(rep.f), so);
      rows.push_back(make_row("product-of-lines", "y*prod(x+a*y) exhaustive", rep.params, "gll=4",
                              "exhaustive witness search", "gll=" + gll_text(g), !g.exact));
    }
  }
}

void group_linear_witness(std::vector<ReportRow>& rows) {
  for (const unsigned p : {3u, 5u, 7u})
    for (unsigned n = 1; n <= 6; ++n) {
      hyper::FamilyParams params;
      params.field = gf::make_prime_field(p);
      params.n = n;
      const std::int64_t pw = 1 + static_cast<std::int64_t>(gf::checked_pow(2, n)) * (n % 2 ? -1 : 1);
      const bool predicted_fail = p == 2 || pw % static_cast<std::int64_t>(p) == 0;
      const std::string id = "xy(x^n+y^n)";
      const std::string label = "k=GF(" + std::to_string(p) + "),n=" + std::to_string(n);
      const std::string source = "m^{n+2} = (x+2y) m^{n+1} unless char k = 2 or char k | 1+(-2)^n";
      std::string expected = predicted_fail ? kHypothesisFailed
                                            : "index=" + std::to_string(n + 2) + " gll=" + std::to_string(n + 2) +
                                                  " witness_regular=true witness_contained=true equality=true";
      std::string computed;
      try {
        computed = family_computed(hyper::verify_family(hyper::Family::LinearWitness, params));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::HypothesisFailed) throw;
        computed = kHypothesisFailed;
      }
      rows.push_back(make_row("linear-witness", id, label, expected, source, computed));
    }
}

void group_linear_witness_ppow(std::vector<ReportRow>& rows) {
  const std::pair<std::uint64_t, unsigned> cases[] = {{3, 0}, {3, 1}, {5, 0}, {5, 1}, {7, 0}, {7, 1}};
  for (const auto& [p, n] : cases) {
    hyper::FamilyParams params;
    params.p = p;
    params.n = n;
    const auto rep = hyper::verify_family(hyper::Family::LinearWitnessPPow, params);
    rows.push_back(make_row("linear-witness-ppow", "xy(x^{p^n}+y^{p^n})", rep.params, family_expected(rep),
                            "gll = index = p^n + 2 over GF(p), witness x+2y", family_computed(rep),
                            !rep.bounds.exact));
  }
}

void group_quadratic_witness(std::vector<ReportRow>& rows) {
  const std::uint64_t cases[][3] = {{5, 1, 0}, {5, 1, 1}, {11, 1, 0}, {13, 1, 0}, {5, 2, 0}};
  for (const auto& c : cases) {
    hyper::FamilyParams params;
    params.p = c[0];
    params.m = static_cast<unsigned>(c[1]);
    params.n = static_cast<unsigned>(c[2]);
    const auto rep = hyper::verify_family(hyper::Family::QuadraticWitness, params);
    const std::uint64_t p2 = c[0] * c[0];
    const bool lift = gf::is_primitive_root(2, c[0]) && gf::pow_mod(2, c[0] - 1, p2) != 1;
    rows.push_back(make_row("quadratic-witness", "xy(x^N+y^N), N=2^n p^m", rep.params,
                            family_expected(rep) + " two_primitive_mod_p2=true",
                            "over GF(2) with 2 primitive mod p^2: gll = index + 1, witness x^2+xy+y^2",
                            family_computed(rep) + " two_primitive_mod_p2=" + bool_text(lift && gf::is_primitive_root(2, p2)),
                            !rep.bounds.exact));
  }
}

void group_semigroup(std::vector<ReportRow>& rows) {
  std::size_t total = 0, good = 0;
  std::string failures;
  for (std::uint64_t b = 3; b <= 12; ++b)
    for (std::uint64_t a = 2; a < b; ++a) {
      if (gf::gcd(a, b) != 1) continue;
      ++total;
      const auto h = sgp::NumericalSemigroup::from_generators({a, b});
      const auto g = sgp::ggl_oracle(h);
      const bool ok = g == h.conductor() + a && g == a * b - b + 1 && sgp::two_generator_witness_check(a, b) &&
                      sgp::gll_ggl_bounds_hold(h) && sgp::gll_graded_semigroup(h).gll <= g;
      if (ok) ++good;
      else failures += " <" + std::to_string(a) + "," + std::to_string(b) + ">";
    }
  rows.push_back(make_row("semigroup", "two-generator", "2<=a<b<=12 coprime",
                          std::to_string(total) + "/" + std::to_string(total),
                          "ggl = C + a = ab - b + 1; witnesses i*a with i <= 1+b-a; gll/ggl bounds",
                          std::to_string(good) + "/" + std::to_string(total) + failures));

  total = good = 0;
  failures.clear();
  for (std::uint64_t a = 2; a <= 15; ++a)
    for (std::uint64_t b = a + 1; b <= 15; ++b)
      for (std::uint64_t c = b + 1; c <= 15; ++c) {
        const std::vector<std::uint64_t> gens{a, b, c};
        if (gf::gcd(gf::gcd(a, b), c) != 1 || !sgp::is_minimal_generating_set(gens)) continue;
        ++total;
        const auto h = sgp::NumericalSemigroup::from_generators(gens);
        if (sgp::ggl_oracle(h) == h.conductor() + a && sgp::gll_ggl_bounds_hold(h)) ++good;
        else failures += " <" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ">";
      }
  rows.push_back(make_row("semigroup", "three-generator", "minimal, generators <= 15",
                          std::to_string(total) + "/" + std::to_string(total),
                          "ggl = C + a_1; gll/ggl bounds",
                          std::to_string(good) + "/" + std::to_string(total) + failures));
}

void group_number_theory(std::vector<ReportRow>& rows) {
  // Cyclotomic identity Phi_{p^m} * (x^{p^{m-1}} - 1) = x^{p^m} - 1.
  std::size_t total = 0, good = 0;
  for (const std::uint64_t ch : {2u, 3u}) {
    const auto k = gf::make_prime_field(ch);
    for (const std::uint64_t p : {2u, 3u, 5u, 7u}) {
      if (p == ch) continue;
      for (unsigned m = 1; m <= 3; ++m) {
        ++total;
        const auto phi = poly::cyclotomic_ppow(p, m, k);
        const auto lo = poly::UniPoly::monomial(k, k->one(), static_cast<unsigned>(gf::checked_pow(p, m - 1))) -
                        poly::UniPoly::constant(k, k->one());
        const auto hi = poly::UniPoly::monomial(k, k->one(), static_cast<unsigned>(gf::checked_pow(p, m))) -
                        poly::UniPoly::constant(k, k->one());
        if (phi * lo == hi) ++good;
      }
    }
  }
  rows.push_back(make_row("number-theory", "cyclotomic-identity", "p in {2,3,5,7}, m<=3, k in {GF(2),GF(3)}",
                          std::to_string(total) + "/" + std::to_string(total),
                          "Phi_{p^m}(x) (x^{p^{m-1}} - 1) = x^{p^m} - 1",
                          std::to_string(good) + "/" + std::to_string(total)));

  total = good = 0;
  for (const std::uint64_t q : {2u, 3u, 5u}) {
    const auto k = gf::make_prime_field(q);
    for (std::uint64_t n = 1; n <= 50; ++n) {
      if (gf::gcd(n, q) != 1) continue;
      ++total;
      const auto pat = poly::cyclotomic_factor_pattern(n, q);
      const auto counts = poly::distinct_degree_counts(poly::cyclotomic(n, k));
      if (counts == std::map<unsigned, unsigned>{{pat.degree, pat.count}}) ++good;
    }
  }
  rows.push_back(make_row("number-theory", "cyclotomic-factor-pattern", "n<=50, q in {2,3,5}",
                          std::to_string(total) + "/" + std::to_string(total),
                          "Phi_n splits into phi(n)/ord_n(q) irreducibles of degree ord_n(q)",
                          std::to_string(good) + "/" + std::to_string(total)));

  // Naive order by repeated multiplication.
  std::vector<std::uint64_t> naive;
  for (std::uint64_t p = 3; p <= 100; ++p) {
    if (!gf::is_prime(p)) continue;
    std::uint64_t x = 2, ord = 1;
    while (x != 1) {
      x = x * 2 % p;
      ++ord;
    }
    if (ord == p - 1) naive.push_back(p);
  }
  auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (const auto a : v) s += (s.empty() ? "" : ",") + std::to_string(a);
    return s;
  };
  rows.push_back(make_row("number-theory", "primes-with-primitive-root-2", "p<=100", join(naive),
                          "order of 2 by repeated doubling",
                          join(gf::primes_with_primitive_root_two(100))));

  total = good = 0;
  for (std::uint64_t p = 3; p <= 50; ++p) {
    if (!gf::is_prime(p)) continue;
    for (std::uint64_t g = 2; g <= 20; ++g) {
      if (g % p == 0) continue;
      ++total;
      const bool lifted = gf::is_primitive_root(g, p) && gf::pow_mod(g, p - 1, p * p) != 1;
      bool same = lifted == gf::is_primitive_root(g, p * p);
      for (unsigned i = 3; i <= 4; ++i) same = same && lifted == gf::is_primitive_root(g, gf::checked_pow(p, i));
      if (same) ++good;
    }
  }
  rows.push_back(make_row("number-theory", "primitive-root-lift", "odd p<=50, 2<=g<=20",
                          std::to_string(total) + "/" + std::to_string(total),
                          "g primitive mod p and g^{p-1} != 1 mod p^2 iff primitive mod p^i (i=2,3,4)",
                          std::to_string(good) + "/" + std::to_string(total)));
}

void group_graded(std::vector<ReportRow>& rows) {
  std::size_t total = 0, good = 0;
  for (const unsigned q : {2u, 3u}) {
    const auto k = gf::make_prime_field(q);
    for (const unsigned e : {3u, 4u})
      for (const auto& f : poly::forms_up_to_scalar(k, e)) {
        ++total;
        try {
          const auto g = hyper::gll_graded_hypersurface(f, e + 2);
          if (g.gll == g.witness_degree + e - 1) ++good;
        } catch (const std::logic_error&) {
        }
      }
  }
  rows.push_back(make_row("graded", "standard-graded-forms", "cubics and quartics over GF(2), GF(3)",
                          std::to_string(total) + "/" + std::to_string(total),
                          "k[x,y]/(f): gll = d + e - 1 with d the least degree of a form coprime to f",
                          std::to_string(good) + "/" + std::to_string(total)));
}

using GroupFn = void (*)(std::vector<ReportRow>&);

const std::vector<std::pair<std::string, GroupFn>>& groups() {
  static const std::vector<std::pair<std::string, GroupFn>> g = {
      {"index-gll", group_index_gll},
      {"product-of-lines", group_product_of_lines},
      {"linear-witness", group_linear_witness},
      {"linear-witness-ppow", group_linear_witness_ppow},
      {"quadratic-witness", group_quadratic_witness},
      {"semigroup", group_semigroup},
      {"number-theory", group_number_theory},
      {"graded", group_graded},
  };
  return g;
}

}  // namespace

std::vector<std::string> verify_groups() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : groups()) out.push_back(name);
  return out;
}

std::vector<ReportRow> run_verification(const VerifyOptions& opts) {
  if (opts.only) {
    const auto names = verify_groups();
    if (std::find(names.begin(), names.end(), *opts.only) == names.end())
      throw Error(ErrorKind::InvalidArgument, "unknown group '" + *opts.only + "'");
  }
  std::vector<ReportRow> rows;
  for (const auto& [name, fn] : groups())
    if (!opts.only || *opts.only == name) fn(rows);
  if (opts.inject_mismatch && !rows.empty()) {
    rows.front().expected = "injected:" + rows.front().expected;
    rows.front().status = RowStatus::Mismatch;
  }
  return rows;
}

bool all_rows_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return r.status == RowStatus::Match || r.status == RowStatus::HypothesisFailed;
  });
}

void write_rows_table(std::ostream& out, const std::vector<ReportRow>& rows) {
  std::size_t passed = 0;
  for (const auto& r : rows) {
    out << std::left << std::setw(17) << to_string(r.status) << ' ' << r.group << " | " << r.case_id << " | "
        << r.params << "\n    expected: " << r.expected << "\n    computed: " << r.computed
        << "\n    source:   " << r.source << "\n";
    if (r.status == RowStatus::Match || r.status == RowStatus::HypothesisFailed) ++passed;
  }
  out << passed << "/" << rows.size() << " rows pass\n";
}

void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "group,case,params,expected,computed,status,source\r\n";
  for (const auto& r : rows)
    out << csv_escape(r.group) << ',' << csv_escape(r.case_id) << ',' << csv_escape(r.params) << ','
        << csv_escape(r.expected) << ',' << csv_escape(r.computed) << ',' << to_string(r.status) << ','
        << csv_escape(r.source) << "\r\n";
}

json rows_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"group", r.group},
                   {"case", r.case_id},
                   {"params", r.params},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"status", to_string(r.status)},
                   {"source", r.source}});
  return {{"schema_version", kSchemaVersion}, {"command", "verify"}, {"rows", arr},
          {"all_pass", all_rows_pass(rows)}};
}

}  // namespace gll::cli
