#include <gtest/gtest.h>

#include <random>

#include "gll/parser.hpp"
#include "gll/poly.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gll;
using poly::BiPoly;
using poly::UniPoly;

namespace {

BiPoly bp(const char* text, const gf::Field& k) { return cli::parse_poly(text, k); }
UniPoly up(const gf::Field& k, std::vector<std::int64_t> c) { return UniPoly::from_ints(k, c); }

BiPoly random_form(std::mt19937& rng, const gf::Field& k, unsigned d) {
  BiPoly::Terms t;
  std::uniform_int_distribution<std::uint32_t> coeff(0, k->order() - 1);
  for (unsigned j = 0; j <= d; ++j) {
    const gf::FieldElem c{coeff(rng)};
    if (c.code != 0) t[{d - j, j}] = c;
  }
  return BiPoly(k, std::move(t));
}

}  // namespace

TEST(BiPolyArith, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(bp("(x+y)^2", k2), bp("x^2+y^2", k2));
  EXPECT_EQ(bp("x*y*(x+y)", k2).eval(k2->one(), k2->one()), k2->zero());
  const auto k3 = gf::make_prime_field(3);
  const auto x = BiPoly::x(k3);
  EXPECT_EQ(bp("x+y", k3).substitute(x, x), bp("2*x", k3));
}

TEST(BiPolyArith, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(20240601);
  const auto k = gf::make_prime_field(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_form(rng, k, trial % 4) + random_form(rng, k, 1);
    const auto b = random_form(rng, k, 2) + random_form(rng, k, 0);
    const auto c = random_form(rng, k, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(BiPolyOrder, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(bp("x*y*(x+y)", k2).order(), 3u);
  EXPECT_EQ(bp("x^2*y+y^5", k2).order(), 3u);
  EXPECT_EQ(BiPoly::constant(k2, k2->one()).order(), 0u);
  EXPECT_EQ(kind_of([&] { BiPoly(k2).order(); }), ErrorKind::ZeroPolynomial);
}

TEST(BiPolyOrder, InitialForm) {
  const auto k2 = gf::make_prime_field(2);
  const auto f = bp("x*y*(x+y) + x^5", k2);
  const auto in = poly::initial_form(f);
  EXPECT_EQ(in.order, 3u);
  EXPECT_EQ(in.form, bp("x*y*(x+y)", k2));

  const auto k5 = gf::make_prime_field(5);
  const auto g = bp("x - (x*y + 3*y^3)", k5);
  EXPECT_EQ(poly::initial_form(g).order, 1u);
  EXPECT_EQ(poly::initial_form(g).form, BiPoly::x(k5));

  const auto h = bp("x^3 + 2*x*y^2", k5);
  EXPECT_EQ(poly::initial_form(h).order, 3u);
  EXPECT_EQ(poly::initial_form(h).form, h);
}

TEST(UniPolyGcd, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(poly::gcd_uni(up(k2, {1, 0, 1}), up(k2, {1, 1})), up(k2, {1, 1}));
  EXPECT_EQ(poly::gcd_uni(up(k2, {0, 1, 0, 1}), up(k2, {0, 0, 1})), up(k2, {0, 1}));
  const auto k5 = gf::make_prime_field(5);
  EXPECT_EQ(poly::gcd_uni(up(k5, {2, 0, 4}), UniPoly(k5)), up(k5, {2, 0, 4}).monic());
  EXPECT_EQ(kind_of([&] { poly::gcd_uni(UniPoly(k5), UniPoly(k5)); }), ErrorKind::ZeroPolynomial);
}

TEST(UniPolyIrreducible, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_TRUE(poly::is_irreducible_uni(up(k2, {1, 1, 1})));
  EXPECT_TRUE(poly::is_irreducible_uni(up(k2, {1, 1, 1, 1, 1})));
  EXPECT_FALSE(poly::is_irreducible_uni(up(k2, {1, 0, 1})));
  EXPECT_EQ(kind_of([&] { poly::is_irreducible_uni(up(k2, {1})); }), ErrorKind::DegreeTooSmall);
}

TEST(UniPolyIrreducible, AgreesWithTrialDivisionExhaustively) {
  for (const std::int64_t p : {2, 3, 5}) {
    const auto k = gf::make_prime_field(p);
    const unsigned max_deg = p == 2 ? 8 : (p == 3 ? 5 : 4);
    for (unsigned d = 1; d <= max_deg; ++d) {
      std::int64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> c(d + 1);
        std::int64_t r = code;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = r % p;
          r /= p;
        }
        c[d] = 1;
        ASSERT_EQ(poly::is_irreducible_uni(up(k, c)), oracle::irreducible_by_trial_division(c, p))
            << up(k, c).to_string() << " over GF(" << p << ")";
      }
    }
  }
}

TEST(Cyclotomic, PrimePowerExamples) {
  const auto k2 = gf::make_prime_field(2);
  const auto k3 = gf::make_prime_field(3);
  EXPECT_EQ(poly::cyclotomic_ppow(5, 1, k2), up(k2, {1, 1, 1, 1, 1}));
  EXPECT_EQ(poly::cyclotomic_ppow(3, 2, k2), up(k2, {1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(poly::cyclotomic_ppow(2, 1, k3), up(k3, {1, 1}));
  EXPECT_EQ(kind_of([&] { poly::cyclotomic_ppow(2, 1, k2); }), ErrorKind::CharacteristicDividesN);
}

TEST(Cyclotomic, PrimePowerIdentity) {
  for (const std::uint64_t ch : {2u, 3u}) {
    const auto k = gf::make_prime_field(ch);
    for (const std::uint64_t p : {2u, 3u, 5u, 7u}) {
      if (p == ch) continue;
      for (unsigned m = 1; m <= 3; ++m) {
        const auto lo = static_cast<unsigned>(gf::checked_pow(p, m - 1));
        const auto hi = static_cast<unsigned>(gf::checked_pow(p, m));
        const auto one = UniPoly::constant(k, k->one());
        EXPECT_EQ(poly::cyclotomic_ppow(p, m, k) * (UniPoly::monomial(k, k->one(), lo) - one),
                  UniPoly::monomial(k, k->one(), hi) - one)
            << "p=" << p << " m=" << m << " char " << ch;
      }
    }
  }
}

TEST(Cyclotomic, FactorPatternExamples) {
  EXPECT_EQ(poly::cyclotomic_factor_pattern(5, 2), (poly::FactorPattern{4, 1}));
  EXPECT_EQ(poly::cyclotomic_factor_pattern(7, 2), (poly::FactorPattern{3, 2}));
  EXPECT_EQ(poly::cyclotomic_factor_pattern(3, 2), (poly::FactorPattern{2, 1}));
  EXPECT_EQ(kind_of([] { poly::cyclotomic_factor_pattern(4, 2); }), ErrorKind::NotCoprime);
  EXPECT_EQ(kind_of([] { poly::cyclotomic_factor_pattern(5, 4); }), ErrorKind::NotPrime);
}

TEST(Cyclotomic, FactorPatternMatchesDistinctDegreeCounts) {
  for (const std::uint64_t q : {2u, 3u, 5u}) {
    const auto k = gf::make_prime_field(q);
    for (std::uint64_t n = 1; n <= 50; ++n) {
      if (n % q == 0) continue;
      const auto phi = poly::cyclotomic(n, k);
      EXPECT_EQ(static_cast<std::uint64_t>(phi.degree()), oracle::naive_phi(n));
      const auto pat = poly::cyclotomic_factor_pattern(n, q);
      EXPECT_EQ(pat.degree, oracle::naive_order(q, n));
      EXPECT_EQ(pat.degree * pat.count, oracle::naive_phi(n));
      const auto counts = poly::distinct_degree_counts(phi);
      EXPECT_EQ(counts, (std::map<unsigned, unsigned>{{static_cast<unsigned>(pat.degree),
                                                      static_cast<unsigned>(pat.count)}}))
          << "n=" << n << " q=" << q;
    }
  }
}

TEST(Homogenize, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(poly::homogenize_from_uni(up(k2, {1, 1, 1}), 2), bp("x^2+x*y+y^2", k2));
  EXPECT_EQ(poly::homogenize_from_uni(up(k2, {1, 1}), 1), bp("x+y", k2));
  EXPECT_EQ(poly::homogenize_from_uni(poly::cyclotomic(5, k2), 4), bp("x^4+x^3*y+x^2*y^2+x*y^3+y^4", k2));
  EXPECT_EQ(poly::homogenize_from_uni(up(k2, {1, 1}), 3), bp("x*y^2+y^3", k2));
  EXPECT_EQ(kind_of([&] { poly::homogenize_from_uni(up(k2, {1, 1, 1}), 1); }), ErrorKind::DegreeTooSmall);
}

TEST(BihomGcd, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(poly::bihom_gcd(bp("x^2+x*y+y^2", k2), bp("x*y*(x+y)", k2)), BiPoly::constant(k2, k2->one()));
  EXPECT_EQ(poly::bihom_gcd(bp("x*y", k2), bp("y*(x+y)", k2)), BiPoly::y(k2));
  const auto k3 = gf::make_prime_field(3);
  const auto f = bp("2*x^2*y + x*y^2", k3);
  EXPECT_EQ(poly::bihom_gcd(f, f), f.monic());
  EXPECT_EQ(kind_of([&] { poly::bihom_gcd(bp("x+y^2", k3), f); }), ErrorKind::InvalidArgument);
}

TEST(BihomGcd, DividesAndIsGreatestOnRandomPairs) {
  std::mt19937 rng(7);
  for (const unsigned q : {2u, 3u}) {
    const auto k = gf::make_prime_field(q);
    for (int trial = 0; trial < 60; ++trial) {
      const auto common = random_form(rng, k, 1 + trial % 3);
      auto g = random_form(rng, k, 1 + trial % 5);
      auto h = random_form(rng, k, 2 + trial % 4);
      if (common.is_zero() || g.is_zero() || h.is_zero()) continue;
      g = g * common;
      h = h * common;
      if (g.total_degree() > 8 || h.total_degree() > 8) continue;
      const auto d = poly::bihom_gcd(g, h);
      ASSERT_TRUE(poly::divide_exact(g, d).has_value());
      ASSERT_TRUE(poly::divide_exact(h, d).has_value());
      ASSERT_TRUE(poly::divide_exact(d, common).has_value()) << "gcd misses a common factor";
      // Every common divisor of degree <= 2 up to scalar divides d.
      for (unsigned deg = 1; deg <= 2; ++deg)
        for (const auto& c : poly::forms_up_to_scalar(k, deg))
          if (poly::divide_exact(g, c) && poly::divide_exact(h, c))
            ASSERT_TRUE(poly::divide_exact(d, c).has_value());
    }
  }
}

TEST(LinearZerodivisors, Examples) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(poly::linear_zerodivisor_forms(bp("x*y*(x+y)", k2)).size(), 3u);

  const auto k3 = gf::make_prime_field(3);
  const auto pts = poly::linear_zerodivisor_forms(bp("x*y*(x^3+y^3)", k3));
  const std::vector<poly::ProjPoint> want{{k3->one(), k3->zero()}, {k3->zero(), k3->one()}, {k3->one(), k3->one()}};
  EXPECT_EQ(std::set<poly::ProjPoint>(pts.begin(), pts.end()), std::set<poly::ProjPoint>(want.begin(), want.end()));
  for (const auto& p : pts) EXPECT_FALSE(p.alpha == k3->one() && p.beta == k3->from_int(2));

  const auto x2 = poly::linear_zerodivisor_forms(bp("x^2", k2));
  ASSERT_EQ(x2.size(), 1u);
  EXPECT_EQ(x2[0], (poly::ProjPoint{k2->one(), k2->zero()}));
}

TEST(LinearZerodivisors, AgreesWithExactDivision) {
  // Forms and non-homogeneous polynomials: for a form, substitution and
  // division agree; the corpus below stays homogeneous in the initial part.
  std::mt19937 rng(11);
  for (const unsigned q : {2u, 3u, 5u}) {
    const auto k = gf::make_prime_field(q);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_form(rng, k, 1 + trial % 5);
      if (f.is_zero()) continue;
      const auto pts = poly::linear_zerodivisor_forms(f);
      const std::set<poly::ProjPoint> found(pts.begin(), pts.end());
      for (const auto& p : poly::projective_line(k)) {
        const bool divides = poly::divide_exact(f, BiPoly::linear(k, p.alpha, p.beta)).has_value();
        ASSERT_EQ(found.count(p) == 1, divides) << f.to_string();
      }
    }
  }
}

TEST(ProjectiveLine, SizeAndOrder) {
  const auto k4 = gf::make_field(2, 2);
  const auto line = poly::projective_line(k4);
  ASSERT_EQ(line.size(), 5u);
  EXPECT_EQ(line[0], (poly::ProjPoint{k4->one(), k4->zero()}));
  EXPECT_EQ(poly::forms_up_to_scalar(gf::make_prime_field(3), 2).size(), 13u);  // (27 - 1) / 2
}

TEST(FirstIrreducible, Degree2) {
  const auto k2 = gf::make_prime_field(2);
  EXPECT_EQ(*poly::first_irreducible(k2, 2), up(k2, {1, 1, 1}));
  const auto k4 = gf::make_field(2, 2);
  const auto q = poly::first_irreducible(k4, 2);
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(poly::is_irreducible_uni(*q));
  for (const auto a : k4->elements()) EXPECT_NE(q->eval(a), k4->zero());
}

TEST(DivideExact, Basics) {
  const auto k3 = gf::make_prime_field(3);
  const auto f = bp("(x+y)*(x^2+2*y^3+x*y)", k3);
  EXPECT_EQ(*poly::divide_exact(f, bp("x+y", k3)), bp("x^2+2*y^3+x*y", k3));
  EXPECT_FALSE(poly::divide_exact(bp("x^2+1", k3), bp("x", k3)).has_value());
  EXPECT_EQ(kind_of([&] { poly::divide_exact(f, BiPoly(k3)); }), ErrorKind::ZeroPolynomial);
}

TEST(ToString, ExtensionCoefficients) {
  const auto k4 = gf::make_field(2, 2);
  const auto f = bp("t*x + (t+1)*y^2", k4);
  EXPECT_EQ(cli::parse_poly(f.to_string(), k4), f);
}
