#include "gll/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gll/error.hpp"

namespace gll::poly {

void require_same_field(const Field& a, const Field& b) {
  if (!gf::same_field(a, b))
    throw Error(ErrorKind::FieldMismatch, "operands live over different fields");
}

namespace {

std::string coeff_to_string(const gf::FieldCtx& k, FieldElem c) {
  if (k.is_prime_field()) return std::to_string(c.code);
  const auto coords = k.coords(c);
  std::string out;
  int parts = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] == 0) continue;
    if (parts++ > 0) out += " + ";
    const bool unit = coords[i] == 1;
    if (i == 0) {
      out += std::to_string(coords[i]);
    } else {
      if (!unit) out += std::to_string(coords[i]) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return parts > 1 ? "(" + out + ")" : out;
}

// "c*m" with the conventions: unit coefficients dropped unless m = 1.
std::string term_to_string(const gf::FieldCtx& k, FieldElem c, const std::string& mono) {
  if (mono.empty()) return coeff_to_string(k, c);
  if (c == k.one()) return mono;
  return coeff_to_string(k, c) + "*" + mono;
}

std::string power_string(const char* var, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(Field field) : field_(std::move(field)) {}

UniPoly::UniPoly(Field field, Terms terms) : field_(std::move(field)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.code == 0; });
}

UniPoly UniPoly::from_ints(Field field, const std::vector<std::int64_t>& coeffs) {
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t[static_cast<unsigned>(i)] = field->from_int(coeffs[i]);
  return UniPoly(std::move(field), std::move(t));
}

UniPoly UniPoly::monomial(Field field, FieldElem c, unsigned degree) {
  Terms t;
  t[degree] = c;
  return UniPoly(std::move(field), std::move(t));
}

UniPoly UniPoly::x(Field field) {
  const auto one = field->one();
  return monomial(std::move(field), one, 1);
}

int UniPoly::degree() const noexcept {
  return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.rbegin()->first);
}

FieldElem UniPoly::coeff(unsigned degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? field_->zero() : it->second;
}

FieldElem UniPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return terms_.rbegin()->second;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coeff()));
}

FieldElem UniPoly::eval(FieldElem at) const {
  const auto& k = *field_;
  FieldElem acc = k.zero();
  for (const auto& [d, c] : terms_) acc = k.add(acc, k.mul(c, k.pow(at, d)));
  return acc;
}

UniPoly UniPoly::operator-() const { return scaled(field_->neg(field_->one())); }

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  require_same_field(field_, other.field_);
  for (const auto& [d, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (it->second.code == 0) terms_.erase(it);
    }
  }
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) { return *this += -other; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  const auto& k = *a.field_;
  UniPoly::Terms out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) {
      auto& slot = out[da + db];
      slot = k.add(slot, k.mul(ca, cb));
    }
  return UniPoly(a.field_, std::move(out));
}

UniPoly UniPoly::scaled(FieldElem c) const {
  Terms out;
  for (const auto& [d, v] : terms_) out[d] = field_->mul(v, c);
  return UniPoly(field_, std::move(out));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_to_string(*field_, it->second, power_string("x", it->first));
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& k = *a.field();
  const FieldElem lead_inv = k.inv(b.leading_coeff());
  const unsigned db = static_cast<unsigned>(b.degree());
  UniPoly::Terms quot;
  UniPoly::Terms rem = a.terms();
  while (!rem.empty() && rem.rbegin()->first >= db) {
    const auto [dr, cr] = *rem.rbegin();
    const unsigned shift = dr - db;
    const FieldElem factor = k.mul(cr, lead_inv);
    quot[shift] = factor;
    for (const auto& [d, c] : b.terms()) {
      auto& slot = rem[d + shift];
      slot = k.sub(slot, k.mul(factor, c));
      if (slot.code == 0) rem.erase(d + shift);
    }
  }
  return {UniPoly(a.field(), std::move(quot)), UniPoly(a.field(), std::move(rem))};
}

UniPoly powmod(const UniPoly& base, std::uint64_t exponent, const UniPoly& modulus) {
  UniPoly result = divmod(UniPoly::constant(base.field(), base.field()->one()), modulus).second;
  UniPoly b = divmod(base, modulus).second;
  while (exponent > 0) {
    if (exponent & 1U) result = divmod(result * b, modulus).second;
    exponent >>= 1U;
    if (exponent > 0) b = divmod(b * b, modulus).second;
  }
  return result;
}

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

bool is_irreducible_uni(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::DegreeTooSmall, "irreducibility needs degree >= 1");
  const UniPoly g = f.monic();
  const UniPoly x = UniPoly::x(f.field());
  const std::uint64_t q = f.field()->order();
  UniPoly h = divmod(x, g).second;  // x^{q^k} mod g
  for (int k = 1; k <= n; ++k) {
    h = powmod(h, q, g);
    const UniPoly diff = h - x;
    if (2 * k <= n && gcd_uni(diff, g).degree() != 0) return false;
    if (k == n) return divmod(diff, g).second.is_zero();
  }
  return true;
}

std::optional<UniPoly> first_irreducible(const Field& field, unsigned degree) {
  const std::uint64_t q = field->order();
  const std::uint64_t count = gf::checked_pow(q, degree);
  for (std::uint64_t c = 0; c < count; ++c) {
    UniPoly::Terms t;
    std::uint64_t v = c;
    for (unsigned i = 0; i < degree; ++i) {
      t[i] = FieldElem{static_cast<std::uint32_t>(v % q)};
      v /= q;
    }
    t[degree] = field->one();
    UniPoly f(field, std::move(t));
    if (is_irreducible_uni(f)) return f;
  }
  return std::nullopt;
}

std::map<unsigned, unsigned> distinct_degree_counts(const UniPoly& f) {
  std::map<unsigned, unsigned> counts;
  if (f.degree() < 1) return counts;
  const UniPoly x = UniPoly::x(f.field());
  const std::uint64_t q = f.field()->order();
  UniPoly rest = f.monic();
  UniPoly h = divmod(x, rest).second;
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(rest.degree()); ++k) {
    h = powmod(h, q, rest);
    const UniPoly g = gcd_uni(h - x, rest);
    if (g.degree() > 0) {
      counts[k] += static_cast<unsigned>(g.degree()) / k;
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) counts[static_cast<unsigned>(rest.degree())] += 1;
  return counts;
}

UniPoly cyclotomic_ppow(std::uint64_t p, unsigned m, const Field& field) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "exponent m must be >= 1");
  if (!gf::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (field->characteristic() == p)
    throw Error(ErrorKind::CharacteristicDividesN, "char k divides " + std::to_string(p));
  const std::uint64_t step = gf::checked_pow(p, m - 1);
  UniPoly::Terms t;
  for (std::uint64_t i = 0; i < p; ++i) t[static_cast<unsigned>(i * step)] = field->one();
  return UniPoly(field, std::move(t));
}

UniPoly cyclotomic(std::uint64_t n, const Field& field) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
  const auto& k = *field;
  UniPoly result = UniPoly::monomial(field, k.one(), static_cast<unsigned>(n)) -
                   UniPoly::constant(field, k.one());
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) result = divmod(result, cyclotomic(d, field)).first;
  return result;
}

FactorPattern cyclotomic_factor_pattern(std::uint64_t n, std::uint64_t q) {
  if (!gf::is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q));
  if (gf::gcd(n, q) != 1)
    throw Error(ErrorKind::NotCoprime, std::to_string(q) + " divides " + std::to_string(n));
  if (n == 1) return {1, 1};
  const std::uint64_t d = gf::multiplicative_order(q, n);
  return {d, gf::euler_phi(n) / d};
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(Field field) : field_(std::move(field)) {}

BiPoly::BiPoly(Field field, Terms terms) : field_(std::move(field)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.code == 0; });
}

BiPoly BiPoly::monomial(Field field, FieldElem c, unsigned xe, unsigned ye) {
  Terms t;
  t[{xe, ye}] = c;
  return BiPoly(std::move(field), std::move(t));
}

BiPoly BiPoly::x(Field field) {
  const auto one = field->one();
  return monomial(std::move(field), one, 1, 0);
}

BiPoly BiPoly::y(Field field) {
  const auto one = field->one();
  return monomial(std::move(field), one, 0, 1);
}

BiPoly BiPoly::linear(Field field, FieldElem alpha, FieldElem beta) {
  Terms t;
  t[{1, 0}] = alpha;
  t[{0, 1}] = beta;
  return BiPoly(std::move(field), std::move(t));
}

FieldElem BiPoly::coeff(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

unsigned BiPoly::order() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "order of 0");
  return terms_.begin()->first.degree();
}

unsigned BiPoly::total_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of 0");
  return terms_.rbegin()->first.degree();
}

bool BiPoly::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::pair<Monomial, FieldElem> BiPoly::lead_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "lead term of 0");
  return *terms_.begin();
}

BiPoly BiPoly::homogeneous_part(unsigned degree) const {
  Terms out(terms_.lower_bound({degree, 0}), terms_.lower_bound({degree + 1, 0}));
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::truncated(unsigned max_degree) const {
  Terms out(terms_.begin(), terms_.lower_bound({max_degree + 1, 0}));
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(terms_.begin()->second));
}

void BiPoly::add_term(Monomial m, FieldElem c) {
  if (c.code == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second.code == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const { return scaled(field_->neg(field_->one())); }

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  require_same_field(field_, other.field_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) { return *this += -other; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  const auto& k = *a.field_;
  BiPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.x + mb.x, ma.y + mb.y}, k.mul(ca, cb));
  return out;
}

BiPoly BiPoly::scaled(FieldElem c) const {
  Terms out;
  for (const auto& [m, v] : terms_) out[m] = field_->mul(v, c);
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::shifted(unsigned xe, unsigned ye) const {
  Terms out;
  for (const auto& [m, v] : terms_) out[{m.x + xe, m.y + ye}] = v;
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result = constant(field_, field_->one());
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FieldElem BiPoly::eval(FieldElem at_x, FieldElem at_y) const {
  const auto& k = *field_;
  FieldElem acc = k.zero();
  for (const auto& [m, c] : terms_)
    acc = k.add(acc, k.mul(c, k.mul(k.pow(at_x, m.x), k.pow(at_y, m.y))));
  return acc;
}

BiPoly BiPoly::substitute(const BiPoly& x_image, const BiPoly& y_image) const {
  require_same_field(field_, x_image.field_);
  require_same_field(field_, y_image.field_);
  std::vector<BiPoly> xpow{constant(field_, field_->one())};
  std::vector<BiPoly> ypow{constant(field_, field_->one())};
  BiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    while (xpow.size() <= m.x) xpow.push_back(xpow.back() * x_image);
    while (ypow.size() <= m.y) ypow.push_back(ypow.back() * y_image);
    out += (xpow[m.x] * ypow[m.y]).scaled(c);
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = power_string("x", m.x);
    const std::string ys = power_string("y", m.y);
    if (!mono.empty() && !ys.empty()) mono += "*";
    mono += ys;
    out += term_to_string(*field_, c, mono);
  }
  return out;
}

InitialForm initial_form(const BiPoly& f) {
  const unsigned t = f.order();
  return {t, f.homogeneous_part(t)};
}

BiPoly homogenize_from_uni(const UniPoly& f, unsigned degree) {
  if (f.degree() > static_cast<int>(degree))
    throw Error(ErrorKind::DegreeTooSmall,
                "degree " + std::to_string(degree) + " below deg f = " + std::to_string(f.degree()));
  BiPoly::Terms t;
  for (const auto& [d, c] : f.terms()) t[{d, degree - d}] = c;
  return BiPoly(f.field(), std::move(t));
}

namespace {

// Leading term for the global degree-lex order (largest degree, then largest x).
std::pair<Monomial, FieldElem> global_lead(const BiPoly& f) {
  const unsigned top = f.total_degree();
  return *f.terms().lower_bound({top, 0});
}

UniPoly dehomogenize_x(const BiPoly& f) {
  UniPoly::Terms t;
  for (const auto& [m, c] : f.terms()) t[m.x] = c;
  return UniPoly(f.field(), std::move(t));
}

unsigned y_valuation(const BiPoly& f) {
  unsigned v = ~0U;
  for (const auto& [m, c] : f.terms()) v = std::min(v, m.y);
  return v;
}

}  // namespace

std::optional<BiPoly> divide_exact(const BiPoly& f, const BiPoly& g) {
  require_same_field(f.field(), g.field());
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by 0");
  const auto& k = *f.field();
  const auto [lg, cg] = global_lead(g);
  const FieldElem cg_inv = k.inv(cg);
  BiPoly quotient(f.field());
  BiPoly rest = f;
  while (!rest.is_zero()) {
    const auto [lr, cr] = global_lead(rest);
    if (lr.x < lg.x || lr.y < lg.y) return std::nullopt;
    const BiPoly step = BiPoly::monomial(f.field(), k.mul(cr, cg_inv), lr.x - lg.x, lr.y - lg.y);
    quotient += step;
    rest -= step * g;
  }
  return quotient;
}

BiPoly bihom_gcd(const BiPoly& g, const BiPoly& h) {
  require_same_field(g.field(), h.field());
  if (g.is_zero() && h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  if (!g.is_homogeneous() || !h.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument, "bihom_gcd expects forms");
  if (g.is_zero()) return h.monic();
  if (h.is_zero()) return g.monic();
  const unsigned vg = y_valuation(g), vh = y_valuation(h);
  const UniPoly common = gcd_uni(dehomogenize_x(g), dehomogenize_x(h));
  return homogenize_from_uni(common, static_cast<unsigned>(common.degree())).shifted(0, std::min(vg, vh));
}

std::vector<ProjPoint> projective_line(const Field& field) {
  const auto& k = *field;
  std::vector<ProjPoint> out{{k.one(), k.zero()}};
  for (const FieldElem a : k.elements()) out.push_back({a, k.one()});
  return out;
}

std::vector<ProjPoint> linear_zerodivisor_forms(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zerodivisors of 0");
  const auto& k = *f.field();
  std::vector<ProjPoint> out;
  for (const ProjPoint& pt : projective_line(f.field())) {
    bool vanishes = true;
    if (pt.beta.code == 0) {
      // x = 0 on the line: f(0, y) must vanish.
      vanishes = std::all_of(f.terms().begin(), f.terms().end(),
                             [](const auto& kv) { return kv.first.x > 0; });
    } else {
      // alpha*x + y = 0, so substitute y = -alpha*x and collect by degree.
      const FieldElem slope = k.neg(pt.alpha);
      std::map<unsigned, FieldElem> collected;
      for (const auto& [m, c] : f.terms()) {
        auto& slot = collected[m.degree()];
        slot = k.add(slot, k.mul(c, k.pow(slope, m.y)));
      }
      vanishes = std::all_of(collected.begin(), collected.end(),
                             [](const auto& kv) { return kv.second.code == 0; });
    }
    if (vanishes) out.push_back(pt);
  }
  return out;
}

std::vector<BiPoly> forms_up_to_scalar(const Field& field, unsigned degree) {
  const std::uint64_t q = field->order();
  std::vector<BiPoly> out;
  // Monomials of the degree in local order: x^d, x^{d-1}y, ..., y^d.
  for (unsigned lead = 0; lead <= degree; ++lead) {
    const unsigned free_slots = degree - lead;
    const std::uint64_t count = gf::checked_pow(q, free_slots);
    for (std::uint64_t c = 0; c < count; ++c) {
      BiPoly::Terms t;
      t[{degree - lead, lead}] = field->one();
      std::uint64_t v = c;
      for (unsigned s = 1; s <= free_slots; ++s) {
        const unsigned ye = lead + s;
        t[{degree - ye, ye}] = FieldElem{static_cast<std::uint32_t>(v % q)};
        v /= q;
      }
      out.emplace_back(field, std::move(t));
    }
  }
  return out;
}

}  // namespace gll::poly
