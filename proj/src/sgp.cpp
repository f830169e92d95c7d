#include "gll/sgp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "gll/error.hpp"
#include "gll/gf.hpp"

namespace gll::sgp {

namespace {

// Membership of 0..limit in the monoid generated by gens.
std::vector<bool> reachable(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (std::uint64_t s = 1; s <= limit; ++s)
    for (const std::uint64_t a : gens)
      if (a <= s && in[s - a]) {
        in[s] = true;
        break;
      }
  return in;
}

}  // namespace

bool is_minimal_generating_set(const std::vector<std::uint64_t>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::uint64_t> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (reachable(others, gens[i])[gens[i]]) return false;
  }
  return true;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::uint64_t> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() == 0) throw Error(ErrorKind::InvalidArgument, "generator 0");
  std::uint64_t g = 0;
  for (const auto a : gens) g = gf::gcd(g, a);
  if (g != 1) throw Error(ErrorKind::InvalidArgument, "generators have gcd " + std::to_string(g));

  NumericalSemigroup h;
  // Keep a generator only if the smaller kept ones cannot reach it.
  for (const auto a : gens)
    if (h.gens_.empty() || !reachable(h.gens_, a)[a]) h.gens_.push_back(a);

  // Frobenius number < a_1 * a_n, so this table covers every gap.
  const std::uint64_t limit = h.gens_.front() * h.gens_.back() + h.gens_.back();
  const auto in = reachable(h.gens_, limit);
  std::uint64_t c = 0;
  for (std::uint64_t s = 0; s <= limit; ++s)
    if (!in[s]) {
      h.gaps_.push_back(s);
      c = s + 1;
    }
  h.conductor_ = c;
  h.below_conductor_.assign(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(c));
  return h;
}

bool NumericalSemigroup::contains(std::int64_t s) const noexcept {
  if (s < 0) return false;
  const auto u = static_cast<std::uint64_t>(s);
  return u >= conductor_ || below_conductor_[u];
}

bool membership(const NumericalSemigroup& h, std::int64_t s) { return h.contains(s); }

std::uint64_t conductor(const NumericalSemigroup& h) { return h.conductor(); }

std::vector<std::uint64_t> apery_set(const NumericalSemigroup& h, std::uint64_t m) {
  if (m == 0 || !h.contains(static_cast<std::int64_t>(m)))
    throw Error(ErrorKind::NotMember, std::to_string(m) + " is not a nonzero element");
  std::vector<std::uint64_t> out(m, 0);
  std::vector<bool> found(m, false);
  std::uint64_t remaining = m;
  for (std::uint64_t s = 0; remaining > 0; ++s) {
    if (!h.contains(static_cast<std::int64_t>(s)) || found[s % m]) continue;
    found[s % m] = true;
    out[s % m] = s;
    --remaining;
  }
  return out;
}

bool tail_in_principal(const NumericalSemigroup& h, std::uint64_t n, std::uint64_t d) {
  const std::uint64_t window = n + h.conductor() + d;
  for (std::uint64_t s = n; s <= window; ++s) {
    const auto si = static_cast<std::int64_t>(s);
    if (h.contains(si) && !h.contains(si - static_cast<std::int64_t>(d))) return false;
  }
  return true;
}

std::uint64_t ggl_oracle(const NumericalSemigroup& h) {
  // Some member lies in [n, n + C], so a witness d > n + C is impossible.
  for (std::uint64_t n = 1;; ++n)
    for (std::uint64_t d = 1; d <= n + h.conductor(); ++d)
      if (h.contains(static_cast<std::int64_t>(d)) && tail_in_principal(h, n, d)) return n;
}

std::vector<std::uint64_t> ggl_witnesses(const NumericalSemigroup& h) {
  const std::uint64_t n = ggl_oracle(h);
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n + h.conductor(); ++d)
    if (h.contains(static_cast<std::int64_t>(d)) && tail_in_principal(h, n, d)) out.push_back(d);
  return out;
}

GglReport ggl(const NumericalSemigroup& h, GglMode mode) {
  const std::uint64_t formula = h.conductor() + h.multiplicity();
  if (mode == GglMode::Formula) {
    std::vector<std::uint64_t> w;
    for (std::uint64_t d = 1; d <= formula + h.conductor(); ++d)
      if (h.contains(static_cast<std::int64_t>(d)) && tail_in_principal(h, formula, d)) w.push_back(d);
    return {formula, std::move(w), formula};
  }
  const std::uint64_t value = ggl_oracle(h);
  if (value != formula)
    throw std::logic_error("ggl oracle " + std::to_string(value) + " != C + a_1 = " +
                           std::to_string(formula));
  return {value, ggl_witnesses(h), formula};
}

bool two_generator_witness_check(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || a >= b || gf::gcd(a, b) != 1)
    throw Error(ErrorKind::BadPair, "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  const auto h = NumericalSemigroup::from_generators({a, b});
  const auto w = ggl_witnesses(h);
  return !w.empty() && std::all_of(w.begin(), w.end(), [&](std::uint64_t d) {
    return d % a == 0 && d / a >= 1 && d / a <= 1 + b - a;
  });
}

GradedLoewy gll_graded_semigroup(const NumericalSemigroup& h) {
  std::set<std::uint64_t> sums{0};
  for (std::uint64_t n = 1;; ++n) {
    std::set<std::uint64_t> next;
    for (const auto s : sums)
      for (const auto a : h.gens()) next.insert(s + a);
    sums = std::move(next);
    const std::uint64_t smallest = *sums.begin();
    for (std::uint64_t d = 1; d <= smallest; ++d) {
      if (!h.contains(static_cast<std::int64_t>(d))) continue;
      const bool all = std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) {
        return h.contains(static_cast<std::int64_t>(s - d));
      });
      if (all) return {n, d};
    }
  }
}

bool gll_ggl_bounds_hold(const NumericalSemigroup& h) {
  const auto a = static_cast<std::int64_t>(h.multiplicity());
  const auto b = static_cast<std::int64_t>(h.max_generator());
  const auto l = static_cast<std::int64_t>(gll_graded_semigroup(h).gll);
  const auto g = static_cast<std::int64_t>(ggl_oracle(h));
  return a * l - (a - 1) * (a - 1) <= g && g <= b * l - b + 1;
}

std::optional<std::uint64_t> graded_reduction_min_shift(const NumericalSemigroup& h, std::uint64_t d) {
  if (d == 0 || !h.contains(static_cast<std::int64_t>(d)))
    throw Error(ErrorKind::NotMember, std::to_string(d) + " is not a nonzero element");
  // t^d m_i is always inside m_{i+d}; equality needs every s >= i+d in H to
  // come from s - d in H (then s - d >= i holds automatically).
  for (std::uint64_t i = 1; i <= h.conductor() + d; ++i)
    if (tail_in_principal(h, i + d, d)) return i;
  return std::nullopt;
}

}  // namespace gll::sgp
