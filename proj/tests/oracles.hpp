#pragma once

// Slow reference implementations used as test oracles. They share no code
// with the library: plain integer vectors mod p, schoolbook arithmetic,
// exhaustive enumeration.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::int64_t>;  // c_0, c_1, ... mod p

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b)
    if (mod(a * b, p) == 1) return b;
  return 0;
}

/// Remainder of a by b (b nonzero, trimmed) over GF(p).
inline Dense remainder(Dense a, const Dense& b, std::int64_t p) {
  trim(a);
  const std::int64_t inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = mod(a.back() * inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool irreducible_by_trial_division(Dense f, std::int64_t p) {
  trim(f);
  const std::size_t n = f.size() - 1;
  if (n < 1) return false;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Dense g(d + 1);
      std::int64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (remainder(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Order of g mod n by repeated multiplication; 0 when gcd(g, n) != 1.
inline std::uint64_t naive_order(std::uint64_t g, std::uint64_t n) {
  std::uint64_t x = g % n, k = 1;
  for (; x != 1 % n; ++k) {
    x = x * g % n;
    if (k > n) return 0;
  }
  return k;
}

inline std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::uint64_t a = i, b = n;
    while (b) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

/// Members of the monoid generated by gens up to limit, by closing sums.
inline std::set<std::uint64_t> semigroup_members(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::set<std::uint64_t> members{0};
  std::vector<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (const auto s : frontier)
      for (const auto a : gens)
        if (s + a <= limit && members.insert(s + a).second) next.push_back(s + a);
    frontier = std::move(next);
  }
  return members;
}

// Bivariate polynomials over GF(p) as {(i, j) -> c} for x^i y^j.
using Bi = std::map<std::pair<unsigned, unsigned>, std::int64_t>;

/// n^g in (z, f) + n^{g+1} over GF(p), by Gaussian elimination on vectors
/// indexed by the monomials of degree <= g.
inline bool power_in_ideal(const Bi& f, const Bi& z, unsigned g, std::int64_t p) {
  std::map<std::pair<unsigned, unsigned>, std::size_t> col;
  for (unsigned d = 0; d <= g; ++d)
    for (unsigned j = 0; j <= d; ++j) col[{d - j, j}] = col.size();
  const std::size_t dim = col.size();

  std::vector<std::vector<std::int64_t>> rows;
  for (const Bi* gen : {&f, &z})
    for (unsigned d = 0; d <= g; ++d)
      for (unsigned j = 0; j <= d; ++j) {
        std::vector<std::int64_t> row(dim, 0);
        for (const auto& [m, c] : *gen) {
          const unsigned a = m.first + d - j, b = m.second + j;
          if (a + b <= g) row[col[{a, b}]] = mod(row[col[{a, b}]] + c, p);
        }
        rows.push_back(std::move(row));
      }

  auto eliminate = [&](std::vector<std::vector<std::int64_t>> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[r], m[piv]);
      const std::int64_t inv = inverse(m[r][c], p);
      for (auto& v : m[r]) v = mod(v * inv, p);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != r && m[i][c] != 0) {
          const std::int64_t k = m[i][c];
          for (std::size_t j = 0; j < dim; ++j) m[i][j] = mod(m[i][j] - k * m[r][j], p);
        }
      ++r;
    }
    return r;
  };

  const std::size_t base = eliminate(rows);
  for (unsigned j = 0; j <= g; ++j) {
    auto with = rows;
    std::vector<std::int64_t> e(dim, 0);
    e[col[{g - j, j}]] = 1;
    with.push_back(e);
    if (eliminate(with) != base) return false;
  }
  return true;
}

}  // namespace oracle
