#pragma once

// Numerical semigroups H = <a_1, ..., a_n> and graded invariants of the
// semigroup ring k[H] = k[t^{a_1}, ..., t^{a_n}].
//
// Every graded piece of k[H] is at most one-dimensional (spanned by t^s,
// s in H), so each ideal containment reduces to integer-shift membership:
// t^s lies in (t^d) iff s - d is in H. No linear algebra is involved, which
// makes these computations an independent check on the polynomial engine.
//
// Windows: membership is total from the conductor C on, so any condition
// "for all s in H with s >= N: s - d in H" only needs s <= max(N, C + d);
// the oracles scan up to N + C + d.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gll::sgp {

class NumericalSemigroup {
 public:
  /// Sorts, removes duplicates and redundant generators. Throws
  /// InvalidArgument on an empty list, a zero generator or gcd != 1.
  static NumericalSemigroup from_generators(std::vector<std::uint64_t> gens);

  /// Minimal generating set, ascending.
  const std::vector<std::uint64_t>& gens() const noexcept { return gens_; }
  std::uint64_t multiplicity() const noexcept { return gens_.front(); }
  std::uint64_t max_generator() const noexcept { return gens_.back(); }
  std::uint64_t conductor() const noexcept { return conductor_; }
  /// C - 1; -1 for H = N.
  std::int64_t frobenius() const noexcept { return static_cast<std::int64_t>(conductor_) - 1; }
  const std::vector<std::uint64_t>& gaps() const noexcept { return gaps_; }

  bool contains(std::int64_t s) const noexcept;

 private:
  NumericalSemigroup() = default;

  std::vector<std::uint64_t> gens_;
  std::uint64_t conductor_ = 0;
  std::vector<std::uint64_t> gaps_;
  std::vector<bool> below_conductor_;  // membership of 0..C-1
};

/// True when no generator is a nonnegative combination of the others.
bool is_minimal_generating_set(const std::vector<std::uint64_t>& gens);

bool membership(const NumericalSemigroup& h, std::int64_t s);
std::uint64_t conductor(const NumericalSemigroup& h);
/// Least element of H in each residue class mod m, indexed by residue.
/// Throws NotMember unless m is a nonzero element of H.
std::vector<std::uint64_t> apery_set(const NumericalSemigroup& h, std::uint64_t m);

/// t^s is in (t^d) for every s in H with s >= n.
bool tail_in_principal(const NumericalSemigroup& h, std::uint64_t n, std::uint64_t d);

enum class GglMode { Formula, Oracle };

struct GglReport {
  std::uint64_t value;
  std::vector<std::uint64_t> witness_ideals;  // d with m_value in (t^d)
  std::uint64_t formula_value;                // C + a_1
};

/// Formula mode returns C + a_1. Oracle mode searches for the least n with
/// m_n in some (t^d) and throws std::logic_error if it disagrees.
GglReport ggl(const NumericalSemigroup& h, GglMode mode);
/// Least n with m_n in (t^d) for some d, by direct search.
std::uint64_t ggl_oracle(const NumericalSemigroup& h);
std::vector<std::uint64_t> ggl_witnesses(const NumericalSemigroup& h);

/// For H = <a, b>: every witness exponent is i*a with 1 <= i <= 1+b-a.
/// Throws BadPair unless 2 <= a < b and gcd(a, b) = 1.
bool two_generator_witness_check(std::uint64_t a, std::uint64_t b);

struct GradedLoewy {
  std::uint64_t gll;
  std::uint64_t witness_d;  // least d with m^gll in (t^d)
};
/// Least n such that m^n (generated by t^s, s a sum of n generators) lies
/// in a principal ideal (t^d).
GradedLoewy gll_graded_semigroup(const NumericalSemigroup& h);

/// a*l - (a-1)^2 <= ggl <= b*l - b + 1 with a = a_1, b = a_n, l = gll.
bool gll_ggl_bounds_hold(const NumericalSemigroup& h);

/// Least i >= 1 with t^d m_i = m_{i+d}. Throws NotMember.
std::optional<std::uint64_t> graded_reduction_min_shift(const NumericalSemigroup& h, std::uint64_t d);

}  // namespace gll::sgp
