// Counting formulas (primitive words, unbordered words, period census) and
// closed-form upper bounds on C(k,n), S(k,t) and R(k,t).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitov/word.hpp"

namespace splitov {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest k^n the brute-force enumerations will walk.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

BigInt power(int base, int exponent);

int mobius(int d);

/// psi_k(n): number of primitive words of length n, sum_{d | n} mu(d) k^{n/d}.
BigInt primitive_count(int k, int n);

/// u_k(n): number of unbordered words of length n, from
/// u(1) = k, u(2m+1) = k u(2m), u(2m) = k u(2m-1) - u(m).
BigInt unbordered_count(int k, int n);

/// A_k(n, p) for p = 1..n by enumerating all k^n words.
std::map<int, BigInt> period_census(int k, int n);

/// ceil(|x| / per(x)): the most occurrences of x a word can hold without two
/// of them being disjoint.
int max_nondisjoint_cap(const Word& x);

/// A word attaining max_nondisjoint_cap(x) occurrences of x, none disjoint.
Word occurrence_witness(const Word& x);

/// (sum over length-n words w of ceil(n / per(w))) + n - 1, evaluated exactly
/// from primitive and unbordered counts (no enumeration).
BigInt theorem_sum_bound(int k, int n);

/// k^n (1 + 1/k + 1/k^2) + n (k^{floor(n/2)+1} - 1)/(k - 1) + n - 1, k >= 2.
Rational corollary_bound(int k, int n);

/// n (k^n + 1) - 1.
BigInt pigeonhole_bound(int k, int n);

enum class Family { C, S, R };
std::string to_string(Family family);
Family parse_family(std::string_view text);

enum class BoundRelation { Exact, Upper };

struct BoundEntry {
  std::string name;
  std::string formula;
  BoundRelation relation = BoundRelation::Upper;
  Rational value;
};

struct BoundReport {
  Family family = Family::C;
  int k = 1;
  int n_or_t = 1;
  std::optional<BigInt> pigeonhole;
  std::optional<BigInt> theorem_sum_bound;
  std::optional<Rational> corollary_bound;
  // period p -> number of length-n words with smallest period p (C family,
  // only when k^n is within the enumeration budget).
  std::map<int, BigInt> lemma_per_word_caps;
  std::vector<BoundEntry> entries;

  /// Smallest applicable upper bound, or the exact value when one is known.
  BigInt best() const;
  bool exact() const;
};

/// Known exact C(k, n) values used to tighten composed bounds.
using CValues = std::map<std::pair<int, int>, BigInt>;

BoundReport c_bounds(int k, int n);

/// Bounds on S(k,t); identical bounds apply to R(k,t) (pass Family::R to label
/// the report accordingly).
BoundReport s_upper_bounds(int k, int t, const std::optional<CValues>& c_values = std::nullopt,
                           Family family = Family::S);

}  // namespace splitov
