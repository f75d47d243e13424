#include "splitov/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitov {

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

std::uint64_t checked_enumeration_size(int k, int n) {
  BigInt total = power(k, n);
  if (total > kEnumerationBudget)
    throw std::invalid_argument("census too large; use primitive_count identities");
  return total.convert_to<std::uint64_t>();
}

// Decodes index into n base-k digits, most significant first.
void decode(std::uint64_t index, int k, std::vector<Symbol>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(k));
    index /= static_cast<std::uint64_t>(k);
  }
}

}  // namespace

BigInt power(int base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

int mobius(int d) {
  if (d < 1) throw std::invalid_argument("mobius argument must be at least 1");
  int result = 1;
  for (int q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    d /= q;
    if (d % q == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

BigInt primitive_count(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  BigInt total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu != 0) total += mu * power(k, n / d);
  }
  return total;
}

BigInt unbordered_count(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  std::vector<BigInt> u(static_cast<std::size_t>(n) + 1);
  u[1] = k;
  for (int i = 2; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (i % 2 == 1)
      u[idx] = k * u[idx - 1];
    else
      u[idx] = k * u[idx - 1] - u[idx / 2];
  }
  return u[static_cast<std::size_t>(n)];
}

std::map<int, BigInt> period_census(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  const std::uint64_t total = checked_enumeration_size(k, n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (std::uint64_t index = 0; index < total; ++index) {
    decode(index, k, symbols);
    ++counts[static_cast<std::size_t>(period(Word(symbols, k)))];
  }
  std::map<int, BigInt> census;
  for (int p = 1; p <= n; ++p) {
    if (counts[static_cast<std::size_t>(p)] != 0) census[p] = counts[static_cast<std::size_t>(p)];
  }
  return census;
}

int max_nondisjoint_cap(const Word& x) {
  if (x.empty()) throw std::invalid_argument("empty input");
  const int n = static_cast<int>(x.size());
  const int p = period(x);
  return (n + p - 1) / p;
}

Word occurrence_witness(const Word& x) {
  if (x.empty()) throw std::invalid_argument("empty input");
  // x = y^f u, y = uv the shortest period block, u a nonempty prefix of y.
  const std::size_t n = x.size();
  const std::size_t p = static_cast<std::size_t>(period(x));
  const std::size_t f = (n + p - 1) / p - 1;
  // An unbordered x gives f = 0 and the witness is x itself.
  const std::size_t u_len = n - f * p;
  return x.factor(0, p).repeated(2 * f) + x.factor(0, u_len);
}

BigInt theorem_sum_bound(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  // Words with per <= n/2 are counted by primitive_count (one class per
  // primitive root); those with n/2 < per < n contribute 2 each; unbordered
  // words contribute 1.
  BigInt short_period_words = 0;
  BigInt short_period_sum = 0;
  for (int p = 1; 2 * p <= n; ++p) {
    BigInt psi = primitive_count(k, p);
    short_period_words += psi;
    short_period_sum += psi * ((n + p - 1) / p);
  }
  const BigInt unbordered = unbordered_count(k, n);
  const BigInt middle = power(k, n) - short_period_words - unbordered;
  return short_period_sum + 2 * middle + unbordered + (n - 1);
}

Rational corollary_bound(int k, int n) {
  if (k < 2) throw std::invalid_argument("corollary bound requires k >= 2");
  require_positive(n, "n");
  const Rational kn(power(k, n));
  const Rational kr(k);
  Rational value = kn * (Rational(1) + 1 / kr + 1 / (kr * kr));
  value += Rational(n) * Rational(power(k, n / 2 + 1) - 1) / Rational(k - 1);
  value += n - 1;
  return value;
}

BigInt pigeonhole_bound(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  return n * (power(k, n) + 1) - 1;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::R: return "R";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "C") return Family::C;
  if (text == "S") return Family::S;
  if (text == "R") return Family::R;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

BigInt BoundReport::best() const {
  std::optional<Rational> best;
  for (const auto& entry : entries) {
    if (entry.relation == BoundRelation::Exact) return boost::multiprecision::numerator(entry.value);
    if (!best || entry.value < *best) best = entry.value;
  }
  if (!best) throw std::logic_error("bound report has no entries");
  // Lengths are integers, so a rational bound floors.
  return boost::multiprecision::numerator(*best) / boost::multiprecision::denominator(*best);
}

bool BoundReport::exact() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const BoundEntry& e) { return e.relation == BoundRelation::Exact; });
}

BoundReport c_bounds(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  BoundReport report;
  report.family = Family::C;
  report.k = k;
  report.n_or_t = n;
  report.pigeonhole = pigeonhole_bound(k, n);
  report.theorem_sum_bound = theorem_sum_bound(k, n);
  if (k >= 2) report.corollary_bound = corollary_bound(k, n);
  if (power(k, n) <= (1u << 20)) report.lemma_per_word_caps = period_census(k, n);

  auto& e = report.entries;
  // Closed forms for small parameters; each equals the sum bound, which the
  // de Bruijn constructions attain.
  if (k == 1) e.push_back({"unary", "C(1,n) = 2n-1", BoundRelation::Exact, Rational(2 * n - 1)});
  if (n == 1) e.push_back({"single letters", "C(k,1) = k", BoundRelation::Exact, Rational(k)});
  if (n == 2)
    e.push_back({"order-2 construction", "C(k,2) = k^2+k+1", BoundRelation::Exact,
                 Rational(k * k + k + 1)});
  if (n == 3)
    e.push_back({"order-3 construction", "C(k,3) = k^3+k^2+k+2", BoundRelation::Exact,
                 Rational(BigInt(k) * k * k + k * k + k + 2)});
  e.push_back({"pigeonhole", "n(k^n+1) - 1", BoundRelation::Upper, Rational(*report.pigeonhole)});
  e.push_back({"occurrence-cap sum", "sum_w ceil(n/per(w)) + n - 1", BoundRelation::Upper,
               Rational(*report.theorem_sum_bound)});
  if (report.corollary_bound)
    e.push_back({"split-sum estimate",
                 "k^n(1+1/k+1/k^2) + n(k^{floor(n/2)+1}-1)/(k-1) + n - 1", BoundRelation::Upper,
                 *report.corollary_bound});
  return report;
}

BoundReport s_upper_bounds(int k, int t, const std::optional<CValues>& c_values, Family family) {
  require_positive(k, "k");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  BoundReport report;
  report.family = family;
  report.k = k;
  report.n_or_t = t;
  auto& e = report.entries;

  auto known_c = [&](int n) -> std::optional<BigInt> {
    if (!c_values) return std::nullopt;
    auto it = c_values->find({k, n});
    if (it == c_values->end()) return std::nullopt;
    return it->second;
  };

  if (t == 0) e.push_back({"t = 0", "k", BoundRelation::Exact, Rational(k)});
  if (k == 1 && t >= 1) e.push_back({"unary", "3t - 1", BoundRelation::Exact, Rational(3 * t - 1)});

  // C(k, C(k,t) + 1); monotone in the inner argument, so upper bounds compose.
  BigInt inner = t == 0 ? BigInt(k) : known_c(t).value_or(theorem_sum_bound(k, t));
  constexpr int kMaxComposedLength = 4096;
  if (inner + 1 <= kMaxComposedLength) {
    const int m = static_cast<int>(inner) + 1;
    BigInt outer = known_c(m).value_or(theorem_sum_bound(k, m));
    e.push_back({"composition", "C(k, C(k,t) + 1) with C(k,t) <= " + inner.str(),
                 BoundRelation::Upper, Rational(outer)});
  }
  if (t == 1)
    e.push_back({"t = 1 pigeonhole", "k^{k+1} + k - 1", BoundRelation::Upper,
                 Rational(power(k, k + 1) + k - 1)});
  if (e.empty())
    throw std::invalid_argument("no applicable bound (inner C value too large to compose)");
  return report;
}

}  // namespace splitov
