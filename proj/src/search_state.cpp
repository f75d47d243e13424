#include <algorithm>
#include <limits>
#include <stdexcept>

#include "splitov/search.hpp"

namespace splitov {

namespace {

constexpr std::int64_t kUnboundedCap = std::int64_t{1} << 40;
constexpr std::uint64_t kMaxFactorSpace = std::uint64_t{1} << 22;

}  // namespace

std::int64_t a_priori_upper_bound(const SearchProblem& problem) {
  problem.validate();
  BigInt bound;
  if (problem.kind == ProblemKind::DisjointFactors) {
    bound = theorem_sum_bound(problem.k, problem.param);
  } else if (problem.convention == GapConvention::NonemptyGap) {
    // The composed bounds assume contiguous repetitions count; without them
    // only natural exhaustion terminates the search.
    return kUnboundedCap;
  } else {
    bound = s_upper_bounds(problem.k, problem.param).best();
  }
  return bound > kUnboundedCap ? kUnboundedCap : bound.convert_to<std::int64_t>();
}

SearchState::SearchState(const SearchProblem& problem) : problem_(problem) {
  problem_.validate();
  a_priori_cap_ = a_priori_upper_bound(problem_);
  if (problem_.kind == ProblemKind::DisjointFactors) {
    BigInt space = power(problem_.k, problem_.param);
    if (space > kMaxFactorSpace) throw std::invalid_argument("k^n too large for the factor table");
    factor_space_ = space.convert_to<std::size_t>();
    first_.assign(factor_space_, -1);
    count_.assign(factor_space_, 0);
    cap_.resize(factor_space_);
    const auto n = static_cast<std::size_t>(problem_.param);
    std::vector<Symbol> symbols(n);
    for (std::size_t code = 0; code < factor_space_; ++code) {
      std::size_t rest = code;
      for (std::size_t i = n; i-- > 0;) {
        symbols[i] = static_cast<Symbol>(rest % static_cast<std::size_t>(problem_.k));
        rest /= static_cast<std::size_t>(problem_.k);
      }
      cap_[code] = max_nondisjoint_cap(Word(symbols, problem_.k));
      unseen_cap_sum_ += cap_[code];
    }
  }
}

bool SearchState::extend_check(Symbol letter) {
  if (!push(letter)) return false;
  pop();
  return true;
}

bool SearchState::push(Symbol letter) {
  if (letter >= problem_.k) throw std::invalid_argument("symbol outside alphabet");
  push_unchecked(letter);
  if (last_letter_violates()) {
    drop_last();
    return false;
  }
  if (problem_.kind == ProblemKind::DisjointFactors && word_.size() >= static_cast<std::size_t>(problem_.param)) {
    const std::size_t start = word_.size() - static_cast<std::size_t>(problem_.param);
    const std::size_t code = codes_.back();
    if (first_[code] < 0) {
      first_[code] = static_cast<int>(start);
      unseen_cap_sum_ -= cap_[code];
    }
    ++count_[code];
  }
  return true;
}

void SearchState::push_unchecked(Symbol letter) {
  word_.push_back(letter);
  prefix_max_.push_back(std::max(max_symbol(), static_cast<int>(letter)));
  const std::size_t c = word_.size() - 1;

  if (problem_.kind == ProblemKind::DisjointFactors) {
    const auto n = static_cast<std::size_t>(problem_.param);
    if (word_.size() >= n) {
      std::size_t code = 0;
      for (std::size_t i = word_.size() - n; i < word_.size(); ++i)
        code = code * static_cast<std::size_t>(problem_.k) + word_[i];
      codes_.push_back(code);
    }
    return;
  }

  if (lcs_.size() <= c) {
    lcs_.emplace_back();
    pm_.emplace_back();
    run_.emplace_back();
  }
  auto& lcs = lcs_[c];
  auto& pm = pm_[c];
  auto& run = run_[c];
  lcs.resize(c);
  pm.resize(c);
  run.resize(c + 1);
  for (std::size_t e = 0; e < c; ++e) {
    lcs[e] = word_[c] == word_[e] ? (e > 0 ? lcs_[c - 1][e - 1] : 0) + 1 : 0;
    pm[e] = e > 0 ? std::max(pm[e - 1], lcs[e]) : lcs[e];
  }
  for (std::size_t p = 1; p <= c; ++p)
    run[p] = word_[c] == word_[c - p] ? this->run(c - 1, p) + 1 : static_cast<int>(p);
}

void SearchState::pop() {
  if (word_.empty()) throw std::logic_error("pop on empty search state");
  if (problem_.kind == ProblemKind::DisjointFactors && word_.size() >= static_cast<std::size_t>(problem_.param)) {
    const int start = static_cast<int>(word_.size()) - problem_.param;
    const std::size_t code = codes_.back();
    --count_[code];
    if (first_[code] == start) {
      first_[code] = -1;
      unseen_cap_sum_ += cap_[code];
    }
  }
  drop_last();
}

void SearchState::drop_last() {
  if (problem_.kind == ProblemKind::DisjointFactors && word_.size() >= static_cast<std::size_t>(problem_.param))
    codes_.pop_back();
  word_.pop_back();
  prefix_max_.pop_back();
}

bool SearchState::last_letter_violates() const {
  switch (problem_.kind) {
    case ProblemKind::DisjointFactors: return disjoint_violation();
    case ProblemKind::SplitOverlap: return split_violation();
    case ProblemKind::ReversedSplitOverlap: return reversed_violation();
  }
  return false;
}

bool SearchState::disjoint_violation() const {
  const auto n = static_cast<std::size_t>(problem_.param);
  if (word_.size() < n) return false;
  const int start = static_cast<int>(word_.size() - n);
  const int first = first_[codes_.back()];
  return first >= 0 && first + static_cast<int>(n) <= start;
}

// A violation ending at the new letter consists of x = w[e-a+1..e] and a
// suffix z of length b with a + b = 2p + t, joined with period p. Writing
// c for the last position, the cases are split by whether x or z holds a
// full period; each reduces to lookups in lcs_, pm_ and run_.
bool SearchState::split_violation() const {
  const int c = static_cast<int>(word_.size()) - 1;
  const int len = c + 1;
  const int t = problem_.param;
  const int gap = problem_.convention == GapConvention::NonemptyGap ? 1 : 0;
  const int pmin = std::max(t, 1);
  const auto& last = lcs_[static_cast<std::size_t>(c)];

  // b <= p < a: z is a copy of w[e-p+1 .. e-p+b], i.e. it also ends at e' = e-p+b.
  for (int ep = 0; ep < c; ++ep) {
    const int ell = last[static_cast<std::size_t>(ep)];
    for (int b = 1; b <= ell; ++b) {
      for (int p = std::max(pmin, t == 0 ? b + 1 : b); 2 * p + t <= len && ep + p + gap <= c; ++p) {
        const int e = ep + p - b;
        if (run(static_cast<std::size_t>(e), static_cast<std::size_t>(p)) >= 2 * p + t - b) return true;
      }
    }
  }

  for (int p = pmin; 2 * p + t <= len; ++p) {
    const int m = 2 * p + t;
    const int rz = run(static_cast<std::size_t>(c), static_cast<std::size_t>(p));
    // a <= p: x equals the length-a factor ending at q = c-b+p and must occur
    // ending at or before c-b-gap.
    for (int a = std::max(1, m - rz); a <= p; ++a) {
      const int b = m - a;
      const int q = c - b + p;
      const int limit = c - b - gap;
      if (limit < 0) continue;
      if (pm_[static_cast<std::size_t>(q)][static_cast<std::size_t>(limit)] >= a) return true;
    }
    // p < a, p < b (t >= 2): both pieces hold a full period.
    for (int b = p + 1; b <= p + t - 1 && b <= rz; ++b) {
      const int a = m - b;
      const int q = c - b + p;
      const auto& row = lcs_[static_cast<std::size_t>(q)];
      for (int e = a - 1; e <= c - b - gap; ++e) {
        if (row[static_cast<std::size_t>(e)] >= p &&
            run(static_cast<std::size_t>(e), static_cast<std::size_t>(p)) >= a)
          return true;
      }
    }
  }
  return false;
}

// As split_violation with the repetition read as z x.
bool SearchState::reversed_violation() const {
  const int c = static_cast<int>(word_.size()) - 1;
  const int len = c + 1;
  const int t = problem_.param;
  const int gap = problem_.convention == GapConvention::NonemptyGap ? 1 : 0;
  const int pmin = std::max(t, 1);
  const auto& last = lcs_[static_cast<std::size_t>(c)];

  if (problem_.convention == GapConvention::EmptyPieces) {
    // With x empty the repetition is a contiguous t-overlap ending here.
    for (int p = pmin; 2 * p + t <= len; ++p) {
      if (run(static_cast<std::size_t>(c), static_cast<std::size_t>(p)) >= 2 * p + t) return true;
    }
  }

  // b <= p: z reappears ending at e' inside x's first period; x = w[e'-p+1 ..].
  for (int ep = 0; ep < c; ++ep) {
    const int ell = last[static_cast<std::size_t>(ep)];
    for (int b = 1; b <= ell; ++b) {
      for (int p = std::max(pmin, b); 2 * p + t <= len && ep + p + t + gap <= c && p <= ep + 1; ++p) {
        const int e = ep + p + t - b;
        if (run(static_cast<std::size_t>(e), static_cast<std::size_t>(p)) >= 2 * p + t - b) return true;
      }
    }
  }

  for (int p = pmin; 2 * p + t <= len; ++p) {
    const int m = 2 * p + t;
    const int rz = run(static_cast<std::size_t>(c), static_cast<std::size_t>(p));
    // a <= p < b: x equals the length-a factor ending at q = c-p+a.
    for (int a = std::max(1, m - rz); a <= p; ++a) {
      const int b = m - a;
      if (b <= p) continue;
      const int q = c - p + a;
      const int limit = q - p - t - gap;
      if (limit < 0) continue;
      if (pm_[static_cast<std::size_t>(q)][static_cast<std::size_t>(limit)] >= a) return true;
    }
    // p < a, p < b (t >= 2): the last period of z reappears ending at e''.
    for (int b = p + 1; b <= p + t - 1 && b <= rz; ++b) {
      const int a = m - b;
      for (int epp = p - 1; epp < c; ++epp) {
        if (last[static_cast<std::size_t>(epp)] < p) continue;
        const int e = epp + a - p;
        if (e > c - b - gap) break;
        if (run(static_cast<std::size_t>(e), static_cast<std::size_t>(p)) >= a) return true;
      }
    }
  }
  return false;
}

std::int64_t SearchState::completion_bound() const {
  if (problem_.kind != ProblemKind::DisjointFactors) return a_priori_cap_;
  const auto n = static_cast<std::int64_t>(problem_.param);
  const auto len = static_cast<std::int64_t>(word_.size());
  const std::int64_t factors = std::max<std::int64_t>(0, len - n + 1);
  // Future occurrences of a seen factor must start before first + n; only
  // factors first seen within the last n - 1 starts still have room.
  std::int64_t future = unseen_cap_sum_;
  for (std::int64_t s = std::max<std::int64_t>(0, factors - n + 1); s < factors; ++s) {
    const std::size_t code = codes_[static_cast<std::size_t>(s)];
    if (first_[code] != s) continue;
    const std::int64_t room = s + n - factors;
    future += std::min<std::int64_t>(cap_[code] - count_[code], room);
  }
  return std::min(a_priori_cap_, factors + future + n - 1);
}

}  // namespace splitov
