#include "splitov/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitov {

namespace {

void require_nonnegative(int t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
}

// True iff the concatenation of the two spans has period p.
bool joined_has_period(std::span<const Symbol> w, Span first, Span second, std::size_t p) {
  const std::size_t a = first.length();
  const std::size_t m = a + second.length();
  auto at = [&](std::size_t r) { return r < a ? w[first.start + r] : w[second.start + r - a]; };
  for (std::size_t r = 0; r + p < m; ++r) {
    if (at(r) != at(r + p)) return false;
  }
  return true;
}

std::size_t min_gap(GapConvention convention) {
  return convention == GapConvention::NonemptyGap ? 1 : 0;
}

// Enumerates (i, j, j', l) in lexicographic order and returns the first tuple
// whose pieces, joined in the requested order, form a t-overlap.
std::optional<Violation> find_split_like(const Word& w, int t, GapConvention convention,
                                         bool reversed) {
  require_nonnegative(t);
  const std::size_t n = w.size();
  const std::size_t tt = static_cast<std::size_t>(t);
  const std::size_t pmin = std::max<std::size_t>(tt, 1);
  const std::size_t gap = min_gap(convention);
  auto sym = w.symbols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t a = j - i + 1;
      for (std::size_t js = j + 1 + gap; js < n; ++js) {
        // |xz| = 2p + t, so l is determined by p; increasing p is increasing l.
        for (std::size_t p = pmin; 2 * p + tt <= a + (n - js); ++p) {
          const std::size_t m = 2 * p + tt;
          if (m <= a) continue;
          const Span x{i, j};
          const Span z{js, js + (m - a) - 1};
          const bool periodic = reversed ? joined_has_period(sym, z, x, p)
                                         : joined_has_period(sym, x, z, p);
          if (!periodic) continue;
          Word rep = reversed ? w.factor(z.start, z.length()) + w.factor(x.start, x.length())
                              : w.factor(x.start, x.length()) + w.factor(z.start, z.length());
          return Violation{reversed ? ViolationKind::ReversedSplitTOverlap
                                    : ViolationKind::SplitTOverlap,
                           t, x, z, std::move(rep)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TOverlap: return "t-overlap";
    case ViolationKind::SplitTOverlap: return "split t-overlap";
    case ViolationKind::ReversedSplitTOverlap: return "reversed split t-overlap";
    case ViolationKind::DisjointPair: return "disjoint pair";
  }
  return "?";
}

std::string to_string(GapConvention convention) {
  switch (convention) {
    case GapConvention::EmptyPieces: return "empty-pieces";
    case GapConvention::EmptyGap: return "empty-gap";
    case GapConvention::NonemptyGap: return "nonempty-gap";
  }
  return "?";
}

GapConvention parse_gap_convention(std::string_view text) {
  if (text == "empty-pieces") return GapConvention::EmptyPieces;
  if (text == "empty-gap") return GapConvention::EmptyGap;
  if (text == "nonempty-gap") return GapConvention::NonemptyGap;
  throw std::invalid_argument("unknown gap convention '" + std::string(text) + "'");
}

bool is_t_overlap(const Word& w, int t) {
  require_nonnegative(t);
  const std::size_t n = w.size();
  const std::size_t tt = static_cast<std::size_t>(t);
  if (n < tt || (n - tt) % 2 != 0) return false;
  const std::size_t p = (n - tt) / 2;
  if (p < std::max<std::size_t>(tt, 1)) return false;
  for (std::size_t i = 0; i + p < n; ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

std::optional<Violation> find_t_overlap_factor(const Word& w, int t) {
  require_nonnegative(t);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len <= n; ++len) {
      Word f = w.factor(i, len);
      if (is_t_overlap(f, t)) return Violation{ViolationKind::TOverlap, t, Span{i, i + len - 1},
                                               std::nullopt, std::move(f)};
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_split_t_overlap(const Word& w, int t, GapConvention convention) {
  return find_split_like(w, t, convention, false);
}

std::optional<Violation> find_reversed_split_t_overlap(const Word& w, int t,
                                                       GapConvention convention) {
  if (auto found = find_split_like(w, t, convention, true)) return found;
  if (convention == GapConvention::EmptyPieces) return find_t_overlap_factor(w, t);
  return std::nullopt;
}

std::optional<Violation> find_disjoint_pair(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("factor length must be at least 1");
  const std::size_t len = static_cast<std::size_t>(n);
  auto sym = w.symbols();
  for (std::size_t p1 = 0; p1 + 2 * len <= sym.size(); ++p1) {
    for (std::size_t p2 = p1 + len; p2 + len <= sym.size(); ++p2) {
      if (std::equal(sym.begin() + p1, sym.begin() + p1 + len, sym.begin() + p2))
        return Violation{ViolationKind::DisjointPair, n, Span{p1, p1 + len - 1},
                         Span{p2, p2 + len - 1}, w.factor(p1, len)};
    }
  }
  return std::nullopt;
}

std::size_t count_nondisjoint_occurrences(const Word& w, const Word& x) {
  return occurrences(w, x).size();
}

}  // namespace splitov
