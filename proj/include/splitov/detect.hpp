// Detectors for t-overlaps, split and reversed split t-overlaps, and disjoint
// occurrences of equal factors.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "splitov/word.hpp"

namespace splitov {

enum class ViolationKind { TOverlap, SplitTOverlap, ReversedSplitTOverlap, DisjointPair };

std::string to_string(ViolationKind kind);

/// Which pieces of an occurrence x y z may be empty.
///  - EmptyPieces: any of x, y, z (the repetition itself is nonempty). A
///    contiguous t-overlap then counts for both split and reversed split.
///  - EmptyGap: x and z nonempty, y possibly empty. For split occurrences this
///    coincides with EmptyPieces; reversed ones no longer include contiguous
///    t-overlaps.
///  - NonemptyGap: x, y and z all nonempty.
enum class GapConvention { EmptyPieces, EmptyGap, NonemptyGap };

std::string to_string(GapConvention convention);
GapConvention parse_gap_convention(std::string_view text);

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  std::size_t length() const { return end - start + 1; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Violation {
  ViolationKind kind = ViolationKind::TOverlap;
  int t_or_n = 0;
  Span x_span;
  std::optional<Span> z_span;  // absent for TOverlap
  Word repetition;             // xz, zx, the contiguous factor, or the repeated factor
};

/// True iff w = u u u' with |u| >= max(t, 1) and u' the first t letters of u;
/// equivalently |w| = 2p + t for some p >= max(t, 1) and w has period p.
bool is_t_overlap(const Word& w, int t);

/// Lexicographically least (start, end) factor of w that is a t-overlap.
std::optional<Violation> find_t_overlap_factor(const Word& w, int t);

/// Factors x = w[i..j], z = w[j'..l] with j < j' (j' >= j + 2 under NonemptyGap)
/// such that xz is a t-overlap. Reports the lexicographically least (i, j, j', l).
std::optional<Violation> find_split_t_overlap(const Word& w, int t,
                                              GapConvention convention = GapConvention::EmptyPieces);

/// As find_split_t_overlap, but the repetition is zx. Under EmptyPieces a
/// contiguous t-overlap is also a violation; it is reported (kind TOverlap)
/// only when no occurrence with nonempty x and z exists.
std::optional<Violation> find_reversed_split_t_overlap(
    const Word& w, int t, GapConvention convention = GapConvention::EmptyPieces);

/// Two occurrences p1 < p2 of the same length-n factor with p1 + n <= p2;
/// reports the lexicographically least (p1, p2).
std::optional<Violation> find_disjoint_pair(const Word& w, int n);

/// Number of occurrences of x in w.
std::size_t count_nondisjoint_occurrences(const Word& w, const Word& x);

}  // namespace splitov
