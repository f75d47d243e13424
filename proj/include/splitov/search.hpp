// Exhaustive and budgeted searches for the longest words avoiding two disjoint
// occurrences of a length-n factor (C), split t-overlaps (S) or reversed split
// t-overlaps (R).
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitov/combinatorics.hpp"
#include "splitov/detect.hpp"
#include "splitov/word.hpp"

namespace splitov {

enum class ProblemKind { DisjointFactors, SplitOverlap, ReversedSplitOverlap };

struct SearchProblem {
  ProblemKind kind = ProblemKind::DisjointFactors;
  int k = 2;
  int param = 1;  // n for DisjointFactors, t otherwise
  GapConvention convention = GapConvention::EmptyPieces;

  static SearchProblem disjoint_factors(int k, int n);
  static SearchProblem split_overlap(int k, int t,
                                     GapConvention convention = GapConvention::EmptyPieces);
  static SearchProblem reversed_split_overlap(
      int k, int t, GapConvention convention = GapConvention::EmptyPieces);
  static SearchProblem from_family(Family family, int k, int param,
                                   GapConvention convention = GapConvention::EmptyPieces);

  /// Throws std::invalid_argument on k < 1, n < 1 or t < 0.
  void validate() const;
  Family family() const;
  std::string label() const;  // e.g. "S(2,3)"

  friend bool operator==(const SearchProblem&, const SearchProblem&) = default;
};

enum class SearchStatus { Exact, LowerBound };
std::string to_string(SearchStatus status);

struct Budget {
  std::optional<std::uint64_t> max_nodes;  // per subtree task when the tree is split
  std::optional<std::chrono::milliseconds> wall_clock;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
  std::string describe() const;
};

/// Resumable position of a sequential lexicographic search.
struct Checkpoint {
  SearchProblem problem;
  bool finished = false;
  Word prefix;  // next node to visit
  std::uint64_t nodes_explored = 0;
  std::optional<Word> best;

  std::string render() const;
  static Checkpoint parse(std::string_view text);
  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct SearchOptions {
  int threads = 1;
  // Depth at which the tree is cut into independent subtree tasks; 0 = one task.
  // Outcomes depend on this value but never on the thread count.
  int split_depth = 0;
  bool collect_all_witnesses = false;
  // DisjointFactors only: passes that look solely for words of length
  // upper, upper-1, ... before the plain branch-and-bound pass.
  int descending_steps = 2;
  // Produce a resumable checkpoint (disables descending passes).
  bool checkpointable = false;
  std::optional<Checkpoint> resume;  // only with split_depth == 0
};

struct SearchOutcome {
  int max_length = 0;
  SearchStatus status = SearchStatus::LowerBound;
  std::vector<Word> witnesses;  // lexicographically least first
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string budget_used;
  std::optional<Checkpoint> checkpoint;  // set by sequential searches
};

/// Incremental state of a search: the current word plus the tables needed to
/// decide in roughly quadratic time whether a new last letter completes a
/// violation.
class SearchState {
 public:
  explicit SearchState(const SearchProblem& problem);

  const SearchProblem& problem() const { return problem_; }
  std::size_t size() const { return word_.size(); }
  std::span<const Symbol> symbols() const { return word_; }
  Word word() const { return Word(word_, problem_.k); }
  /// Largest symbol used so far, or -1 for the empty word.
  int max_symbol() const { return prefix_max_.empty() ? -1 : prefix_max_.back(); }

  /// True iff appending `letter` introduces no violation. The state is unchanged.
  bool extend_check(Symbol letter);
  /// Appends `letter` if that introduces no violation; returns whether it did.
  bool push(Symbol letter);
  void pop();

  /// Upper bound on the length of any avoiding extension of the current word.
  std::int64_t completion_bound() const;

 private:
  void push_unchecked(Symbol letter);
  void drop_last();
  bool last_letter_violates() const;
  bool split_violation() const;
  bool reversed_violation() const;
  bool disjoint_violation() const;

  int run(std::size_t q, std::size_t p) const {
    return p <= q ? run_[q][p] : static_cast<int>(q) + 1;
  }

  SearchProblem problem_;
  std::vector<Symbol> word_;
  std::vector<int> prefix_max_;

  // DisjointFactors tables, indexed by factor code.
  std::size_t factor_space_ = 0;
  std::vector<std::size_t> codes_;  // code of the factor starting at each position
  std::vector<int> first_;
  std::vector<int> count_;
  std::vector<int> cap_;
  std::int64_t unseen_cap_sum_ = 0;

  // Split tables, one row per position q.
  std::vector<std::vector<int>> lcs_;  // lcs_[q][e]: common suffix of w[..e] and w[..q], e < q
  std::vector<std::vector<int>> pm_;   // pm_[q][j] = max_{e <= j} lcs_[q][e]
  std::vector<std::vector<int>> run_;  // run_[q][p]: longest period-p factor ending at q, p <= q

  std::int64_t a_priori_cap_ = 0;
};

/// A priori bound on the answer: the occurrence-cap sum for C, the composed
/// bounds for S and R.
std::int64_t a_priori_upper_bound(const SearchProblem& problem);

/// Longest avoiding word by depth-first search in lexicographic order with
/// canonical letter ordering (each new letter is at most one more than the
/// largest used). Exact when the tree is exhausted within budget.
SearchOutcome longest_avoiding(const SearchProblem& problem, const Budget& budget,
                               const SearchOptions& options = {});

/// Lexicographically least canonical avoiding word of exactly `length`
/// letters; every branch that cannot reach that length is pruned. Exact unless
/// the budget runs out; max_length is 0 and no witness is reported when no such
/// word exists.
SearchOutcome least_word_of_length(const SearchProblem& problem, int length, const Budget& budget);

/// True iff w contains no violation, checked with the full detectors.
bool verify_witness(const SearchProblem& problem, const Word& w);

/// Budgeted best-effort search for long avoiding words: repeated depth-first
/// passes with pseudo-random letter orders and a node quota per pass. Always
/// reports LowerBound.
struct FrontierOptions {
  std::uint64_t rng_seed = 1;
  std::uint64_t nodes_per_pass = 200000;
};

SearchOutcome frontier_lower_bound(const SearchProblem& problem, const Budget& budget,
                                   const std::optional<Word>& seed = std::nullopt,
                                   const FrontierOptions& options = {});

}  // namespace splitov
