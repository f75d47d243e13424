// De Bruijn words and the order-3 successor rule built from the feedback
// function f(a1 a2 a3) = a1 + a2 - a3 (mod k), plus the lower-bound
// constructions for C(k,2) and C(k,3).
#pragma once

#include <array>
#include <vector>

#include "splitov/word.hpp"

namespace splitov {

using Triple = std::array<Symbol, 3>;

Symbol feedback_f(int k, Symbol a1, Symbol a2, Symbol a3);

/// F(a1 a2 a3) = a2 a3 f(a1 a2 a3); a bijection on the k^3 triples.
Triple shift_map_F(int k, const Triple& w);

struct CyclePartition {
  int k = 2;
  std::vector<std::vector<Triple>> cycles;  // each starts at its representative
  std::vector<Triple> representatives;      // lexicographically least element per cycle

  bool is_representative(const Triple& w) const;
};

CyclePartition cycle_partition(int k);

/// The symbol sequence attached to the suffix a2 a3: increasing c with a2 a3 c
/// a cycle representative, then prefixed by f(0 a2 a3) when 0 is present and
/// a2 a3 0 != 000, or by 0 when 0 is absent and the sequence is nonempty.
std::vector<Symbol> tau_sequence(const CyclePartition& partition, Symbol a2, Symbol a3);
std::vector<Symbol> tau_sequence(int k, Symbol a2, Symbol a3);

/// Next-symbol rule over triples derived from f and the tau sequences.
class SuccessorRule {
 public:
  explicit SuccessorRule(int k);

  int alphabet_size() const { return k_; }
  Symbol next(Symbol a1, Symbol a2, Symbol a3) const;

 private:
  int k_;
  std::vector<std::vector<Symbol>> tau_;  // indexed by a2 * k + a3
};

Symbol successor_g(int k, Symbol a1, Symbol a2, Symbol a3);

/// Order-3 de Bruijn word (linearised: k^3 + 2 symbols) generated by the
/// successor rule from 000, containing abab or baba for every a != b.
/// Throws std::runtime_error if validation fails.
Word debruijn_order3_special(int k);

/// Linear de Bruijn word of order n (length k^n + n - 1), greedy
/// prefer-smallest starting from (k-1)^{n-1}.
Word debruijn_order_n(int k, int n);

/// De Bruijn word of order 2 with each aa replaced by aaa: length k^2 + k + 1,
/// no two disjoint occurrences of any length-2 factor.
Word construct_C2_lower(int k);

/// Order-3 special de Bruijn word with ab inserted after one abab (or ba after
/// baba) per pair and aa after each aaa: length k^3 + k^2 + k + 2, no two
/// disjoint occurrences of any length-3 factor.
Word construct_C3_lower(int k);

/// True iff each of the k^n words of length n occurs exactly once as a cyclic
/// (resp. linear) window.
bool is_cyclic_debruijn(const Word& cycle, int n);
bool is_linear_debruijn(const Word& w, int n);

/// True iff for every pair a != b the word contains abab or baba.
bool covers_all_alternating_pairs(const Word& w);

}  // namespace splitov
