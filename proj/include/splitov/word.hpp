// Word representation and periodicity primitives (borders, periods, primitivity).
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splitov {

using Symbol = std::uint16_t;

/// A finite word over the alphabet {0, ..., k-1}.
///
/// Words are immutable values; every symbol is checked against the alphabet
/// size on construction.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet_size);
  Word(std::vector<Symbol> symbols, int alphabet_size);

  /// Parses the textual form: a digit string when k <= 10, otherwise
  /// comma-separated decimal symbols. Rejects symbols >= k.
  static Word parse(std::string_view text, int alphabet_size);

  /// Maps arbitrary text to a word by order of first occurrence
  /// ("alfalfa" -> 0120120). The alphabet is the number of distinct characters
  /// unless a larger one is requested.
  static Word from_text(std::string_view text, int min_alphabet = 1);

  std::string str() const;

  int alphabet_size() const { return k_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  Word factor(std::size_t start, std::size_t length) const;
  Word operator+(const Word& other) const;
  Word repeated(std::size_t times) const;

  friend bool operator==(const Word& a, const Word& b) { return a.symbols_ == b.symbols_; }
  // Lexicographic on symbols; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  int k_ = 1;
};

/// Formats symbols in the textual word format for alphabet size k.
std::string format_symbols(std::span<const Symbol> symbols, int alphabet_size);

struct BorderTable {
  // Entry i: length of the longest proper border of the prefix of length i+1.
  std::vector<int> longest_border;
};

BorderTable border_array(const Word& w);

/// Smallest period per(w).
int period(const Word& w);
bool is_primitive(const Word& w);
bool is_unbordered(const Word& w);

/// All start positions of x in w, ascending.
std::vector<std::size_t> occurrences(const Word& w, const Word& x);

/// Lyndon-Schutzenberger decomposition of two overlapping occurrences.
/// For w[i..i+n) == w[j..j+n) with 0 < j-i < n:
///   w[i..j) = uv,  w[j..i+n) = (uv)^e u,  w[i+n..j+n) = vu,  u nonempty.
struct OverlapDecomposition {
  Word u;
  Word v;
  int e = 0;
};

OverlapDecomposition overlap_from_overlapping_pair(const Word& w, std::size_t i, std::size_t j,
                                                   std::size_t n);

}  // namespace splitov
