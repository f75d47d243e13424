// Brute-force reference implementations used to check the library. They work
// on digit strings and share no code with the code under test.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> all_words(int k, int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (int a = 0; a < k; ++a) next.push_back(w + static_cast<char>('0' + a));
    }
    out = std::move(next);
  }
  return out;
}

inline bool has_period(const std::string& w, std::size_t p) {
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

inline int period(const std::string& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (has_period(w, p)) return static_cast<int>(p);
  }
  return 0;
}

// Proper borders, longest first.
inline std::vector<int> borders(const std::string& w) {
  std::vector<int> out;
  for (std::size_t b = w.size(); b-- > 1;) {
    if (w.compare(0, b, w, w.size() - b, b) == 0) out.push_back(static_cast<int>(b));
  }
  return out;
}

inline bool primitive(const std::string& w) {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d) continue;
    std::string r;
    while (r.size() < w.size()) r += w.substr(0, d);
    if (r == w) return false;
  }
  return !w.empty();
}

inline bool unbordered(const std::string& w) { return borders(w).empty(); }

// r = u u u' with |u| >= max(t,1) and u' the length-t prefix of u, built
// explicitly.
inline bool t_overlap(const std::string& r, int t) {
  for (std::size_t ul = std::max(t, 1); 2 * ul + t <= r.size(); ++ul) {
    const std::string u = r.substr(0, ul);
    if (u + u + u.substr(0, t) == r) return true;
  }
  return false;
}

struct Tuple {
  std::size_t i, j, js, l;  // x = w[i..j], z = w[js..l]
  auto operator<=>(const Tuple&) const = default;
};

enum class Gap { EmptyPieces, EmptyGap, NonemptyGap };

// Lexicographically least (i, j, j', l) with x, z nonempty such that xz (or zx)
// is a t-overlap; the gap between x and z must be nonempty under NonemptyGap.
inline std::optional<Tuple> split(const std::string& w, int t, Gap gap, bool reversed) {
  std::optional<Tuple> best;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t js = j + 1; js < n; ++js) {
        if (gap == Gap::NonemptyGap && js == j + 1) continue;
        for (std::size_t l = js; l < n; ++l) {
          const std::string x = w.substr(i, j - i + 1), z = w.substr(js, l - js + 1);
          if (t_overlap(reversed ? z + x : x + z, t)) {
            Tuple c{i, j, js, l};
            if (!best || c < *best) best = c;
          }
        }
      }
    }
  }
  return best;
}

// Lexicographically least (start, end) of a t-overlap factor.
inline std::optional<std::pair<std::size_t, std::size_t>> overlap_factor(const std::string& w,
                                                                         int t) {
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t e = s; e < w.size(); ++e) {
      if (t_overlap(w.substr(s, e - s + 1), t)) return std::make_pair(s, e);
    }
  }
  return std::nullopt;
}

inline bool avoids_split(const std::string& w, int t, Gap gap) {
  return !split(w, t, gap, false) && !(gap == Gap::EmptyPieces && overlap_factor(w, t));
}

inline bool avoids_reversed(const std::string& w, int t, Gap gap) {
  return !split(w, t, gap, true) && !(gap == Gap::EmptyPieces && overlap_factor(w, t));
}

inline std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair(const std::string& w,
                                                                        int n) {
  for (std::size_t a = 0; a + n <= w.size(); ++a) {
    for (std::size_t b = a + n; b + n <= w.size(); ++b) {
      if (w.substr(a, n) == w.substr(b, n)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

inline std::vector<std::size_t> occurrences(const std::string& w, const std::string& x) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a + x.size() <= w.size(); ++a) {
    if (w.compare(a, x.size(), x) == 0) out.push_back(a);
  }
  return out;
}

inline std::uint64_t count_if_words(int k, int n, bool (*pred)(const std::string&)) {
  std::uint64_t c = 0;
  for (const auto& w : all_words(k, n)) c += pred(w) ? 1 : 0;
  return c;
}

inline std::map<int, std::uint64_t> census(int k, int n) {
  std::map<int, std::uint64_t> out;
  for (const auto& w : all_words(k, n)) ++out[period(w)];
  return out;
}

struct Longest {
  int length = 0;
  std::string least;  // lexicographically least word of that length
};

// Generate and test: every avoiding word of length L + 1 extends an avoiding
// word of length L, so grow the full set level by level.
template <class Avoids>
Longest longest(int k, Avoids avoids, int cap = 64) {
  std::vector<std::string> level{""};
  Longest out;
  for (int len = 1; len <= cap; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (int a = 0; a < k; ++a) {
        std::string v = w + static_cast<char>('0' + a);
        if (avoids(v)) next.push_back(std::move(v));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
    out.length = len;
    out.least = *std::min_element(level.begin(), level.end());
  }
  return out;
}

}  // namespace oracle
