#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "splitov/combinatorics.hpp"
#include "splitov/debruijn.hpp"
#include "splitov/detect.hpp"

using namespace splitov;

namespace {

// Cyclic window census by direct counting.
bool each_window_once(const std::string& cycle, int k, int n) {
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::string win;
    for (int r = 0; r < n; ++r) win += cycle[(i + r) % cycle.size()];
    ++seen[win];
  }
  if (seen.size() != oracle::all_words(k, n).size()) return false;
  for (const auto& [w, c] : seen) {
    if (c != 1) return false;
  }
  return true;
}

bool has_alternations(const std::string& w, int k) {
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const char ca = static_cast<char>('0' + a), cb = static_cast<char>('0' + b);
      const std::string abab{ca, cb, ca, cb}, baba{cb, ca, cb, ca};
      if (w.find(abab) == std::string::npos && w.find(baba) == std::string::npos) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("feedback function and shift map") {
  CHECK(feedback_f(2, 0, 1, 1) == 0);
  CHECK(feedback_f(3, 2, 2, 1) == 0);
  for (int k = 2; k <= 6; ++k)
    for (Symbol a = 0; a < k; ++a)
      for (Symbol b = 0; b < k; ++b) CHECK(feedback_f(k, a, b, a) == b);
  CHECK(shift_map_F(2, {0, 1, 1}) == Triple{1, 1, 0});
  CHECK(shift_map_F(3, {0, 0, 0}) == Triple{0, 0, 0});
  for (int k = 2; k <= 6; ++k) {
    std::set<Triple> image;
    for (Symbol a = 0; a < k; ++a)
      for (Symbol b = 0; b < k; ++b)
        for (Symbol c = 0; c < k; ++c) {
          image.insert(shift_map_F(k, {a, b, c}));
          if (a == b && b == c) CHECK(shift_map_F(k, {a, a, a}) == Triple{a, a, a});
        }
    CHECK(image.size() == static_cast<std::size_t>(k * k * k));
  }
}

TEST_CASE("cycle partition") {
  for (int k = 2; k <= 6; ++k) {
    const auto part = cycle_partition(k);
    std::set<Triple> covered;
    for (std::size_t c = 0; c < part.cycles.size(); ++c) {
      const auto& cyc = part.cycles[c];
      CHECK(cyc.front() == part.representatives[c]);
      CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        CHECK(shift_map_F(k, cyc[i]) == cyc[(i + 1) % cyc.size()]);
        CHECK(covered.insert(cyc[i]).second);
      }
    }
    CHECK(covered.size() == static_cast<std::size_t>(k * k * k));
    CHECK(part.is_representative({0, 0, 0}));
  }
  const auto p2 = cycle_partition(2);
  bool singleton = false;
  for (const auto& cyc : p2.cycles) singleton |= cyc.size() == 1 && cyc.front() == Triple{0, 0, 0};
  CHECK(singleton);
}

TEST_CASE("tau sequences and the successor rule") {
  for (int k = 2; k <= 6; ++k) {
    for (Symbol a = 0; a < k; ++a) {
      for (Symbol b = a + 1; b < k; ++b) {
        CHECK(tau_sequence(k, b, a).empty());
        CHECK(successor_g(k, a, b, a) == b);
      }
    }
    const SuccessorRule rule(k);
    for (Symbol a = 0; a < k; ++a)
      for (Symbol b = 0; b < k; ++b)
        for (Symbol c = 0; c < k; ++c) {
          if (tau_sequence(k, b, c).empty()) CHECK(rule.next(a, b, c) == feedback_f(k, a, b, c));
        }
  }
  CHECK_FALSE(tau_sequence(2, 0, 0).empty());
}

TEST_CASE("successor rule from 000 visits every triple once") {
  for (int k = 2; k <= 6; ++k) {
    std::set<Triple> seen;
    Triple cur{0, 0, 0};
    for (int step = 0; step < k * k * k; ++step) {
      CHECK(seen.insert(cur).second);
      cur = {cur[1], cur[2], successor_g(k, cur[0], cur[1], cur[2])};
    }
    CHECK(cur == Triple{0, 0, 0});
  }
}

TEST_CASE("property: order-3 special de Bruijn words, k = 2..6") {
  for (int k = 2; k <= 6; ++k) {
    const std::string w = debruijn_order3_special(k).str();
    INFO("k=" << k << " " << w);
    CHECK(w.size() == static_cast<std::size_t>(k * k * k + 2));
    const std::string cycle = w.substr(0, k * k * k);
    CHECK(w.substr(k * k * k) == cycle.substr(0, 2));
    CHECK(each_window_once(cycle, k, 3));
    CHECK(has_alternations(w, k));
    CHECK(is_cyclic_debruijn(Word::parse(cycle, k), 3));
    CHECK(covers_all_alternating_pairs(Word::parse(w, k)));
  }
  const std::string w2 = debruijn_order3_special(2).str();
  CHECK(w2.size() == 10);
  CHECK(debruijn_order3_special(3).size() == 29);
}

TEST_CASE("property: greedy de Bruijn words, k^n <= 10^5") {
  CHECK(debruijn_order_n(2, 1).size() == 2);
  CHECK(debruijn_order_n(2, 3).size() == 10);
  CHECK(debruijn_order_n(3, 2).size() == 10);
  for (int k = 2; k <= 6; ++k) {
    for (int n = 1; power(k, n) <= 100000; ++n) {
      const Word w = debruijn_order_n(k, n);
      const auto total = static_cast<std::size_t>(power(k, n));
      REQUIRE(w.size() == total + n - 1);
      CHECK(is_linear_debruijn(w, n));
      if (total <= 4096) CHECK(each_window_once(w.str().substr(0, total), k, n));
    }
  }
}

TEST_CASE("checker rejects non de Bruijn words") {
  CHECK_FALSE(is_linear_debruijn(Word::parse("0011", 2), 2));
  CHECK(is_linear_debruijn(Word::parse("00110", 2), 2));
  CHECK_FALSE(is_cyclic_debruijn(Word::parse("0001", 2), 2));
  CHECK(is_cyclic_debruijn(Word::parse("0011", 2), 2));
  CHECK_FALSE(covers_all_alternating_pairs(Word::parse("0011", 2)));
}

TEST_CASE("property: constructions meet the sum bound, k = 2..5") {
  for (int k = 2; k <= 5; ++k) {
    const Word c2 = construct_C2_lower(k);
    const Word c3 = construct_C3_lower(k);
    CHECK(c2.size() == static_cast<std::size_t>(k * k + k + 1));
    CHECK(theorem_sum_bound(k, 2) == c2.size());
    CHECK(c3.size() == static_cast<std::size_t>(k * k * k + k * k + k + 2));
    CHECK(theorem_sum_bound(k, 3) == c3.size());
    CHECK_FALSE(oracle::disjoint_pair(c2.str(), 2));
    CHECK_FALSE(oracle::disjoint_pair(c3.str(), 3));
  }
  CHECK(construct_C2_lower(2).size() == 7);
  CHECK(construct_C2_lower(3).size() == 13);
  CHECK(construct_C2_lower(5).size() == 31);
  CHECK(construct_C3_lower(2).size() == 16);
  CHECK(construct_C3_lower(3).size() == 41);
  CHECK(construct_C3_lower(4).size() == 86);
}
