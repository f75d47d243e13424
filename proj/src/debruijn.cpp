#include "splitov/debruijn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "splitov/combinatorics.hpp"
#include "splitov/detect.hpp"

namespace splitov {

namespace {

std::size_t triple_index(int k, const Triple& w) {
  const auto kk = static_cast<std::size_t>(k);
  return (w[0] * kk + w[1]) * kk + w[2];
}

void check_symbols(int k, std::initializer_list<Symbol> symbols) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (Symbol s : symbols) {
    if (s >= k) throw std::invalid_argument("symbol outside alphabet");
  }
}

std::size_t checked_window_count(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be at least 1");
  BigInt total = power(k, n);
  if (total > kEnumerationBudget) throw std::invalid_argument("k^n exceeds enumeration budget");
  return total.convert_to<std::size_t>();
}

// Counts each length-n window; cyclic reads wrap around the end.
std::vector<int> window_counts(const Word& w, int n, bool cyclic) {
  const int k = w.alphabet_size();
  std::vector<int> counts(checked_window_count(k, n), 0);
  const std::size_t len = w.size();
  const auto nn = static_cast<std::size_t>(n);
  if (len == 0 || (!cyclic && len < nn)) return counts;
  const std::size_t starts = cyclic ? len : len - nn + 1;
  for (std::size_t s = 0; s < starts; ++s) {
    std::size_t code = 0;
    for (std::size_t r = 0; r < nn; ++r) code = code * static_cast<std::size_t>(k) + w[(s + r) % len];
    ++counts[code];
  }
  return counts;
}

}  // namespace

Symbol feedback_f(int k, Symbol a1, Symbol a2, Symbol a3) {
  check_symbols(k, {a1, a2, a3});
  return static_cast<Symbol>(((a1 + a2 - a3) % k + k) % k);
}

Triple shift_map_F(int k, const Triple& w) { return {w[1], w[2], feedback_f(k, w[0], w[1], w[2])}; }

bool CyclePartition::is_representative(const Triple& w) const {
  return std::binary_search(representatives.begin(), representatives.end(), w);
}

CyclePartition cycle_partition(int k) {
  if (k < 2) throw std::invalid_argument("cycle partition requires k >= 2");
  checked_window_count(k, 3);
  CyclePartition partition;
  partition.k = k;
  std::vector<bool> seen(static_cast<std::size_t>(k) * k * k, false);
  // Enumerating triples in lexicographic order means the first unseen triple
  // of each cycle is its least element.
  for (Symbol a = 0; a < k; ++a) {
    for (Symbol b = 0; b < k; ++b) {
      for (Symbol c = 0; c < k; ++c) {
        const Triple start{a, b, c};
        if (seen[triple_index(k, start)]) continue;
        std::vector<Triple> cycle;
        Triple cur = start;
        do {
          seen[triple_index(k, cur)] = true;
          cycle.push_back(cur);
          cur = shift_map_F(k, cur);
        } while (cur != start);
        partition.representatives.push_back(start);
        partition.cycles.push_back(std::move(cycle));
      }
    }
  }
  return partition;
}

std::vector<Symbol> tau_sequence(const CyclePartition& partition, Symbol a2, Symbol a3) {
  const int k = partition.k;
  check_symbols(k, {a2, a3});
  std::vector<Symbol> tau;
  for (Symbol c = 0; c < k; ++c) {
    if (partition.is_representative({a2, a3, c})) tau.push_back(c);
  }
  const bool has_zero = !tau.empty() && tau.front() == 0;
  if (has_zero) {
    // The exclusion refers to the representative a2 a3 0 itself.
    if (!(a2 == 0 && a3 == 0)) tau.insert(tau.begin(), feedback_f(k, 0, a2, a3));
  } else if (!tau.empty()) {
    tau.insert(tau.begin(), 0);
  }
  return tau;
}

std::vector<Symbol> tau_sequence(int k, Symbol a2, Symbol a3) {
  return tau_sequence(cycle_partition(k), a2, a3);
}

SuccessorRule::SuccessorRule(int k) : k_(k) {
  const CyclePartition partition = cycle_partition(k);
  tau_.resize(static_cast<std::size_t>(k) * k);
  for (Symbol a2 = 0; a2 < k; ++a2) {
    for (Symbol a3 = 0; a3 < k; ++a3)
      tau_[static_cast<std::size_t>(a2) * k + a3] = tau_sequence(partition, a2, a3);
  }
}

Symbol SuccessorRule::next(Symbol a1, Symbol a2, Symbol a3) const {
  const Symbol f = feedback_f(k_, a1, a2, a3);
  const auto& tau = tau_[static_cast<std::size_t>(a2) * k_ + a3];
  auto it = std::find(tau.begin(), tau.end(), f);
  if (it == tau.end()) return f;
  ++it;
  return it == tau.end() ? tau.front() : *it;
}

Symbol successor_g(int k, Symbol a1, Symbol a2, Symbol a3) {
  return SuccessorRule(k).next(a1, a2, a3);
}

Word debruijn_order3_special(int k) {
  const SuccessorRule rule(k);
  const std::size_t total = static_cast<std::size_t>(k) * k * k;
  std::vector<Symbol> symbols;
  symbols.reserve(total + 2);
  Triple cur{0, 0, 0};
  for (std::size_t step = 0; step < total; ++step) {
    symbols.push_back(cur[0]);
    cur = {cur[1], cur[2], rule.next(cur[0], cur[1], cur[2])};
  }
  const Word cycle(symbols, k);
  if (cur != Triple{0, 0, 0} || !is_cyclic_debruijn(cycle, 3))
    throw std::runtime_error("successor rule did not produce a de Bruijn word");
  symbols.push_back(symbols[0]);
  symbols.push_back(symbols[1]);
  Word linear(std::move(symbols), k);
  if (!covers_all_alternating_pairs(linear))
    throw std::runtime_error("successor rule word misses an alternating pair");
  return linear;
}

Word debruijn_order_n(int k, int n) {
  const std::size_t total = checked_window_count(k, n);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Symbol> symbols(nn - 1, static_cast<Symbol>(k - 1));
  symbols.reserve(total + nn - 1);
  std::vector<bool> seen(total, false);
  // Code of the last n-1 symbols, kept as a sliding window.
  std::size_t high = total / static_cast<std::size_t>(k);
  std::size_t context = 0;
  for (Symbol s : symbols) context = context * static_cast<std::size_t>(k) + s;
  while (true) {
    bool extended = false;
    for (Symbol c = 0; c < k; ++c) {
      const std::size_t code = context * static_cast<std::size_t>(k) + c;
      if (seen[code]) continue;
      seen[code] = true;
      symbols.push_back(c);
      context = high > 1 ? code % high : 0;
      extended = true;
      break;
    }
    if (!extended) break;
  }
  Word w(std::move(symbols), k);
  if (!is_linear_debruijn(w, n)) throw std::runtime_error("greedy construction failed");
  return w;
}

Word construct_C2_lower(int k) {
  const Word db = debruijn_order_n(k, 2);
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(k) * k + k + 1);
  for (std::size_t i = 0; i < db.size(); ++i) {
    out.push_back(db[i]);
    if (i + 1 < db.size() && db[i] == db[i + 1]) out.push_back(db[i]);
  }
  Word w(std::move(out), k);
  if (find_disjoint_pair(w, 2)) throw std::runtime_error("order-2 construction has a disjoint pair");
  return w;
}

Word construct_C3_lower(int k) {
  const Word db = debruijn_order3_special(k);
  // Insertions keyed by the original position they precede.
  std::map<std::size_t, std::vector<std::array<Symbol, 2>>> inserts;
  for (Symbol a = 0; a < k; ++a) {
    for (Symbol b = static_cast<Symbol>(a + 1); b < k; ++b) {
      for (std::size_t i = 0; i + 4 <= db.size(); ++i) {
        const bool abab = db[i] == a && db[i + 1] == b && db[i + 2] == a && db[i + 3] == b;
        const bool baba = db[i] == b && db[i + 1] == a && db[i + 2] == b && db[i + 3] == a;
        if (abab || baba) {
          inserts[i + 4].push_back({db[i], db[i + 1]});
          break;
        }
      }
    }
  }
  for (Symbol a = 0; a < k; ++a) {
    for (std::size_t i = 0; i + 3 <= db.size(); ++i) {
      if (db[i] == a && db[i + 1] == a && db[i + 2] == a) {
        inserts[i + 3].push_back({a, a});
        break;
      }
    }
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i <= db.size(); ++i) {
    if (auto it = inserts.find(i); it != inserts.end()) {
      for (const auto& pair : it->second) out.insert(out.end(), pair.begin(), pair.end());
    }
    if (i < db.size()) out.push_back(db[i]);
  }
  Word w(std::move(out), k);
  const std::size_t expected = static_cast<std::size_t>(k) * k * k + k * k + k + 2;
  if (w.size() != expected || find_disjoint_pair(w, 3))
    throw std::runtime_error("order-3 construction failed validation");
  return w;
}

bool is_cyclic_debruijn(const Word& cycle, int n) {
  auto counts = window_counts(cycle, n, true);
  return cycle.size() == counts.size() &&
         std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

bool is_linear_debruijn(const Word& w, int n) {
  auto counts = window_counts(w, n, false);
  return w.size() == counts.size() + static_cast<std::size_t>(n) - 1 &&
         std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

bool covers_all_alternating_pairs(const Word& w) {
  const int k = w.alphabet_size();
  std::vector<bool> covered(static_cast<std::size_t>(k) * k, false);
  for (std::size_t i = 0; i + 4 <= w.size(); ++i) {
    if (w[i] != w[i + 1] && w[i] == w[i + 2] && w[i + 1] == w[i + 3]) {
      const Symbol a = std::min(w[i], w[i + 1]);
      const Symbol b = std::max(w[i], w[i + 1]);
      covered[static_cast<std::size_t>(a) * k + b] = true;
    }
  }
  for (Symbol a = 0; a < k; ++a) {
    for (Symbol b = static_cast<Symbol>(a + 1); b < k; ++b) {
      if (!covered[static_cast<std::size_t>(a) * k + b]) return false;
    }
  }
  return true;
}

}  // namespace splitov
