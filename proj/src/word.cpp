#include "splitov/word.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace splitov {

namespace {

void require_nonempty(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty input");
}

}  // namespace

Word::Word(int alphabet_size) : k_(alphabet_size) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
}

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), k_(alphabet_size) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
  for (Symbol s : symbols_) {
    if (s >= alphabet_size)
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(alphabet_size));
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<Symbol> symbols;
  if (alphabet_size <= 10) {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad symbol '") + c + "'");
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      unsigned value = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || end != item.data() + item.size() || value > 0xFFFF)
        throw std::invalid_argument("bad symbol '" + std::string(item) + "'");
      symbols.push_back(static_cast<Symbol>(value));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Word(std::move(symbols), alphabet_size);
}

Word Word::from_text(std::string_view text, int min_alphabet) {
  std::map<char, Symbol> code;
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    auto [it, inserted] = code.try_emplace(c, static_cast<Symbol>(code.size()));
    symbols.push_back(it->second);
  }
  int k = std::max<int>(min_alphabet, std::max<std::size_t>(code.size(), 1));
  return Word(std::move(symbols), k);
}

std::string format_symbols(std::span<const Symbol> symbols, int alphabet_size) {
  std::string out;
  if (alphabet_size <= 10) {
    out.reserve(symbols.size());
    for (Symbol s : symbols) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols[i]);
  }
  return out;
}

std::string Word::str() const { return format_symbols(symbols_, k_); }

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start) throw std::out_of_range("factor outside word");
  Word out(k_);
  out.symbols_.assign(symbols_.begin() + start, symbols_.begin() + start + length);
  return out;
}

Word Word::operator+(const Word& other) const {
  Word out(std::max(k_, other.k_));
  out.symbols_ = symbols_;
  out.symbols_.insert(out.symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return out;
}

Word Word::repeated(std::size_t times) const {
  Word out(k_);
  out.symbols_.reserve(size() * times);
  for (std::size_t r = 0; r < times; ++r)
    out.symbols_.insert(out.symbols_.end(), symbols_.begin(), symbols_.end());
  return out;
}

BorderTable border_array(const Word& w) {
  require_nonempty(w);
  const std::size_t n = w.size();
  BorderTable table{std::vector<int>(n, 0)};
  auto& b = table.longest_border;
  for (std::size_t i = 1; i < n; ++i) {
    int len = b[i - 1];
    while (len > 0 && w[i] != w[static_cast<std::size_t>(len)]) len = b[static_cast<std::size_t>(len) - 1];
    if (w[i] == w[static_cast<std::size_t>(len)]) ++len;
    b[i] = len;
  }
  return table;
}

int period(const Word& w) {
  auto table = border_array(w);
  return static_cast<int>(w.size()) - table.longest_border.back();
}

bool is_primitive(const Word& w) {
  const int n = static_cast<int>(w.size());
  const int p = period(w);
  return p == n || n % p != 0;
}

bool is_unbordered(const Word& w) { return border_array(w).longest_border.back() == 0; }

std::vector<std::size_t> occurrences(const Word& w, const Word& x) {
  if (x.empty()) throw std::invalid_argument("empty pattern");
  std::vector<std::size_t> out;
  if (x.size() > w.size()) return out;
  auto hay = w.symbols();
  auto needle = x.symbols();
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(i);
  }
  return out;
}

OverlapDecomposition overlap_from_overlapping_pair(const Word& w, std::size_t i, std::size_t j,
                                                   std::size_t n) {
  if (!(i < j && j - i < n) || j + n > w.size())
    throw std::invalid_argument("occurrences not overlapping");
  for (std::size_t s = 0; s < n; ++s) {
    if (w[i + s] != w[j + s]) throw std::invalid_argument("occurrences not overlapping");
  }
  // |uv| = j - i is forced; t = w[j..i+n) has length e|uv| + |u| with 1 <= |u| <= |uv|.
  const std::size_t block = j - i;
  const std::size_t overlap = i + n - j;
  const std::size_t e = (overlap - 1) / block;
  const std::size_t u_len = overlap - e * block;
  return OverlapDecomposition{w.factor(i, u_len), w.factor(i + u_len, block - u_len),
                              static_cast<int>(e)};
}

}  // namespace splitov
