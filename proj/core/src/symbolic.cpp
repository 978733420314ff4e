#include "lozi/symbolic.hpp"

#include "lozi/error.hpp"

#include <cmath>

namespace lozi {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

std::partial_ordering symbol_order(Symbol x, Symbol y, bool flipped) noexcept {
  const auto base = value(x) <=> value(y);
  return flipped ? 0 <=> base : base;
}

}  // namespace

bool Word::has(int i) const noexcept {
  if (i >= 0) return static_cast<std::size_t>(i) < head.size();
  return static_cast<std::size_t>(-i) <= tail.size();
}

Symbol Word::at(int i) const {
  if (!has(i)) {
    throw Error(ErrorKind::InsufficientWord,
                "symbol index " + std::to_string(i) + " outside word " + to_string());
  }
  if (i >= 0) return head[static_cast<std::size_t>(i)];
  return tail[tail.size() - static_cast<std::size_t>(-i)];
}

Symbols parse_symbols(std::string_view text) {
  Symbols out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      out.push_back(Symbol::Plus);
    } else if (c == '-') {
      out.push_back(Symbol::Minus);
    } else {
      throw Error(ErrorKind::InvalidArgument, "bad symbol character in '" + std::string(text) + "'");
    }
  }
  return out;
}

Word Word::parse(std::string_view text) {
  std::size_t dot = text.find(kMiddleDot);
  std::size_t dot_len = kMiddleDot.size();
  if (dot == std::string_view::npos) {
    dot = text.find('.');
    dot_len = 1;
  }
  if (dot == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "word '" + std::string(text) + "' has no dot");
  }
  return Word{parse_symbols(text.substr(0, dot)), parse_symbols(text.substr(dot + dot_len))};
}

std::string to_string(SymbolSpan symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(to_char(s));
  return out;
}

std::string Word::to_string() const {
  return lozi::to_string(tail) + std::string(kMiddleDot) + lozi::to_string(head);
}

std::partial_ordering compare_heads(SymbolSpan u, SymbolSpan v) noexcept {
  const std::size_t common = std::min(u.size(), v.size());
  bool odd = false;
  for (std::size_t i = 0; i < common; ++i) {
    if (u[i] != v[i]) return symbol_order(u[i], v[i], odd);
    if (u[i] == Symbol::Plus) odd = !odd;
  }
  return u.size() == v.size() ? std::partial_ordering::equivalent
                              : std::partial_ordering::unordered;
}

std::partial_ordering compare_tails(SymbolSpan u, SymbolSpan v, BSign sign) noexcept {
  const Symbol counted = sign == BSign::Positive ? Symbol::Minus : Symbol::Plus;
  const std::size_t common = std::min(u.size(), v.size());
  bool odd = false;
  for (std::size_t k = 1; k <= common; ++k) {
    const Symbol x = u[u.size() - k];
    const Symbol y = v[v.size() - k];
    if (x != y) return symbol_order(x, y, odd);
    if (x == counted) odd = !odd;
  }
  return u.size() == v.size() ? std::partial_ordering::equivalent
                              : std::partial_ordering::unordered;
}

std::uint64_t head_index(SymbolSpan head) noexcept {
  std::uint64_t index = 0;
  bool odd = false;
  for (Symbol s : head) {
    const bool plus = s == Symbol::Plus;
    index = (index << 1) | static_cast<std::uint64_t>(plus != odd);
    if (plus) odd = !odd;
  }
  return index;
}

std::uint64_t tail_index(SymbolSpan tail, BSign sign) noexcept {
  const Symbol counted = sign == BSign::Positive ? Symbol::Minus : Symbol::Plus;
  std::uint64_t index = 0;
  bool odd = false;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    const bool plus = *it == Symbol::Plus;
    index = (index << 1) | static_cast<std::uint64_t>(plus != odd);
    if (*it == counted) odd = !odd;
  }
  return index;
}

double head_coordinate(SymbolSpan head) noexcept {
  return std::ldexp(static_cast<double>(head_index(head)), -static_cast<int>(head.size()));
}

double tail_coordinate(SymbolSpan tail, BSign sign) noexcept {
  return std::ldexp(static_cast<double>(tail_index(tail, sign)), -static_cast<int>(tail.size()));
}

Symbols head_from_index(std::uint64_t index, std::size_t n) {
  Symbols out(n);
  bool odd = false;
  for (std::size_t k = 0; k < n; ++k) {
    const bool bit = (index >> (n - 1 - k)) & 1U;
    const bool plus = bit != odd;
    out[k] = plus ? Symbol::Plus : Symbol::Minus;
    if (plus) odd = !odd;
  }
  return out;
}

Symbols tail_from_index(std::uint64_t index, std::size_t m, BSign sign) {
  const Symbol counted = sign == BSign::Positive ? Symbol::Minus : Symbol::Plus;
  Symbols out(m);
  bool odd = false;
  for (std::size_t k = 0; k < m; ++k) {
    const bool bit = (index >> (m - 1 - k)) & 1U;
    const Symbol s = (bit != odd) ? Symbol::Plus : Symbol::Minus;
    out[m - 1 - k] = s;
    if (s == counted) odd = !odd;
  }
  return out;
}

Word shift(const Word& w) {
  if (w.head.empty()) throw Error(ErrorKind::EmptyHead, "cannot shift " + w.to_string());
  Word out;
  out.tail.reserve(w.tail.size() + 1);
  out.tail = w.tail;
  out.tail.push_back(w.head.front());
  out.head.assign(w.head.begin() + 1, w.head.end());
  return out;
}

Symbols symbols_from_bits(std::uint64_t bits, std::size_t len) {
  Symbols out(len);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = ((bits >> (len - 1 - k)) & 1U) ? Symbol::Plus : Symbol::Minus;
  }
  return out;
}

std::vector<Word> enumerate_words(std::size_t m, std::size_t n) {
  if (m + n > 30) {
    throw Error(ErrorKind::BudgetExceeded, "enumerate_words limited to m + n <= 30");
  }
  const std::uint64_t count = std::uint64_t{1} << (m + n);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Symbols all = symbols_from_bits(bits, m + n);
    out.push_back(Word{Symbols(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m)),
                       Symbols(all.begin() + static_cast<std::ptrdiff_t>(m), all.end())});
  }
  return out;
}

}  // namespace lozi
