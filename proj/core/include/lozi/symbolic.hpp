#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lozi {

/// One letter of the two-symbol alphabet, ordered -1 < +1.
enum class Symbol : std::int8_t { Minus = -1, Plus = 1 };

constexpr int value(Symbol s) noexcept { return static_cast<int>(s); }
constexpr Symbol flip(Symbol s) noexcept { return s == Symbol::Plus ? Symbol::Minus : Symbol::Plus; }
constexpr Symbol symbol_of_sign(double x) noexcept { return x < 0.0 ? Symbol::Minus : Symbol::Plus; }
constexpr char to_char(Symbol s) noexcept { return s == Symbol::Plus ? '+' : '-'; }

/// Sign of b selects which symbol's parity flips the tail order.
enum class BSign { Positive, Negative };

constexpr BSign sign_of(double b) noexcept { return b < 0.0 ? BSign::Negative : BSign::Positive; }

using Symbols = std::vector<Symbol>;
using SymbolSpan = std::span<const Symbol>;

/// A finite window of a bi-infinite sequence around the dot.
///
/// `tail` holds eps_{-m} ... eps_{-1} (index increasing toward the dot) and
/// `head` holds eps_0 ... eps_{n-1}. Text form is the tail, a dot and the head,
/// e.g. "+-·+--"; both the middle dot and an ASCII '.' are accepted on input.
struct Word {
  Symbols tail;
  Symbols head;

  std::size_t tail_len() const noexcept { return tail.size(); }
  std::size_t head_len() const noexcept { return head.size(); }
  std::size_t size() const noexcept { return tail.size() + head.size(); }

  /// True when eps_i is stored (i < 0 addresses the tail).
  bool has(int i) const noexcept;
  /// eps_i; throws InsufficientWord when i is outside the window.
  Symbol at(int i) const;

  static Word parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Head order <_s: at the first difference, the base order is flipped when
/// the prefix holds an odd number of +1's. Returns unordered when one word is
/// a proper prefix of the other.
std::partial_ordering compare_heads(SymbolSpan u, SymbolSpan v) noexcept;

/// Tail order <_u. Tails are stored eps_{-m}..eps_{-1}, compared from the dot
/// outward; the parity counts -1's (b > 0) or +1's (b < 0) strictly between the
/// first difference and the dot.
std::partial_ordering compare_tails(SymbolSpan u, SymbolSpan v, BSign sign) noexcept;

/// Rank of a head among all heads of the same length under <_s, in [0, 2^n).
std::uint64_t head_index(SymbolSpan head) noexcept;
/// Rank of a tail among all tails of the same length under <_u, in [0, 2^m).
std::uint64_t tail_index(SymbolSpan tail, BSign sign) noexcept;

/// Dyadic embedding of C^s into [0, 1): head_index / 2^n. The cylinder of the
/// head occupies [t, t + 2^-n).
double head_coordinate(SymbolSpan head) noexcept;
double tail_coordinate(SymbolSpan tail, BSign sign) noexcept;

/// Inverses of head_index / tail_index.
Symbols head_from_index(std::uint64_t index, std::size_t n);
Symbols tail_from_index(std::uint64_t index, std::size_t m, BSign sign);

/// Moves the dot one place right: eps_0 becomes the last tail symbol.
Word shift(const Word& w);

/// Symbols of the integer `bits`, most significant first, '-' for 0.
Symbols symbols_from_bits(std::uint64_t bits, std::size_t len);

/// All 2^(m+n) words with tail length m and head length n, ordered by the
/// binary value of tail-then-head with '-' as 0.
std::vector<Word> enumerate_words(std::size_t m, std::size_t n);

std::string to_string(SymbolSpan symbols);
Symbols parse_symbols(std::string_view text);

}  // namespace lozi
