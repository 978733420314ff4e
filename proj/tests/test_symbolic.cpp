#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lozi/error.hpp"
#include "lozi/symbolic.hpp"

using namespace lozi;

namespace {

// A point of [-1, 1] whose itinerary under T_2(x) = 1 - 2|x| starts with
// `head`, found by pulling 0 back through the inverse branches.
double tent2_point(SymbolSpan head) {
  double y = 0.0;
  for (auto it = head.rbegin(); it != head.rend(); ++it) {
    y = *it == Symbol::Plus ? (1.0 - y) / 2.0 : (y - 1.0) / 2.0;
  }
  return y;
}

// <_u straight from its definition, comparing outward from the dot.
bool tail_less(SymbolSpan u, SymbolSpan v, BSign sign) {
  const Symbol counted = sign == BSign::Positive ? Symbol::Minus : Symbol::Plus;
  int parity = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Symbol su = u[u.size() - 1 - k];
    const Symbol sv = v[v.size() - 1 - k];
    if (su != sv) return (value(su) < value(sv)) != (parity % 2 == 1);
    if (su == counted) ++parity;
  }
  return false;
}

}  // namespace

TEST_CASE("words parse and print with the middle dot") {
  const Word w = Word::parse("+-·+--");
  CHECK(w.tail == Symbols{Symbol::Plus, Symbol::Minus});
  CHECK(w.head == Symbols{Symbol::Plus, Symbol::Minus, Symbol::Minus});
  CHECK(w.to_string() == "+-·+--");
  CHECK(Word::parse("+-.+--") == w);
  CHECK(w.at(-1) == Symbol::Minus);
  CHECK(w.at(0) == Symbol::Plus);
  CHECK(w.has(2));
  CHECK_FALSE(w.has(3));
}

TEST_CASE("out-of-window access and empty shifts are errors") {
  const Word w = Word::parse("+·-");
  try {
    (void)w.at(5);
    FAIL("expected InsufficientWord");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientWord);
  }
  try {
    (void)shift(Word::parse("+-·"));
    FAIL("expected EmptyHead");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyHead);
  }
  CHECK(shift(w) == Word::parse("+-·"));
}

TEST_CASE("head order matches the tent map order of points") {
  constexpr std::size_t n = 8;
  std::vector<Symbols> heads;
  for (std::uint64_t i = 0; i < (1u << n); ++i) heads.push_back(symbols_from_bits(i, n));
  std::sort(heads.begin(), heads.end(),
            [](const Symbols& u, const Symbols& v) { return compare_heads(u, v) < 0; });
  for (std::size_t i = 0; i + 1 < heads.size(); ++i) {
    CHECK(tent2_point(heads[i]) < tent2_point(heads[i + 1]));
  }
  for (std::size_t i = 0; i < heads.size(); ++i) CHECK(head_index(heads[i]) == i);
}

TEST_CASE("tail order agrees with its definition for both signs of b") {
  constexpr std::size_t m = 7;
  for (BSign sign : {BSign::Positive, BSign::Negative}) {
    std::vector<Symbols> tails;
    for (std::uint64_t i = 0; i < (1u << m); ++i) tails.push_back(symbols_from_bits(i, m));
    std::sort(tails.begin(), tails.end(),
              [&](const Symbols& u, const Symbols& v) { return tail_less(u, v, sign); });
    for (std::size_t i = 0; i < tails.size(); ++i) {
      CHECK(tail_index(tails[i], sign) == i);
      CHECK(tail_from_index(i, m, sign) == tails[i]);
      if (i + 1 < tails.size()) CHECK(compare_tails(tails[i], tails[i + 1], sign) < 0);
    }
  }
}

TEST_CASE("embeddings are dyadic and invertible") {
  for (std::uint64_t i = 0; i < 64; ++i) {
    const Symbols h = head_from_index(i, 6);
    CHECK(head_index(h) == i);
    CHECK(head_coordinate(h) == doctest::Approx(static_cast<double>(i) / 64.0));
  }
}

TEST_CASE("proper prefixes are unordered") {
  const Symbols u = parse_symbols("+-");
  const Symbols v = parse_symbols("+-+");
  CHECK(compare_heads(u, v) == std::partial_ordering::unordered);
  CHECK(compare_heads(u, u) == std::partial_ordering::equivalent);
}

TEST_CASE("enumeration covers every word once") {
  const std::vector<Word> words = enumerate_words(3, 4);
  CHECK(words.size() == 128);
  CHECK(words.front().to_string() == "---·----");
  CHECK(words.back().to_string() == "+++·++++");
}
