#include "doctest.h"

#include <algorithm>

#include "sutured/error.hpp"
#include "sutured/words.hpp"
#include "test_support.hpp"

using namespace sutured;
using sutured::testing::random_word;
using sutured::testing::uniform;

namespace {

const std::vector<Generator> kABX{"a", "b", "x"};

Word w(std::initializer_list<std::pair<const char*, int>> letters) {
  std::vector<Letter> out;
  for (const auto& [g, s] : letters) out.push_back({g, s});
  return Word::from_letters(out);
}

ErrorKind parse_error_kind(std::string_view text, std::size_t* position = nullptr) {
  try {
    parse_word(text, kABX);
  } catch (const Error& e) {
    if (position && e.position()) *position = *e.position();
    return e.kind();
  }
  FAIL("expected a parse error for '" << text << "'");
  return ErrorKind::ParseError;
}

// Removes adjacent cancelling pairs one at a time, choosing randomly.
Word naive_reduce(std::vector<Letter> letters) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].generator == letters[i + 1].generator && letters[i].sign == -letters[i + 1].sign) {
        spots.push_back(i);
      }
    }
    if (spots.empty()) break;
    const auto pick = spots[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(spots.size()) - 1))];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pick),
                  letters.begin() + static_cast<std::ptrdiff_t>(pick) + 2);
  }
  Word out;
  for (const auto& l : letters) out = out * Word::generator(l.generator, l.sign);
  return out;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("parse relator of the S complement") {
  const Word r = parse_word("x^3 b^-2 a^-2", kABX);
  CHECK(r == w({{"x", 1}, {"x", 1}, {"x", 1}, {"b", -1}, {"b", -1}, {"a", -1}, {"a", -1}}));
}

TEST_CASE("empty text is the identity") {
  CHECK(parse_word("", kABX).is_identity());
  CHECK(parse_word("   ", kABX).is_identity());
  CHECK(parse_word("1", kABX).is_identity());
}

TEST_CASE("parenthesized power reduces freely") {
  CHECK(parse_word("(a b^-1)^1 b^2", kABX) == w({{"a", 1}, {"b", 1}}));
  CHECK(parse_word("(a b)^-2", kABX) == w({{"b", -1}, {"a", -1}, {"b", -1}, {"a", -1}}));
  CHECK(parse_word("((a))^ 0 x", kABX) == w({{"x", 1}}));
  CHECK(parse_word("a^+2", kABX) == w({{"a", 1}, {"a", 1}}));
}

TEST_CASE("parse errors carry positions") {
  std::size_t pos = 99;
  CHECK(parse_error_kind("a y", &pos) == ErrorKind::UnknownGenerator);
  CHECK(pos == 2);
  CHECK(parse_error_kind("ab") == ErrorKind::UnknownGenerator);  // names need separation
  CHECK(parse_error_kind("a^", &pos) == ErrorKind::MalformedExponent);
  CHECK(pos == 2);
  CHECK(parse_error_kind("a^b") == ErrorKind::MalformedExponent);
  CHECK(parse_error_kind("a^2b") == ErrorKind::MalformedExponent);
  CHECK(parse_error_kind("a^-") == ErrorKind::MalformedExponent);
  CHECK(parse_error_kind("a^4294967296") == ErrorKind::MalformedExponent);
  CHECK(parse_error_kind("(a b", &pos) == ErrorKind::UnbalancedParentheses);
  CHECK(pos == 0);
  CHECK(parse_error_kind("a b)", &pos) == ErrorKind::UnbalancedParentheses);
  CHECK(pos == 3);
  CHECK(parse_error_kind("a * b", &pos) == ErrorKind::ParseError);
  CHECK(pos == 2);
}

TEST_CASE("large exponents are accepted by the grammar but hit the size limit") {
  CHECK(parse_error_kind("a^2147483647") == ErrorKind::SizeLimit);
  CHECK(parse_error_kind("(a b)^40000") == ErrorKind::SizeLimit);
  CHECK(parse_word("(a a^-1)^2147483648", kABX).is_identity());
  CHECK(parse_word("a^1000", kABX).length() == 1000);
}

TEST_CASE("word algebra") {
  const Word a = Word::generator("a"), b = Word::generator("b");
  CHECK((a * b.inverse()).inverse() == b * a.inverse());
  CHECK((b * a.inverse()).pow(3) ==
        w({{"b", 1}, {"a", -1}, {"b", 1}, {"a", -1}, {"b", 1}, {"a", -1}}));
  CHECK((a * b) * (b.inverse() * a) == a * a);
  CHECK((a * b).pow(-1) == (a * b).inverse());
  CHECK((a * b).pow(0).is_identity());
}

TEST_CASE("power of a conjugate matches repeated multiplication") {
  for (int trial = 0; trial < 200; ++trial) {
    const Word v = random_word(kABX, 8);
    const auto k = uniform(-6, 6);
    Word expected;
    const Word base = k < 0 ? v.inverse() : v;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) expected = expected * base;
    CHECK(v.pow(k) == expected);
  }
}

TEST_CASE("render round trip") {
  CHECK(render(parse_word("x^3 b^-2 a^-2", kABX)) == "x^3 b^-2 a^-2");
  CHECK(render(Word{}) == "1");
  for (int trial = 0; trial < 300; ++trial) {
    const Word v = random_word(kABX, 15);
    CHECK(parse_word(render(v), kABX) == v);
  }
}

TEST_CASE("group laws on random words") {
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(kABX, 10), v = random_word(kABX, 10), z = random_word(kABX, 10);
    CHECK((u * v) * z == u * (v * z));
    CHECK(u.inverse().inverse() == u);
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
  }
}

TEST_CASE("free reduction is confluent") {
  for (int trial = 0; trial < 300; ++trial) {
    const Word base = random_word(kABX, 12);
    std::vector<Letter> letters(base.letters().begin(), base.letters().end());
    const auto inserts = uniform(1, 6);
    for (std::int64_t i = 0; i < inserts; ++i) {
      const Letter l{kABX[static_cast<std::size_t>(uniform(0, 2))], uniform(0, 1) ? 1 : -1};
      const auto at = static_cast<std::ptrdiff_t>(uniform(0, static_cast<std::int64_t>(letters.size())));
      letters.insert(letters.begin() + at, {l, l.inverse()});
    }
    CHECK(Word::from_letters(letters) == base);
    CHECK(naive_reduce(letters) == base);
  }
}

TEST_CASE("presentation validation") {
  const Word r = parse_word("x^3 b^-2 a^-2", kABX);
  const Presentation p = Presentation::make(kABX, {r});
  CHECK(p.deficiency() == 2);
  CHECK(p.index_of("x") == 2);
  CHECK_THROWS_AS(Presentation::make({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Presentation::make({"2a"}, {}), Error);
  CHECK_THROWS_AS(Presentation::make({"a", "b"}, {r}), Error);
  CHECK(is_valid_generator_name("a_1"));
  CHECK(is_valid_generator_name("Ab2"));
  CHECK_FALSE(is_valid_generator_name("_a"));
  CHECK_FALSE(is_valid_generator_name(""));
}

}
