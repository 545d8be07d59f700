#pragma once

// Free-group words over named generators and finite group presentations.
//
// Words are stored fully expanded and freely reduced. The text grammar is
//
//   word   := factor*
//   factor := atom ('^' integer)?
//   atom   := name | '1' | '(' word ')'
//
// with whitespace ignored between tokens. Names follow [A-Za-z][A-Za-z0-9_]*,
// so adjacent atoms must be separated by whitespace or parentheses.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sutured {

using Generator = std::string;

struct Letter {
  Generator generator;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Upper bound on the expanded length of any word.
inline constexpr std::size_t kMaxWordLength = 1u << 16;

class Word {
 public:
  Word() = default;

  // Freely reduces `letters`. Throws SizeLimit past kMaxWordLength.
  static Word from_letters(std::vector<Letter> letters);
  static Word generator(const Generator& name, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(std::int64_t k) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

bool is_valid_generator_name(std::string_view name);

// Canonical rendering, e.g. "x^3 b^-2 a^-2"; the identity renders as "1".
std::string render(const Word& word);

Word parse_word(std::string_view text, std::span<const Generator> generators);

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  // Validates names, uniqueness, and that relators only use listed generators.
  static Presentation make(std::vector<Generator> generators, std::vector<Word> relators);

  bool has_generator(const Generator& name) const;
  std::size_t index_of(const Generator& name) const;
  std::int64_t deficiency() const {
    return static_cast<std::int64_t>(generators.size()) -
           static_cast<std::int64_t>(relators.size());
  }
};

}  // namespace sutured
