#include "sutured/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sutured/error.hpp"

namespace sutured {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& letter) {
  if (!out.empty() && out.back().generator == letter.generator &&
      out.back().sign == -letter.sign) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

void check_size(std::size_t length) {
  if (length > kMaxWordLength) {
    throw Error(ErrorKind::SizeLimit, "word length " + std::to_string(length) +
                                          " exceeds limit " + std::to_string(kMaxWordLength));
  }
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const Generator> generators)
      : text_(text), generators_(generators) {}

  Word parse() {
    Word result = parse_sequence();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') {
        throw Error(ErrorKind::UnbalancedParentheses,
                    "unmatched ')' at position " + std::to_string(pos_), pos_);
      }
      fail_unexpected();
    }
    return result;
  }

 private:
  Word parse_sequence() {
    Word result;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return result;
      result = result * parse_factor();
    }
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::int64_t k = parse_exponent();
      if (!atom.is_identity()) {
        const auto magnitude = static_cast<std::size_t>(k < 0 ? -k : k);
        if (magnitude > kMaxWordLength || atom.length() * magnitude > kMaxWordLength) {
          throw Error(ErrorKind::SizeLimit,
                      "expanded power at position " + std::to_string(pos_) + " is too long",
                      pos_);
        }
      }
      atom = atom.pow(k);
    }
    return atom;
  }

  Word parse_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_sequence();
      if (pos_ >= text_.size()) {
        throw Error(ErrorKind::UnbalancedParentheses,
                    "unclosed '(' at position " + std::to_string(start), start);
      }
      ++pos_;  // ')'
      return inner;
    }
    if (c == '1' && (pos_ + 1 >= text_.size() || !is_name_char(text_[pos_ + 1]))) {
      ++pos_;
      return Word{};
    }
    if (!is_name_start(c)) fail_unexpected();
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (std::find(generators_.begin(), generators_.end(), name) == generators_.end()) {
      throw Error(ErrorKind::UnknownGenerator,
                  "unknown generator '" + name + "' at position " + std::to_string(start),
                  start);
    }
    return Word::generator(name);
  }

  std::int64_t parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw Error(ErrorKind::MalformedExponent,
                  "expected integer exponent at position " + std::to_string(start), start);
    }
    constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 31;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxMagnitude) {
        throw Error(ErrorKind::MalformedExponent,
                    "exponent out of range at position " + std::to_string(start), start);
      }
      ++pos_;
    }
    if (pos_ < text_.size() && is_name_char(text_[pos_])) {
      throw Error(ErrorKind::MalformedExponent,
                  "malformed exponent at position " + std::to_string(start), start);
    }
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail_unexpected() const {
    throw Error(ErrorKind::ParseError,
                std::string("unexpected character '") + text_[pos_] + "' at position " +
                    std::to_string(pos_),
                pos_);
  }

  std::string_view text_;
  std::span<const Generator> generators_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::from_letters(std::vector<Letter> letters) {
  Word word;
  word.letters_.reserve(letters.size());
  for (const Letter& letter : letters) push_reduced(word.letters_, letter);
  check_size(word.letters_.size());
  return word;
}

Word Word::generator(const Generator& name, int sign) {
  Word word;
  word.letters_.push_back({name, sign < 0 ? -1 : 1});
  return word;
}

Word Word::inverse() const {
  Word word;
  word.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    word.letters_.push_back(it->inverse());
  }
  return word;
}

Word Word::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0 || is_identity()) return Word{};
  const auto count = static_cast<std::size_t>(k);
  if (count > kMaxWordLength) check_size(count);
  // Only the overlap between consecutive copies can cancel, so reduce the
  // cyclic part once and repeat the core.
  std::size_t peel = 0;
  const std::size_t n = letters_.size();
  while (2 * peel + 1 < n &&
         letters_[peel].generator == letters_[n - 1 - peel].generator &&
         letters_[peel].sign == -letters_[n - 1 - peel].sign) {
    ++peel;
  }
  const std::size_t core = n - 2 * peel;
  check_size(2 * peel + core * count);
  Word word;
  word.letters_.reserve(2 * peel + core * count);
  word.letters_.insert(word.letters_.end(), letters_.begin(), letters_.begin() + peel);
  for (std::size_t i = 0; i < count; ++i) {
    word.letters_.insert(word.letters_.end(), letters_.begin() + peel,
                         letters_.begin() + peel + core);
  }
  word.letters_.insert(word.letters_.end(), letters_.end() - peel, letters_.end());
  return word;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word word;
  word.letters_ = lhs.letters_;
  for (const Letter& letter : rhs.letters_) push_reduced(word.letters_, letter);
  check_size(word.letters_.size());
  return word;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !is_name_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), is_name_char);
}

std::string render(const Word& word) {
  if (word.is_identity()) return "1";
  std::string out;
  const auto letters = word.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += letters[i].generator;
    const auto run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text, std::span<const Generator> generators) {
  return WordParser(text, generators).parse();
}

Presentation Presentation::make(std::vector<Generator> generators, std::vector<Word> relators) {
  std::set<Generator> seen;
  for (const Generator& g : generators) {
    if (!is_valid_generator_name(g)) {
      throw Error(ErrorKind::InvalidGeneratorName, "invalid generator name '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::DuplicateGenerator, "duplicate generator '" + g + "'");
    }
  }
  for (const Word& r : relators) {
    for (const Letter& letter : r.letters()) {
      if (!seen.contains(letter.generator)) {
        throw Error(ErrorKind::UnknownGenerator,
                    "relator uses unknown generator '" + letter.generator + "'");
      }
    }
  }
  return Presentation{std::move(generators), std::move(relators)};
}

bool Presentation::has_generator(const Generator& name) const {
  return std::find(generators.begin(), generators.end(), name) != generators.end();
}

std::size_t Presentation::index_of(const Generator& name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) {
    throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
  }
  return static_cast<std::size_t>(it - generators.begin());
}

}  // namespace sutured
