#include "sutured/groupring.hpp"

namespace sutured {

GroupRingElement::GroupRingElement(const Word& word, BigInt coefficient) {
  add_term(word, coefficient);
}

BigInt GroupRingElement::coefficient(const Word& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GroupRingElement::add_term(const Word& word, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [word, c] : rhs.terms_) add_term(word, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [word, c] : rhs.terms_) add_term(word, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs) {
  GroupRingElement out;
  for (const auto& [u, cu] : lhs.terms_) {
    for (const auto& [w, cw] : rhs.terms_) out.add_term(u * w, cu * cw);
  }
  return out;
}

BigInt augmentation(const GroupRingElement& element) {
  BigInt sum = 0;
  for (const auto& [word, c] : element.terms()) sum += c;
  return sum;
}

GroupRingElement fox_derivative(const Word& word, const Generator& g) {
  // Walk the word keeping the reduced prefix; a letter g contributes the
  // prefix before it, a letter g^-1 contributes minus the prefix including it.
  GroupRingElement out;
  std::vector<Letter> prefix;
  prefix.reserve(word.length());
  for (const Letter& letter : word.letters()) {
    if (letter.generator == g && letter.sign > 0) {
      out.add_term(Word::from_letters(prefix), 1);
    }
    prefix.push_back(letter);
    if (letter.generator == g && letter.sign < 0) {
      out.add_term(Word::from_letters(prefix), -1);
    }
  }
  return out;
}

GroupRingElement fox_derivative(const GroupRingElement& element, const Generator& g) {
  GroupRingElement out;
  for (const auto& [word, c] : element.terms()) out += fox_derivative(word, g) * c;
  return out;
}

GroupRingElement geometric_sum(const Word& v, std::int64_t k) {
  GroupRingElement out;
  Word power;
  for (std::int64_t i = 0; i < k; ++i) {
    out.add_term(power, 1);
    power = power * v;
  }
  return out;
}

GroupRingElement fox_derivative_power(const Word& v, std::int64_t k, const Generator& g) {
  if (k < 0) return fox_derivative_power(v.inverse(), -k, g);
  return geometric_sum(v, k) * fox_derivative(v, g);
}

}  // namespace sutured
