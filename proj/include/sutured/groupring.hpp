#pragma once

// Integer group ring of a free group and Fox free differential calculus.

#include <cstdint>
#include <map>

#include "sutured/bigint.hpp"
#include "sutured/words.hpp"

namespace sutured {

class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  GroupRingElement() = default;
  explicit GroupRingElement(const Word& word, BigInt coefficient = 1);

  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Word& word) const;

  void add_term(const Word& word, const BigInt& coefficient);

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement& operator*=(const BigInt& scalar);

  friend GroupRingElement operator+(GroupRingElement lhs, const GroupRingElement& rhs) {
    return lhs += rhs;
  }
  friend GroupRingElement operator-(GroupRingElement lhs, const GroupRingElement& rhs) {
    return lhs -= rhs;
  }
  friend GroupRingElement operator-(GroupRingElement value) { return value *= BigInt(-1); }
  friend GroupRingElement operator*(GroupRingElement lhs, const BigInt& scalar) {
    return lhs *= scalar;
  }
  friend GroupRingElement operator*(const BigInt& scalar, GroupRingElement rhs) {
    return rhs *= scalar;
  }
  friend GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

// Sum of coefficients.
BigInt augmentation(const GroupRingElement& element);

// Left-to-right Fox derivative: d(uw)/dg = du/dg * aug(w) + u * dw/dg.
GroupRingElement fox_derivative(const Word& word, const Generator& g);
GroupRingElement fox_derivative(const GroupRingElement& element, const Generator& g);

// 1 + v + ... + v^(k-1) for k >= 0.
GroupRingElement geometric_sum(const Word& v, std::int64_t k);

// d(v^k)/dg via the power rule; negative k uses v^k = (v^-1)^|k|.
GroupRingElement fox_derivative_power(const Word& v, std::int64_t k, const Generator& g);

}  // namespace sutured
