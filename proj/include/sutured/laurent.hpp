#pragma once

// Exact multivariate Laurent polynomials with integer coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sutured/bigint.hpp"

namespace sutured {

using Exponent = std::vector<std::int64_t>;

std::int64_t total_degree(const Exponent& e);

// Graded-lexicographic order: total degree first, then lexicographic.
struct GrLexLess {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const;
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GrLexLess>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const BigInt& value);
  static LaurentPoly monomial(const Exponent& exponent, const BigInt& coefficient = 1);
  static LaurentPoly from_terms(std::size_t rank,
                                const std::vector<std::pair<Exponent, BigInt>>& terms);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const Exponent& e) const;
  BigInt coefficient_sum() const;

  // Componentwise minimum over all terms; requires a nonzero polynomial.
  Exponent min_exponents() const;

  void add_term(const Exponent& e, const BigInt& coefficient);

  // Multiplication by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator-(LaurentPoly value) { return value *= BigInt(-1); }
  friend LaurentPoly operator*(LaurentPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend LaurentPoly operator*(const BigInt& scalar, LaurentPoly rhs) { return rhs *= scalar; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_rank(const Exponent& e) const;
  void check_rank(const LaurentPoly& other) const;

  std::size_t rank_;
  Terms terms_;
};

// Exact quotient in the Laurent ring; throws InexactDivision when `divisor`
// does not divide `dividend`, RankMismatch on differing ranks.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

// Monomial substitution x_i -> y^{images[i]}, followed by multiplication by
// y^offset. `images` are the columns of the integer substitution matrix.
struct MonomialSubstitution {
  std::size_t target_rank = 0;
  std::vector<Exponent> images;
  Exponent offset;
};

LaurentPoly substitute(const LaurentPoly& p, const MonomialSubstitution& map);

// Human-readable form such as "a + a*u^2 - 2*u^-1"; "0" for the zero polynomial.
std::string render(const LaurentPoly& p, std::span<const std::string> names);

}  // namespace sutured
