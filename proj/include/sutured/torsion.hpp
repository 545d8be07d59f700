#pragma once

// Sutured torsion as the determinant of the abelianized Fox matrix, and its
// normal form up to multiplication by units +-h.

#include <cstddef>
#include <vector>

#include "sutured/abelian.hpp"
#include "sutured/laurent.hpp"
#include "sutured/words.hpp"

namespace sutured {

struct TorsionInput {
  Presentation presentation;
  std::vector<Word> inclusion_words;
  AbelianizationMap abelianization;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

struct UnitNormalization;

// A Laurent polynomial up to +-monomial. The representative has minimum
// exponent 0 in every variable and a positive coefficient on its
// graded-lex smallest monomial.
class TorsionClass {
 public:
  explicit TorsionClass(std::size_t rank = 0) : representative_(rank) {}

  const LaurentPoly& representative() const { return representative_; }
  std::size_t rank() const { return representative_.rank(); }
  bool is_zero() const { return representative_.is_zero(); }

  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

 private:
  friend UnitNormalization normalize_with_unit(const LaurentPoly& p);
  LaurentPoly representative_;
};

// The class of `p` together with the unit used: class = sign * x^shift * p.
struct UnitNormalization {
  TorsionClass torsion;
  Exponent shift;
  int sign = 1;
};

UnitNormalization normalize_with_unit(const LaurentPoly& p);
TorsionClass torsion_normal_form(const LaurentPoly& p);

// Rows are generators; the first columns hold the inclusion words, then relators.
LaurentMatrix build_theta(const TorsionInput& input);

LaurentPoly determinant_cofactor(const LaurentMatrix& m);
LaurentPoly determinant_bareiss(const LaurentMatrix& m);
// Cofactor expansion up to 4x4, fraction-free elimination beyond.
LaurentPoly determinant(const LaurentMatrix& m);

TorsionClass sutured_torsion(const TorsionInput& input);

// Negates every exponent (inversion in H1) and renormalizes.
TorsionClass reflect(const TorsionClass& t);
bool is_centrally_symmetric(const TorsionClass& t);

}  // namespace sutured
