#include "sutured/lyon.hpp"

#include <string>

#include "sutured/abelian.hpp"
#include "sutured/error.hpp"
#include "sutured/groupring.hpp"

namespace sutured::lyon {

namespace {

void check_case(std::int64_t n) {
  if (n < -1) {
    throw Error(ErrorKind::UnsupportedN,
                "family parameter n must be >= -1, got " + std::to_string(n));
  }
}

Word letter(const char* name, int sign = 1) { return Word::generator(name, sign); }

LaurentPoly term(std::int64_t e0, std::int64_t e1, const BigInt& c = 1) {
  return LaurentPoly::monomial({e0, e1}, c);
}

// 1 + a + ab + ab^2 and 1 + b + b^2 + ab^2 in (a, b).
LaurentPoly d_poly() { return term(0, 0) + term(1, 0) + term(1, 1) + term(1, 2); }
LaurentPoly c_poly() { return term(0, 0) + term(0, 1) + term(0, 2) + term(1, 2); }

}  // namespace

std::string_view to_string(Surface surface) {
  return surface == Surface::S ? "S" : "Sprime";
}

Surface parse_surface(std::string_view text) {
  if (text == "S") return Surface::S;
  if (text == "Sprime") return Surface::SPrime;
  throw Error(ErrorKind::FileFormat, "surface must be S or Sprime, got '" + std::string(text) + "'");
}

TorsionInput lyon_input(const LyonCase& c) {
  check_case(c.n);
  const Word a = letter("a"), b = letter("b"), x = letter("x");
  const Word a_inv = a.inverse(), b_inv = b.inverse();
  const std::int64_t k = c.n + 1;

  TorsionInput input;
  if (c.surface == Surface::S) {
    const Word relator = x.pow(3) * b_inv.pow(2) * a_inv.pow(2);
    input.presentation = Presentation::make({"a", "b", "x"}, {relator});
    input.inclusion_words = {(a * b_inv).pow(k) * b.pow(2), b * a * (b * a_inv).pow(k)};
    AbelianizationMap basis;
    basis.basis_names = {"a", "u"};
    basis.images = {{"a", {1, 0}}, {"b", {-1, 3}}, {"x", {0, 2}}};
    input.abelianization = abelianize_presentation(input.presentation, basis);
  } else {
    const Word relator = x.pow(3) * b_inv.pow(2) * a_inv * b_inv;
    input.presentation = Presentation::make({"a", "b", "x"}, {relator});
    input.inclusion_words = {a * (b * a_inv).pow(k), (a * b_inv).pow(k) * a * b.pow(2)};
    AbelianizationMap basis;
    basis.basis_names = {"b", "x"};
    basis.images = {{"a", {-3, 3}}, {"b", {1, 0}}, {"x", {0, 1}}};
    input.abelianization = abelianize_presentation(input.presentation, basis);
  }
  return input;
}

TorsionClass expected_tau(const LyonCase& c) {
  check_case(c.n);
  const std::int64_t n = c.n;
  if (c.surface == Surface::S) {
    // Variables (a, u).
    const LaurentPoly shift = term(0, 0) + term(0, 2) + term(0, 4);
    const LaurentPoly left = (term(2, 0) + term(1, 3) + term(1, 6) + term(0, 6)) * term(2 * n + 2, 0);
    const LaurentPoly right = term(0, 3 * n + 3) * (term(3, 0) + term(2, 0) + term(2, 3) + term(1, 6));
    const LaurentPoly den = term(2, 0) - term(0, 3);
    return torsion_normal_form(shift * exact_div(left - right, den));
  }
  // Variables (b, x).
  const LaurentPoly shift = term(0, 0) + term(0, 1) + term(0, 2);
  const LaurentPoly left = term(0, 3 * n + 3) * (term(5, 0) + term(4, 0) + term(3, 0) + term(2, 3));
  const LaurentPoly right = term(4 * n + 4, 0) * (term(3, 0) + term(2, 3) + term(1, 3) + term(0, 3));
  const LaurentPoly den = term(0, 3) - term(4, 0);
  return torsion_normal_form(shift * exact_div(left - right, den));
}

LaurentPoly q_poly(std::int64_t n) {
  check_case(n);
  LaurentPoly q = -(term(0, 1) + term(0, 2));
  for (std::int64_t k = -1; k < n; ++k) q = term(1, 0) * q + term(0, k + 2) * d_poly();
  return q;
}

LaurentPoly q_poly_closed_form(std::int64_t n) {
  check_case(n);
  const LaurentPoly numerator = term(0, 1) * (term(n + 1, 0) * c_poly() - term(0, n + 1) * d_poly());
  return exact_div(numerator, term(1, 0) - term(0, 1));
}

LaurentPoly fox_block_determinant(const LyonCase& c) {
  const TorsionInput input = lyon_input(c);
  AbelianizationMap free_ab;
  free_ab.basis_names = {"a", "b"};
  free_ab.images = {{"a", {1, 0}}, {"b", {0, 1}}};
  const Word& alpha = input.inclusion_words[0];
  const Word& beta = input.inclusion_words[1];
  LaurentMatrix block{
      {apply_abelianization(free_ab, fox_derivative(alpha, "a")),
       apply_abelianization(free_ab, fox_derivative(beta, "a"))},
      {apply_abelianization(free_ab, fox_derivative(alpha, "b")),
       apply_abelianization(free_ab, fox_derivative(beta, "b"))},
  };
  return determinant(block);
}

std::pair<std::int64_t, std::int64_t> alexander_data(std::int64_t n) {
  return {6 + 12 * n, -(11 + 24 * n)};
}

FamilyResult run_family(const LyonCase& c) {
  FamilyResult result;
  result.input = lyon_input(c);
  result.torsion = sutured_torsion(result.input);
  result.expected = expected_tau(c);
  result.oracle_match = result.torsion == result.expected;
  result.centrally_symmetric = is_centrally_symmetric(result.torsion);
  return result;
}

}  // namespace sutured::lyon
