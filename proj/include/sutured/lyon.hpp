#pragma once

// Lyon's knots K_n with their two minimal genus Seifert surfaces S_n and
// S'_n: presentations of the complements, surface generator words, homology
// bases and closed-form torsion oracles.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "sutured/laurent.hpp"
#include "sutured/torsion.hpp"

namespace sutured::lyon {

enum class Surface { S, SPrime };

std::string_view to_string(Surface surface);
// Accepts "S" and "Sprime"; throws FileFormat otherwise.
Surface parse_surface(std::string_view text);

struct LyonCase {
  std::int64_t n = 0;  // 2n+1 half twists, n >= -1
  Surface surface = Surface::S;
};

// For S' the inclusion words come from R_+, so the result is tau^+.
TorsionInput lyon_input(const LyonCase& c);

// Closed forms, evaluated by exact division.
TorsionClass expected_tau(const LyonCase& c);

// q_n(a,b) in variables (a, b) via q_{n+1} = a q_n + b^{n+2}(1+a+ab+ab^2),
// starting from q_{-1} = -b(1+b).
LaurentPoly q_poly(std::int64_t n);
// b/(a-b) * (a^{n+1}(1+b+b^2+ab^2) - b^{n+1}(1+a+ab+ab^2)).
LaurentPoly q_poly_closed_form(std::int64_t n);

// Determinant of the 2x2 block of Fox derivatives of the surface words with
// respect to a and b, abelianized freely in (a, b): q_n for S, q'_n for S'.
LaurentPoly fox_block_determinant(const LyonCase& c);

// (top, middle) coefficients of the Alexander polynomial of K_n.
std::pair<std::int64_t, std::int64_t> alexander_data(std::int64_t n);

struct FamilyResult {
  TorsionInput input;
  TorsionClass torsion;
  TorsionClass expected;
  bool oracle_match = false;
  bool centrally_symmetric = false;
};

FamilyResult run_family(const LyonCase& c);

}  // namespace sutured::lyon
