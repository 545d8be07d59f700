#include "doctest.h"

#include "sutured/error.hpp"
#include "sutured/lyon.hpp"
#include "test_support.hpp"

using namespace sutured;
using namespace sutured::lyon;
using sutured::testing::poly2;

namespace {

std::vector<std::string> words_of(const TorsionInput& in) {
  std::vector<std::string> out;
  for (const auto& w : in.inclusion_words) out.push_back(render(w));
  return out;
}

TorsionClass cls(const LaurentPoly& p) { return torsion_normal_form(p); }

// Images of a and b in the homology basis of each surface.
MonomialSubstitution basis_map(Surface s) {
  if (s == Surface::S) return {2, {{1, 0}, {-1, 3}}, {0, 0}};
  return {2, {{-3, 3}, {1, 0}}, {0, 0}};
}

LaurentPoly boundary_factor(Surface s) {
  return s == Surface::S ? poly2({{0, 0, 1}, {0, 2, 1}, {0, 4, 1}}) : poly2({{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});
}

}  // namespace

TEST_SUITE("lyon") {

TEST_CASE("presentations and surface words") {
  const TorsionInput s0 = lyon_input({0, Surface::S});
  CHECK(s0.presentation.generators == std::vector<Generator>{"a", "b", "x"});
  REQUIRE(s0.presentation.relators.size() == 1);
  CHECK(render(s0.presentation.relators[0]) == "x^3 b^-2 a^-2");
  CHECK(words_of(s0) == std::vector<std::string>{"a b", "b a b a^-1"});
  CHECK(s0.abelianization.basis_names == std::vector<std::string>{"a", "u"});
  CHECK(s0.abelianization.image_of(Word::generator("x")) == Exponent{0, 2});
  CHECK(s0.abelianization.image_of(Word::generator("b")) == Exponent{-1, 3});

  CHECK(words_of(lyon_input({-1, Surface::S})) == std::vector<std::string>{"b^2", "b a"});

  const TorsionInput p0 = lyon_input({0, Surface::SPrime});
  CHECK(render(p0.presentation.relators[0]) == "x^3 b^-2 a^-1 b^-1");
  CHECK(words_of(p0) == std::vector<std::string>{"a b a^-1", "a b^-1 a b^2"});
  CHECK(p0.abelianization.basis_names == std::vector<std::string>{"b", "x"});
  CHECK(p0.abelianization.image_of(Word::generator("a")) == Exponent{-3, 3});

  try {
    lyon_input({-2, Surface::S});
    FAIL("expected UnsupportedN");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedN);
  }
}

TEST_CASE("closed forms at small n") {
  const LaurentPoly s_factor = boundary_factor(Surface::S);
  const LaurentPoly p_factor = boundary_factor(Surface::SPrime);
  CHECK(expected_tau({0, Surface::S}) == cls(poly2({{1, 0, 1}, {0, 6, 1}}) * s_factor));
  CHECK(expected_tau({-1, Surface::S}) == cls(poly2({{1, 0, 1}, {0, 3, 1}}) * s_factor));
  CHECK(expected_tau({1, Surface::S}) ==
        cls(poly2({{3, 0, 1}, {1, 3, 1}, {2, 3, 1}, {1, 6, 1}, {2, 6, 1}, {0, 9, 1}}) * s_factor));
  CHECK(expected_tau({0, Surface::SPrime}) == cls(poly2({{1, 0, 1}, {0, 3, 1}}) * p_factor));
  CHECK(expected_tau({-1, Surface::SPrime}) == cls(poly2({{0, 0, 1}, {1, 0, 1}}) * p_factor));
  CHECK(expected_tau({1, Surface::SPrime}) ==
        cls(poly2({{5, 0, 1}, {1, 3, 1}, {2, 3, 1}, {3, 3, 1}, {4, 3, 1}, {0, 6, 1}}) * p_factor));
}

TEST_CASE("q polynomials") {
  CHECK(cls(q_poly(-1)) == cls(poly2({{0, 0, 1}, {0, 1, 1}})));
  CHECK(cls(q_poly(0)) == cls(poly2({{0, 0, 1}, {1, 2, 1}})));
  CHECK(cls(q_poly(1)) ==
        cls(poly2({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 2, 1}})));
  for (std::int64_t n = -1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(q_poly(n) == q_poly_closed_form(n));
    CHECK(cls(fox_block_determinant({n, Surface::S})) == cls(q_poly(n)));
    CHECK(cls(fox_block_determinant({n, Surface::SPrime})) == cls(q_poly(n)));
    const TorsionClass q = cls(q_poly(n));
    for (const auto& [e, c] : q.representative().terms()) CHECK(c > 0);
  }
}

TEST_CASE("torsion factors through q under the basis substitution") {
  for (std::int64_t n = -1; n <= 6; ++n) {
    for (const Surface s : {Surface::S, Surface::SPrime}) {
      CAPTURE(n);
      const LaurentPoly q = substitute(q_poly(n), basis_map(s));
      CHECK(cls(q * boundary_factor(s)) == expected_tau({n, s}));
    }
  }
}

TEST_CASE("Alexander data and coefficient sums") {
  CHECK(alexander_data(0) == std::pair<std::int64_t, std::int64_t>{6, -11});
  CHECK(alexander_data(1) == std::pair<std::int64_t, std::int64_t>{18, -35});
  CHECK(alexander_data(-1) == std::pair<std::int64_t, std::int64_t>{-6, 13});
  for (std::int64_t n = -1; n <= 6; ++n) {
    const BigInt top = alexander_data(n).first;
    const BigInt sum = expected_tau({n, Surface::S}).representative().coefficient_sum();
    CHECK(abs(sum) == abs(top));
    CHECK(abs(expected_tau({n, Surface::SPrime}).representative().coefficient_sum()) == abs(top));
  }
}

TEST_CASE("Fox pipeline agrees with the closed forms") {
  for (std::int64_t n = -1; n <= 6; ++n) {
    for (const Surface s : {Surface::S, Surface::SPrime}) {
      CAPTURE(n);
      const FamilyResult r = run_family({n, s});
      CHECK(r.oracle_match);
      CHECK(r.torsion == r.expected);
      if (n <= 0) CHECK(r.centrally_symmetric);
    }
  }
}

TEST_CASE("surface names") {
  CHECK(parse_surface("S") == Surface::S);
  CHECK(parse_surface("Sprime") == Surface::SPrime);
  CHECK(to_string(Surface::SPrime) == "Sprime");
  CHECK_THROWS_AS(parse_surface("T"), Error);
}

}
