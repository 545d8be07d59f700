// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sutured/equivalence.hpp"
#include "sutured/groupring.hpp"
#include "sutured/lyon.hpp"
#include "sutured/polytope.hpp"
#include "sutured/report.hpp"
#include "sutured/sfh.hpp"
#include "sutured/torsion.hpp"
#include "test_support.hpp"

using namespace sutured;
using lyon::Surface;
using sutured::testing::poly2;
using sutured::testing::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const LaurentPoly kUFactor = poly2({{0, 0, 1}, {0, 2, 1}, {0, 4, 1}});  // 1+u^2+u^4
const LaurentPoly kXFactor = poly2({{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});  // 1+x+x^2

TorsionClass tau(std::int64_t n, Surface s) { return sutured_torsion(lyon::lyon_input({n, s})); }

// Runs the family command and checks its torsion against `expected`.
void expect_family(Outcome& out, std::int64_t n, const char* surface, const LaurentPoly& expected) {
  const cli::Report r = cli::cmd_family(n, surface);
  const std::vector<std::string> names =
      std::string(surface) == "S" ? std::vector<std::string>{"a", "u"} : std::vector<std::string>{"b", "x"};
  const std::string label = "family n=" + std::to_string(n) + " " + surface;
  out.expect(r.exit_code() == 0, label + " failed");
  if (r.exit_code() != 0) return;
  out.expect(r.body["torsion"] == cli::to_json(torsion_normal_form(expected), names),
             label + " torsion " + r.body["torsion"]["text"].get<std::string>());
}

LatticePolygon hull(std::int64_t n, Surface s) { return newton_polytope(support(tau(n, s))); }

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome ac1() {
  Outcome out;
  expect_family(out, 0, "S", poly2({{1, 0, 1}, {0, 6, 1}}) * kUFactor);
  return out;
}

Outcome ac2() {
  Outcome out;
  expect_family(out, 0, "Sprime", poly2({{1, 0, 1}, {0, 3, 1}}) * kXFactor);
  out.expect(cli::cmd_family(0, "Sprime").body["centrally_symmetric"] == true, "tau(Y'_0) not symmetric");
  return out;
}

Outcome ac3() {
  Outcome out;
  expect_family(out, 1, "S",
                poly2({{3, 0, 1}, {1, 3, 1}, {2, 3, 1}, {1, 6, 1}, {2, 6, 1}, {0, 9, 1}}) * kUFactor);
  expect_family(out, 1, "Sprime",
                poly2({{5, 0, 1}, {1, 3, 1}, {2, 3, 1}, {3, 3, 1}, {4, 3, 1}, {0, 6, 1}}) * kXFactor);
  return out;
}

Outcome ac4() {
  Outcome out;
  out.expect(tau(-1, Surface::S) == torsion_normal_form(poly2({{1, 0, 1}, {0, 3, 1}}) * kUFactor),
             "tau(Y_-1) differs");
  out.expect(tau(-1, Surface::SPrime) == torsion_normal_form(poly2({{0, 0, 1}, {1, 0, 1}}) * kXFactor),
             "tau(Y'_-1) differs");
  const LatticePolygon p = hull(-1, Surface::S);
  const LatticePolygon q = hull(-1, Surface::SPrime);
  out.expect(p.dimension == 2 && p.vertices.size() == 4, "hull of tau(Y_-1) is not a quadrilateral");
  out.expect(q.dimension == 2 && q.vertices.size() == 4, "hull of tau(Y'_-1) is not a quadrilateral");
  for (const auto* poly : {&p, &q}) {
    if (poly->vertices.size() != 4) continue;
    const auto& v = poly->vertices;
    out.expect(v[0][0] + v[2][0] == v[1][0] + v[3][0] && v[0][1] + v[2][1] == v[1][1] + v[3][1],
               "hull is not a parallelogram");
  }
  out.expect(p.edge_length_multiset() == sorted({4, 1, 4, 1}), "edge lengths of tau(Y_-1)");
  out.expect(q.edge_length_multiset() == sorted({2, 1, 2, 1}), "edge lengths of tau(Y'_-1)");
  out.expect(!polygon_affine_equivalent(p, q).has_value(), "hulls reported equivalent");
  return out;
}

Outcome ac5() {
  Outcome out;
  for (std::int64_t n = -1; n <= 5; ++n) {
    const auto v = compare_torsion(tau(n, Surface::S), tau(n, Surface::SPrime));
    out.expect(v.kind == VerdictKind::NotEquivalent,
               "n=" + std::to_string(n) + " verdict " + std::string(to_string(v.kind)));
  }
  return out;
}

Outcome ac6() {
  Outcome out;
  for (std::int64_t n = -1; n <= 6; ++n) {
    for (const Surface s : {Surface::S, Surface::SPrime}) {
      const BigInt sum = tau(n, s).representative().coefficient_sum();
      const std::string label = "n=" + std::to_string(n) + " " + std::string(lyon::to_string(s));
      // Normalization fixes the sign, so n = -1 is compared in absolute value.
      if (n == -1) out.expect(abs(sum) == 6, label + " |sum| = " + sum.str());
      else out.expect(sum == 6 + 12 * n, label + " sum = " + sum.str());
    }
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  for (std::int64_t n = -1; n <= 8; ++n) {
    const std::string label = "n=" + std::to_string(n);
    out.expect(lyon::q_poly(n) == lyon::q_poly_closed_form(n), label + " recurrence != closed form");
    out.expect(torsion_normal_form(lyon::fox_block_determinant({n, Surface::SPrime})) ==
                   torsion_normal_form(lyon::q_poly(n)),
               label + " q'_n != q_n");
  }
  return out;
}

Outcome ac8() {
  Outcome out;
  const GradedRanks w = torus_sfh(2, 1, 2);
  const GradedRanks x = torus_sfh(3, 4, 2);
  out.expect(w.total() == 2, "T(2,1;2) total");
  out.expect(x.total() == 3, "T(3,4;2) total");
  out.expect(tensor_ranks(w, x).total() == 6, "tensor total");
  for (std::int64_t p = 1; p <= 4; ++p) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      const GradedRanks g = torus_sfh(p, 1, 2 * k + 2);
      // Direct summation: rank at i counts subsets of size floor(i/p) of k things.
      for (std::int64_t i = -1; i <= p * (k + 1); ++i) {
        BigInt expected = 0;
        if (i >= 0 && i < p * (k + 1)) {
          const std::int64_t j = i / p;
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            expected += std::popcount(mask) == j ? 1 : 0;
          }
        }
        out.expect(g.at(i) == expected, "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                            " i=" + std::to_string(i));
      }
      out.expect(g.total() == p * (std::int64_t{1} << k), "total p*2^k");
    }
  }
  return out;
}

LaurentMatrix random_matrix(std::size_t n) {
  LaurentMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(2)));
  for (auto& row : m) {
    for (auto& entry : row) {
      if (uniform(0, 4) != 0) entry = testing::random_laurent(2, 3, 2, 3);
    }
  }
  return m;
}

Outcome ac9() {
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentMatrix m = random_matrix(static_cast<std::size_t>(uniform(1, 5)));
    out.expect(determinant_cofactor(m) == determinant_bareiss(m), "cofactor != Bareiss");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = testing::random_nonzero_laurent(2, 6, 4, 5);
    const LaurentPoly unit = LaurentPoly::monomial({uniform(-5, 5), uniform(-5, 5)}, uniform(0, 1) ? 1 : -1);
    out.expect(torsion_normal_form(p * unit) == torsion_normal_form(p), "unit changed the class");
  }
  const std::vector<Generator> gens{"a", "b", "x"};
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(gens, 14);
    GroupRingElement sum;
    for (const auto& g : gens) {
      sum += fox_derivative(w, g) * (GroupRingElement(Word::generator(g)) - GroupRingElement::one());
    }
    out.expect(sum == GroupRingElement(w) - GroupRingElement::one(), "fundamental identity fails");
  }
  for (int trial = 0; trial < 100; ++trial) {
    const TorsionClass t1 = torsion_normal_form(testing::random_nonzero_laurent(2, 6, 3, 4));
    LaurentPoly image = apply_linear(t1.representative(), testing::random_unimodular2())
                            .shifted({uniform(-3, 3), uniform(-3, 3)});
    if (uniform(0, 1)) image = -image;
    const TorsionClass t2 = torsion_normal_form(image);
    const auto v = compare_torsion(t1, t2);
    out.expect(v.kind == VerdictKind::Equivalent && v.witness &&
                   apply_witness(t1.representative(), *v.witness) == t2.representative(),
               "random affine image not recovered");
  }
  return out;
}

Outcome ac10() {
  Outcome out;
  for (std::int64_t n = 1; n <= 5; ++n) {
    out.expect(hull(n, Surface::S).edge_length_multiset() == sorted({n, 1, 4, n, 1, 4}),
               "tau(Y_" + std::to_string(n) + ") edge lengths");
    out.expect(hull(n, Surface::SPrime).edge_length_multiset() == sorted({n, 1, 2, n, 1, 2}),
               "tau(Y'_" + std::to_string(n) + ") edge lengths");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "tau(Y_0) regression", 1.0, ac1},
      {"AC2", "tau(Y'_0) regression and central symmetry", 1.0, ac2},
      {"AC3", "tau(Y_1) and tau(Y'_1) regression", 1.0, ac3},
      {"AC4", "n = -1 pair, parallelogram hulls", 1.0, ac4},
      {"AC5", "inequivalence sweep n = -1..5", 10.0, ac5},
      {"AC6", "coefficient sums 6+12n", 5.0, ac6},
      {"AC7", "q_n recurrence, closed form and q'_n", 5.0, ac7},
      {"AC8", "solid torus ranks and tensor totals", 1.0, ac8},
      {"AC9", "property suites", 60.0, ac9},
      {"AC10", "hexagon edge lattice lengths n = 1..5", 5.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds >= c.budget_seconds) {
      out = {false, "over time budget"};
    }
    failures += out.ok ? 0 : 1;
    std::printf("[%s] %-4s %-45s %8.3f s (limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title,
                seconds, c.budget_seconds, out.ok ? "" : "  ", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
