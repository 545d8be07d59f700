#include "sutured/equivalence.hpp"

#include <algorithm>

#include "sutured/polytope.hpp"

namespace sutured {

namespace {

IntMatrix64 identity64(std::size_t n) {
  IntMatrix64 m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<BigInt> sorted_coefficients(const TorsionClass& t, bool negated) {
  std::vector<BigInt> out;
  for (const auto& [e, c] : t.representative().terms()) out.push_back(negated ? BigInt(-c) : c);
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceVerdict not_equivalent(std::string reason) {
  return {VerdictKind::NotEquivalent, std::nullopt, std::move(reason)};
}

// Tries U on t1; on success returns the witness mapping rep(t1) to rep(t2).
std::optional<EquivalenceWitness> try_linear(const TorsionClass& t1, const TorsionClass& t2,
                                             const IntMatrix64& u) {
  const UnitNormalization n = normalize_with_unit(apply_linear(t1.representative(), u));
  if (!(n.torsion == t2)) return std::nullopt;
  return EquivalenceWitness{u, n.shift, n.sign};
}

std::vector<IntMatrix64> candidate_maps(const TorsionClass& t1, const TorsionClass& t2) {
  const std::size_t r = t1.rank();
  if (r == 0) return {identity64(0)};
  if (r == 1) return {IntMatrix64{{1}}, IntMatrix64{{-1}}};
  std::vector<IntMatrix64> out;
  const LatticePolygon p1 = newton_polytope(support(t1));
  const LatticePolygon p2 = newton_polytope(support(t2));
  for (const AffineMap2& m : polygon_affine_maps(p1, p2)) {
    out.push_back({{m.matrix[0][0], m.matrix[0][1]}, {m.matrix[1][0], m.matrix[1][1]}});
  }
  return out;
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Equivalent: return "Equivalent";
    case VerdictKind::NotEquivalent: return "NotEquivalent";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

LaurentPoly apply_linear(const LaurentPoly& p, const IntMatrix64& u) {
  LaurentPoly out(u.size());
  for (const auto& [e, c] : p.terms()) {
    Exponent image(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) image[i] += u[i][j] * e[j];
    }
    out.add_term(image, c);
  }
  return out;
}

LaurentPoly apply_witness(const LaurentPoly& p, const EquivalenceWitness& w) {
  return apply_linear(p, w.matrix).shifted(w.translation) * BigInt(w.sign);
}

EquivalenceVerdict compare_torsion(const TorsionClass& t1, const TorsionClass& t2) {
  if (t1.rank() != t2.rank()) return not_equivalent("rank");
  const std::size_t r = t1.rank();
  if (t1.is_zero() || t2.is_zero()) {
    if (t1.is_zero() && t2.is_zero()) {
      return {VerdictKind::Equivalent, EquivalenceWitness{identity64(r), Exponent(r, 0), 1}, {}};
    }
    return not_equivalent("zero torsion");
  }

  // Invariant battery.
  const auto c1 = sorted_coefficients(t1, false);
  if (c1 != sorted_coefficients(t2, false) && c1 != sorted_coefficients(t2, true)) {
    return not_equivalent("coefficient multiset");
  }
  const SupportSet s1 = support(t1);
  const SupportSet s2 = support(t2);
  if (s1.points.size() != s2.points.size()) return not_equivalent("support size");
  if (affine_dimension(s1) != affine_dimension(s2)) return not_equivalent("hull dimension");
  if (r == 2) {
    const LatticePolygon p1 = newton_polytope(s1);
    const LatticePolygon p2 = newton_polytope(s2);
    if (p1.normalized_area() != p2.normalized_area()) return not_equivalent("normalized area");
    if (p1.edge_length_multiset() != p2.edge_length_multiset()) {
      return not_equivalent("edge lattice lengths");
    }
    if (p1.lattice_points() != p2.lattice_points()) return not_equivalent("hull lattice point count");
  }

  if (r > 2) {
    if (auto w = try_linear(t1, t2, identity64(r))) {
      return {VerdictKind::Equivalent, std::move(w), {}};
    }
    return {VerdictKind::Inconclusive, std::nullopt, "rank above 2"};
  }

  for (const IntMatrix64& u : candidate_maps(t1, t2)) {
    if (auto w = try_linear(t1, t2, u)) return {VerdictKind::Equivalent, std::move(w), {}};
  }
  return not_equivalent("no hull-compatible map matches coefficients");
}

}  // namespace sutured
