#pragma once

// Supports of torsion classes, Newton polygons with lattice edge data, and
// unimodular-affine equivalence of lattice polygons.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sutured/laurent.hpp"
#include "sutured/torsion.hpp"

namespace sutured {

struct SupportSet {
  std::size_t rank = 0;
  std::vector<Exponent> points;  // graded-lex ascending
};

// Throws ZeroTorsion for the zero class.
SupportSet support(const TorsionClass& t);

// Dimension of the affine span of the points.
std::size_t affine_dimension(const SupportSet& s);

using Point2 = std::array<std::int64_t, 2>;

struct LatticeEdge {
  Point2 direction;     // primitive
  std::int64_t length;  // number of primitive steps

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

// A point (dimension 0), a segment (dimension 1, traversed there and back)
// or a convex polygon with counterclockwise vertices.
struct LatticePolygon {
  int dimension = 0;
  std::vector<Point2> vertices;
  std::vector<LatticeEdge> edges;

  // Twice the Euclidean area.
  std::int64_t normalized_area() const;
  std::int64_t boundary_points() const;
  // Lattice points in the closed polygon, by Pick's theorem.
  std::int64_t lattice_points() const;
  // Sorted edge lattice lengths.
  std::vector<std::int64_t> edge_length_multiset() const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

LatticePolygon convex_hull(std::vector<Point2> points);

// Rank 2 supports give their hull; rank 1 and 0 are embedded on the first
// axis. Throws RankUnsupported for rank > 2.
LatticePolygon newton_polytope(const SupportSet& s);

LatticePolygon scaled(const LatticePolygon& p, std::int64_t factor);

// Hull of the support with coordinates doubled (first Chern class image).
LatticePolygon sfh_polytope(const TorsionClass& t);

struct AffineMap2 {
  std::array<std::array<std::int64_t, 2>, 2> matrix{};
  Point2 translation{};

  Point2 apply(const Point2& p) const;
  Point2 apply_linear(const Point2& p) const;
  std::int64_t det() const;
};

// Every unimodular affine map carrying the vertex set of `from` onto that of
// `to`, in a fixed enumeration order. Segment maps complete the edge
// direction to a lattice basis; any completion is a valid witness.
std::vector<AffineMap2> polygon_affine_maps(const LatticePolygon& from, const LatticePolygon& to);

std::optional<AffineMap2> polygon_affine_equivalent(const LatticePolygon& from,
                                                    const LatticePolygon& to);

}  // namespace sutured
