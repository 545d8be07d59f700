#include "sutured/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "sutured/abelian.hpp"
#include "sutured/error.hpp"

namespace sutured {

namespace {

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

LatticeEdge edge_between(const Point2& from, const Point2& to) {
  const std::int64_t dx = to[0] - from[0];
  const std::int64_t dy = to[1] - from[1];
  const std::int64_t g = std::gcd(dx, dy);
  return LatticeEdge{{dx / g, dy / g}, g};
}

Point2 negate(const Point2& p) { return {-p[0], -p[1]}; }

// Returns e with det[d e] = 1 for a primitive d.
Point2 basis_completion(const Point2& d) {
  // Extended Euclid on (d0, d1): s*d0 + t*d1 = 1, then e = (-t, s).
  std::int64_t old_r = d[0], r = d[1];
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {-old_t, old_s};
}

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

Matrix2 from_columns(const Point2& c0, const Point2& c1) {
  return {{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

// Solves U * B = C for integer unimodular U, if one exists.
std::optional<Matrix2> solve_unimodular(const Matrix2& b, const Matrix2& c) {
  const std::int64_t det_b = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  if (det_b == 0) return std::nullopt;
  const Matrix2 adj{{{b[1][1], -b[0][1]}, {-b[1][0], b[0][0]}}};
  Matrix2 u{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::int64_t num = c[i][0] * adj[0][j] + c[i][1] * adj[1][j];
      if (num % det_b != 0) return std::nullopt;
      u[i][j] = num / det_b;
    }
  }
  const std::int64_t det_u = u[0][0] * u[1][1] - u[0][1] * u[1][0];
  if (det_u != 1 && det_u != -1) return std::nullopt;
  return u;
}

bool maps_vertices(const AffineMap2& map, const LatticePolygon& from, const LatticePolygon& to) {
  std::set<Point2> target(to.vertices.begin(), to.vertices.end());
  std::set<Point2> image;
  for (const Point2& v : from.vertices) image.insert(map.apply(v));
  return image == target;
}

}  // namespace

SupportSet support(const TorsionClass& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroTorsion, "the zero class has empty support");
  SupportSet s;
  s.rank = t.rank();
  for (const auto& [e, c] : t.representative().terms()) s.points.push_back(e);
  return s;
}

std::size_t affine_dimension(const SupportSet& s) {
  if (s.points.size() <= 1 || s.rank == 0) return 0;
  const std::size_t rows = s.points.size() - 1;
  IntMatrix diffs(rows, std::vector<BigInt>(s.rank));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < s.rank; ++j) diffs[i][j] = s.points[i + 1][j] - s.points[0][j];
  }
  return smith_normal_form(diffs, rows, s.rank).rank;
}

std::int64_t LatticePolygon::normalized_area() const {
  if (dimension < 2) return 0;
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % vertices.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice;
}

std::int64_t LatticePolygon::boundary_points() const {
  if (dimension == 0) return 1;
  if (dimension == 1) return edges.front().length + 1;
  std::int64_t total = 0;
  for (const LatticeEdge& e : edges) total += e.length;
  return total;
}

std::int64_t LatticePolygon::lattice_points() const {
  if (dimension < 2) return boundary_points();
  const std::int64_t b = boundary_points();
  const std::int64_t interior = (normalized_area() - b + 2) / 2;
  return interior + b;
}

std::vector<std::int64_t> LatticePolygon::edge_length_multiset() const {
  std::vector<std::int64_t> lengths;
  for (const LatticeEdge& e : edges) lengths.push_back(e.length);
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

LatticePolygon convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePolygon poly;
  if (points.size() == 1) {
    poly.vertices = points;
    return poly;
  }

  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);

  if (hull.size() == 2) {
    poly.dimension = 1;
    poly.vertices = hull;
    const LatticeEdge e = edge_between(hull[0], hull[1]);
    poly.edges = {e, LatticeEdge{negate(e.direction), e.length}};
    return poly;
  }
  poly.dimension = 2;
  poly.vertices = hull;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    poly.edges.push_back(edge_between(hull[i], hull[(i + 1) % hull.size()]));
  }
  return poly;
}

LatticePolygon newton_polytope(const SupportSet& s) {
  if (s.rank > 2) {
    throw Error(ErrorKind::RankUnsupported,
                "Newton polygon needs rank <= 2, got rank " + std::to_string(s.rank));
  }
  if (s.points.empty()) throw Error(ErrorKind::ZeroTorsion, "empty support");
  std::vector<Point2> pts;
  for (const Exponent& e : s.points) {
    pts.push_back({s.rank > 0 ? e[0] : 0, s.rank > 1 ? e[1] : 0});
  }
  return convex_hull(std::move(pts));
}

LatticePolygon scaled(const LatticePolygon& p, std::int64_t factor) {
  LatticePolygon out = p;
  for (Point2& v : out.vertices) v = {v[0] * factor, v[1] * factor};
  for (LatticeEdge& e : out.edges) e.length *= factor;
  return out;
}

LatticePolygon sfh_polytope(const TorsionClass& t) {
  return scaled(newton_polytope(support(t)), 2);
}

Point2 AffineMap2::apply_linear(const Point2& p) const {
  return {matrix[0][0] * p[0] + matrix[0][1] * p[1], matrix[1][0] * p[0] + matrix[1][1] * p[1]};
}

Point2 AffineMap2::apply(const Point2& p) const {
  const Point2 q = apply_linear(p);
  return {q[0] + translation[0], q[1] + translation[1]};
}

std::int64_t AffineMap2::det() const {
  return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
}

std::vector<AffineMap2> polygon_affine_maps(const LatticePolygon& from, const LatticePolygon& to) {
  std::vector<AffineMap2> maps;
  if (from.dimension != to.dimension || from.vertices.size() != to.vertices.size()) return maps;
  if (from.edge_length_multiset() != to.edge_length_multiset()) return maps;

  auto add_if_valid = [&](const Matrix2& u, const Point2& source, const Point2& target) {
    AffineMap2 map;
    map.matrix = u;
    const Point2 moved = map.apply_linear(source);
    map.translation = {target[0] - moved[0], target[1] - moved[1]};
    if (!maps_vertices(map, from, to)) return;
    const bool seen = std::any_of(maps.begin(), maps.end(), [&](const AffineMap2& m) {
      return m.matrix == map.matrix && m.translation == map.translation;
    });
    if (!seen) maps.push_back(map);
  };

  if (from.dimension == 0) {
    add_if_valid(Matrix2{{{1, 0}, {0, 1}}}, from.vertices[0], to.vertices[0]);
    return maps;
  }

  if (from.dimension == 1) {
    const Point2 d1 = from.edges[0].direction;
    const Point2 d2 = to.edges[0].direction;
    const Matrix2 b = from_columns(d1, basis_completion(d1));
    const Point2 e2 = basis_completion(d2);
    if (auto u = solve_unimodular(b, from_columns(d2, e2))) {
      add_if_valid(*u, from.vertices[0], to.vertices[0]);
    }
    if (auto u = solve_unimodular(b, from_columns(negate(d2), e2))) {
      add_if_valid(*u, from.vertices[0], to.vertices[1]);
    }
    return maps;
  }

  // A unimodular map of polygons sends each vertex to a vertex and its two
  // primitive edge directions to the edge directions there, in either order.
  const std::size_t n = from.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 next1 = from.edges[i].direction;
    const Point2 prev1 = negate(from.edges[(i + n - 1) % n].direction);
    const Matrix2 b = from_columns(next1, prev1);
    for (std::size_t j = 0; j < n; ++j) {
      const Point2 next2 = to.edges[j].direction;
      const Point2 prev2 = negate(to.edges[(j + n - 1) % n].direction);
      if (auto u = solve_unimodular(b, from_columns(next2, prev2))) {
        add_if_valid(*u, from.vertices[i], to.vertices[j]);
      }
      if (auto u = solve_unimodular(b, from_columns(prev2, next2))) {
        add_if_valid(*u, from.vertices[i], to.vertices[j]);
      }
    }
  }
  return maps;
}

std::optional<AffineMap2> polygon_affine_equivalent(const LatticePolygon& from,
                                                    const LatticePolygon& to) {
  auto maps = polygon_affine_maps(from, to);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

}  // namespace sutured
