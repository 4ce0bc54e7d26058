#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagcert/numeric.hpp"
#include "lagcert/poly.hpp"

namespace lagcert {

/// Point (i, v_p^x(b_{n-i})) of a phi-Newton polygon. The x-axis runs from the
/// leading part (index 0 holds b_n) to the constant part (index n holds b_0).
/// Parts equal to zero are never materialized.
struct PolygonPoint {
  std::int64_t index = 0;
  std::int64_t height = 0;

  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonEdge {
  PolygonPoint from;
  PolygonPoint to;
  Rational slope;

  friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

/// Lower convex path from the first point to the last one; slopes strictly increase.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<PolygonPoint> vertices);

  const std::vector<PolygonPoint>& vertices() const { return vertices_; }
  std::vector<PolygonEdge> edges() const;
  std::vector<Rational> slopes() const;
  std::size_t edge_count() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<PolygonPoint> vertices_;
};

/// Materialized points of the expansion with respect to p.
std::vector<PolygonPoint> polygon_points(const PhiExpansion& expansion, const Integer& p);

/// Lower hull by a monotone chain over points with strictly increasing index.
/// Collinear interior points are dropped, so ties resolve to the largest index.
NewtonPolygon lower_hull(std::span<const PolygonPoint> points);

/// phi-Newton polygon of the expansion with respect to p. The constant and
/// leading parts must both be nonzero.
NewtonPolygon build_polygon(const PhiExpansion& expansion, const Integer& p);

/// Quadratic reference construction: from each vertex take the minimal slope,
/// breaking ties toward the largest index.
NewtonPolygon bruteforce_lower_hull(std::span<const PolygonPoint> points);

/// Slope of the final edge.
Rational rightmost_slope(const NewtonPolygon& polygon);

/// max over materialized j >= 1 of (v(b_0) - v(b_j)) / j, where b_j are the
/// expansion parts. Equals rightmost_slope(build_polygon(...)).
Rational rightmost_slope_formula(const PhiExpansion& expansion, const Integer& p);
/// Same formula from raw heights v(b_0), ..., v(b_n); heights[j] for part j.
Rational rightmost_slope_formula(std::span<const std::int64_t> heights);

/// True when no point lies strictly below the path.
bool lies_on_or_above(const NewtonPolygon& polygon, std::span<const PolygonPoint> points);

nlohmann::ordered_json to_json(const NewtonPolygon& polygon);
std::string to_text(const NewtonPolygon& polygon);

}  // namespace lagcert
