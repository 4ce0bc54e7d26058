#include "lagcert/polygon.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace lagcert {

namespace {

Rational slope_between(const PolygonPoint& a, const PolygonPoint& b) {
  return make_rational(Integer(static_cast<long>(b.height - a.height)),
                       Integer(static_cast<long>(b.index - a.index)));
}

// Cross product of (a - o) and (b - o); positive for a counterclockwise turn.
Integer cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  const Integer ax(static_cast<long>(a.index - o.index)), ay(static_cast<long>(a.height - o.height));
  const Integer bx(static_cast<long>(b.index - o.index)), by(static_cast<long>(b.height - o.height));
  return ax * by - ay * bx;
}

void require_increasing(std::span<const PolygonPoint> points) {
  if (points.size() < 2) throw std::invalid_argument("polygon needs at least two points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].index <= points[i - 1].index) {
      throw std::invalid_argument("polygon points must have strictly increasing indices");
    }
  }
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<PolygonPoint> vertices) : vertices_(std::move(vertices)) {}

std::vector<PolygonEdge> NewtonPolygon::edges() const {
  std::vector<PolygonEdge> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i - 1], vertices_[i], slope_between(vertices_[i - 1], vertices_[i])});
  }
  return out;
}

std::vector<Rational> NewtonPolygon::slopes() const {
  std::vector<Rational> out;
  for (const auto& e : edges()) out.push_back(e.slope);
  return out;
}

std::vector<PolygonPoint> polygon_points(const PhiExpansion& expansion, const Integer& p) {
  std::vector<PolygonPoint> pts;
  if (expansion.parts.empty()) return pts;
  const auto n = static_cast<std::int64_t>(expansion.parts.size()) - 1;
  for (std::int64_t i = 0; i <= n; ++i) {
    const IntPoly& part = expansion.parts[static_cast<std::size_t>(n - i)];
    if (part.is_zero()) continue;
    pts.push_back({i, gauss_valuation(p, part).value()});
  }
  return pts;
}

NewtonPolygon lower_hull(std::span<const PolygonPoint> points) {
  require_increasing(points);
  std::vector<PolygonPoint> hull;
  for (const PolygonPoint& pt : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  return NewtonPolygon(std::move(hull));
}

NewtonPolygon build_polygon(const PhiExpansion& expansion, const Integer& p) {
  if (expansion.parts.empty()) throw std::invalid_argument("cannot build a polygon of zero");
  if (expansion.parts.front().is_zero()) {
    throw std::invalid_argument("constant part of the expansion is zero: f is divisible by phi");
  }
  if (expansion.parts.back().is_zero()) throw std::invalid_argument("leading part of the expansion is zero");
  const auto pts = polygon_points(expansion, p);
  if (pts.size() == 1) return NewtonPolygon(pts);
  return lower_hull(pts);
}

NewtonPolygon bruteforce_lower_hull(std::span<const PolygonPoint> points) {
  require_increasing(points);
  std::vector<PolygonPoint> vertices{points.front()};
  std::size_t cur = 0;
  while (cur + 1 < points.size()) {
    std::optional<Rational> best;
    std::size_t best_j = cur + 1;
    for (std::size_t j = cur + 1; j < points.size(); ++j) {
      const Rational s = slope_between(points[cur], points[j]);
      if (!best || s <= *best) {
        best = s;
        best_j = j;
      }
    }
    vertices.push_back(points[best_j]);
    cur = best_j;
  }
  return NewtonPolygon(std::move(vertices));
}

Rational rightmost_slope(const NewtonPolygon& polygon) {
  if (polygon.edge_count() == 0) throw std::invalid_argument("polygon has no edges");
  const auto& v = polygon.vertices();
  return slope_between(v[v.size() - 2], v.back());
}

Rational rightmost_slope_formula(const PhiExpansion& expansion, const Integer& p) {
  if (expansion.parts.empty() || expansion.parts.front().is_zero()) {
    throw std::invalid_argument("constant part of the expansion is zero");
  }
  const std::int64_t v0 = gauss_valuation(p, expansion.parts.front()).value();
  std::optional<Rational> best;
  for (std::size_t j = 1; j < expansion.parts.size(); ++j) {
    if (expansion.parts[j].is_zero()) continue;
    const std::int64_t vj = gauss_valuation(p, expansion.parts[j]).value();
    Rational s = make_rational(Integer(static_cast<long>(v0 - vj)), Integer(static_cast<unsigned long>(j)));
    if (!best || s > *best) best = s;
  }
  if (!best) throw std::invalid_argument("expansion has a single part; no edge exists");
  return *best;
}

Rational rightmost_slope_formula(std::span<const std::int64_t> heights) {
  if (heights.size() < 2) throw std::invalid_argument("need at least two heights");
  std::optional<Rational> best;
  for (std::size_t j = 1; j < heights.size(); ++j) {
    Rational s = make_rational(Integer(static_cast<long>(heights[0] - heights[j])),
                               Integer(static_cast<unsigned long>(j)));
    if (!best || s > *best) best = s;
  }
  return *best;
}

bool lies_on_or_above(const NewtonPolygon& polygon, std::span<const PolygonPoint> points) {
  const auto& v = polygon.vertices();
  for (const PolygonPoint& pt : points) {
    if (pt.index < v.front().index || pt.index > v.back().index) return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (pt.index > v[i].index) continue;
      // pt lies within edge i-1 -> i; require it on the left of or on the edge line.
      if (cross(v[i - 1], v[i], pt) < 0) return false;
      break;
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const NewtonPolygon& polygon) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : polygon.vertices()) j["vertices"].push_back({v.index, v.height});
  j["slopes"] = nlohmann::ordered_json::array();
  for (const auto& s : polygon.slopes()) j["slopes"].push_back(rational_to_string(s));
  return j;
}

std::string to_text(const NewtonPolygon& polygon) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : polygon.vertices()) os << " (" << v.index << "," << v.height << ")";
  os << "\n";
  for (const auto& e : polygon.edges()) {
    os << "edge (" << e.from.index << "," << e.from.height << ") -> (" << e.to.index << ","
       << e.to.height << ") slope " << rational_to_string(e.slope) << "\n";
  }
  return os.str();
}

}  // namespace lagcert
