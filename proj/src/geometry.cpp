#include "pmh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmh/errors.hpp"

namespace pmh {

Rect Rect::merged(const Rect& r) const {
  return Rect{std::min(x_min, r.x_min), std::max(x_max, r.x_max),
              std::min(y_min, r.y_min), std::max(y_max, r.y_max)};
}

Rect Rect::intersection(const Rect& r) const {
  return Rect{std::max(x_min, r.x_min), std::min(x_max, r.x_max),
              std::max(y_min, r.y_min), std::min(y_max, r.y_max)};
}

double signed_area(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  double sum = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    sum += v[j].x * v[i].y - v[i].x * v[j].y;
  }
  return 0.5 * sum;
}

double area(const Polygon& p) { return std::abs(signed_area(p)); }

Point centroid(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double cross = v[j].x * v[i].y - v[i].x * v[j].y;
    a += cross;
    cx += (v[j].x + v[i].x) * cross;
    cy += (v[j].y + v[i].y) * cross;
  }
  // a is twice the signed area; zero-area rings are rejected upstream.
  return Point{cx / (3.0 * a), cy / (3.0 * a)};
}

Polygon centered(const Polygon& p) {
  const Point c = centroid(p);
  Polygon out = p;
  for (auto& v : out.vertices) {
    v.x -= c.x;
    v.y -= c.y;
  }
  return out;
}

Rect local_mbr(const Polygon& p) {
  Rect r{p.vertices.front().x, p.vertices.front().x, p.vertices.front().y,
         p.vertices.front().y};
  for (const Point& v : p.vertices) {
    r.x_min = std::min(r.x_min, v.x);
    r.x_max = std::max(r.x_max, v.x);
    r.y_min = std::min(r.y_min, v.y);
    r.y_max = std::max(r.y_max, v.y);
  }
  return r;
}

bool contains(const Polygon& p, Point pt) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > pt.y) != (v[j].y > pt.y) &&
        pt.x < (v[j].x - v[i].x) * (pt.y - v[i].y) / (v[j].y - v[i].y) +
                   v[i].x) {
      inside = !inside;
    }
  }
  return inside;
}

namespace {

// 0 collinear, 1 clockwise, 2 counter-clockwise
int orientation(Point a, Point b, Point c) {
  const double val = (b.y - a.y) * (c.x - b.x) - (b.x - a.x) * (c.y - b.y);
  if (val == 0.0) return 0;
  return val > 0.0 ? 1 : 2;
}

bool on_segment(Point a, Point b, Point c) {
  return b.x <= std::max(a.x, c.x) && b.x >= std::min(a.x, c.x) &&
         b.y <= std::max(a.y, c.y) && b.y >= std::min(a.y, c.y);
}

bool segments_intersect(Point p1, Point q1, Point p2, Point q2) {
  const int o1 = orientation(p1, q1, p2);
  const int o2 = orientation(p1, q1, q2);
  const int o3 = orientation(p2, q2, p1);
  const int o4 = orientation(p2, q2, q1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, q2, q1)) return true;
  if (o3 == 0 && on_segment(p2, p1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

// Quadratic scan over non-adjacent edge pairs.
bool ring_self_intersects(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a1 = v[i];
    const Point a2 = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // skip the shared-vertex neighbours of edge i
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const Point b1 = v[j];
      const Point b2 = v[(j + 1) % n];
      if (segments_intersect(a1, a2, b1, b2)) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::string> validate(const Polygon& p,
                                    std::size_t simplicity_scan_limit) {
  for (const Point& v : p.vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      return "non-finite coordinate";
    }
  }
  // collapse consecutive duplicates when counting distinct vertices
  std::size_t distinct = 0;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.vertices[i] != p.vertices[(i + 1) % n]) ++distinct;
  }
  if (distinct < 3) return "fewer than 3 distinct vertices";
  if (area(p) <= 0.0) return "zero enclosed area";
  if (n <= simplicity_scan_limit && ring_self_intersects(p.vertices)) {
    return "self-intersecting ring";
  }
  return std::nullopt;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Dataset::Dataset(std::vector<Polygon> polygons, std::string name)
    : polygons_(std::move(polygons)), name_(std::move(name)) {
  by_id_.reserve(polygons_.size());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < polygons_.size(); ++i) {
    const Polygon& p = polygons_[i];
    if (!by_id_.emplace(p.id, i).second) {
      throw Error(ErrorClass::config,
                  "duplicate polygon id " + std::to_string(p.id));
    }
    h = fnv1a(h, &p.id, sizeof(p.id));
    h = fnv1a(h, p.vertices.data(), p.vertices.size() * sizeof(Point));
  }
  fingerprint_ = h;
}

const Polygon* Dataset::find(std::uint64_t id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &polygons_[it->second];
}

const char* error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::io:
      return "io";
    case ErrorClass::format:
      return "format";
    case ErrorClass::config:
      return "config";
    case ErrorClass::budget:
      return "budget";
    case ErrorClass::clip:
      return "clip";
  }
  return "unknown";
}

}  // namespace pmh
