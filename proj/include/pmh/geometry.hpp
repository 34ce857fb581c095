#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pmh {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

/// Axis-aligned rectangle. Degenerate (zero width/height) rects are legal
/// as intermediate values; sampling domains require positive extent.
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }

  bool contains(Point p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  bool contains(const Rect& r) const {
    return r.x_min >= x_min && r.x_max <= x_max && r.y_min >= y_min &&
           r.y_max <= y_max;
  }
  bool intersects(const Rect& r) const {
    return r.x_min <= x_max && r.x_max >= x_min && r.y_min <= y_max &&
           r.y_max >= y_min;
  }

  /// Smallest rect covering both.
  Rect merged(const Rect& r) const;
  /// Overlap region; zero-area rect at the boundary when they only touch.
  /// Callers should test intersects() first.
  Rect intersection(const Rect& r) const;

  bool operator==(const Rect&) const = default;
};

/// A single closed ring. The first vertex is not repeated; the closing edge
/// from the last vertex back to the first is implicit. Valid polygons have
/// at least 3 vertices, finite coordinates, and strictly positive area.
struct Polygon {
  std::uint64_t id = 0;
  std::vector<Point> vertices;
};

/// Signed shoelace area: positive for counter-clockwise rings.
double signed_area(const Polygon& p);

/// |signed_area|, independent of vertex orientation.
double area(const Polygon& p);

/// Area-weighted centroid (first moment of the enclosed region),
/// not the vertex average.
Point centroid(const Polygon& p);

/// Copy of p translated so its centroid sits at the origin.
Polygon centered(const Polygon& p);

/// Tight axis-aligned bounds over the vertices.
Rect local_mbr(const Polygon& p);

/// Even-odd ray-casting test with half-open edges: interior points are
/// inside, exterior points are outside, and points exactly on an edge get a
/// deterministic but arbitrary answer.
bool contains(const Polygon& p, Point pt);

/// Validation applied at ingestion. Returns a reason string for rejects,
/// nullopt for polygons that pass. Rings with more vertices than
/// `simplicity_scan_limit` skip the quadratic self-intersection scan and are
/// accepted optimistically.
std::optional<std::string> validate(const Polygon& p,
                                    std::size_t simplicity_scan_limit = 256);

/// Immutable polygon collection with O(1) id lookup.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Polygon> polygons, std::string name = "");

  const std::vector<Polygon>& polygons() const { return polygons_; }
  std::size_t size() const { return polygons_.size(); }
  const std::string& name() const { return name_; }

  /// nullptr when the id is not present.
  const Polygon* find(std::uint64_t id) const;

  /// Order-sensitive hash of ids and coordinates; used to detect
  /// index/dataset mismatches.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<Polygon> polygons_;
  std::unordered_map<std::uint64_t, std::size_t> by_id_;
  std::string name_;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace pmh
