#include "pmh/jaccard.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "pmh/errors.hpp"

namespace bg = boost::geometry;

namespace pmh {

namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;  // clockwise, closed
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;

BgPolygon to_boost(const Polygon& p) {
  BgPolygon out;
  out.outer().reserve(p.vertices.size() + 1);
  for (const Point& v : p.vertices) {
    out.outer().emplace_back(v.x, v.y);
  }
  bg::correct(out);  // closes the ring and fixes orientation
  return out;
}

double clipped_intersection_area(const BgPolygon& a, const BgPolygon& b,
                                 std::uint64_t id_a, std::uint64_t id_b,
                                 double area_a, double area_b) {
  BgMultiPolygon pieces;
  try {
    bg::intersection(a, b, pieces);
  } catch (const std::exception& e) {
    throw Error(ErrorClass::clip, "intersection of polygons " +
                                      std::to_string(id_a) + " and " +
                                      std::to_string(id_b) + " failed: " +
                                      e.what());
  }
  const double inter = bg::area(pieces);
  const double cap = std::min(area_a, area_b);
  if (inter < 0.0 || inter > cap * (1.0 + 1e-9) + 1e-12) {
    throw Error(ErrorClass::clip,
                "impossible intersection area for polygons " +
                    std::to_string(id_a) + " and " + std::to_string(id_b));
  }
  return std::min(inter, cap);
}

double jaccard_from_areas(double inter, double area_a, double area_b) {
  if (inter <= 0.0) return 0.0;
  const double uni = area_a + area_b - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace

struct PreparedPolygon::Impl {
  BgPolygon poly;
};

PreparedPolygon::PreparedPolygon(const Polygon& p)
    : impl_(std::make_unique<Impl>(Impl{to_boost(p)})),
      id_(p.id),
      area_(pmh::area(p)),
      mbr_(local_mbr(p)) {}

PreparedPolygon::PreparedPolygon(PreparedPolygon&&) noexcept = default;
PreparedPolygon& PreparedPolygon::operator=(PreparedPolygon&&) noexcept =
    default;
PreparedPolygon::~PreparedPolygon() = default;

double intersection_area(const PreparedPolygon& p, const PreparedPolygon& q) {
  if (!p.mbr().intersects(q.mbr())) return 0.0;
  return clipped_intersection_area(p.impl_->poly, q.impl_->poly, p.id(),
                                   q.id(), p.area(), q.area());
}

double intersection_area(const Polygon& p, const Polygon& q) {
  if (!local_mbr(p).intersects(local_mbr(q))) return 0.0;
  return clipped_intersection_area(to_boost(p), to_boost(q), p.id, q.id,
                                   area(p), area(q));
}

double jaccard_exact(const Polygon& p, const Polygon& q) {
  return jaccard_from_areas(intersection_area(p, q), area(p), area(q));
}

double jaccard_distance(const Polygon& p, const Polygon& q) {
  return 1.0 - jaccard_exact(p, q);
}

double jaccard_mc(const Polygon& p, const Polygon& q, std::uint64_t n,
                  std::uint64_t seed) {
  const Rect box = local_mbr(p).merged(local_mbr(q));
  std::mt19937_64 gen(seed);
  const auto unit = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  std::uint64_t both = 0, either = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Point pt{box.x_min + unit() * box.width(),
                   box.y_min + unit() * box.height()};
    const bool in_p = contains(p, pt);
    const bool in_q = contains(q, pt);
    if (in_p || in_q) ++either;
    if (in_p && in_q) ++both;
  }
  if (either == 0) return 0.0;
  return static_cast<double>(both) / static_cast<double>(either);
}

}  // namespace pmh
