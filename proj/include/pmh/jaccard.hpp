#pragma once

#include <cstdint>
#include <memory>

#include "pmh/geometry.hpp"

namespace pmh {

/// Polygon pre-converted for repeated clipping. Building one is cheap but
/// not free; the refinement hot path keeps a per-dataset cache.
class PreparedPolygon {
 public:
  explicit PreparedPolygon(const Polygon& p);
  PreparedPolygon(PreparedPolygon&&) noexcept;
  PreparedPolygon& operator=(PreparedPolygon&&) noexcept;
  ~PreparedPolygon();

  std::uint64_t id() const { return id_; }
  double area() const { return area_; }
  const Rect& mbr() const { return mbr_; }

  friend double intersection_area(const PreparedPolygon&,
                                  const PreparedPolygon&);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::uint64_t id_;
  double area_;
  Rect mbr_;
};

/// Area of p ∩ q by exact clipping. Throws Error(clip) naming both ids when
/// the clipper produces an impossible result (self-intersecting rings that
/// slipped past ingestion).
double intersection_area(const Polygon& p, const Polygon& q);
double intersection_area(const PreparedPolygon& p, const PreparedPolygon& q);

/// Area(p∩q) / Area(p∪q) in [0,1].
double jaccard_exact(const Polygon& p, const Polygon& q);

/// 1 − jaccard_exact.
double jaccard_distance(const Polygon& p, const Polygon& q);

/// Monte Carlo estimate: n uniform samples over the joint MBR;
/// (#in both)/(#in either), 0 when no sample lands in either.
double jaccard_mc(const Polygon& p, const Polygon& q, std::uint64_t n,
                  std::uint64_t seed);

}  // namespace pmh
