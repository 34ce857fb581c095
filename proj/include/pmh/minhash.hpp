#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "pmh/geometry.hpp"

namespace pmh {

/// Per-slot generator seeds. Fixed for the lifetime of an index and shared
/// between index build and query hashing; two polygons hashed under the same
/// seeds see the exact same point sequence per slot, which is what makes
/// signature collisions track Jaccard similarity.
struct SeedArray {
  std::vector<std::uint64_t> values;

  static SeedArray sequential(std::uint64_t base_seed, std::uint32_t m);

  /// True when values[i] == values[0] + i; the on-disk index format only
  /// records the base seed, so persisted domains must be sequential.
  bool is_sequential() const;

  bool operator==(const SeedArray&) const = default;
};

/// Length-m vector of attempt counts, every entry ≥ 1. Exact-match key for
/// index buckets; compares lexicographically.
struct Signature {
  std::vector<std::uint32_t> values;

  auto operator<=>(const Signature&) const = default;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const;
};

/// Everything needed to hash consistently: the shared sampling box B, the
/// per-slot seeds, and the attempt cap that turns pathologically sparse
/// polygons into explicit errors instead of stalls.
struct SamplingDomain {
  Rect global_mbr;
  SeedArray seeds;
  std::uint32_t max_attempts = 10'000'000;

  std::uint32_t m() const { return static_cast<std::uint32_t>(seeds.values.size()); }

  bool operator==(const SamplingDomain&) const = default;
};

/// Validating constructor with the sequential seed layout used everywhere
/// outside of tests. Throws Error(config) on m < 1 or a degenerate box.
SamplingDomain make_domain(const Rect& global_mbr, std::uint32_t m,
                           std::uint64_t base_seed = 42,
                           std::uint32_t max_attempts = 10'000'000);

/// Smallest rect covering every polygon's local MBR.
/// Throws Error(config) on empty input.
Rect global_mbr(std::span<const Polygon> polygons);

/// Deterministic uniform point stream over a box. Each point consumes
/// exactly two generator variates (x, then y), so attempt indices line up
/// across polygons no matter where the accept/reject decisions fall.
class PointSequence {
 public:
  PointSequence(const Rect& box, std::uint64_t seed)
      : gen_(seed), box_(box) {}

  Point next() {
    const double x = box_.x_min + unit() * box_.width();
    const double y = box_.y_min + unit() * box_.height();
    return Point{x, y};
  }

 private:
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 gen_;
  Rect box_;
};

/// The attempt-th point (attempt ≥ 1) of slot's sequence, as a pure function
/// of (seed, box). O(attempt); the random-access form exists for tests and
/// diagnostics, hashing walks the sequence incrementally.
Point sample_point(const SamplingDomain& domain, std::uint32_t slot,
                   std::uint32_t attempt);

/// Rejection-sampling hash: per slot, the 1-based index of the first point
/// of that slot's sequence landing inside p. Points rejected by the local
/// MBR pre-check or the point-in-polygon test still consume one attempt.
/// Throws Error(budget) naming p.id when a slot exceeds max_attempts.
Signature minhash_signature(const Polygon& p, const SamplingDomain& domain);

/// area(p) / area(B): the per-sample acceptance probability.
double sparsity(const Polygon& p, const SamplingDomain& domain);

struct AttemptMoments {
  double expected;
  double variance;
};

/// Geometric-distribution moments of the attempt count for acceptance
/// probability s: expected 1/s, variance (1−s)/s².
/// Throws Error(config) unless 0 < s ≤ 1.
AttemptMoments attempt_moments(double s);

}  // namespace pmh
