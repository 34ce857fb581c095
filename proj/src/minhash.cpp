#include "pmh/minhash.hpp"

#include <string>

#include "pmh/errors.hpp"

namespace pmh {

SeedArray SeedArray::sequential(std::uint64_t base_seed, std::uint32_t m) {
  SeedArray out;
  out.values.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) out.values.push_back(base_seed + i);
  return out;
}

bool SeedArray::is_sequential() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != values[0] + i) return false;
  }
  return !values.empty();
}

std::size_t SignatureHash::operator()(const Signature& s) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : s.values) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

SamplingDomain make_domain(const Rect& global_mbr, std::uint32_t m,
                           std::uint64_t base_seed,
                           std::uint32_t max_attempts) {
  if (m < 1) throw Error(ErrorClass::config, "signature length m must be >= 1");
  if (max_attempts < 1) {
    throw Error(ErrorClass::config, "max_attempts must be >= 1");
  }
  if (!(global_mbr.width() > 0.0) || !(global_mbr.height() > 0.0)) {
    throw Error(ErrorClass::config, "sampling box must have positive extent");
  }
  return SamplingDomain{global_mbr, SeedArray::sequential(base_seed, m),
                        max_attempts};
}

Rect global_mbr(std::span<const Polygon> polygons) {
  if (polygons.empty()) {
    throw Error(ErrorClass::config, "global MBR of an empty dataset");
  }
  Rect box = local_mbr(polygons.front());
  for (const Polygon& p : polygons.subspan(1)) {
    box = box.merged(local_mbr(p));
  }
  return box;
}

Point sample_point(const SamplingDomain& domain, std::uint32_t slot,
                   std::uint32_t attempt) {
  if (slot >= domain.m()) {
    throw Error(ErrorClass::config, "slot out of range");
  }
  if (attempt < 1) {
    throw Error(ErrorClass::config, "attempt indices are 1-based");
  }
  PointSequence seq(domain.global_mbr, domain.seeds.values[slot]);
  Point pt = seq.next();
  for (std::uint32_t i = 1; i < attempt; ++i) pt = seq.next();
  return pt;
}

Signature minhash_signature(const Polygon& p, const SamplingDomain& domain) {
  Signature sig;
  sig.values.reserve(domain.m());
  const Rect bounds = local_mbr(p);
  for (std::uint64_t seed : domain.seeds.values) {
    PointSequence seq(domain.global_mbr, seed);
    std::uint32_t attempts = 0;
    for (;;) {
      if (attempts == domain.max_attempts) {
        throw Error(ErrorClass::budget,
                    "polygon " + std::to_string(p.id) + " exceeded " +
                        std::to_string(domain.max_attempts) +
                        " sampling attempts in one slot");
      }
      ++attempts;
      const Point pt = seq.next();
      if (!bounds.contains(pt)) continue;  // cheap local-MBR reject
      if (contains(p, pt)) break;
    }
    sig.values.push_back(attempts);
  }
  return sig;
}

double sparsity(const Polygon& p, const SamplingDomain& domain) {
  return area(p) / domain.global_mbr.area();
}

AttemptMoments attempt_moments(double s) {
  if (!(s > 0.0) || s > 1.0) {
    throw Error(ErrorClass::config,
                "sparsity must be in (0, 1], got " + std::to_string(s));
  }
  return AttemptMoments{1.0 / s, (1.0 - s) / (s * s)};
}

}  // namespace pmh
