#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmh/geometry.hpp"

namespace pmh {

/// Ingestion summary. `skipped` entries carry the line number (1-based) and
/// the reason so callers can log or surface them.
struct ParseReport {
  std::size_t records = 0;
  std::size_t accepted = 0;
  std::vector<std::pair<std::size_t, std::string>> skipped;
  std::size_t holes_dropped = 0;        // interior rings discarded
  std::size_t multipolygon_reduced = 0; // kept largest member only
};

/// Parses one geometry per line: `POLYGON (...)` or `MULTIPOLYGON (...)`,
/// optionally preceded by an integer id and a tab. Without an id column,
/// ids are assigned by 0-based line order. Only exterior rings are kept;
/// a MULTIPOLYGON contributes its largest-area member. Records failing
/// validation are skipped and reported, never fatal.
std::vector<Polygon> parse_wkt(std::istream& in, ParseReport* report = nullptr);

std::vector<Polygon> parse_wkt_string(std::string_view text,
                                      ParseReport* report = nullptr);

/// Throws Error(io) when the file cannot be opened.
std::vector<Polygon> parse_wkt_file(const std::string& path,
                                    ParseReport* report = nullptr);

/// Single-record convenience: parses exactly one POLYGON/MULTIPOLYGON.
/// Throws Error(format) on malformed text or invalid rings.
Polygon parse_wkt_one(std::string_view text);

/// Writes `POLYGON ((...))` records, one per line, with shortest
/// round-trip number formatting. With `with_ids`, each line is prefixed
/// by `id<TAB>`.
void write_wkt(std::ostream& out, std::span<const Polygon> polygons,
               bool with_ids = false);

std::string to_wkt(const Polygon& p);

}  // namespace pmh
