#include "pmh/wkt.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pmh/errors.hpp"

namespace pmh {

namespace {

// Minimal recursive-descent reader for the POLYGON/MULTIPOLYGON subset.
class WktCursor {
 public:
  explicit WktCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!match(c)) fail(std::string("expected '") + c + "'");
  }

  bool match_keyword(std::string_view kw) {
    skip_ws();
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    }
    pos_ += kw.size();
    return true;
  }

  double parse_double() {
    skip_ws();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorClass::format,
                why + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Point> parse_ring(WktCursor& cur) {
  std::vector<Point> ring;
  cur.expect('(');
  do {
    const double x = cur.parse_double();
    const double y = cur.parse_double();
    ring.push_back(Point{x, y});
  } while (cur.match(','));
  cur.expect(')');
  // drop the explicit closing vertex
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

// rings of one POLYGON body: exterior first, then holes
std::vector<std::vector<Point>> parse_polygon_body(WktCursor& cur) {
  std::vector<std::vector<Point>> rings;
  cur.expect('(');
  do {
    rings.push_back(parse_ring(cur));
  } while (cur.match(','));
  cur.expect(')');
  return rings;
}

struct RawGeometry {
  std::vector<Point> exterior;
  std::size_t holes = 0;
  bool reduced_multi = false;
};

RawGeometry parse_geometry_text(std::string_view text) {
  WktCursor cur(text);
  RawGeometry out;
  if (cur.match_keyword("MULTIPOLYGON")) {
    if (cur.match_keyword("EMPTY")) cur.fail("empty multipolygon");
    cur.expect('(');
    double best_area = -1.0;
    std::size_t members = 0;
    do {
      auto rings = parse_polygon_body(cur);
      ++members;
      out.holes += rings.size() - 1;
      Polygon probe{0, rings.front()};
      const double a = rings.front().size() >= 3 ? area(probe) : 0.0;
      if (a > best_area) {
        best_area = a;
        out.exterior = std::move(rings.front());
      }
    } while (cur.match(','));
    cur.expect(')');
    out.reduced_multi = members > 1;
  } else if (cur.match_keyword("POLYGON")) {
    if (cur.match_keyword("EMPTY")) cur.fail("empty polygon");
    auto rings = parse_polygon_body(cur);
    out.holes = rings.size() - 1;
    out.exterior = std::move(rings.front());
  } else {
    cur.fail("expected POLYGON or MULTIPOLYGON");
  }
  if (!cur.at_end()) cur.fail("trailing characters after geometry");
  return out;
}

// Splits an optional leading `id<TAB>` column. Returns false when there is
// no id column.
bool split_id_column(std::string_view line, std::uint64_t& id,
                     std::string_view& rest) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos) return false;
  const std::string_view head = line.substr(0, tab);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
  if (ec != std::errc{} || ptr != head.data() + head.size()) return false;
  id = value;
  rest = line.substr(tab + 1);
  return true;
}

}  // namespace

std::vector<Polygon> parse_wkt(std::istream& in, ParseReport* report) {
  std::vector<Polygon> out;
  ParseReport local;
  ParseReport& rep = report ? *report : local;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    // skip blank lines silently
    if (sv.find_first_not_of(" \t") == std::string_view::npos) continue;

    ++rep.records;
    std::uint64_t id = rep.records - 1;  // 0-based record order
    std::string_view body = sv;
    split_id_column(sv, id, body);

    try {
      RawGeometry raw = parse_geometry_text(body);
      Polygon poly{id, std::move(raw.exterior)};
      if (auto reason = validate(poly)) {
        rep.skipped.emplace_back(line_no, *reason);
        continue;
      }
      rep.holes_dropped += raw.holes;
      if (raw.reduced_multi) ++rep.multipolygon_reduced;
      out.push_back(std::move(poly));
      ++rep.accepted;
    } catch (const Error& e) {
      rep.skipped.emplace_back(line_no, e.what());
    }
  }
  return out;
}

std::vector<Polygon> parse_wkt_string(std::string_view text,
                                      ParseReport* report) {
  std::istringstream in{std::string(text)};
  return parse_wkt(in, report);
}

std::vector<Polygon> parse_wkt_file(const std::string& path,
                                    ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorClass::io, "cannot open " + path);
  return parse_wkt(in, report);
}

Polygon parse_wkt_one(std::string_view text) {
  RawGeometry raw = parse_geometry_text(text);
  Polygon poly{0, std::move(raw.exterior)};
  if (auto reason = validate(poly)) {
    throw Error(ErrorClass::format, "invalid polygon: " + *reason);
  }
  return poly;
}

namespace {

void append_number(std::string& s, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  s.append(buf, ptr);
}

}  // namespace

std::string to_wkt(const Polygon& p) {
  std::string s = "POLYGON ((";
  for (const Point& v : p.vertices) {
    append_number(s, v.x);
    s.push_back(' ');
    append_number(s, v.y);
    s += ", ";
  }
  // close the ring explicitly
  append_number(s, p.vertices.front().x);
  s.push_back(' ');
  append_number(s, p.vertices.front().y);
  s += "))";
  return s;
}

void write_wkt(std::ostream& out, std::span<const Polygon> polygons,
               bool with_ids) {
  for (const Polygon& p : polygons) {
    if (with_ids) out << p.id << '\t';
    out << to_wkt(p) << '\n';
  }
}

}  // namespace pmh
