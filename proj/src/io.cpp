#include "greenseq/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "greenseq/error.hpp"

namespace greenseq {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(ErrorKind::ParseError, std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

IceQuiver parse_ice_quiver_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("n")) fail(ErrorKind::ParseError, "expected an object with \"n\"");
  const int n = as_int(doc["n"], "n");
  const int frozen = doc.contains("frozen") ? as_int(doc["frozen"], "frozen") : 0;
  if (n < 0 || frozen < 0 || frozen > n) fail(ErrorKind::ParseError, "bad vertex counts");
  const int mutable_count = n - frozen;
  IntMatrix full(n, n);
  const json arrows = doc.value("arrows", json::array());
  if (!arrows.is_array()) fail(ErrorKind::ParseError, "\"arrows\" must be an array");
  for (const json& a : arrows) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3) fail(ErrorKind::ParseError, "arrow must be [s, t] or [s, t, m]");
    const int s = as_int(a[0], "arrow source");
    const int t = as_int(a[1], "arrow target");
    const int m = a.size() == 3 ? as_int(a[2], "arrow multiplicity") : 1;
    if (s < 1 || s > n || t < 1 || t > n) fail(ErrorKind::ParseError, "arrow endpoint out of range");
    if (s == t) fail(ErrorKind::MalformedQuiver, "loop at vertex " + std::to_string(s));
    if (m < 1) fail(ErrorKind::ParseError, "multiplicity must be positive");
    if (s > mutable_count && t > mutable_count) fail(ErrorKind::MalformedQuiver, "arrow between frozen vertices");
    if (full(t - 1, s - 1) > 0) fail(ErrorKind::MalformedQuiver, "2-cycle between " + std::to_string(s) + " and " + std::to_string(t));
    full(s - 1, t - 1) = checked_add(full(s - 1, t - 1), m);
  }
  IntMatrix b(mutable_count, n);
  for (int i = 0; i < mutable_count; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = checked_sub(full(i, j), full(j, i));
  return IceQuiver(std::move(b), mutable_count);
}

Quiver parse_quiver_json(std::string_view text) {
  const IceQuiver ice = parse_ice_quiver_json(text);
  if (ice.size() != ice.mutable_count()) fail(ErrorKind::ParseError, "frozen vertices are not allowed here");
  return ice.mutable_part();
}

Quiver parse_quiver_matrix(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<Int> row;
    Int x = 0;
    while (in >> x) row.push_back(x);
    if (!in.eof()) fail(ErrorKind::ParseError, "non-integer entry in matrix");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(ErrorKind::ParseError, "matrix must be square");
  try {
    return Quiver::from_exchange_matrix(IntMatrix::from_rows(rows));
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

Quiver parse_quiver(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_quiver_json(text);
  return parse_quiver_matrix(text);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Quiver load_quiver(const std::filesystem::path& path) { return parse_quiver(read_text(path)); }

std::string quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source, a.target, a.multiplicity});
  return json{{"n", q.size()}, {"frozen", 0}, {"arrows", arrows}}.dump();
}

TaggedTriangulation parse_triangulation_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("boundary_points") || !doc.contains("arcs") || !doc["arcs"].is_array())
    fail(ErrorKind::ParseError, "expected \"boundary_points\" and an \"arcs\" array");
  const int b = as_int(doc["boundary_points"], "boundary_points");
  std::vector<TaggedArc> arcs;
  for (const json& a : doc["arcs"]) {
    if (!a.is_object() || !a.contains("type")) fail(ErrorKind::ParseError, "arc must be an object with \"type\"");
    const std::string type = a["type"].is_string() ? a["type"].get<std::string>() : "";
    if (type == "chord") {
      if (!a.contains("ends") || !a["ends"].is_array() || a["ends"].size() != 2)
        fail(ErrorKind::ParseError, "chord needs two \"ends\"");
      arcs.push_back(TaggedArc::chord(as_int(a["ends"][0], "chord end"), as_int(a["ends"][1], "chord end")));
    } else if (type == "radius") {
      if (!a.contains("end")) fail(ErrorKind::ParseError, "radius needs \"end\"");
      const std::string tag = a.value("tag", std::string("plain"));
      if (tag != "plain" && tag != "notched") fail(ErrorKind::ParseError, "tag must be plain or notched");
      arcs.push_back(TaggedArc::radius(as_int(a["end"], "radius end"), tag == "plain" ? Tag::Plain : Tag::Notched));
    } else {
      fail(ErrorKind::ParseError, "unknown arc type \"" + type + "\"");
    }
  }
  return TaggedTriangulation(b, std::move(arcs));
}

std::string triangulation_to_json(const TaggedTriangulation& t) {
  json arcs = json::array();
  for (const TaggedArc& a : t.arcs()) {
    if (a.is_chord())
      arcs.push_back({{"type", "chord"}, {"ends", {a.first, a.second}}});
    else
      arcs.push_back({{"type", "radius"}, {"end", a.first}, {"tag", a.tag == Tag::Plain ? "plain" : "notched"}});
  }
  return json{{"boundary_points", t.boundary_points()}, {"arcs", arcs}}.dump();
}

}  // namespace greenseq
