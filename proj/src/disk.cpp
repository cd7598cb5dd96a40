#include "greenseq/disk.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "greenseq/error.hpp"

namespace greenseq {

namespace {

int mod(int x, int b) { return ((x % b) + b) % b; }

// Clockwise steps from i to j.
int span(int i, int j, int b) { return mod(j - i, b); }

Tag toggled(Tag t) { return t == Tag::Plain ? Tag::Notched : Tag::Plain; }

// Boundary segments [s, s+1] on the unpunctured side of a chord.
std::uint64_t segments(const TaggedArc& c, int b) {
  std::uint64_t mask = 0;
  for (int s = c.first; s != c.second; s = mod(s + 1, b)) mask |= std::uint64_t{1} << s;
  return mask;
}

bool strictly_inside(const TaggedArc& chord, int point, int b) {
  const int d = span(chord.first, point, b);
  return d > 0 && d < span(chord.first, chord.second, b);
}

std::string describe(const TaggedArc& a) {
  if (a.is_chord()) return "chord(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  return std::string(a.tag == Tag::Plain ? "radius(" : "notched radius(") + std::to_string(a.first) + ")";
}

}  // namespace

bool TaggedArc::incident_to(int point) const noexcept {
  if (point == kPuncture) return is_radius();
  return first == point || (is_chord() && second == point);
}

bool is_valid_arc(int b, const TaggedArc& a) {
  if (a.first < 0 || a.first >= b) return false;
  if (a.is_radius()) return a.second == 0;
  if (a.tag != Tag::Plain || a.second < 0 || a.second >= b) return false;
  const int d = span(a.first, a.second, b);
  return d >= 2;
}

std::vector<TaggedArc> all_arcs(int b) {
  std::vector<TaggedArc> out;
  for (int i = 0; i < b; ++i) {
    out.push_back(TaggedArc::radius(i, Tag::Plain));
    out.push_back(TaggedArc::radius(i, Tag::Notched));
    for (int j = 0; j < b; ++j)
      if (is_valid_arc(b, TaggedArc::chord(i, j))) out.push_back(TaggedArc::chord(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool compatible(int b, const TaggedArc& x, const TaggedArc& y) {
  if (x == y) return true;
  if (x.is_chord() && y.is_chord()) {
    const std::uint64_t s = segments(x, b), t = segments(y, b);
    return (s & t) == 0 || (s & t) == s || (s & t) == t;
  }
  if (x.is_chord()) return !strictly_inside(x, y.first, b);
  if (y.is_chord()) return !strictly_inside(y, x.first, b);
  return x.first == y.first ? x.tag != y.tag : x.tag == y.tag;
}

TaggedTriangulation::TaggedTriangulation(int boundary_points, std::vector<TaggedArc> arcs)
    : b_(boundary_points), arcs_(std::move(arcs)) {
  if (b_ < 2 || b_ > 62) fail(ErrorKind::MalformedQuiver, "disk needs 2..62 boundary points");
  if (size() != b_)
    fail(ErrorKind::MalformedQuiver, "a triangulation has " + std::to_string(b_) + " arcs, got " + std::to_string(size()));
  for (int i = 0; i < size(); ++i) {
    if (!is_valid_arc(b_, arcs_[i])) fail(ErrorKind::MalformedQuiver, "invalid arc " + describe(arcs_[i]));
    for (int j = 0; j < i; ++j)
      if (arcs_[i] == arcs_[j] || !compatible(b_, arcs_[i], arcs_[j]))
        fail(ErrorKind::MalformedQuiver, describe(arcs_[j]) + " and " + describe(arcs_[i]) + " do not fit together");
  }
}

const TaggedArc& TaggedTriangulation::arc(int label) const {
  if (label < 1 || label > size()) fail(ErrorKind::ArcNotInTriangulation, "no arc labelled " + std::to_string(label));
  return arcs_[label - 1];
}

std::optional<int> TaggedTriangulation::label_of(const TaggedArc& a) const {
  const auto it = std::find(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end()) return std::nullopt;
  return static_cast<int>(it - arcs_.begin()) + 1;
}

bool TaggedTriangulation::same_arcs(const TaggedTriangulation& other) const {
  if (b_ != other.b_) return false;
  std::vector<TaggedArc> x = arcs_, y = other.arcs_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

// A polygon cut out of the ideal triangulation, corners clockwise, with a
// lookup for the side joining two corner positions.
struct Polygon {
  std::vector<int> corners;
  std::function<std::optional<TriangleSide>(int, int)> side;
};

void collect_triangles(const Polygon& p, std::vector<Triangle>& out) {
  const int n = static_cast<int>(p.corners.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto xy = p.side(x, y);
      if (!xy) continue;
      for (int z = y + 1; z < n; ++z) {
        const auto yz = p.side(y, z);
        const auto xz = p.side(x, z);
        if (!yz || !xz) continue;
        out.push_back({{p.corners[x], p.corners[y], p.corners[z]}, {*xy, *yz, *xz}});
      }
    }
}

TriangleSide boundary_side() { return {}; }

}  // namespace

std::vector<Triangle> triangles(const TaggedTriangulation& t) {
  const int b = t.boundary_points();
  std::vector<int> radii;
  for (int v = 1; v <= t.size(); ++v)
    if (t.arc(v).is_radius()) radii.push_back(v);
  std::sort(radii.begin(), radii.end(), [&](int u, int v) { return t.arc(u) < t.arc(v); });

  auto chord_side = [&](int from, int to) -> std::optional<TriangleSide> {
    if (const auto l = t.label_of(TaggedArc::chord(from, to))) return TriangleSide{*l, std::nullopt};
    return std::nullopt;
  };

  std::vector<Triangle> out;
  const bool folded = radii.size() == 2 && t.arc(radii[0]).first == t.arc(radii[1]).first;
  if (folded) {
    // The notched radius becomes a loop at i around the plain one; cut along
    // the loop to get a polygon with i at both ends.
    const int plain = t.arc(radii[0]).tag == Tag::Plain ? radii[0] : radii[1];
    const int notched = radii[0] + radii[1] - plain;
    const int i = t.arc(plain).first;
    Polygon p;
    for (int s = 0; s <= b; ++s) p.corners.push_back(mod(i + s, b));
    p.side = [&, b](int x, int y) -> std::optional<TriangleSide> {
      if (x == 0 && y == b) return TriangleSide{notched, plain};
      if (y == x + 1) return boundary_side();
      return chord_side(p.corners[x], p.corners[y]);
    };
    collect_triangles(p, out);
    return out;
  }

  if (radii.size() < 2) fail(ErrorKind::ConstructionInvariantViolated, "fewer than two arcs at the puncture");
  // Sectors between clockwise-consecutive radii; tags are all equal here.
  for (std::size_t s = 0; s < radii.size(); ++s) {
    const int from = t.arc(radii[s]).first;
    const int to = t.arc(radii[(s + 1) % radii.size()]).first;
    Polygon p;
    p.corners.push_back(kPuncture);
    for (int x = from;; x = mod(x + 1, b)) {
      p.corners.push_back(x);
      if (x == to) break;
    }
    const int last = static_cast<int>(p.corners.size()) - 1;
    const int from_label = radii[s], to_label = radii[(s + 1) % radii.size()];
    p.side = [&, last, from_label, to_label](int x, int y) -> std::optional<TriangleSide> {
      if (x == 0) {
        if (y == 1) return TriangleSide{from_label, std::nullopt};
        if (y == last) return TriangleSide{to_label, std::nullopt};
        return std::nullopt;
      }
      if (y == x + 1) return boundary_side();
      return chord_side(p.corners[x], p.corners[y]);
    };
    collect_triangles(p, out);
  }
  return out;
}

Quiver adjacency_quiver(const TaggedTriangulation& t) {
  const int n = t.size();
  IntMatrix m(n, n);
  auto vertices = [](const TriangleSide& s) {
    std::vector<int> v;
    if (s.label) v.push_back(*s.label);
    if (s.folded) v.push_back(*s.folded);
    return v;
  };
  for (const Triangle& tri : triangles(t)) {
    // Each side points to the side before it in clockwise order.
    for (int k = 0; k < 3; ++k) {
      for (int u : vertices(tri.sides[(k + 1) % 3]))
        for (int v : vertices(tri.sides[k])) {
          m(u - 1, v - 1) += 1;
          m(v - 1, u - 1) -= 1;
        }
    }
  }
  return Quiver::from_exchange_matrix(m);
}

FlipResult flip(const TaggedTriangulation& t, int label) {
  const TaggedArc& old = t.arc(label);
  const int b = t.boundary_points();
  std::vector<TaggedArc> found;
  for (const TaggedArc& a : all_arcs(b)) {
    if (a == old || t.contains(a)) continue;
    bool ok = true;
    for (int v = 1; v <= t.size() && ok; ++v)
      if (v != label) ok = compatible(b, a, t.arc(v));
    if (ok) found.push_back(a);
  }
  if (found.size() != 1)
    fail(ErrorKind::ConstructionInvariantViolated,
         "flip of " + describe(old) + " has " + std::to_string(found.size()) + " candidates");
  std::vector<TaggedArc> arcs = t.arcs();
  arcs[label - 1] = found.front();
  return {TaggedTriangulation(b, std::move(arcs)), found.front()};
}

FlipResult flip(const TaggedTriangulation& t, const TaggedArc& a) {
  const auto label = t.label_of(a);
  if (!label) fail(ErrorKind::ArcNotInTriangulation, describe(a) + " is not in the triangulation");
  return flip(t, *label);
}

TaggedArc rho_arc(int b, const TaggedArc& a) {
  if (a.is_radius()) return TaggedArc::radius(mod(a.first + 1, b), toggled(a.tag));
  return TaggedArc::chord(mod(a.first + 1, b), mod(a.second + 1, b));
}

TaggedTriangulation rho(const TaggedTriangulation& t) {
  std::vector<TaggedArc> arcs;
  for (const TaggedArc& a : t.arcs()) arcs.push_back(rho_arc(t.boundary_points(), a));
  return TaggedTriangulation(t.boundary_points(), std::move(arcs));
}

std::vector<int> arcs_about(const TaggedTriangulation& t, int point) {
  const int b = t.boundary_points();
  if (point != kPuncture && (point < 0 || point >= b))
    fail(ErrorKind::IndexOutOfRange, "no marked point " + std::to_string(point));
  std::vector<std::pair<std::tuple<int, int, int>, int>> keyed;
  for (int v = 1; v <= t.size(); ++v) {
    const TaggedArc& a = t.arc(v);
    if (!a.incident_to(point)) continue;
    const int tag = a.tag == Tag::Plain ? 0 : 1;
    if (point == kPuncture)
      keyed.push_back({{a.first, tag, 0}, v});
    else if (a.is_radius())
      keyed.push_back({{1, tag, 0}, v});
    else if (a.first == point)
      // From the segment after `point` towards the segment before it.
      keyed.push_back({{0, span(a.first, a.second, b), 0}, v});
    else
      keyed.push_back({{2, -span(a.first, a.second, b), 0}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& [key, v] : keyed) out.push_back(v);
  return out;
}

std::vector<Fan> fans(const TaggedTriangulation& t, int point, const std::vector<int>& allowed) {
  const std::vector<int> order = arcs_about(t, point);
  auto ok = [&](int v) { return allowed.empty() || std::find(allowed.begin(), allowed.end(), v) != allowed.end(); };
  const int n = static_cast<int>(order.size());
  std::vector<Fan> out;
  if (point == kPuncture) {
    // Cyclic: start right after a gap when there is one.
    int start = 0;
    for (int i = 0; i < n; ++i)
      if (!ok(order[i])) {
        start = (i + 1) % n;
        break;
      }
    Fan cur{point, {}};
    for (int s = 0; s < n; ++s) {
      const int v = order[(start + s) % n];
      if (ok(v)) {
        cur.arcs.push_back(v);
      } else if (!cur.arcs.empty()) {
        out.push_back(cur);
        cur.arcs.clear();
      }
    }
    if (!cur.arcs.empty()) out.push_back(cur);
    // Smallest first boundary point first.
    std::sort(out.begin(), out.end(),
              [&](const Fan& x, const Fan& y) { return t.arc(x.arcs.front()) < t.arc(y.arcs.front()); });
    return out;
  }
  Fan cur{point, {}};
  for (int v : order) {
    if (ok(v)) {
      cur.arcs.push_back(v);
    } else if (!cur.arcs.empty()) {
      out.push_back(cur);
      cur.arcs.clear();
    }
  }
  if (!cur.arcs.empty()) out.push_back(cur);
  return out;
}

Fan complete_fan(const TaggedTriangulation& t, int point, const std::vector<int>& allowed) {
  const std::vector<Fan> f = fans(t, point, allowed);
  if (f.size() != 1) fail(ErrorKind::NotComplete, "arcs at the point form " + std::to_string(f.size()) + " fans");
  return f.front();
}

namespace {

// Radii a_i on the cycle, chords b_i on the spikes, labelled like q.
TaggedTriangulation realise(const Quiver& q, const std::vector<int>& cycle, const std::vector<std::optional<int>>& spikes) {
  const int k = static_cast<int>(cycle.size());
  int central = k;
  for (const auto& x : spikes) central += x.has_value();
  if (central != q.size()) fail(ErrorKind::NotTypeIVCore, "quiver has vertices off the cycle and spikes");
  std::vector<int> points(k + 1, 0);
  for (int i = 0; i < k; ++i) points[i + 1] = points[i] + (spikes[i] ? 2 : 1);
  const int b = points[k];
  std::vector<TaggedArc> arcs(q.size());
  for (int i = 0; i < k; ++i) {
    arcs[cycle[i] - 1] = TaggedArc::radius(points[i]);
    if (spikes[i]) arcs[*spikes[i] - 1] = TaggedArc::chord(points[i], points[i + 1] % b);
  }
  TaggedTriangulation t(b, std::move(arcs));
  if (adjacency_quiver(t) != q) fail(ErrorKind::NotTypeIVCore, "triangulation does not realise the quiver");
  return t;
}

}  // namespace

TaggedTriangulation from_type_IV(const Quiver& q) {
  const Classification c = classify(q);
  if (family(c) != Family::TypeD_IV) fail(ErrorKind::NotTypeIVCore, "quiver is not of type IV");
  const auto& d = std::get<TypeDIV>(c);
  for (std::size_t i = 0; i < d.cycle.size(); ++i)
    if (d.spikes[i] && d.pieces[i] != VertexSet{*d.spikes[i]})
      fail(ErrorKind::NotTypeIVCore, "a piece has more than one vertex");
  return realise(q, d.cycle, d.spikes);
}

namespace {

// Triangulation and framed quiver advanced together.
class Walk {
 public:
  explicit Walk(const TaggedTriangulation& t) : tri_(t), seed_(framed(adjacency_quiver(t))) {}

  void flip(int v) {
    if (color(seed_, v) != VertexColor::Green)
      fail(ErrorKind::ConstructionInvariantViolated, "vertex " + std::to_string(v) + " is red at step " +
                                                         std::to_string(steps_.size() + 1));
    tri_ = greenseq::flip(tri_, v).triangulation;
    seed_ = mutate(seed_, v);
    if (adjacency_quiver(tri_) != seed_.mutable_part())
      fail(ErrorKind::ConstructionInvariantViolated, "quiver and triangulation disagree after flipping " + std::to_string(v));
    steps_.push_back(v);
  }

  const TaggedTriangulation& triangulation() const { return tri_; }
  const IceQuiver& seed() const { return seed_; }
  const GreenSequence& steps() const { return steps_; }

 private:
  TaggedTriangulation tri_;
  IceQuiver seed_;
  GreenSequence steps_;
};

struct TypeIVShape {
  std::vector<int> a;                 // radius labels, clockwise from the smallest point
  std::vector<std::optional<int>> b;  // chord over a[i], a[i+1]
};

TypeIVShape shape_of(const TaggedTriangulation& t) {
  const int n = t.boundary_points();
  std::vector<std::pair<int, int>> radii;
  for (int v = 1; v <= t.size(); ++v) {
    const TaggedArc& a = t.arc(v);
    if (a.is_radius()) {
      if (a.tag != Tag::Plain) fail(ErrorKind::NotTypeIVCore, "radii must be plain");
      radii.push_back({a.first, v});
    }
  }
  std::sort(radii.begin(), radii.end());
  const int k = static_cast<int>(radii.size());
  if (k < 3) fail(ErrorKind::NotTypeIVCore, "needs at least three radii");
  TypeIVShape s;
  int chords = 0;
  for (int i = 0; i < k; ++i) {
    const int p = radii[i].first, next = radii[(i + 1) % k].first;
    s.a.push_back(radii[i].second);
    const int gap = span(p, next, n);
    if (gap == 1) {
      s.b.push_back(std::nullopt);
    } else if (gap == 2) {
      const auto l = t.label_of(TaggedArc::chord(p, next));
      if (!l) fail(ErrorKind::NotTypeIVCore, "missing chord between neighbouring radii");
      s.b.push_back(*l);
      ++chords;
    } else {
      fail(ErrorKind::NotTypeIVCore, "radii more than two steps apart");
    }
  }
  if (k + chords != t.size()) fail(ErrorKind::NotTypeIVCore, "unexpected chords");
  return s;
}

std::vector<int> fan_F(const TypeIVShape& s, int i) {
  const int k = static_cast<int>(s.a.size());
  const int j = (i + 1) % k;
  if (s.b[j]) return {*s.b[j], s.a[j], *s.b[i]};
  return {s.a[j], *s.b[i]};
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TypeIVRun type_IV_stages(const TaggedTriangulation& t, bool reversed) {
  const TypeIVShape s = shape_of(t);
  const int k = static_cast<int>(s.a.size());
  Walk w(t);
  TypeIVRun run;
  auto record = [&](int stage, int v) {
    w.flip(v);
    run.stages[stage].push_back(v);
  };

  // Stage 1: disjoint complete fans F(i), largest index first.
  std::vector<std::vector<int>> first_fans;
  const bool all_chords = std::all_of(s.b.begin(), s.b.end(), [](const auto& x) { return x.has_value(); });
  std::vector<int> chosen;
  if (all_chords) {
    if (k % 2 == 1) record(0, *s.b[0]);
    for (int i = k - 2; i >= (k % 2 == 1 ? 1 : 0); i -= 2) chosen.push_back(i);
  } else {
    // Runs r..s of indices with a chord; take F(s), F(s-2), ... when the
    // run is odd and F(s-1), F(s-3), ... when it is even.
    for (int end = 0; end < k; ++end) {
      if (!s.b[end] || s.b[(end + 1) % k]) continue;
      int len = 0;
      while (s.b[(end - len + k) % k]) ++len;
      for (int d = len % 2 == 1 ? 0 : 1; d < len; d += 2) chosen.push_back((end - d + k) % k);
    }
    std::sort(chosen.rbegin(), chosen.rend());
  }
  if (reversed) std::reverse(chosen.begin(), chosen.end());
  for (int i : chosen) {
    first_fans.push_back(fan_F(s, i));
    for (int v : first_fans.back()) record(0, v);
  }
  const TaggedTriangulation after_first = w.triangulation();
  const Quiver first_quiver = adjacency_quiver(after_first);

  // Stage 2: fans at the puncture of radii untouched so far.
  std::vector<int> untouched;
  for (int v : s.a)
    if (after_first.arc(v) == t.arc(v)) untouched.push_back(v);
  std::vector<int> fan_heads;
  std::vector<int> second;
  std::vector<Fan> second_fans;
  if (!untouched.empty()) second_fans = fans(after_first, kPuncture, untouched);
  if (reversed) std::reverse(second_fans.begin(), second_fans.end());
  for (const Fan& f : second_fans) {
    fan_heads.push_back(f.arcs.front());
    for (int v : f.arcs) {
      record(1, v);
      second.push_back(v);
    }
  }

  // Stage 3: arcs off the puncture just counterclockwise of a fan head.
  const bool has_triple = std::any_of(first_fans.begin(), first_fans.end(), [](const auto& f) { return f.size() == 3; });
  if (has_triple) {
    std::vector<int> c;
    for (int v = 1; v <= t.size(); ++v) {
      if (contains(second, v) || after_first.arc(v).is_radius()) continue;
      for (int g : fan_heads)
        if (first_quiver.entry(v, g) > 0) {
          c.push_back(v);
          break;
        }
    }
    if (reversed) std::reverse(c.begin(), c.end());
    for (int v : c) record(2, v);
  }

  // Stage 4: the longest fan at the puncture of arcs plain there.
  {
    std::vector<int> plain;
    for (int v = 1; v <= t.size(); ++v)
      if (w.triangulation().arc(v).is_radius() && w.triangulation().arc(v).tag == Tag::Plain) plain.push_back(v);
    if (!plain.empty()) {
      const std::vector<Fan> f = fans(w.triangulation(), kPuncture, plain);
      const Fan* best = &f.front();
      for (const Fan& x : f)
        if (x.arcs.size() > best->arcs.size()) best = &x;
      for (int v : best->arcs) record(3, v);
    }
  }

  // Stage 5: repeatedly flip arcs facing two notched radii, skipping ears
  // that already sit in the rotated triangulation.
  const TaggedTriangulation target = rho(t);
  for (int round = 0;; ++round) {
    if (round > 2 * t.size()) fail(ErrorKind::ConstructionInvariantViolated, "last stage does not settle");
    const TaggedTriangulation& cur = w.triangulation();
    std::set<int> facing, ears;
    for (const Triangle& tri : triangles(cur)) {
      for (int j = 0; j < 3; ++j) {
        const auto& side = tri.sides[j];
        if (!side.label) continue;
        const auto& o1 = tri.sides[(j + 1) % 3];
        const auto& o2 = tri.sides[(j + 2) % 3];
        auto notched = [&](const TriangleSide& x) { return x.label && cur.arc(*x.label).notched_at_puncture(); };
        if (notched(o1) && notched(o2)) facing.insert(*side.label);
        if (!o1.label && !o2.label && target.contains(cur.arc(*side.label))) ears.insert(*side.label);
      }
    }
    std::vector<int> step;
    for (int v : facing)
      if (!ears.contains(v)) step.push_back(v);
    if (step.empty()) break;
    if (reversed) std::reverse(step.begin(), step.end());
    for (int v : step) record(4, v);
  }

  for (const auto& st : run.stages) run.sequence.insert(run.sequence.end(), st.begin(), st.end());
  run.final = w.triangulation();
  if (!run.final.same_arcs(target)) fail(ErrorKind::ConstructionInvariantViolated, "sequence does not end at the rotation");
  if (!all_red(w.seed())) fail(ErrorKind::ConstructionInvariantViolated, "sequence ends with a green vertex");
  return run;
}

GreenSequence type_IV_mgs(const TaggedTriangulation& t) { return type_IV_stages(t).sequence; }

int lower_bound_IV(const TaggedTriangulation& t) {
  int k = 0, rest = 0, m = 0;
  const int b = t.boundary_points();
  for (const TaggedArc& a : t.arcs()) {
    if (a.is_radius()) {
      ++k;
      continue;
    }
    ++rest;
    if (t.contains(rho_arc(b, rho_arc(b, a)))) ++m;
  }
  return 2 * k - 2 + rest + m;
}

GreenSequence type_IV_central_mgs(const Quiver& q, const TypeDIV& d) {
  VertexSet central = d.cycle;
  for (const auto& x : d.spikes)
    if (x) central.push_back(*x);
  std::sort(central.begin(), central.end());
  auto local_label = [&](int v) { return static_cast<int>(std::find(central.begin(), central.end(), v) - central.begin()) + 1; };
  std::vector<int> cycle;
  std::vector<std::optional<int>> spikes;
  for (std::size_t i = 0; i < d.cycle.size(); ++i) {
    cycle.push_back(local_label(d.cycle[i]));
    spikes.push_back(d.spikes[i] ? std::optional<int>(local_label(*d.spikes[i])) : std::nullopt);
  }
  const GreenSequence local = type_IV_mgs(realise(full_subquiver(q, central), cycle, spikes));
  GreenSequence out;
  for (int v : local) out.push_back(central[v - 1]);
  return out;
}

}  // namespace greenseq
