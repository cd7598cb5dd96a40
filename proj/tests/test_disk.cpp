#include <doctest.h>

#include <random>

#include "greenseq/classify.hpp"
#include "greenseq/disk.hpp"
#include "greenseq/error.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/io.hpp"

using namespace greenseq;

namespace {

Quiver data(const char* name) { return load_quiver(std::string(GREENSEQ_TEST_DATA) + "/" + name); }

TaggedTriangulation star(int b) {
  std::vector<TaggedArc> arcs;
  for (int i = 0; i < b; ++i) arcs.push_back(TaggedArc::radius(i));
  return TaggedTriangulation(b, arcs);
}

TaggedTriangulation random_triangulation(int b, std::mt19937& rng, int flips) {
  TaggedTriangulation t = star(b);
  for (int s = 0; s < flips; ++s) t = flip(t, 1 + static_cast<int>(rng() % b)).triangulation;
  return t;
}

// Type IV shape with k radii and chords over the indices in `chords`.
TaggedTriangulation type_iv(int k, const std::vector<bool>& chords) {
  std::vector<int> points(k + 1, 0);
  for (int i = 0; i < k; ++i) points[i + 1] = points[i] + (chords[i] ? 2 : 1);
  const int b = points[k];
  std::vector<TaggedArc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back(TaggedArc::radius(points[i]));
  for (int i = 0; i < k; ++i)
    if (chords[i]) arcs.push_back(TaggedArc::chord(points[i], points[i + 1] % b));
  return TaggedTriangulation(b, arcs);
}

TaggedTriangulation reflect(const TaggedTriangulation& t) {
  const int b = t.boundary_points();
  std::vector<TaggedArc> arcs;
  for (const TaggedArc& a : t.arcs())
    arcs.push_back(a.is_radius() ? TaggedArc::radius((b - a.first) % b, a.tag)
                                 : TaggedArc::chord((b - a.second) % b, (b - a.first) % b));
  return TaggedTriangulation(b, arcs);
}

}  // namespace

TEST_CASE("arc census and compatibility") {
  for (int b = 2; b <= 7; ++b) {
    const auto arcs = all_arcs(b);
    CHECK(static_cast<int>(arcs.size()) == b * b);
    for (const auto& x : arcs)
      for (const auto& y : arcs) CHECK(compatible(b, x, y) == compatible(b, y, x));
  }
  CHECK(compatible(4, TaggedArc::radius(0, Tag::Plain), TaggedArc::radius(0, Tag::Notched)));
  CHECK_FALSE(compatible(4, TaggedArc::radius(0, Tag::Plain), TaggedArc::radius(1, Tag::Notched)));
  CHECK_FALSE(compatible(4, TaggedArc::chord(0, 3), TaggedArc::chord(2, 1)));
  CHECK(compatible(5, TaggedArc::chord(0, 3), TaggedArc::chord(0, 2)));
  CHECK_FALSE(compatible(5, TaggedArc::chord(0, 3), TaggedArc::radius(1)));
  CHECK_THROWS_AS(TaggedTriangulation(3, {TaggedArc::radius(0), TaggedArc::radius(1, Tag::Notched), TaggedArc::radius(2)}),
                  Error);
}

TEST_CASE("the star triangulation gives an oriented cycle") {
  const Quiver q = adjacency_quiver(star(5));
  for (int i = 1; i <= 5; ++i) CHECK(q.arrows_from_to(i, i % 5 + 1) == 1);
}

TEST_CASE("flips agree with mutation") {
  std::mt19937 rng(7);
  for (int b = 2; b <= 8; ++b)
    for (int trial = 0; trial < 20; ++trial) {
      const TaggedTriangulation t = random_triangulation(b, rng, 15);
      const Quiver q = adjacency_quiver(t);
      for (int v = 1; v <= b; ++v) {
        const FlipResult f = flip(t, v);
        CHECK(f.replacement != t.arc(v));
        CHECK(adjacency_quiver(f.triangulation) == mutate(q, v));
        CHECK(flip(f.triangulation, v).triangulation == t);
      }
    }
  CHECK_THROWS_AS(flip(star(4), 5), Error);
  CHECK_THROWS_AS(flip(star(4), TaggedArc::chord(0, 2)), Error);
}

TEST_CASE("rotation") {
  std::mt19937 rng(11);
  for (int b = 3; b <= 8; ++b)
    for (int trial = 0; trial < 10; ++trial) {
      const TaggedTriangulation t = random_triangulation(b, rng, 20);
      TaggedTriangulation r = rho(t);
      CHECK(adjacency_quiver(r) == adjacency_quiver(t));
      for (int s = 1; s < 2 * b; ++s) {
        r = rho(r);
      }
      CHECK(r == t);
    }
}

TEST_CASE("fans") {
  const TaggedTriangulation t = type_iv(4, {true, false, true, false});
  // Points: a at 0, 2, 3, 5; chords (0,2) and (3,5).
  CHECK(arcs_about(t, kPuncture) == std::vector<int>{1, 2, 3, 4});
  const Fan at2 = complete_fan(t, 2);
  CHECK(at2.arcs == std::vector<int>{2, 5});
  CHECK(arcs_about(t, 0) == std::vector<int>{5, 1});
  const auto split = fans(t, kPuncture, {1, 3, 4});
  REQUIRE(split.size() == 1);
  CHECK(split.front().arcs == std::vector<int>{3, 4, 1});
  CHECK(fans(t, kPuncture, {1, 3}).size() == 2);
  CHECK_THROWS_AS(complete_fan(t, kPuncture, {1, 3}), Error);
}

TEST_CASE("fan order reverses under reflection") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int b = 3 + static_cast<int>(rng() % 6);
    const TaggedTriangulation t = random_triangulation(b, rng, 25);
    const TaggedTriangulation r = reflect(t);
    for (int m = 0; m < b; ++m) {
      // Plain before notched at a shared point is a convention, not geometry.
      if (t.contains(TaggedArc::radius(m, Tag::Plain)) && t.contains(TaggedArc::radius(m, Tag::Notched))) continue;
      std::vector<int> order = arcs_about(t, m);
      std::reverse(order.begin(), order.end());
      CHECK(arcs_about(r, (b - m) % b) == order);
    }
  }
}

TEST_CASE("lower bound census") {
  // Five radii and three chords in a row: two of them rotate twice onto a chord.
  const TaggedTriangulation t = type_iv(5, {true, true, true, false, false});
  CHECK(lower_bound_IV(t) == 13);
  CHECK(lower_bound_IV(type_iv(6, std::vector<bool>(6, false))) == 10);
}

TEST_CASE("the 11-vertex type IV quiver") {
  const Quiver q = data("fig12.json");
  const TaggedTriangulation t = from_type_IV(q);
  CHECK(adjacency_quiver(t) == q);
  CHECK(lower_bound_IV(t) == 18);
  const TypeIVRun run = type_IV_stages(t);
  CHECK(run.stages[0] == GreenSequence{7, 11, 4, 10, 9, 2, 8});
  CHECK(run.stages[1] == GreenSequence{3, 5, 6, 1});
  CHECK(run.stages[2].size() == 1);
  CHECK(run.stages[3].size() == 1);
  CHECK(run.stages[4].size() == 5);
  CHECK(run.sequence.size() == 18);
  CHECK(is_maximal_green(q, run.sequence));
  CHECK(run.final.same_arcs(rho(t)));
  CHECK(run.final.arc(run.stages[2].front()) == rho_arc(t.boundary_points(), t.arc(9)));
  const TypeIVRun backwards = type_IV_stages(t, true);
  CHECK(backwards.final == run.final);
  CHECK(is_maximal_green(q, backwards.sequence));
}

TEST_CASE("type IV sequences are minimal for small shapes") {
  int checked = 0;
  for (int k = 3; k <= 7; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<bool> chords(k);
      int count = 0;
      for (int i = 0; i < k; ++i) count += chords[i] = (mask >> i) & 1u;
      if (k + count > 7) continue;
      const TaggedTriangulation t = type_iv(k, chords);
      const Quiver q = adjacency_quiver(t);
      INFO(quiver_to_json(q));
      GreenSequence seq;
      REQUIRE_NOTHROW(seq = type_IV_mgs(t));
      TypeIVRun backwards;
      REQUIRE_NOTHROW(backwards = type_IV_stages(t, true));
      CHECK(backwards.sequence.size() == seq.size());
      CHECK(backwards.final == type_IV_stages(t).final);
      CHECK(is_maximal_green(q, seq));
      CHECK(static_cast<int>(seq.size()) == lower_bound_IV(t));
      CHECK(min_length(q) == lower_bound_IV(t));
      const SearchCertificate cert = shortest_mgs(q, lower_bound_IV(t));
      REQUIRE(cert.minimal_length);
      CHECK(*cert.minimal_length == lower_bound_IV(t));
      ++checked;
    }
  CHECK(checked > 40);
}

TEST_CASE("triangulation json round trip") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const TaggedTriangulation t = random_triangulation(6, rng, 30);
    CHECK(parse_triangulation_json(triangulation_to_json(t)) == t);
  }
  const TaggedTriangulation t = parse_triangulation_json(
      R"({"boundary_points": 3, "arcs": [{"type": "radius", "end": 0, "tag": "plain"},
          {"type": "radius", "end": 0, "tag": "notched"}, {"type": "chord", "ends": [1, 0]}]})");
  CHECK(t.arc(3) == TaggedArc::chord(1, 0));
  CHECK_THROWS_AS(parse_triangulation_json(R"({"boundary_points": 3, "arcs": [{"type": "loop"}]})"), Error);
  CHECK_THROWS_AS(parse_triangulation_json(R"({"boundary_points": 3, "arcs": []})"), Error);
}

TEST_CASE("disk quivers never carry a double arrow") {
  std::mt19937 rng(29);
  for (int b = 2; b <= 7; ++b) {
    TaggedTriangulation t = star(b);
    for (int step = 0; step < 300; ++step) {
      t = flip(t, 1 + static_cast<int>(rng() % b)).triangulation;
      for (const Arrow& a : adjacency_quiver(t).arrows()) CHECK(a.multiplicity == 1);
    }
  }
}
