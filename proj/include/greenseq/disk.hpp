#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "greenseq/classify.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// Once-punctured disk with boundary points 0..b-1; the clockwise successor of
// i is i+1 mod b. The puncture is written kPuncture.
inline constexpr int kPuncture = -1;

enum class Tag { Plain, Notched };

struct TaggedArc {
  enum class Kind { Chord, Radius };

  Kind kind = Kind::Chord;
  // Chord: runs from `first` to `second` with the boundary points strictly
  // clockwise between them on its unpunctured side. Radius: `first` to the
  // puncture, `second` unused.
  int first = 0;
  int second = 0;
  Tag tag = Tag::Plain;  // at the puncture; chords are always plain

  static TaggedArc chord(int from, int to) { return {Kind::Chord, from, to, Tag::Plain}; }
  static TaggedArc radius(int point, Tag tag = Tag::Plain) { return {Kind::Radius, point, 0, tag}; }

  bool is_radius() const noexcept { return kind == Kind::Radius; }
  bool is_chord() const noexcept { return kind == Kind::Chord; }
  bool notched_at_puncture() const noexcept { return is_radius() && tag == Tag::Notched; }
  bool incident_to(int point) const noexcept;

  auto operator<=>(const TaggedArc&) const = default;
};

// Every tagged arc of the disk with b boundary points (b*b of them).
std::vector<TaggedArc> all_arcs(int boundary_points);
bool is_valid_arc(int boundary_points, const TaggedArc& a);
bool compatible(int boundary_points, const TaggedArc& a, const TaggedArc& b);

// Arc of vertex v is arcs()[v-1]; flips keep labels in place.
class TaggedTriangulation {
 public:
  TaggedTriangulation() = default;
  // MalformedQuiver unless the arcs are valid, distinct, pairwise compatible
  // and b of them.
  TaggedTriangulation(int boundary_points, std::vector<TaggedArc> arcs);

  int boundary_points() const noexcept { return b_; }
  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<TaggedArc>& arcs() const noexcept { return arcs_; }
  const TaggedArc& arc(int label) const;
  std::optional<int> label_of(const TaggedArc& a) const;
  bool contains(const TaggedArc& a) const { return label_of(a).has_value(); }
  // Equality as arc sets, ignoring labels.
  bool same_arcs(const TaggedTriangulation& other) const;

  bool operator==(const TaggedTriangulation&) const = default;

 private:
  int b_ = 0;
  std::vector<TaggedArc> arcs_;
};

// A triangle of the ideal triangulation, corners clockwise. Side i joins
// corner i and corner i+1. A side with no label is a boundary segment; a
// loop side carries the notched arc and, in `folded`, the plain radius it
// encloses.
struct TriangleSide {
  std::optional<int> label;
  std::optional<int> folded;
};

struct Triangle {
  std::array<int, 3> corners{};
  std::array<TriangleSide, 3> sides{};
};

// Non-self-folded triangles.
std::vector<Triangle> triangles(const TaggedTriangulation& t);
Quiver adjacency_quiver(const TaggedTriangulation& t);

struct FlipResult {
  TaggedTriangulation triangulation;
  TaggedArc replacement;
};

// ArcNotInTriangulation for an out-of-range label.
FlipResult flip(const TaggedTriangulation& t, int label);
FlipResult flip(const TaggedTriangulation& t, const TaggedArc& a);

// Rotation by one step clockwise; tags at the puncture are switched.
TaggedArc rho_arc(int boundary_points, const TaggedArc& a);
TaggedTriangulation rho(const TaggedTriangulation& t);

// Labels of the arcs at `point` in clockwise order about it. At the
// puncture the order starts from the smallest boundary point.
std::vector<int> arcs_about(const TaggedTriangulation& t, int point);

struct Fan {
  int point = 0;
  std::vector<int> arcs;  // each immediately clockwise of the previous one

  bool operator==(const Fan&) const = default;
};

// Maximal fans at `point` made of arcs from `allowed` (all arcs when empty).
std::vector<Fan> fans(const TaggedTriangulation& t, int point, const std::vector<int>& allowed = {});
// The single fan of all allowed arcs at `point`; NotComplete if they split.
Fan complete_fan(const TaggedTriangulation& t, int point, const std::vector<int>& allowed = {});

// Triangulation realising a type IV quiver whose pieces are single vertices
// or empty, labelled like q. NotTypeIVCore otherwise.
TaggedTriangulation from_type_IV(const Quiver& q);

struct TypeIVRun {
  std::array<GreenSequence, 5> stages;
  GreenSequence sequence;
  TaggedTriangulation final;
};

// Five-stage green sequence from t to rho(t). Each step is checked green,
// the quiver is checked against the triangulation after every flip, and the
// end point is checked to be rho(t) with every vertex red. `reversed` walks
// the order-free choices (fans within a stage, sets of arcs) backwards.
TypeIVRun type_IV_stages(const TaggedTriangulation& t, bool reversed = false);
GreenSequence type_IV_mgs(const TaggedTriangulation& t);

// 2k - 2 + t + m: k arcs at the puncture, t others, m chords g with rho^2(g) in t.
int lower_bound_IV(const TaggedTriangulation& t);

// Sequence on the cycle and spikes of a classified type IV quiver, in q's labels.
GreenSequence type_IV_central_mgs(const Quiver& q, const TypeDIV& d);

}  // namespace greenseq
