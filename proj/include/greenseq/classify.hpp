#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

// Sorted list of 1-based vertices.
using VertexSet = std::vector<int>;

VertexSet all_vertices(const Quiver& q);

// Oriented 3-cycles a -> b -> c -> a that are full subquivers with simple
// arrows, rotated so a is the smallest label.
using ThreeCycle = std::array<int, 3>;
std::vector<ThreeCycle> three_cycles(const Quiver& q);
std::vector<ThreeCycle> three_cycles(const Quiver& q, const VertexSet& within);

bool is_connected(const Quiver& q, const VertexSet& within);
bool is_acyclic(const Quiver& q);

// Mutation type A: connected, simple arrows, every cycle an oriented triangle
// and the local degree conditions.
bool is_type_A(const Quiver& q);
bool is_type_A(const Quiver& q, const VertexSet& within);

// Degree at most 2 inside `within`, and on a 3-cycle there when the degree is 2.
bool is_connecting(const Quiver& q, const VertexSet& within, int v);

enum class Family { Acyclic, TypeA, TypeD_I, TypeD_II, TypeD_III, TypeD_IV, AffineA, Unknown };

std::string_view family_tag(Family f);

struct AcyclicQuiver {};
struct TypeAQuiver {};

// a - c - b with a, b leaves; `rest` is the type A part containing c.
struct TypeDI {
  int a = 0, b = 0, c = 0;
  VertexSet rest;
};

// Core on a, b, c, d; `first` contains c and `second` contains d.
struct TypeDII {
  int a = 0, b = 0, c = 0, d = 0;
  VertexSet first, second;
};

struct TypeDIII {
  int a = 0, b = 0, c = 0, d = 0;
  VertexSet first, second;
};

// Oriented cycle a_1 -> ... -> a_k -> a_1. spikes[i] closes a 3-cycle on
// a_i -> a_{i+1}; pieces[i] is the type A part hanging from it (empty if none).
struct TypeDIV {
  std::vector<int> cycle;
  std::vector<std::optional<int>> spikes;
  std::vector<VertexSet> pieces;
};

// One arrow of the non-oriented cycle, between cycle[i] and cycle[i+1].
struct CycleArrow {
  int source = 0;
  int target = 0;
  std::optional<int> apex;  // closes source -> target -> apex -> source
  VertexSet piece;          // type A part containing the apex
};

struct AffineAQuiver {
  std::vector<int> cycle;
  std::vector<CycleArrow> arrows;
};

struct UnknownQuiver {};

using Classification =
    std::variant<AcyclicQuiver, TypeAQuiver, TypeDI, TypeDII, TypeDIII, TypeDIV, AffineAQuiver, UnknownQuiver>;

Family family(const Classification& c);

// First match in the order Acyclic, A, D (I, II, III, IV), affine A.
Classification classify(const Quiver& q);

// Same order without the acyclic shortcut, so acyclic quivers still get
// their A / D / affine decomposition.
Classification classify_shape(const Quiver& q);

struct FormulaTerm {
  std::string name;
  Int value = 0;
};

struct LengthFormula {
  Family family = Family::Unknown;
  int length = 0;
  std::vector<FormulaTerm> breakdown;
};

LengthFormula length_formula(const Quiver& q, const Classification& c);
LengthFormula length_formula(const Quiver& q);
int min_length(const Quiver& q);

// Numbers of arrows in each direction around the cycle of an acyclic member
// of the mutation class, larger first.
std::pair<int, int> affine_parameters(const Quiver& q, std::size_t node_budget = 200000);

// Pendant type A part meeting the core only in `attachment`; `vertices`
// includes the attachment vertex.
struct Branch {
  VertexSet vertices;
  int attachment = 0;
};

struct BranchDecomposition {
  VertexSet core;
  std::vector<Branch> branches;
};

BranchDecomposition branch_decomposition(const Quiver& q);

// Decomposition around a prescribed core; NotABranchQuiver if a remaining
// component fails the branch conditions.
BranchDecomposition branch_decomposition(const Quiver& q, const VertexSet& core);

// l(core) + sum of branch minima - number of branches.
int branch_length(const Quiver& q, const BranchDecomposition& d, int core_length);

}  // namespace greenseq
