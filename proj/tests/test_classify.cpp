#include <doctest.h>

#include <map>
#include <random>

#include "greenseq/classify.hpp"
#include "greenseq/error.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/io.hpp"
#include "oracles.hpp"

using namespace greenseq;

namespace {

Quiver data(const char* name) { return load_quiver(std::string(GREENSEQ_TEST_DATA) + "/" + name); }

Quiver cycle3() { return Quiver::from_arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}); }

std::map<std::string, Int> breakdown(const LengthFormula& f) {
  std::map<std::string, Int> out;
  for (const auto& t : f.breakdown) out[t.name] = t.value;
  return out;
}

// Acyclic affine cycle: the path 1 -> ... -> n1+1 and the path 1 -> n -> ... -> n1+1.
Quiver affine_cycle(int n1, int n2) {
  const int n = n1 + n2;
  if (n == 2) return Quiver::from_arrows(2, {{1, 2, 2}});
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n1; ++i) arrows.push_back({i, i + 1, 1});
  arrows.push_back({1, n, 1});
  for (int i = n; i > n1 + 1; --i) arrows.push_back({i, i - 1, 1});
  return Quiver::from_arrows(n, arrows);
}

VertexSet sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("3-cycle census") {
  CHECK(three_cycles(oracle::linear_a(5)).empty());
  CHECK(three_cycles(cycle3()).size() == 1);
  CHECK(three_cycles(cycle3()).front() == ThreeCycle{1, 2, 3});
  CHECK(three_cycles(data("fig12.json")).size() == 4);
  CHECK(three_cycles(data("fig10.json")).size() == 5);
  // A double arrow spoils the triangle.
  CHECK(three_cycles(Quiver::from_arrows(3, {{1, 2, 2}, {2, 3, 1}, {3, 1, 1}})).empty());
}

TEST_CASE("type A recognition") {
  CHECK(is_type_A(oracle::linear_a(6)));
  CHECK(is_type_A(cycle3()));
  CHECK_FALSE(is_type_A(Quiver::from_arrows(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}})));
  // Two 3-cycles glued at vertex 1, which then has degree 4.
  const Quiver bowtie = Quiver::from_arrows(5, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}, {1, 4, 1}, {4, 5, 1}, {5, 1, 1}});
  CHECK(is_type_A(bowtie));
  CHECK_FALSE(is_type_A(oracle::linear_d(4)));
  CHECK_FALSE(is_type_A(Quiver::from_arrows(2, {{1, 2, 2}})));
}

TEST_CASE("classification of small named quivers") {
  CHECK(family(classify(oracle::linear_a(4))) == Family::Acyclic);
  CHECK(family(classify(cycle3())) == Family::TypeA);
  CHECK(min_length(cycle3()) == 4);

  const Classification d4 = classify_shape(oracle::linear_d(4));
  REQUIRE(family(d4) == Family::TypeD_I);
  const auto& di = std::get<TypeDI>(d4);
  CHECK(di.c == 3);
  CHECK(di.rest == VertexSet{3, 4});
  CHECK(length_formula(oracle::linear_d(4), d4).length == 4);
  CHECK(min_length(oracle::linear_d(4)) == 4);

  const Quiver square = Quiver::from_arrows(4, {{4, 1, 1}, {1, 3, 1}, {3, 2, 1}, {2, 4, 1}});
  const Classification sq = classify(square);
  CHECK(family(sq) == Family::TypeD_III);
  CHECK(min_length(square) == 6);

  const Quiver fork = Quiver::from_arrows(4, {{4, 1, 1}, {4, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, 1}});
  CHECK(family(classify(fork)) == Family::TypeD_II);
  CHECK(min_length(fork) == 5);

  CHECK(family(classify(Quiver::from_arrows(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 1}}))) == Family::Unknown);
  CHECK_THROWS_AS(min_length(Quiver::from_arrows(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 1}})), Error);
}

TEST_CASE("the 11-vertex type IV quiver") {
  const Quiver q = data("fig12.json");
  const Classification c = classify(q);
  REQUIRE(family(c) == Family::TypeD_IV);
  const auto& d = std::get<TypeDIV>(c);
  CHECK(d.cycle == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  std::vector<int> spikes;
  for (const auto& b : d.spikes)
    if (b) spikes.push_back(*b);
  CHECK(spikes == std::vector<int>{8, 9, 10, 11});
  const LengthFormula f = length_formula(q, c);
  CHECK(f.length == 18);
  CHECK(breakdown(f) == std::map<std::string, Int>{{"n", 11}, {"deg4", 2}, {"k", 7}});
}

TEST_CASE("the 16-vertex affine quiver") {
  const Quiver q = data("fig10.json");
  const Classification c = classify(q);
  REQUIRE(family(c) == Family::AffineA);
  const auto& a = std::get<AffineAQuiver>(c);
  CHECK(sorted_copy(a.cycle) == VertexSet{2, 3, 4, 5, 6, 7, 8, 9});
  int forward = 0;
  for (const auto& arrow : a.arrows) {
    const auto it = std::find(a.cycle.begin(), a.cycle.end(), arrow.source);
    forward += a.cycle[(it - a.cycle.begin() + 1) % a.cycle.size()] == arrow.target;
  }
  CHECK(std::min(forward, 8 - forward) == 3);
  std::vector<int> apexes;
  for (const auto& arrow : a.arrows)
    if (arrow.apex) apexes.push_back(*arrow.apex);
  std::sort(apexes.begin(), apexes.end());
  CHECK(apexes == std::vector<int>{1, 10, 14});
  CHECK(min_length(q) == 21);
  // Parameters of the acyclic member: one per cycle vertex plus the pendant parts.
  CHECK(affine_parameters(q) == std::pair<int, int>{13, 3});
}

TEST_CASE("affine parameters of acyclic cycles") {
  CHECK(affine_parameters(Quiver::from_arrows(2, {{1, 2, 2}})) == std::pair<int, int>{1, 1});
  CHECK(affine_parameters(affine_cycle(3, 5)) == std::pair<int, int>{5, 3});
  CHECK(affine_parameters(affine_cycle(2, 1)) == std::pair<int, int>{2, 1});
  CHECK_THROWS_AS(affine_parameters(cycle3()), Error);
}

TEST_CASE("branch decompositions") {
  const Quiver q = data("fig10.json");
  const BranchDecomposition d = branch_decomposition(q);
  CHECK(d.core == VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14});
  REQUIRE(d.branches.size() == 2);
  std::map<int, VertexSet> by_attachment;
  for (const auto& b : d.branches) by_attachment[b.attachment] = b.vertices;
  CHECK(by_attachment[10] == VertexSet{10, 11, 12, 13});
  CHECK(by_attachment[14] == VertexSet{14, 15, 16});

  // Apexes touch two cycle vertices, so the bare cycle is not a core.
  CHECK_THROWS_AS(branch_decomposition(q, {2, 3, 4, 5, 6, 7, 8, 9}), Error);

  // A type A tree of 3-cycles hangs off any single vertex.
  const Quiver bowtie = Quiver::from_arrows(5, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}, {1, 4, 1}, {4, 5, 1}, {5, 1, 1}});
  const BranchDecomposition t = branch_decomposition(bowtie);
  CHECK(t.core == VertexSet{1});
  CHECK(branch_length(bowtie, t, 1) == 5 + 2);

  const Quiver square = Quiver::from_arrows(4, {{4, 1, 1}, {1, 3, 1}, {3, 2, 1}, {2, 4, 1}});
  const BranchDecomposition none = branch_decomposition(square);
  CHECK(none.core == VertexSet{1, 2, 3, 4});
  CHECK(none.branches.empty());
  CHECK_THROWS_AS(branch_decomposition(square, {1}), Error);
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(41);
  for (const char* name : {"fig10.json", "fig12.json", "fig11.json"}) {
    const Quiver q = data(name);
    const LengthFormula base = length_formula(q);
    for (int trial = 0; trial < 5; ++trial) {
      const Quiver p = oracle::random_relabel(q, rng);
      const LengthFormula f = length_formula(p);
      CHECK(f.family == base.family);
      CHECK(f.length == base.length);
      CHECK(breakdown(f) == breakdown(base));
    }
  }
}

TEST_CASE("formulas agree with exhaustive search on finite mutation classes") {
  struct Case {
    Quiver seed;
    std::vector<Family> allowed;
  };
  const std::vector<Family> type_a{Family::Acyclic, Family::TypeA};
  const std::vector<Family> type_d{Family::Acyclic, Family::TypeD_I, Family::TypeD_II, Family::TypeD_III, Family::TypeD_IV};
  const std::vector<Case> cases{{oracle::linear_a(3), type_a}, {oracle::linear_a(4), type_a}, {oracle::linear_a(5), type_a},
                                {oracle::linear_d(4), type_d}, {oracle::linear_d(5), type_d}};
  for (const auto& c : cases) {
    for (const Quiver& q : oracle::mutation_class(c.seed)) {
      const Family f = family(classify(q));
      CHECK(std::find(c.allowed.begin(), c.allowed.end(), f) != c.allowed.end());
      const int expected = *shortest_mgs(q, 2 * q.size() + 2).minimal_length;
      CHECK(min_length(q) == expected);
    }
  }
}

TEST_CASE("affine formula agrees with search after random mutations") {
  std::mt19937 rng(43);
  for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    for (int trial = 0; trial < 6; ++trial) {
      Quiver q = affine_cycle(n1, n2);
      for (int s = 0; s < 4; ++s) q = mutate(q, 1 + static_cast<int>(rng() % q.size()));
      const Family f = family(classify(q));
      INFO(quiver_to_json(q));
      REQUIRE((f == Family::Acyclic || f == Family::AffineA));
      const int formula = min_length(q);
      const SearchCertificate cert = shortest_mgs(q, formula);
      REQUIRE(cert.minimal_length);
      CHECK(*cert.minimal_length == formula);
    }
  }
}
