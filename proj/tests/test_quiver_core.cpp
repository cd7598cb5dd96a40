#include <doctest.h>

#include <random>

#include "greenseq/error.hpp"
#include "greenseq/quiver.hpp"
#include "oracles.hpp"

using namespace greenseq;

namespace {

IntMatrix rows(std::vector<std::vector<Int>> r) { return IntMatrix::from_rows(r); }

Quiver a2() { return Quiver::from_arrows(2, {{1, 2, 1}}); }

Quiver random_quiver(std::mt19937& rng, int n, int max_mult = 1) {
  std::uniform_int_distribution<int> pick(-max_mult, max_mult);
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = pick(rng);
      b(j, i) = -b(i, j);
    }
  return Quiver::from_exchange_matrix(b);
}

}  // namespace

TEST_CASE("ice quiver mutation at a middle vertex") {
  const IceQuiver b(rows({{0, 2, 0, 0}, {-2, 0, 1, 0}, {0, -1, 0, -1}}), 3);
  const IceQuiver expected(rows({{0, -2, 2, 0}, {2, 0, -1, 0}, {-2, 1, 0, -1}}), 3);
  CHECK(mutate(b, 2) == expected);
  CHECK(mutate(mutate(b, 2), 2) == b);
}

TEST_CASE("mutating the source of a single arrow reverses it") {
  const IceQuiver b(rows({{0, 1}, {-1, 0}}), 2);
  CHECK(mutate(b, 1) == IceQuiver(rows({{0, -1}, {1, 0}}), 2));
}

TEST_CASE("mutation indices are checked") {
  const IceQuiver b(rows({{0, 2, 0, 0}, {-2, 0, 1, 0}, {0, -1, 0, -1}}), 3);
  CHECK_THROWS_AS(mutate(b, 4), Error);
  CHECK_THROWS_AS(mutate(b, 0), Error);
  try {
    mutate(b, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("matrix mutation agrees with arrow-level mutation on random ice quivers") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Quiver q = random_quiver(rng, n, 2);
    IceQuiver ice = trial % 2 == 0 ? framed(q) : coframed(q);
    oracle::ArrowQuiver arrows = oracle::from_ice(ice);
    std::uniform_int_distribution<int> vertex(1, n);
    for (int step = 0; step < 6; ++step) {
      const int k = vertex(rng);
      ice = mutate(ice, k);
      arrows = oracle::mutate(arrows, k);
      REQUIRE(ice.exchange_matrix() == oracle::matrix(arrows));
      CHECK(mutate(ice, k) == mutate(IceQuiver(ice.exchange_matrix(), n), k));
    }
  }
}

TEST_CASE("mutation is an involution") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    IceQuiver ice = framed(random_quiver(rng, n, 3));
    std::uniform_int_distribution<int> vertex(1, n);
    for (int step = 0; step < 4; ++step) ice = mutate(ice, vertex(rng));
    const int k = vertex(rng);
    CHECK(mutate(mutate(ice, k), k) == ice);
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  const Int big = Int{1} << 62;
  const IceQuiver ice(rows({{0, big, 0}, {-big, 0, big}}), 2);
  CHECK_THROWS_AS(mutate(ice, 2), Error);
}

TEST_CASE("framed and coframed quivers") {
  CHECK(framed(a2()).exchange_matrix() == rows({{0, 1, 1, 0}, {-1, 0, 0, 1}}));
  CHECK(coframed(a2()).exchange_matrix() == rows({{0, 1, -1, 0}, {-1, 0, 0, -1}}));
  CHECK(framed(Quiver(3)).exchange_matrix() == rows({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
  std::mt19937 rng(3);
  CHECK(c_matrix(framed(random_quiver(rng, 5))).matrix() == IntMatrix::identity(5));
}

TEST_CASE("malformed quivers are rejected") {
  CHECK_THROWS_AS(Quiver::from_arrows(2, {{1, 2, 1}, {2, 1, 1}}), Error);
  CHECK_THROWS_AS(Quiver::from_arrows(2, {{1, 1, 1}}), Error);
  CHECK_THROWS_AS(Quiver::from_arrows(2, {{1, 3, 1}}), Error);
  CHECK_THROWS_AS(Quiver::from_exchange_matrix(rows({{0, 1}, {1, 0}})), Error);
  CHECK_THROWS_AS(matrix_view(IceArrows{2, 4, {{1, 2, 1}, {4, 3, 1}}}), Error);
}

TEST_CASE("arrow view round trip") {
  const IceQuiver kronecker(rows({{0, 2}, {-2, 0}}), 2);
  const IceArrows view = arrow_view(kronecker);
  REQUIRE(view.arrows.size() == 1);
  CHECK(view.arrows.front() == Arrow{1, 2, 2});
  CHECK(matrix_view(view) == kronecker);

  const IceQuiver ice(rows({{0, 2, 0, 0}, {-2, 0, 1, 0}, {0, -1, 0, -1}}), 3);
  CHECK(arrow_view(ice).arrows == std::vector<Arrow>{{1, 2, 2}, {2, 3, 1}, {4, 3, 1}});
  CHECK(matrix_view(arrow_view(ice)) == ice);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IceQuiver q = framed(random_quiver(rng, 1 + trial % 6, 2));
    for (int s = 0; s < 5; ++s) q = mutate(q, 1 + static_cast<int>(rng() % q.mutable_count()));
    CHECK(matrix_view(arrow_view(q)) == q);
  }
}

TEST_CASE("c-vectors and colors of the A2 seeds") {
  const IceQuiver after1 = mutate(framed(a2()), 1);
  CHECK(c_matrix(after1).c_vector(1) == std::vector<Int>{-1, 0});
  CHECK(c_matrix(after1).c_vector(2) == std::vector<Int>{0, 1});
  CHECK(color(after1, 1) == VertexColor::Red);
  CHECK(color(after1, 2) == VertexColor::Green);
  const IceQuiver done = mutate(after1, 2);
  CHECK(all_red(done));
  for (int k = 1; k <= 2; ++k) CHECK(color(framed(a2()), k) == VertexColor::Green);
}

TEST_CASE("color agrees with frozen arrows in the arrow view") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    IceQuiver q = framed(random_quiver(rng, n));
    for (int s = 0; s < 6; ++s) {
      const IceArrows view = arrow_view(q);
      for (int k = 1; k <= n; ++k) {
        bool incoming = false;
        for (const Arrow& a : view.arrows) incoming |= a.target == k && a.source > n;
        CHECK((color(q, k) == VertexColor::Green) == !incoming);
      }
      q = mutate(q, 1 + static_cast<int>(rng() % n));
    }
  }
}

TEST_CASE("mixed-sign rows are sign coherence violations") {
  const IceQuiver broken(rows({{0, 1, 1, -1}, {-1, 0, 0, 1}}), 2);
  try {
    color(broken, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SignCoherenceViolation);
  }
}

TEST_CASE("g-vector mutation") {
  const GMatrix g = g_mutate(GMatrix::identity(2), framed(a2()), 1);
  CHECK(g.g_vector(1) == std::vector<Int>{-1, 0});
  CHECK(g.g_vector(2) == std::vector<Int>{0, 1});
  const IceQuiver after1 = mutate(framed(a2()), 1);
  CHECK(g_mutate(g, after1, 1) == GMatrix::identity(2));
}

TEST_CASE("g-matrix duality along random paths") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    Seed seed = Seed::initial(random_quiver(rng, n));
    for (int s = 0; s < 12; ++s) {
      const int k = 1 + static_cast<int>(rng() % n);
      seed = mutate(seed, k);
      const CMatrix c = c_matrix(seed.quiver);
      const Int det = determinant(c.matrix());
      CHECK((det == 1 || det == -1));
      CHECK(multiply(c.matrix(), seed.g.matrix().transposed()) == IntMatrix::identity(n));
    }
  }
}

TEST_CASE("unimodular inverse and determinant") {
  const IntMatrix m = rows({{2, 1, 0}, {1, 1, 0}, {3, -4, 1}});
  CHECK(determinant(m) == 1);
  CHECK(multiply(m, unimodular_inverse(m)) == IntMatrix::identity(3));
  CHECK(determinant(rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(unimodular_inverse(rows({{2, 0}, {0, 1}})), Error);
  CHECK(determinant(rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("canonical keys") {
  const IntMatrix id = IntMatrix::identity(3);
  const IntMatrix swapped = rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(canonical_key(CMatrix(id)) == canonical_key(CMatrix(swapped)));
  IntMatrix neg = id;
  for (int i = 0; i < 3; ++i) neg(i, i) = -1;
  CHECK(canonical_key(CMatrix(id)) != canonical_key(CMatrix(neg)));
}
