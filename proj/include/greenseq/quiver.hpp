#pragma once

#include <string>
#include <vector>

#include "greenseq/matrix.hpp"

namespace greenseq {

// All vertex indices in the public API are 1-based.
struct Arrow {
  int source = 0;
  int target = 0;
  Int multiplicity = 1;

  auto operator<=>(const Arrow&) const = default;
};

// Loop-free, 2-acyclic quiver held as its skew-symmetric exchange matrix.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertices);

  static Quiver from_arrows(int vertices, const std::vector<Arrow>& arrows);
  static Quiver from_exchange_matrix(const IntMatrix& b);

  int size() const noexcept { return b_.rows(); }

  // Signed count: arrows i->j minus arrows j->i.
  Int entry(int i, int j) const;
  Int arrows_from_to(int from, int to) const;

  std::vector<Arrow> arrows() const;
  std::vector<int> neighbours(int v) const;
  Int degree(int v) const;

  const IntMatrix& exchange_matrix() const noexcept { return b_; }

  bool operator==(const Quiver&) const = default;

 private:
  void check_vertex(int v) const;

  IntMatrix b_;
};

Quiver mutate(const Quiver& q, int k);

// Full subquiver; vertex i of the result is vertices[i-1] of q.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices);

// Relabels so that vertex v of q becomes vertex image[v-1] of the result.
Quiver relabel(const Quiver& q, const std::vector<int>& image);

// Mutable vertices 1..n, frozen n+1..m; stores the n x m exchange matrix.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(IntMatrix b, int mutable_count);

  int mutable_count() const noexcept { return b_.rows(); }
  int size() const noexcept { return b_.cols(); }

  Int entry(int i, int j) const;
  const IntMatrix& exchange_matrix() const noexcept { return b_; }
  Quiver mutable_part() const;

  bool operator==(const IceQuiver&) const = default;

 private:
  IntMatrix b_;
};

IceQuiver mutate(const IceQuiver& q, int k);
IceQuiver framed(const Quiver& q);
IceQuiver coframed(const Quiver& q);

// Arrow-list encoding of an ice quiver; arrows between frozen vertices are not representable.
struct IceArrows {
  int mutable_count = 0;
  int size = 0;
  std::vector<Arrow> arrows;

  bool operator==(const IceArrows&) const = default;
};

IceArrows arrow_view(const IceQuiver& q);
IceQuiver matrix_view(const IceArrows& q);

enum class VertexColor { Green, Red };

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(IntMatrix c);

  int size() const noexcept { return c_.rows(); }
  std::vector<Int> c_vector(int k) const;
  const IntMatrix& matrix() const noexcept { return c_; }

  bool operator==(const CMatrix&) const = default;

 private:
  IntMatrix c_;
};

class GMatrix {
 public:
  GMatrix() = default;
  explicit GMatrix(IntMatrix g);

  static GMatrix identity(int n);

  int size() const noexcept { return g_.rows(); }
  std::vector<Int> g_vector(int k) const;
  const IntMatrix& matrix() const noexcept { return g_; }

  bool operator==(const GMatrix&) const = default;

 private:
  IntMatrix g_;
};

// Last n columns of a framed seed.
CMatrix c_matrix(const IceQuiver& seed);

VertexColor color(const IceQuiver& seed, int k);
bool all_red(const IceQuiver& seed);

GMatrix g_mutate(const GMatrix& g, const IceQuiver& seed, int k);

// (C^-1)^T; requires det C = +-1.
GMatrix dual_g_matrix(const CMatrix& c);

// Row-multiset key: rows sorted lexicographically, then serialized.
std::string canonical_key(const CMatrix& c);

// A framed seed with its g-matrix, advanced together.
struct Seed {
  IceQuiver quiver;
  GMatrix g;

  static Seed initial(const Quiver& q);
};

// Mutates both parts and cross-checks the g-matrix against duality.
Seed mutate(const Seed& seed, int k);

}  // namespace greenseq
