#include "greenseq/quiver.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "greenseq/error.hpp"

namespace greenseq {

namespace {

// (|a|b + a|b|)/2 without the halving round trip.
Int mutation_term(Int a, Int b) {
  if (a > 0 && b > 0) return checked_mul(a, b);
  if (a < 0 && b < 0) return checked_neg(checked_mul(a, b));
  return 0;
}

void check_skew_principal(const IntMatrix& b) {
  const int n = b.rows();
  if (b.cols() < n) fail(ErrorKind::MalformedQuiver, "exchange matrix has fewer columns than rows");
  for (int i = 0; i < n; ++i) {
    if (b(i, i) != 0) fail(ErrorKind::MalformedQuiver, "loop at vertex " + std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j)
      if (b(i, j) != -b(j, i)) fail(ErrorKind::MalformedQuiver, "principal part is not skew-symmetric");
  }
}

}  // namespace

Quiver::Quiver(int vertices) : b_(vertices, vertices) {}

Quiver Quiver::from_arrows(int vertices, const std::vector<Arrow>& arrows) {
  const IceQuiver ice = matrix_view(IceArrows{vertices, vertices, arrows});
  return ice.mutable_part();
}

Quiver Quiver::from_exchange_matrix(const IntMatrix& b) {
  if (b.rows() != b.cols()) fail(ErrorKind::MalformedQuiver, "quiver matrix must be square");
  check_skew_principal(b);
  Quiver q;
  q.b_ = b;
  return q;
}

void Quiver::check_vertex(int v) const {
  if (v < 1 || v > size()) fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
}

Int Quiver::entry(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return b_(i - 1, j - 1);
}

Int Quiver::arrows_from_to(int from, int to) const { return std::max<Int>(entry(from, to), 0); }

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (b_(i, j) > 0) out.push_back({i + 1, j + 1, b_(i, j)});
  return out;
}

std::vector<int> Quiver::neighbours(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (b_(v - 1, j) != 0) out.push_back(j + 1);
  return out;
}

Int Quiver::degree(int v) const {
  check_vertex(v);
  Int d = 0;
  for (int j = 0; j < size(); ++j) d = checked_add(d, checked_abs(b_(v - 1, j)));
  return d;
}

Quiver mutate(const Quiver& q, int k) {
  if (k < 1 || k > q.size()) fail(ErrorKind::IndexOutOfRange, "cannot mutate at vertex " + std::to_string(k));
  return mutate(IceQuiver(q.exchange_matrix(), q.size()), k).mutable_part();
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = q.entry(vertices[i], vertices[j]);
  return Quiver::from_exchange_matrix(b);
}

Quiver relabel(const Quiver& q, const std::vector<int>& image) {
  const int n = q.size();
  if (static_cast<int>(image.size()) != n) fail(ErrorKind::IndexOutOfRange, "relabeling has wrong size");
  std::vector<bool> seen(n, false);
  for (int v : image) {
    if (v < 1 || v > n || seen[v - 1]) fail(ErrorKind::IndexOutOfRange, "relabeling is not a permutation");
    seen[v - 1] = true;
  }
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(image[i] - 1, image[j] - 1) = q.exchange_matrix()(i, j);
  return Quiver::from_exchange_matrix(b);
}

IceQuiver::IceQuiver(IntMatrix b, int mutable_count) : b_(std::move(b)) {
  if (mutable_count < 1 || mutable_count != b_.rows())
    fail(ErrorKind::MalformedQuiver, "mutable count must equal the row count and be positive");
  check_skew_principal(b_);
}

Int IceQuiver::entry(int i, int j) const {
  if (i < 1 || i > mutable_count() || j < 1 || j > size())
    fail(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return b_(i - 1, j - 1);
}

Quiver IceQuiver::mutable_part() const {
  const int n = mutable_count();
  IntMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = b_(i, j);
  return Quiver::from_exchange_matrix(p);
}

IceQuiver mutate(const IceQuiver& q, int k) {
  const int n = q.mutable_count();
  const int m = q.size();
  if (k < 1 || k > n) fail(ErrorKind::IndexOutOfRange, "cannot mutate at vertex " + std::to_string(k));
  const IntMatrix& b = q.exchange_matrix();
  const int kk = k - 1;
  IntMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    const Int bik = b(i, kk);
    for (int j = 0; j < m; ++j) {
      if (i == kk || j == kk) {
        out(i, j) = checked_neg(b(i, j));
      } else {
        out(i, j) = checked_add(b(i, j), mutation_term(bik, b(kk, j)));
      }
    }
  }
  return IceQuiver(std::move(out), n);
}

namespace {

IceQuiver with_frame(const Quiver& q, Int sign) {
  const int n = q.size();
  if (n < 1) fail(ErrorKind::MalformedQuiver, "framing needs at least one vertex");
  IntMatrix b(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = q.exchange_matrix()(i, j);
    b(i, n + i) = sign;
  }
  return IceQuiver(std::move(b), n);
}

}  // namespace

IceQuiver framed(const Quiver& q) { return with_frame(q, 1); }

IceQuiver coframed(const Quiver& q) { return with_frame(q, -1); }

IceArrows arrow_view(const IceQuiver& q) {
  IceArrows out{q.mutable_count(), q.size(), {}};
  const IntMatrix& b = q.exchange_matrix();
  for (int i = 0; i < q.mutable_count(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      if (b(i, j) > 0) out.arrows.push_back({i + 1, j + 1, b(i, j)});
      // Mutable-to-mutable arrows are recorded once, from the source row.
      if (b(i, j) < 0 && j >= q.mutable_count()) out.arrows.push_back({j + 1, i + 1, -b(i, j)});
    }
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

IceQuiver matrix_view(const IceArrows& q) {
  const int n = q.mutable_count;
  const int m = q.size;
  if (n < 0 || m < n) fail(ErrorKind::MalformedQuiver, "vertex counts are inconsistent");
  IntMatrix full(m, m);
  for (const Arrow& a : q.arrows) {
    if (a.source < 1 || a.source > m || a.target < 1 || a.target > m)
      fail(ErrorKind::MalformedQuiver, "arrow endpoint out of range");
    if (a.source == a.target) fail(ErrorKind::MalformedQuiver, "loop at vertex " + std::to_string(a.source));
    if (a.multiplicity < 1) fail(ErrorKind::MalformedQuiver, "arrow multiplicity must be positive");
    if (a.source > n && a.target > n) fail(ErrorKind::MalformedQuiver, "arrow between frozen vertices");
    const int s = a.source - 1;
    const int t = a.target - 1;
    if (full(t, s) > 0)
      fail(ErrorKind::MalformedQuiver,
           "2-cycle between " + std::to_string(a.source) + " and " + std::to_string(a.target));
    full(s, t) = checked_add(full(s, t), a.multiplicity);
  }
  IntMatrix b(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) b(i, j) = checked_sub(full(i, j), full(j, i));
  if (n == 0) fail(ErrorKind::MalformedQuiver, "at least one mutable vertex is required");
  return IceQuiver(std::move(b), n);
}

CMatrix::CMatrix(IntMatrix c) : c_(std::move(c)) {
  if (c_.rows() != c_.cols()) fail(ErrorKind::IndexOutOfRange, "c-matrix must be square");
}

std::vector<Int> CMatrix::c_vector(int k) const {
  if (k < 1 || k > size()) fail(ErrorKind::IndexOutOfRange, "no c-vector " + std::to_string(k));
  return c_.row(k - 1);
}

GMatrix::GMatrix(IntMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) fail(ErrorKind::IndexOutOfRange, "g-matrix must be square");
}

GMatrix GMatrix::identity(int n) { return GMatrix(IntMatrix::identity(n)); }

std::vector<Int> GMatrix::g_vector(int k) const {
  if (k < 1 || k > size()) fail(ErrorKind::IndexOutOfRange, "no g-vector " + std::to_string(k));
  return g_.row(k - 1);
}

CMatrix c_matrix(const IceQuiver& seed) {
  const int n = seed.mutable_count();
  if (seed.size() != 2 * n) fail(ErrorKind::PreconditionViolated, "c-matrix needs a framed seed (m = 2n)");
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = seed.exchange_matrix()(i, n + j);
  return CMatrix(std::move(c));
}

VertexColor color(const IceQuiver& seed, int k) {
  const int n = seed.mutable_count();
  if (k < 1 || k > n) fail(ErrorKind::IndexOutOfRange, "no mutable vertex " + std::to_string(k));
  if (seed.size() != 2 * n) fail(ErrorKind::PreconditionViolated, "color needs a framed seed (m = 2n)");
  bool positive = false;
  bool negative = false;
  for (int j = 0; j < n; ++j) {
    const Int v = seed.exchange_matrix()(k - 1, n + j);
    positive |= v > 0;
    negative |= v < 0;
  }
  if (positive == negative) fail(ErrorKind::SignCoherenceViolation, "c-vector of vertex " + std::to_string(k));
  return positive ? VertexColor::Green : VertexColor::Red;
}

bool all_red(const IceQuiver& seed) {
  for (int k = 1; k <= seed.mutable_count(); ++k)
    if (color(seed, k) == VertexColor::Green) return false;
  return true;
}

GMatrix g_mutate(const GMatrix& g, const IceQuiver& seed, int k) {
  const int n = seed.mutable_count();
  if (g.size() != n) fail(ErrorKind::IndexOutOfRange, "g-matrix size does not match the seed");
  const bool green = color(seed, k) == VertexColor::Green;
  IntMatrix next = g.matrix();
  const IntMatrix& b = seed.exchange_matrix();
  for (int col = 0; col < n; ++col) {
    Int acc = checked_neg(g.matrix()(k - 1, col));
    for (int j = 0; j < n; ++j) {
      const Int count = green ? b(j, k - 1) : b(k - 1, j);
      if (count > 0) acc = checked_add(acc, checked_mul(count, g.matrix()(j, col)));
    }
    next(k - 1, col) = acc;
  }
  return GMatrix(std::move(next));
}

GMatrix dual_g_matrix(const CMatrix& c) { return GMatrix(unimodular_inverse(c.matrix()).transposed()); }

std::string canonical_key(const CMatrix& c) {
  std::vector<std::vector<Int>> rows = c.matrix().to_rows();
  std::sort(rows.begin(), rows.end());
  std::string key;
  key.reserve(rows.size() * rows.size() * sizeof(Int));
  for (const auto& row : rows)
    for (Int v : row) {
      char bytes[sizeof(Int)];
      std::memcpy(bytes, &v, sizeof(Int));
      key.append(bytes, sizeof(Int));
    }
  return key;
}

Seed Seed::initial(const Quiver& q) { return {framed(q), GMatrix::identity(q.size())}; }

Seed mutate(const Seed& seed, int k) {
  Seed next{mutate(seed.quiver, k), g_mutate(seed.g, seed.quiver, k)};
  if (dual_g_matrix(c_matrix(next.quiver)) != next.g)
    fail(ErrorKind::ConstructionInvariantViolated, "g-matrix disagrees with the dual of the c-matrix");
  return next;
}

}  // namespace greenseq
