#include "greenseq/matrix.hpp"

#include <limits>
#include <string>
#include <utility>

#include "greenseq/error.hpp"

namespace greenseq {

namespace {

using Wide = __int128;

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    fail(ErrorKind::Overflow, "value exceeds 64-bit range");
  }
  return static_cast<Int>(v);
}

Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "intermediate exceeds 128-bit range");
  return r;
}

Wide wide_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "intermediate exceeds 128-bit range");
  return r;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "multiplication overflow");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(ErrorKind::IndexOutOfRange, "negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::MalformedQuiver, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(int r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0));
  return {first, first + cols_};
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::IndexOutOfRange, "dimension mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Int acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc = checked_add(acc, checked_mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

namespace {

// Bareiss elimination, destructive on rows.
Wide bareiss(std::vector<std::vector<Wide>>& rows, int n) {
  const int width = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Wide sign = 1;
  Wide previous = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && rows[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(rows[pivot], rows[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < width; ++j) {
        rows[i][j] = wide_sub(wide_mul(rows[i][j], rows[k][k]), wide_mul(rows[i][k], rows[k][j])) / previous;
      }
      rows[i][k] = 0;
    }
    previous = rows[k][k];
  }
  return sign * rows[n - 1][n - 1];
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::IndexOutOfRange, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> rows(n, std::vector<Wide>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
  return narrow(bareiss(rows, n));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::IndexOutOfRange, "inverse of non-square matrix");
  const int n = m.rows();
  // Integer Gauss-Jordan with Euclid steps per column; unit pivots exist only
  // for unimodular input.
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    // Euclid on the column below the diagonal until a single nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int i = col; i < n; ++i)
        if (a[i][col] != 0 && (best < 0 || (a[i][col] < 0 ? -a[i][col] : a[i][col]) <
                                                (a[best][col] < 0 ? -a[best][col] : a[best][col])))
          best = i;
      if (best < 0) fail(ErrorKind::PreconditionViolated, "matrix is singular");
      std::swap(a[best], a[col]);
      bool done = true;
      for (int i = col + 1; i < n; ++i) {
        if (a[i][col] == 0) continue;
        const Wide q = a[i][col] / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[i][j] = wide_sub(a[i][j], wide_mul(q, a[col][j]));
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[col][col] != 1 && a[col][col] != -1) fail(ErrorKind::PreconditionViolated, "determinant is not +-1");
    if (a[col][col] == -1)
      for (int j = 0; j < 2 * n; ++j) a[col][j] = -a[col][j];
  }
  for (int col = n - 1; col >= 0; --col)
    for (int i = 0; i < col; ++i) {
      const Wide q = a[i][col];
      if (q == 0) continue;
      for (int j = 0; j < 2 * n; ++j) a[i][j] = wide_sub(a[i][j], wide_mul(q, a[col][j]));
    }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = narrow(a[i][n + j]);
  return inv;
}

}  // namespace greenseq
