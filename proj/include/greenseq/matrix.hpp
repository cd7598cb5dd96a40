#pragma once

#include <cstdint>
#include <vector>

namespace greenseq {

using Int = std::int64_t;

// Overflow-checked arithmetic; every failure raises ErrorKind::Overflow.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);

// Dense row-major integer matrix, 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Int& operator()(int r, int c) { return data_[index(r, c)]; }
  Int operator()(int r, int c) const { return data_[index(r, c)]; }

  std::vector<Int> row(int r) const;
  std::vector<std::vector<Int>> to_rows() const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1; anything else is rejected.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace greenseq
