#pragma once
#include <cassert>
#include <initializer_list>
#include <vector>

#include "projcoh/numeric.hpp"

namespace projcoh {

// Dense row-major exact-integer matrix. Zero-dimensional shapes are legal.
struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(long n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rws);

  Int& at(long i, long j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return entries[static_cast<size_t>(i) * cols + j];
  }
  const Int& at(long i, long j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return entries[static_cast<size_t>(i) * cols + j];
  }

  bool operator==(const IntMatrix& o) const = default;
  bool is_zero() const;

  IntMatrix transposed() const;
  IntMatrix negated() const;
  std::vector<Int> col(long j) const;
  std::vector<Int> row(long i) const;
  IntMatrix cols_slice(const std::vector<long>& idx) const;
  IntMatrix rows_slice(const std::vector<long>& idx) const;

  void swap_cols(long i, long j);
  void negate_col(long j);
  // col_i += q * col_j
  void addmul_col(long i, long j, const Int& q);
  // (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
  void combine_cols(long i, long j, const Int& a, const Int& b, const Int& c, const Int& d);
  void swap_rows(long i, long j);
  void negate_row(long i);
  void addmul_row(long i, long j, const Int& q);

  std::string str() const;  // debug printing
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
Int det(const IntMatrix& a);  // square only; exact cofactor/Bareiss

// Dense exact-rational matrix, entries always canonicalized.
struct RatMatrix {
  long rows = 0, cols = 0;
  std::vector<Rat> entries;

  RatMatrix() = default;
  RatMatrix(long r, long c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}
  explicit RatMatrix(const IntMatrix& m);

  Rat& at(long i, long j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return entries[static_cast<size_t>(i) * cols + j];
  }
  const Rat& at(long i, long j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return entries[static_cast<size_t>(i) * cols + j];
  }

  bool operator==(const RatMatrix& o) const = default;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> mul(const RatMatrix& a, const std::vector<Rat>& x);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

// common denominator cleared: d * a integral
IntMatrix scale_to_int(const RatMatrix& a, Int* denom_out = nullptr);

}  // namespace projcoh
