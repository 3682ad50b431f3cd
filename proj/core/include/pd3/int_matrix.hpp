#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pd3/error.hpp"

namespace pd3 {

using Integer = mpz_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  // Sub-matrix of the given columns, in order.
  IntMatrix columns(std::size_t first, std::size_t last) const;
  IntMatrix rows_range(std::size_t first, std::size_t last) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Stack blocks vertically / horizontally.
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

// U * A * V = D with U, V unimodular, D diagonal, d1 | d2 | ... | dr > 0.
struct SmithDecomposition {
  IntMatrix U, U_inv;
  IntMatrix V, V_inv;
  IntMatrix D;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

struct SmithOptions {
  bool left = true;   // track U and U^-1
  bool right = true;  // track V and V^-1
};

SmithDecomposition smith_normal_form(const IntMatrix& a, SmithOptions opts = {});
// Nonzero invariant factors only; cheaper than the full decomposition.
std::vector<Integer> invariant_factors(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank_mod_p(const IntMatrix& a, unsigned long p);

// Columns form a Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Kernel basis K together with a left inverse L (L K = I), so coordinates
// of any kernel vector v in the basis K are L v.
struct KernelWithCoordinates {
  IntMatrix basis;
  IntMatrix coordinates;
};
KernelWithCoordinates kernel_with_coordinates(const IntMatrix& a);

// Row Hermite normal form of the lattice spanned by the rows of `a`; zero
// rows dropped.  Pivots positive, entries above a pivot in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

Integer gcd_of_entries(const IntMatrix& a);

}  // namespace pd3
