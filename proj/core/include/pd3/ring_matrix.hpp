#pragma once

// Matrices over a group ring.
//
// Convention used everywhere: a matrix M describes a module map on the free
// left module with the given bases by
//
//     f(basis_j) = sum_i M(i, j) * basis_i,
//
// so column j holds the coordinates of the image of basis_j and a chain with
// coordinates x maps to y_i = sum_j x_j * M(i, j), ring coefficients on the
// left.

#include <cstddef>
#include <vector>

#include "pd3/ring.hpp"

namespace pd3 {

class RingMatrix {
 public:
  RingMatrix(const GroupContext& ctx, std::size_t rows, std::size_t cols);
  static RingMatrix identity(const GroupContext& ctx, std::size_t n);
  // Builds a one-column matrix from a coordinate vector.
  static RingMatrix column(const GroupContext& ctx, const std::vector<RingElement>& v);

  const GroupContext& context() const noexcept { return *ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  RingElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElement& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<RingElement> column_vector(std::size_t j) const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
    return x.ctx_ == y.ctx_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  const GroupContext* ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> data_;
};

// Matrix of `outer` after `inner`: (k, j) = sum_i inner(i, j) * outer(k, i).
RingMatrix compose(const RingMatrix& outer, const RingMatrix& inner);
// y_i = sum_j x_j * m(i, j).
std::vector<RingElement> apply(const RingMatrix& m, const std::vector<RingElement>& x);
// (i, j) -> involute(m(j, i)).
RingMatrix involuted_transpose(const RingMatrix& m, OrientationCharacter chi = {});
RingMatrix map_entries(const RingMatrix& m, const GroupHom& h);

// Right multiplication by x on Z[Pi] = Z[Pi'] + Z[Pi'] a, written in the
// basis {1, a} of the free Z[Pi']-module.  Composition order follows the
// module-map convention: restrict(x y) = compose(restrict(y), restrict(x)).
RingMatrix restrict_scalars(const RingElement& x);
// Blockwise: basis_j becomes (basis_j, a * basis_j).
RingMatrix restrict_scalars(const RingMatrix& m);

std::string format_matrix(const RingMatrix& m);

}  // namespace pd3
