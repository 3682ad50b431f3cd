#include "pd3/int_matrix.hpp"

#include <utility>

namespace pd3 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged IntMatrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
  IntMatrix out(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t last) const {
  IntMatrix out(last - first, cols_);
  for (std::size_t i = first; i < last; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  Integer* d = &data_[dst * cols_];
  const Integer* s = &data_[src * cols_];
  for (std::size_t j = 0; j < cols_; ++j) {
    if (s[j] != 0) mpz_addmul(d[j].get_mpz_t(), s[j].get_mpz_t(), k.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) mpz_addmul((*this)(i, dst).get_mpz_t(), s.get_mpz_t(), k.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) mpz_neg((*this)(r, j).get_mpz_t(), (*this)(r, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) mpz_neg((*this)(i, c).get_mpz_t(), (*this)(i, c).get_mpz_t());
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) {
    throw ShapeMismatch("IntMatrix product " + std::to_string(x.rows_) + "x" +
                        std::to_string(x.cols_) + " by " + std::to_string(y.rows_) + "x" +
                        std::to_string(y.cols_));
  }
  IntMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Integer& a = x(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const Integer& b = y(k, j);
        if (b != 0) mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw ShapeMismatch("vstack: column counts differ");
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.cols() == 0) return right;
  if (right.cols() == 0) return left;
  if (left.rows() != right.rows()) throw ShapeMismatch("hstack: row counts differ");
  IntMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Integer gcd_of_entries(const IntMatrix& a) {
  Integer g = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
    }
  }
  return g;
}

}  // namespace pd3
