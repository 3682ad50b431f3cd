#include <algorithm>
#include <optional>

#include "pd3/int_matrix.hpp"

namespace pd3 {

namespace {

int cmpabs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

// Quotient rounded to nearest, so the remainder is at most |p| / 2.
Integer nearest_quotient(const Integer& a, const Integer& p) {
  Integer num = 2 * a + p;
  Integer den = 2 * p;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Elementary operations on A, mirrored onto whichever transforms are tracked
// so that U * A0 * V = A and U_inv, V_inv stay the inverses.
class SmithEngine {
 public:
  SmithEngine(IntMatrix a, SmithOptions opts) : a_(std::move(a)) {
    if (opts.left) {
      u_ = IntMatrix::identity(a_.rows());
      u_inv_ = IntMatrix::identity(a_.rows());
    }
    if (opts.right) {
      v_ = IntMatrix::identity(a_.cols());
      v_inv_ = IntMatrix::identity(a_.cols());
    }
  }

  std::size_t run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      auto pivot = smallest_entry(t);
      if (!pivot) break;
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);
      while (true) {
        if (!clear_cross(t)) continue;
        auto bad = non_divisible(t);
        if (!bad) break;
        row_add(t, bad->first, 1);
      }
      if (a_(t, t) < 0) row_negate(t);
    }
    return t;
  }

  IntMatrix& a() { return a_; }
  std::optional<IntMatrix> u_, u_inv_, v_, v_inv_;

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        if (!best || cmpabs(x, a_(best->first, best->second)) < 0) {
          best = {i, j};
          if (x == 1 || x == -1) return best;
        }
      }
    }
    return best;
  }

  // Reduces row t and column t against the pivot.  Returns true once both are
  // zero off the diagonal; otherwise moves the smallest remainder to (t, t).
  bool clear_cross(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a_(i, t) == 0) continue;
      Integer q = nearest_quotient(a_(i, t), a_(t, t));
      row_add(i, t, -q);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a_(t, j) == 0) continue;
      Integer q = nearest_quotient(a_(t, j), a_(t, t));
      col_add(j, t, -q);
    }
    std::optional<std::size_t> row_best, col_best;
    const Integer* best = &a_(t, t);
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a_(i, t) != 0 && cmpabs(a_(i, t), *best) < 0) {
        best = &a_(i, t);
        row_best = i;
        col_best.reset();
      }
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a_(t, j) != 0 && cmpabs(a_(t, j), *best) < 0) {
        best = &a_(t, j);
        col_best = j;
        row_best.reset();
      }
    }
    if (row_best) {
      row_swap(t, *row_best);
      return false;
    }
    if (col_best) {
      col_swap(t, *col_best);
      return false;
    }
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a_(i, t) != 0) return false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a_(t, j) != 0) return false;
    }
    return true;
  }

  std::optional<std::pair<std::size_t, std::size_t>> non_divisible(std::size_t t) const {
    const Integer& p = a_(t, t);
    if (p == 1 || p == -1) return std::nullopt;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) {
          return std::make_pair(i, j);
        }
      }
    }
    return std::nullopt;
  }

  void row_add(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    a_.add_row_multiple(dst, src, k);
    if (u_) u_->add_row_multiple(dst, src, k);
    if (u_inv_) u_inv_->add_col_multiple(src, dst, -k);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    a_.add_col_multiple(dst, src, k);
    if (v_) v_->add_col_multiple(dst, src, k);
    if (v_inv_) v_inv_->add_row_multiple(src, dst, -k);
  }
  void row_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_rows(x, y);
    if (u_) u_->swap_rows(x, y);
    if (u_inv_) u_inv_->swap_cols(x, y);
  }
  void col_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_cols(x, y);
    if (v_) v_->swap_cols(x, y);
    if (v_inv_) v_inv_->swap_rows(x, y);
  }
  void row_negate(std::size_t r) {
    a_.negate_row(r);
    if (u_) u_->negate_row(r);
    if (u_inv_) u_inv_->negate_col(r);
  }

  IntMatrix a_;
};

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a, SmithOptions opts) {
  SmithEngine engine(a, opts);
  SmithDecomposition out;
  out.rank = engine.run();
  out.D = std::move(engine.a());
  if (engine.u_) out.U = std::move(*engine.u_);
  if (engine.u_inv_) out.U_inv = std::move(*engine.u_inv_);
  if (engine.v_) out.V = std::move(*engine.v_);
  if (engine.v_inv_) out.V_inv = std::move(*engine.v_inv_);
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  return smith_normal_form(a, {.left = false, .right = false}).diagonal();
}

std::size_t rank(const IntMatrix& a) {
  return smith_normal_form(a, {.left = false, .right = false}).rank;
}

std::size_t rank_mod_p(const IntMatrix& a, unsigned long p) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<unsigned long> w(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
  }
  auto inverse = [p](unsigned long x) {
    mpz_class r, xx(x), pp(p);
    mpz_invert(r.get_mpz_t(), xx.get_mpz_t(), pp.get_mpz_t());
    return r.get_ui();
  };
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && w[piv * n + col] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w[piv * n + j], w[r * n + j]);
    }
    const unsigned long inv = inverse(w[r * n + col]);
    for (std::size_t j = col; j < n; ++j) w[r * n + j] = w[r * n + j] * inv % p;
    for (std::size_t i = r + 1; i < m; ++i) {
      const unsigned long f = w[i * n + col];
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        w[i * n + j] = (w[i * n + j] + (p - f) * w[r * n + j]) % p;
      }
    }
    ++r;
  }
  return r;
}

KernelWithCoordinates kernel_with_coordinates(const IntMatrix& a) {
  auto snf = smith_normal_form(a, {.left = false, .right = true});
  KernelWithCoordinates out;
  out.basis = snf.V.columns(snf.rank, a.cols());
  out.coordinates = snf.V_inv.rows_range(snf.rank, a.cols());
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) { return kernel_with_coordinates(a).basis; }

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < n && pr < m; ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pr; r < m; ++r) {
        if (h(r, c) != 0 && (!best || cmpabs(h(r, c), h(*best, c)) < 0)) best = r;
      }
      if (!best) break;
      h.swap_rows(pr, *best);
      bool done = true;
      for (std::size_t r = pr + 1; r < m; ++r) {
        if (h(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(pr, c).get_mpz_t());
        h.add_row_multiple(r, pr, -q);
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pr, c) == 0) continue;
    if (h(pr, c) < 0) h.negate_row(pr);
    for (std::size_t r = 0; r < pr; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(pr, c).get_mpz_t());
      h.add_row_multiple(r, pr, -q);
    }
    ++pr;
  }
  return h.rows_range(0, pr);
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("same_row_lattice: ambient ranks differ");
  return hermite_normal_form(a) == hermite_normal_form(b);
}

}  // namespace pd3
