#include "pd3/ring_matrix.hpp"

namespace pd3 {

RingMatrix::RingMatrix(const GroupContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, RingElement(ctx)) {}

RingMatrix RingMatrix::identity(const GroupContext& ctx, std::size_t n) {
  RingMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement(ctx, 1);
  return m;
}

RingMatrix RingMatrix::column(const GroupContext& ctx, const std::vector<RingElement>& v) {
  RingMatrix m(ctx, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<RingElement> RingMatrix::column_vector(std::size_t j) const {
  std::vector<RingElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool RingMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RingMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

RingMatrix compose(const RingMatrix& outer, const RingMatrix& inner) {
  if (&outer.context() != &inner.context()) {
    throw ContextMismatch("compose: " + outer.context().name() + " vs " +
                          inner.context().name());
  }
  if (outer.cols() != inner.rows()) {
    throw ShapeMismatch("compose: outer has " + std::to_string(outer.cols()) +
                        " columns, inner has " + std::to_string(inner.rows()) + " rows");
  }
  RingMatrix out(outer.context(), outer.rows(), inner.cols());
  for (std::size_t k = 0; k < outer.rows(); ++k) {
    for (std::size_t j = 0; j < inner.cols(); ++j) {
      RingElement sum(outer.context());
      for (std::size_t i = 0; i < inner.rows(); ++i) {
        if (inner(i, j).is_zero() || outer(k, i).is_zero()) continue;
        sum += inner(i, j) * outer(k, i);
      }
      out(k, j) = std::move(sum);
    }
  }
  return out;
}

std::vector<RingElement> apply(const RingMatrix& m, const std::vector<RingElement>& x) {
  if (x.size() != m.cols()) {
    throw ShapeMismatch("apply: vector of length " + std::to_string(x.size()) +
                        " against " + std::to_string(m.cols()) + " columns");
  }
  std::vector<RingElement> y(m.rows(), RingElement(m.context()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (x[j].is_zero() || m(i, j).is_zero()) continue;
      y[i] += x[j] * m(i, j);
    }
  }
  return y;
}

RingMatrix involuted_transpose(const RingMatrix& m, OrientationCharacter chi) {
  RingMatrix out(m.context(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = involute(m(i, j), chi);
  }
  return out;
}

RingMatrix map_entries(const RingMatrix& m, const GroupHom& h) {
  RingMatrix out(h.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = induced_ring_map(h, m(i, j));
  }
  return out;
}

RingMatrix restrict_scalars(const RingElement& x) {
  if (x.context().id() != GroupId::Pi) {
    throw ContextMismatch("restrict_scalars expects an element of Z[Pi], got " +
                          x.context().name());
  }
  const auto& sub = GroupContext::get(GroupId::PiPrime);
  // x = m0 + m1 a with m0, m1 in Z[Pi'].  Writing g = a w gives
  // g = sigma(w) a where sigma swaps exponents 1 <-> 2, so sigma(m1)
  // collects the tails w directly.
  RingElement m0(sub), m1(sub), sigma_m0(sub), sigma_m1(sub);
  auto sigma = [](const std::string& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      out.append(3 - (j - i), w[i]);
      i = j;
    }
    return out;
  };
  for (const auto& [g, c] : x.terms()) {
    const std::string& nf = g.letters();
    if (g.a_exponent()) {
      std::string tail = nf.substr(1);
      sigma_m1.add_term(from_irreducible(sub, tail), c);
      m1.add_term(from_irreducible(sub, sigma(tail)), c);
    } else {
      m0.add_term(from_irreducible(sub, nf), c);
      sigma_m0.add_term(from_irreducible(sub, sigma(nf)), c);
    }
  }
  RingMatrix out(sub, 2, 2);
  out(0, 0) = m0;
  out(0, 1) = sigma_m1;
  out(1, 0) = m1;
  out(1, 1) = sigma_m0;
  return out;
}

RingMatrix restrict_scalars(const RingMatrix& m) {
  const auto& sub = GroupContext::get(GroupId::PiPrime);
  RingMatrix out(sub, 2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      RingMatrix block = restrict_scalars(m(i, j));
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) out(2 * i + r, 2 * j + c) = block(r, c);
      }
    }
  }
  return out;
}

std::string format_matrix(const RingMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_element(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace pd3
