#include "pd3/complex.hpp"

namespace pd3 {

RingElement fox_derivative(const Word& w, Generator x, const GroupContext& ring) {
  RingElement out(ring);
  GroupElement prefix(ring);
  for (const auto& s : w) {
    if (s.gen == x) {
      if (s.exponent > 0) {
        GroupElement partial = prefix;  // prefix * x^i
        for (int i = 0; i < s.exponent; ++i) {
          out.add_term(partial, 1);
          partial = multiply(partial, generator(ring, x));
        }
      } else {
        for (int k = 1; k <= -s.exponent; ++k) {
          out.add_term(multiply(prefix, normalize(ring, Word{{x, -k}})), -1);
        }
      }
    }
    prefix = multiply(prefix, normalize(ring, Word{s}));
  }
  return out;
}

std::string format_chain(const Chain& c, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string name =
        i < labels.size() ? labels[i] : "[" + std::to_string(c.degree) + ":" + std::to_string(i) + "]";
    out += "(" + format_element(c.coords[i]) + ")" + name;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(const GroupContext& ctx, std::vector<std::size_t> ranks,
                         std::vector<RingMatrix> differentials,
                         std::vector<std::vector<std::string>> labels)
    : ctx_(&ctx),
      ranks_(std::move(ranks)),
      differentials_(std::move(differentials)),
      labels_(std::move(labels)) {
  if (ranks_.empty()) throw ShapeMismatch("complex needs at least degree 0");
  if (differentials_.size() + 1 != ranks_.size()) {
    throw ShapeMismatch("complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                        std::to_string(ranks_.size() - 1) + " differentials, got " +
                        std::to_string(differentials_.size()));
  }
  for (std::size_t d = 1; d < ranks_.size(); ++d) {
    const auto& m = differentials_[d - 1];
    if (&m.context() != ctx_) {
      throw ContextMismatch("differential " + std::to_string(d) + " lives over " +
                            m.context().name() + ", complex over " + ctx_->name());
    }
    if (m.rows() != ranks_[d - 1] || m.cols() != ranks_[d]) {
      throw ShapeMismatch("differential " + std::to_string(d) + " has shape " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(ranks_[d - 1]) + "x" +
                          std::to_string(ranks_[d]));
    }
  }
  labels_.resize(ranks_.size());
  for (std::size_t d = 0; d < ranks_.size(); ++d) {
    auto& l = labels_[d];
    if (l.size() == ranks_[d]) continue;
    l.clear();
    for (std::size_t i = 0; i < ranks_[d]; ++i) {
      l.push_back("c" + std::to_string(d) + "_" + std::to_string(i + 1));
    }
  }
}

std::optional<int> FreeComplex::first_nonzero_composite() const {
  for (int d = 2; d <= top_degree(); ++d) {
    if (!compose(differential(d - 1), differential(d)).is_zero()) return d;
  }
  return std::nullopt;
}

Chain FreeComplex::cell(int d, std::size_t i) const {
  Chain c{d, std::vector<RingElement>(rank(d), RingElement(*ctx_))};
  c.coords.at(i) = RingElement(*ctx_, 1);
  return c;
}

Chain FreeComplex::boundary(const Chain& c) const {
  if (c.degree == 0) return Chain{-1, {}};
  return Chain{c.degree - 1, pd3::apply(differential(c.degree), c.coords)};
}

FreeComplex build_fox_lyndon(const Presentation& p) {
  const auto& ctx = *p.group;
  const std::size_t n = p.generators.size(), m = p.relators.size();
  RingMatrix d1(ctx, 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    d1(0, j) = RingElement(generator(ctx, p.generators[j])) - RingElement(ctx, 1);
  }
  RingMatrix d2(ctx, n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      d2(i, j) = fox_derivative(p.relators[j], p.generators[i], ctx);
    }
  }
  std::vector<std::vector<std::string>> labels(3);
  labels[0] = {"1"};
  for (auto g : p.generators) labels[1].emplace_back(1, static_cast<char>(g));
  for (std::size_t j = 0; j < m; ++j) {
    labels[2].push_back(j < p.relator_names.size() ? p.relator_names[j]
                                                   : "R" + std::to_string(j + 1));
  }
  return FreeComplex(ctx, {1, n, m}, {std::move(d1), std::move(d2)}, std::move(labels));
}

FreeComplex attach_top_cell(const FreeComplex& cx, const std::vector<RingElement>& z,
                            const std::string& label) {
  const int top = cx.top_degree();
  if (z.size() != cx.rank(top)) {
    throw ShapeMismatch("attaching chain has " + std::to_string(z.size()) +
                        " coordinates, top degree has rank " + std::to_string(cx.rank(top)));
  }
  if (top >= 1) {
    Chain residual = cx.boundary(Chain{top, z});
    bool zero = true;
    for (const auto& x : residual.coords) zero = zero && x.is_zero();
    if (!zero) {
      throw NotACycle("attaching chain is not a cycle; boundary = " +
                      format_chain(residual, cx.labels(top - 1)));
    }
  }
  auto ranks = cx.ranks();
  ranks.push_back(1);
  auto diffs = cx.differentials();
  diffs.push_back(RingMatrix::column(cx.context(), z));
  auto labels = cx.all_labels();
  labels.push_back({label});
  return FreeComplex(cx.context(), std::move(ranks), std::move(diffs), std::move(labels));
}

// ---------------------------------------------------------------------------
// Basis changes

BasisChange::BasisChange(std::vector<std::optional<Entry>> degrees)
    : degrees_(std::move(degrees)) {
  for (std::size_t d = 0; d < degrees_.size(); ++d) {
    if (!degrees_[d]) continue;
    const auto& e = *degrees_[d];
    const auto& ctx = e.forward.context();
    const std::size_t n = e.forward.rows();
    if (e.forward.cols() != n || e.inverse.rows() != n || e.inverse.cols() != n) {
      throw ShapeMismatch("basis change in degree " + std::to_string(d) + " is not square");
    }
    const auto id = RingMatrix::identity(ctx, n);
    if (!(compose(e.forward, e.inverse) == id) || !(compose(e.inverse, e.forward) == id)) {
      throw NotInvertible("basis change in degree " + std::to_string(d) +
                          " does not compose to the identity with its stated inverse");
    }
  }
}

const std::optional<BasisChange::Entry>& BasisChange::at(int d) const {
  static const std::optional<Entry> none;
  if (d < 0 || static_cast<std::size_t>(d) >= degrees_.size()) return none;
  return degrees_[static_cast<std::size_t>(d)];
}

FreeComplex change_basis(const FreeComplex& cx, const BasisChange& bc) {
  std::vector<RingMatrix> diffs;
  for (int d = 1; d <= cx.top_degree(); ++d) {
    RingMatrix m = cx.differential(d);
    if (const auto& upper = bc.at(d)) {
      if (upper->forward.rows() != cx.rank(d)) {
        throw ShapeMismatch("basis change size differs from rank in degree " +
                            std::to_string(d));
      }
      m = compose(m, upper->forward);
    }
    if (const auto& lower = bc.at(d - 1)) {
      if (lower->inverse.rows() != cx.rank(d - 1)) {
        throw ShapeMismatch("basis change size differs from rank in degree " +
                            std::to_string(d - 1));
      }
      m = compose(lower->inverse, m);
    }
    diffs.push_back(std::move(m));
  }
  auto labels = cx.all_labels();
  for (int d = 0; d <= cx.top_degree(); ++d) {
    if (const auto& e = bc.at(d); e && e->labels.size() == cx.rank(d)) {
      labels[static_cast<std::size_t>(d)] = e->labels;
    }
  }
  return FreeComplex(cx.context(), cx.ranks(), std::move(diffs), std::move(labels));
}

FreeComplex dual_conjugate_transpose(const FreeComplex& cx, OrientationCharacter chi) {
  const int top = cx.top_degree();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= top; ++k) {
    ranks.push_back(cx.rank(top - k));
    std::vector<std::string> l;
    for (const auto& s : cx.labels(top - k)) {
      l.push_back(s.size() > 1 && s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
    }
    labels.push_back(std::move(l));
  }
  std::vector<RingMatrix> diffs;
  for (int k = 1; k <= top; ++k) {
    diffs.push_back(involuted_transpose(cx.differential(top + 1 - k), chi));
  }
  return FreeComplex(cx.context(), std::move(ranks), std::move(diffs), std::move(labels));
}

SelfDualityReport self_duality_check(const FreeComplex& cx, OrientationCharacter chi) {
  SelfDualityReport r;
  if (cx.top_degree() != 3) {
    r.detail = "complex spans degrees 0.." + std::to_string(cx.top_degree()) + ", need 0..3";
    return r;
  }
  const auto& d2 = cx.differential(2);
  r.d2_hermitian = involuted_transpose(d2, chi) == d2;
  const auto d1_bar = involuted_transpose(cx.differential(1), chi);
  r.d3_is_transpose_of_d1 = d1_bar == cx.differential(3);
  if (!r.d2_hermitian) r.detail += "d2 = " + format_matrix(d2) + " is not hermitian; ";
  if (!r.d3_is_transpose_of_d1) {
    r.detail += "d3 = " + format_matrix(cx.differential(3)) + " but involuted transpose of d1 = " +
                format_matrix(d1_bar);
  }
  return r;
}

FreeComplex push_forward(const FreeComplex& cx, const GroupHom& h) {
  if (&cx.context() != &h.source()) {
    throw ContextMismatch("push_forward: complex over " + cx.context().name() +
                          ", homomorphism from " + h.source().name());
  }
  std::vector<RingMatrix> diffs;
  for (const auto& m : cx.differentials()) diffs.push_back(map_entries(m, h));
  return FreeComplex(h.target(), cx.ranks(), std::move(diffs), cx.all_labels());
}

FreeComplex restrict_to_index_two(const FreeComplex& cx) {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
  for (int d = 0; d <= cx.top_degree(); ++d) {
    ranks.push_back(2 * cx.rank(d));
    std::vector<std::string> l;
    for (const auto& s : cx.labels(d)) {
      l.push_back(s);
      l.push_back("a." + s);
    }
    labels.push_back(std::move(l));
  }
  std::vector<RingMatrix> diffs;
  for (const auto& m : cx.differentials()) diffs.push_back(restrict_scalars(m));
  return FreeComplex(GroupContext::get(GroupId::PiPrime), std::move(ranks), std::move(diffs),
                     std::move(labels));
}

}  // namespace pd3
