#include "pd3/tensor.hpp"

namespace pd3 {

void TensorElement::add_term(const TensorKey& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& y) {
  for (const auto& [k, c] : y.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& y) {
  for (const auto& [k, c] : y.terms_) add_term(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Integer& n) {
  if (n == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= n;
  return *this;
}

TensorElement tensor(const Chain& x, const Chain& y) {
  TensorElement out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    for (const auto& [g, m] : x.coords[i].terms()) {
      for (std::size_t j = 0; j < y.coords.size(); ++j) {
        for (const auto& [h, n] : y.coords[j].terms()) {
          out.add_term({x.degree, i, g, y.degree, j, h}, m * n);
        }
      }
    }
  }
  return out;
}

TensorElement act_diagonal(const GroupElement& g, const TensorElement& t) {
  if (g.is_identity()) return t;
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    out.add_term({k.p, k.i, multiply(g, k.g), k.q, k.j, multiply(g, k.h)}, c);
  }
  return out;
}

TensorElement tensor_boundary(const TensorElement& t, const FreeComplex& cx) {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    if (k.p > 0) {
      const auto& d = cx.differential(k.p);
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (const auto& [x, m] : d(r, k.i).terms()) {
          out.add_term({k.p - 1, r, multiply(k.g, x), k.q, k.j, k.h}, c * m);
        }
      }
    }
    if (k.q > 0) {
      const auto& d = cx.differential(k.q);
      const Integer sign = k.p % 2 ? -1 : 1;
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (const auto& [x, m] : d(r, k.j).terms()) {
          out.add_term({k.p, k.i, k.g, k.q - 1, r, multiply(k.h, x)}, sign * c * m);
        }
      }
    }
  }
  return out;
}

TensorElement transpose_tau(const TensorElement& t) {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    const Integer sign = (k.p * k.q) % 2 ? -1 : 1;
    out.add_term({k.q, k.j, k.h, k.p, k.i, k.g}, sign * c);
  }
  return out;
}

namespace {

std::string cell_name(const FreeComplex& cx, int d, std::size_t i) {
  if (d >= 0 && d <= cx.top_degree() && i < cx.rank(d)) {
    const auto& l = cx.labels(d);
    if (i < l.size()) return l[i];
  }
  return "[" + std::to_string(d) + ":" + std::to_string(i) + "]";
}

std::string translate(const GroupElement& g, const std::string& name) {
  return g.is_identity() ? name : g.to_string() + "." + name;
}

}  // namespace

std::string format_tensor(const TensorElement& t, const FreeComplex& cx) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    const Integer mag = abs(c);
    std::string body = (mag == 1 ? "" : mag.get_str() + "*") +
                       translate(k.g, cell_name(cx, k.p, k.i)) + " (x) " +
                       translate(k.h, cell_name(cx, k.q, k.j));
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

TensorElement DiagonalTable::of_chain(const Chain& c) const {
  TensorElement out;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i].is_zero()) continue;
    auto it = cells.find({c.degree, i});
    TensorElement base;
    if (it != cells.end()) {
      base = it->second;
    } else if (c.degree == 0) {
      const GroupElement one(c.coords[i].context());
      base.add_term({0, i, one, 0, i, one}, 1);
    } else {
      throw Error("diagonal table has no entry for cell " + std::to_string(i) + " in degree " +
                  std::to_string(c.degree));
    }
    for (const auto& [g, n] : c.coords[i].terms()) out += act_diagonal(g, base) * n;
  }
  return out;
}

int DiagonalTable::max_degree() const {
  int d = -1;
  for (const auto& [cell, t] : cells) d = std::max(d, cell.first);
  return d;
}

DiagonalReport verify_degrees(const DiagonalTable& table) {
  DiagonalReport r{"degree", 0, {}};
  for (const auto& [cell, t] : table.cells) {
    ++r.cells_checked;
    for (const auto& [k, c] : t.terms()) {
      if (k.p + k.q != cell.first) {
        r.failures.push_back({"[" + std::to_string(cell.first) + ":" + std::to_string(cell.second) + "]",
                              "term in total degree " + std::to_string(k.p + k.q)});
        break;
      }
    }
  }
  return r;
}

DiagonalReport verify_counit(const DiagonalTable& table, const FreeComplex& cx) {
  DiagonalReport r{"counit", 0, {}};
  const auto& ctx = cx.context();
  for (const auto& [cell, t] : table.cells) {
    ++r.cells_checked;
    const auto [d, idx] = cell;
    Chain expected = cx.cell(d, idx);
    Chain left{d, std::vector<RingElement>(cx.rank(d), RingElement(ctx))};
    Chain right = left;
    for (const auto& [k, c] : t.terms()) {
      if (k.p == 0 && k.q == d) left.coords[k.j].add_term(k.h, c);
      if (k.q == 0 && k.p == d) right.coords[k.i].add_term(k.g, c);
    }
    const std::string name = cell_name(cx, d, idx);
    if (!(left == expected)) {
      r.failures.push_back({name, "(eps (x) 1) D = " + format_chain(left, cx.labels(d))});
    }
    if (!(right == expected)) {
      r.failures.push_back({name, "(1 (x) eps) D = " + format_chain(right, cx.labels(d))});
    }
  }
  return r;
}

DiagonalReport verify_chain_map(const DiagonalTable& table, const FreeComplex& cx) {
  DiagonalReport r{"chain_map", 0, {}};
  for (const auto& [cell, t] : table.cells) {
    const auto [d, idx] = cell;
    if (d < 1) continue;
    ++r.cells_checked;
    TensorElement residual = tensor_boundary(t, cx) - table.of_chain(cx.boundary(cx.cell(d, idx)));
    if (!residual.is_zero()) {
      r.failures.push_back({cell_name(cx, d, idx), format_tensor(residual, cx)});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Chain maps

ChainMap::ChainMap(FreeComplex source, FreeComplex target, GroupHom hom,
                   std::vector<RingMatrix> cells)
    : source_(std::move(source)),
      target_(std::move(target)),
      hom_(std::move(hom)),
      cells_(std::move(cells)) {
  if (&hom_.source() != &source_.context() || &hom_.target() != &target_.context()) {
    throw ContextMismatch("chain map homomorphism does not match the complexes");
  }
  for (int d = 0; d <= max_degree(); ++d) {
    const auto& m = cells_[static_cast<std::size_t>(d)];
    if (&m.context() != &target_.context() || m.rows() != target_.rank(d) ||
        m.cols() != source_.rank(d)) {
      throw ShapeMismatch("chain map matrix in degree " + std::to_string(d) +
                          " has the wrong shape or ring");
    }
  }
}

Chain ChainMap::operator()(const Chain& c) const {
  if (c.degree < 0) return c;
  const auto& m = cells_.at(static_cast<std::size_t>(c.degree));
  std::vector<RingElement> pushed;
  for (const auto& x : c.coords) pushed.push_back(induced_ring_map(hom_, x));
  return Chain{c.degree, pd3::apply(m, pushed)};
}

TensorElement ChainMap::operator()(const TensorElement& t) const {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    Chain left{k.p, std::vector<RingElement>(source_.rank(k.p), RingElement(source_.context()))};
    left.coords[k.i] = RingElement(k.g);
    Chain right{k.q, std::vector<RingElement>(source_.rank(k.q), RingElement(source_.context()))};
    right.coords[k.j] = RingElement(k.h);
    out += tensor((*this)(left), (*this)(right)) * c;
  }
  return out;
}

ChainMap ChainMap::transported(const FreeComplex& new_source, const BasisChange& source_change,
                               const FreeComplex& new_target,
                               const BasisChange& target_change) const {
  std::vector<RingMatrix> cells;
  for (int d = 0; d <= max_degree(); ++d) {
    RingMatrix m = cells_[static_cast<std::size_t>(d)];
    if (const auto& s = source_change.at(d)) m = compose(m, map_entries(s->forward, hom_));
    if (const auto& t = target_change.at(d)) m = compose(t->inverse, m);
    cells.push_back(std::move(m));
  }
  return ChainMap(new_source, new_target, hom_, std::move(cells));
}

DiagonalReport verify_chain_map(const ChainMap& f) {
  DiagonalReport r{"cellular_chain_map", 0, {}};
  const int top = std::min(f.max_degree(), f.source().top_degree());
  for (int d = 1; d <= top; ++d) {
    for (std::size_t i = 0; i < f.source().rank(d); ++i) {
      ++r.cells_checked;
      const Chain c = f.source().cell(d, i);
      const Chain lhs = f.target().boundary(f(c));
      const Chain rhs = f(f.source().boundary(c));
      if (!(lhs == rhs)) {
        Chain diff = lhs;
        for (std::size_t k = 0; k < diff.coords.size(); ++k) diff.coords[k] -= rhs.coords[k];
        r.failures.push_back({cell_name(f.source(), d, i),
                              "d f - f d = " + format_chain(diff, f.target().labels(d - 1))});
      }
    }
  }
  return r;
}

DiagonalReport verify_compatibility(const ChainMap& f, const DiagonalTable& source_table,
                                    const DiagonalTable& target_table) {
  DiagonalReport r{"compatibility", 0, {}};
  for (const auto& [cell, t] : source_table.cells) {
    const auto [d, idx] = cell;
    if (d > f.max_degree()) continue;
    ++r.cells_checked;
    TensorElement residual = f(t) - target_table.of_chain(f(f.source().cell(d, idx)));
    if (!residual.is_zero()) {
      r.failures.push_back({cell_name(f.source(), d, idx), format_tensor(residual, f.target())});
    }
  }
  return r;
}

}  // namespace pd3
