#pragma once

// The tensor square C (x)_Z C of a free complex with the diagonal group
// action, diagonal approximations given cell by cell, and cellular chain maps.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pd3/complex.hpp"

namespace pd3 {

// (g . basis_i in degree p) (x) (h . basis_j in degree q)
struct TensorKey {
  int p;
  std::size_t i;
  GroupElement g;
  int q;
  std::size_t j;
  GroupElement h;

  friend std::strong_ordering operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

class TensorElement {
 public:
  using Terms = std::map<TensorKey, Integer>;

  TensorElement() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const TensorKey& k, const Integer& c);

  TensorElement& operator+=(const TensorElement& y);
  TensorElement& operator-=(const TensorElement& y);
  TensorElement& operator*=(const Integer& n);
  friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
  friend TensorElement operator-(TensorElement x, const TensorElement& y) { return x -= y; }
  friend TensorElement operator*(TensorElement x, const Integer& n) { return x *= n; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Terms terms_;
};

TensorElement tensor(const Chain& x, const Chain& y);
// (g (x) g) . t
TensorElement act_diagonal(const GroupElement& g, const TensorElement& t);
// d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy
TensorElement tensor_boundary(const TensorElement& t, const FreeComplex& cx);
// x (x) y -> (-1)^(|x||y|) y (x) x
TensorElement transpose_tau(const TensorElement& t);

std::string format_tensor(const TensorElement& t, const FreeComplex& cx);

// Values of a diagonal approximation on basis cells.  The value on a chain
// follows by equivariance, D(r . cell) = sum r_g (g (x) g) D(cell); degree-0
// cells without an entry get the canonical g -> g (x) g.
struct DiagonalTable {
  std::map<std::pair<int, std::size_t>, TensorElement> cells;

  TensorElement of_chain(const Chain& c) const;
  int max_degree() const;
};

struct CellFailure {
  std::string cell;
  std::string residual;
};

struct DiagonalReport {
  std::string mode;
  std::size_t cells_checked = 0;
  std::vector<CellFailure> failures;

  bool ok() const { return failures.empty(); }
};

// (eps (x) 1) D = id = (1 (x) eps) D on every cell in the table.
DiagonalReport verify_counit(const DiagonalTable& table, const FreeComplex& cx);
// d D(cell) = D(d cell) for table cells of degree >= 1.
DiagonalReport verify_chain_map(const DiagonalTable& table, const FreeComplex& cx);
// Every entry lies in total degree equal to its cell's degree.
DiagonalReport verify_degrees(const DiagonalTable& table);

// Cellular chain map covering a group homomorphism: basis_j of degree d goes
// to sum_i cells[d](i, j) basis_i, and g . x goes to hom(g) . f(x).  Only
// degrees 0..cells.size()-1 are mapped.
class ChainMap {
 public:
  ChainMap(FreeComplex source, FreeComplex target, GroupHom hom, std::vector<RingMatrix> cells);

  const FreeComplex& source() const noexcept { return source_; }
  const FreeComplex& target() const noexcept { return target_; }
  const GroupHom& hom() const noexcept { return hom_; }
  const std::vector<RingMatrix>& cells() const noexcept { return cells_; }
  int max_degree() const noexcept { return static_cast<int>(cells_.size()) - 1; }

  Chain operator()(const Chain& c) const;
  TensorElement operator()(const TensorElement& t) const;

  // Same map written in new bases of source and target.
  ChainMap transported(const FreeComplex& new_source, const BasisChange& source_change,
                       const FreeComplex& new_target, const BasisChange& target_change) const;

 private:
  FreeComplex source_;
  FreeComplex target_;
  GroupHom hom_;
  std::vector<RingMatrix> cells_;
};

// d f = f d on every mapped cell of degree >= 1.
DiagonalReport verify_chain_map(const ChainMap& f);
// (f (x) f) D_source(cell) = D_target(f(cell)) for every source table cell.
DiagonalReport verify_compatibility(const ChainMap& f, const DiagonalTable& source_table,
                                    const DiagonalTable& target_table);

}  // namespace pd3
