#pragma once

// Incremental echelon basis of a sublattice of Z^N for sparse vectors.  Used
// where the ambient dimension is large but every generator has small
// support (translates of a fixed group-ring element).

#include <cstddef>
#include <map>

#include "pd3/int_matrix.hpp"

namespace pd3 {

using SparseVector = std::map<std::size_t, Integer>;

class LatticeEchelon {
 public:
  // Adds v to the generating set.  Returns true if the rank grew.
  bool insert(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  // Keyed by leading (largest) index; leading coefficient positive.
  std::map<std::size_t, SparseVector> pivots_;
};

// v += k * w
void add_multiple(SparseVector& v, const SparseVector& w, const Integer& k);

}  // namespace pd3
