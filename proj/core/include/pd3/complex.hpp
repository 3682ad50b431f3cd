#pragma once

// Free chain complexes over a group ring, built from presentations by Fox
// calculus and manipulated by basis changes, top-cell attachment, duality
// and change of rings.

#include <optional>
#include <string>
#include <vector>

#include "pd3/ring_matrix.hpp"

namespace pd3 {

struct Presentation {
  const GroupContext* group = nullptr;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_names;
};

// d w / d x with the result normalized in `ring`.  Words may carry negative
// exponents: d(x^-k)/dx = -(x^-1 + ... + x^-k).
RingElement fox_derivative(const Word& w, Generator x, const GroupContext& ring);

// A chain c = sum_i coords[i] * basis_i in a fixed degree.
struct Chain {
  int degree = 0;
  std::vector<RingElement> coords;

  friend bool operator==(const Chain&, const Chain&) = default;
};

std::string format_chain(const Chain& c, const std::vector<std::string>& labels = {});

class FreeComplex {
 public:
  // differentials[d - 1] maps degree d to degree d - 1 and has shape
  // ranks[d - 1] x ranks[d].
  FreeComplex(const GroupContext& ctx, std::vector<std::size_t> ranks,
              std::vector<RingMatrix> differentials,
              std::vector<std::vector<std::string>> labels = {});

  const GroupContext& context() const noexcept { return *ctx_; }
  int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t rank(int d) const { return ranks_.at(static_cast<std::size_t>(d)); }
  const RingMatrix& differential(int d) const {
    return differentials_.at(static_cast<std::size_t>(d - 1));
  }
  const std::vector<RingMatrix>& differentials() const noexcept { return differentials_; }
  const std::vector<std::string>& labels(int d) const {
    return labels_.at(static_cast<std::size_t>(d));
  }
  const std::vector<std::vector<std::string>>& all_labels() const noexcept { return labels_; }

  // Degree d with d(d-1) o d(d) != 0, if any.
  std::optional<int> first_nonzero_composite() const;
  bool is_chain_complex() const { return !first_nonzero_composite(); }

  // Basis cell i of degree d as a chain.
  Chain cell(int d, std::size_t i) const;
  Chain boundary(const Chain& c) const;

  friend bool operator==(const FreeComplex& x, const FreeComplex& y) {
    return x.ctx_ == y.ctx_ && x.ranks_ == y.ranks_ && x.differentials_ == y.differentials_;
  }

 private:
  const GroupContext* ctx_;
  std::vector<std::size_t> ranks_;
  std::vector<RingMatrix> differentials_;
  std::vector<std::vector<std::string>> labels_;
};

// Degrees 0..2: d1 is the row (x_i - 1), d2 the Fox Jacobian of the relators.
FreeComplex build_fox_lyndon(const Presentation& p);

// Adds one cell in degree top+1 with boundary z.  Throws NotACycle carrying
// the residual d(z) when z is not a cycle.
FreeComplex attach_top_cell(const FreeComplex& cx, const std::vector<RingElement>& z,
                            const std::string& label = "g");

// Per-degree change of basis.  forward(d) has the new basis vectors as its
// columns, written in the old basis; inverse(d) is its two-sided inverse.
// Degrees without an entry keep their basis.
class BasisChange {
 public:
  struct Entry {
    RingMatrix forward;
    RingMatrix inverse;
    std::vector<std::string> labels;
  };

  // Throws NotInvertible unless every pair composes to the identity on both
  // sides.
  explicit BasisChange(std::vector<std::optional<Entry>> degrees);
  static BasisChange identity() { return BasisChange({}); }

  const std::optional<Entry>& at(int d) const;

 private:
  std::vector<std::optional<Entry>> degrees_;
};

// Differentials become P(d-1)^-1 o d o P(d).
FreeComplex change_basis(const FreeComplex& cx, const BasisChange& bc);

// Conjugated and reindexed cochain complex: degree k holds the dual of
// degree top - k and d'(k) is the involuted transpose of d(top + 1 - k).
FreeComplex dual_conjugate_transpose(const FreeComplex& cx, OrientationCharacter chi = {});

struct SelfDualityReport {
  bool d2_hermitian = false;
  bool d3_is_transpose_of_d1 = false;
  std::string detail;

  bool ok() const { return d2_hermitian && d3_is_transpose_of_d1; }
};

SelfDualityReport self_duality_check(const FreeComplex& cx, OrientationCharacter chi = {});

// Change of rings along a group homomorphism, entrywise.
FreeComplex push_forward(const FreeComplex& cx, const GroupHom& h);

// Regards a complex over Z[Pi] as one over Z[Pi'] with basis
// (x, a x) for each old basis element x.
FreeComplex restrict_to_index_two(const FreeComplex& cx);

}  // namespace pd3
