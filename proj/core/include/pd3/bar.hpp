#pragma once

// Group homology of small finite groups from the normalized bar complex,
// maps induced by homomorphisms, and H3 of the amalgam Pi = S3 *_{Z/2} S3
// by Mayer-Vietoris.

#include <vector>

#include "pd3/homology.hpp"

namespace pd3 {

// Z tensored over Z[G] with the normalized bar resolution: degree k has one
// generator [g1|...|gk] per k-tuple of non-identity elements.
struct BarComplex {
  const GroupContext* group = nullptr;
  std::vector<GroupElement> letters;  // non-identity elements, enumeration order
  IntComplex chains;

  std::size_t index(const std::vector<GroupElement>& tuple) const;
  std::vector<GroupElement> tuple(int degree, std::size_t index) const;
};

// Throws GroupTooLarge when |G| > 6 or top_degree > 4.
BarComplex bar_complex(const GroupContext& g, int top_degree);

// H_n(G; Z) with explicit cycle representatives for its cyclic summands.
class BarHomology {
 public:
  // Throws GroupTooLarge when |G| > 6 or n > 3.
  BarHomology(const GroupContext& g, int n);

  const GroupContext& group() const noexcept { return *bar_.group; }
  int degree() const noexcept { return n_; }
  const AbelianGroupDescriptor& descriptor() const noexcept { return descriptor_; }
  // Order of each nontrivial cyclic summand; 0 for a free summand.
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  // Column s is a cycle representing the generator of summand s.
  const IntMatrix& generators() const noexcept { return generators_; }
  const BarComplex& bar() const noexcept { return bar_; }

  // Class of a cycle in summand coordinates, each reduced modulo its order.
  std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;

 private:
  int n_;
  BarComplex bar_;
  AbelianGroupDescriptor descriptor_;
  std::vector<Integer> orders_;
  IntMatrix generators_;
  IntMatrix cycle_coordinates_;  // left inverse of the cycle basis
  IntMatrix summand_transform_;  // U of the relation matrix
  std::vector<std::size_t> summand_rows_;
};

AbelianGroupDescriptor bar_homology(const GroupContext& g, int n);

// Matrix of H_n(source) -> H_n(target) in summand coordinates: column s is
// the image of the s-th source generator.
IntMatrix induced_map(const GroupHom& h, int n);

// Coker(H3(Z/2) -> H3(S3) + H3(S3)), x -> (i_* x, -i_* x); with H2(Z/2) = 0
// this is H3 of the amalgam.
AbelianGroupDescriptor mayer_vietoris_h3();

}  // namespace pd3
