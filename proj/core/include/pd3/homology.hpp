#pragma once

// Homology of finite-rank integer complexes and the change-of-rings steps
// that produce them from complexes over Z[G].

#include <optional>
#include <string>
#include <vector>

#include "pd3/complex.hpp"
#include "pd3/int_matrix.hpp"

namespace pd3 {

// Z^free_rank + Z/t1 + ... + Z/tk with 1 < t1 | t2 | ... | tk.
struct AbelianGroupDescriptor {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static AbelianGroupDescriptor from_factors(std::size_t free_rank,
                                             const std::vector<Integer>& factors);
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z/2", "Z^2 + Z/3 + Z/6".
  std::string to_string() const;
  // Elementary divisors: each torsion factor split into prime powers, sorted.
  std::vector<Integer> primary_parts() const;

  friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;
};

// Complex of free abelian groups (modulus 0) or F_p-vector spaces
// (modulus p).  Same shape conventions as FreeComplex.
struct IntComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;
  unsigned long modulus = 0;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  const IntMatrix& differential(int d) const {
    return differentials.at(static_cast<std::size_t>(d - 1));
  }
};

// Z-basis {g . basis_j : g in G} in enumeration order; entry
// ((i, k), (j, g)) is the coefficient of k in g * M(i, j).
IntMatrix flatten(const RingMatrix& m);
// Underlying chain complex of abelian groups (the universal cover when the
// context is the fundamental group).  Throws InfiniteGroup.
IntComplex flatten_complex(const FreeComplex& cx);
// Z tensored over the group ring: entrywise augmentation.
IntComplex augment_complex(const FreeComplex& cx);
IntComplex reduce_mod(const IntComplex& cx, unsigned long p);

// H_d for d = 0..top.  Throws NotAComplex if some composite is nonzero.
std::vector<AbelianGroupDescriptor> homology(const IntComplex& cx);
// Dimensions of H_d(cx; F_p).
std::vector<std::size_t> betti_mod_p(const IntComplex& cx, unsigned long p);

// Left annihilator {y : y x = 0} of x in Z[G], as the rows of an integer
// matrix in the coordinates of enumerate(G).
IntMatrix annihilator_lattice(const RingElement& x);
// The left ideal Z[G] y as rows.
IntMatrix principal_ideal_lattice(const RingElement& y);
bool lattices_equal(const IntMatrix& a, const IntMatrix& b);

// Coordinates of x in the Z-basis enumerate(G).
std::vector<Integer> coordinates(const RingElement& x);

}  // namespace pd3
