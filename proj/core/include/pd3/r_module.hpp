#pragma once

// Finitely presented modules over R = Z[a]/(a^2 - 1) and the invariants
// used to tell them apart, plus the orientability obstruction built on them.

#include <map>
#include <string>
#include <vector>

#include "pd3/complex.hpp"
#include "pd3/homology.hpp"

namespace pd3 {

class RMatrix {
 public:
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Integer matrix of a -> sign.
  IntMatrix evaluate(int sign) const;
  // Z-linear map on Z^2m -> Z^2n in the bases (x_j, a x_j).
  IntMatrix expand() const;
  std::string to_string() const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<RElement> data_;
};

// Entrywise image under G -> G/G' = <a>.
RMatrix abelianize(const RingMatrix& m);

struct EigenCount {
  std::size_t plus = 0;   // a acts by +1
  std::size_t minus = 0;  // a acts by -1
  std::size_t dimension = 0;

  friend bool operator==(const EigenCount&, const EigenCount&) = default;
};

// Invariants of Coker(M : R^cols -> R^rows).
struct RModuleInvariants {
  AbelianGroupDescriptor underlying;
  EigenCount free_part;                   // on the free quotient, via a = +-1
  std::map<unsigned long, EigenCount> torsion;  // on the p-socle, per prime
  std::string to_string() const;

  friend bool operator==(const RModuleInvariants&, const RModuleInvariants&) = default;
};

RModuleInvariants r_module_invariants(const RMatrix& m);

// The model presentation of R/(a + w) + (R/(a + w, 3))^2.
RMatrix model_presentation(int w);

struct OrientabilityCase {
  int w = 1;
  RModuleInvariants j;
  bool j_matches_model = false;
  bool matches_i = false;
};

struct OrientabilityReport {
  RModuleInvariants i;
  RModuleInvariants model;
  bool i_matches_model = false;
  std::vector<OrientabilityCase> cases;  // w = +1, then w = -1
  // I and J agree exactly for w = +1 and disagree for w = -1.
  bool ok() const;
  std::string summary() const;
};

// `d2` presents the augmentation ideal of the group (Fox Jacobian).
OrientabilityReport orientability_check(const RingMatrix& d2);

}  // namespace pd3
