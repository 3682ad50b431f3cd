#pragma once

// Finite computations behind the asphericity argument for the S3 complex:
// the explicit lift of 2-cycles through d3 and the generator of H3 of the
// universal cover.

#include <string>
#include <vector>

#include "pd3/homology.hpp"

namespace pd3 {

struct LiftingCase {
  std::string p;
  std::string q;
  bool ok = false;
  std::string residual;
};

struct LiftingReport {
  std::vector<LiftingCase> cases;
  bool ok() const;
};

// With r = p * ann1 and s = q * ann2, checks
//   d3((p * lift_p + q * lift_q) g) = r f1 + s f2
// for p, q running over the Z-basis {1, b, b^2} of Z[B]; by bilinearity
// this covers all p, q in Z[B].  `cx` is the S3 complex in the basis where
// d2 is diagonal.
LiftingReport lifting_check(const FreeComplex& cx, const RingElement& lift_p,
                            const RingElement& lift_q, const RingElement& ann1,
                            const RingElement& ann2);

struct H3GeneratorReport {
  bool nu_is_beta_times_a_plus_1 = false;
  bool nu_is_group_sum = false;
  std::size_t nu_support = 0;
  std::size_t kernel_rank = 0;
  bool generator_is_nu = false;
  Integer generator_content = 0;  // gcd of entries
  bool transfer_is_nu_g = false;
  bool ok() const;
  std::string detail;
};

H3GeneratorReport h3_generator_check(const FreeComplex& cx, const RingElement& beta,
                                     const RingElement& nu);

}  // namespace pd3
