#pragma once

// Ball-truncated certificates for annihilator claims over the infinite ring
// Z[Pi].  A PASS at radius L says only that every h supported on the ball of
// radius L behaves as claimed; it is not a proof for all of Z[Pi].

#include <optional>
#include <string>
#include <vector>

#include "pd3/ring.hpp"

namespace pd3 {

enum class SearchStatus { Pass, Inconclusive, Fail };
std::string to_string(SearchStatus s);

struct KernelSearchOptions {
  int radius = 5;
  // Support radius allowed for the multiplier p in h = p * claimed.
  // Defaults to length(claimed) + 2.
  std::optional<int> slack;
};

struct KernelSearchReport {
  SearchStatus status = SearchStatus::Fail;
  int radius = 0;
  int slack = 0;
  std::size_t unknowns = 0;   // ball size
  std::size_t equations = 0;  // nonzero rows of the linear system
  std::vector<RingElement> kernel_basis;
  std::size_t verified_members = 0;
  std::string detail;
};

// Left annihilator of the row vector d: all h supported on ball(radius) with
// h * d_k = 0 for every k.  With a claimed generator y, every kernel element
// must lie in {p * y : supp p in ball(radius + slack)} and y itself must
// annihilate d; without one the kernel must be zero (injectivity).
KernelSearchReport bounded_kernel_search(const std::vector<RingElement>& d,
                                         const std::optional<RingElement>& claimed,
                                         KernelSearchOptions opts = {});

}  // namespace pd3
