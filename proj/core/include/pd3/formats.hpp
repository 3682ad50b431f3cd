#pragma once

// Text (JSON) file formats for presentations, ring matrices, complexes,
// chains, integer matrices and Smith decompositions.
//
//   presentation  {"group"?, "generators": [..], "relators": [..], "relator_names"?}
//   matrix        {"group", "rows": [[element, ...], ...]}
//   complex       {"group", "ranks", "differentials": [{"rows"}, ...], "basis_labels"}
//   chain         {"group", "degree", "coords": [element, ...]}
//   int matrix    {"rows": [[int, ...], ...]}
//   smith         {"U", "D", "V"} as int matrices with U A V = D
//
// Element strings use the grammar of parse_element.  Integers may be JSON
// numbers or decimal strings (for values beyond 64 bits).

#include <string>
#include <string_view>

#include "pd3/complex.hpp"
#include "pd3/int_matrix.hpp"

namespace pd3 {

// Without a "group" field the group is inferred from the generators:
// {a, b} gives S3 and {a, b, c} gives Pi.
Presentation read_presentation(std::string_view text);
std::string write_presentation(const Presentation& p);

RingMatrix read_ring_matrix(std::string_view text);
std::string write_ring_matrix(const RingMatrix& m);

FreeComplex read_complex(std::string_view text);
std::string write_complex(const FreeComplex& cx);

Chain read_chain(std::string_view text);
std::string write_chain(const Chain& c);

IntMatrix read_int_matrix(std::string_view text);
std::string write_int_matrix(const IntMatrix& m);

std::string write_smith(const SmithDecomposition& s);

}  // namespace pd3
