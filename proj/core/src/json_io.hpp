#pragma once

// nlohmann::json conversions shared by formats, corpus and report.  Not
// installed: the public API only exchanges text.

#include <json.hpp>

#include "pd3/complex.hpp"
#include "pd3/homology.hpp"
#include "pd3/int_matrix.hpp"
#include "pd3/tensor.hpp"

namespace pd3::io {

using nlohmann::json;

json parse(std::string_view text);

const GroupContext& group_of(const json& j);

Integer integer_from(const json& j);
json to_json(const Integer& n);

RingElement element_from(const json& j, const GroupContext& ctx);

RingMatrix ring_matrix_from(const json& rows, const GroupContext& ctx);
json rows_json(const RingMatrix& m);

Presentation presentation_from(const json& j);
json to_json(const Presentation& p);

FreeComplex complex_from(const json& j);
json to_json(const FreeComplex& cx);

Chain chain_from(const json& j, const GroupContext& ctx);
json to_json(const Chain& c);

IntMatrix int_matrix_from(const json& j);
json to_json(const IntMatrix& m);

BasisChange basis_change_from(const json& j);

// Terms are sign * (left (x) right) with left and right chains.
DiagonalTable diagonal_from(const json& j);

AbelianGroupDescriptor descriptor_from(const json& j);
json to_json(const AbelianGroupDescriptor& a);

}  // namespace pd3::io
