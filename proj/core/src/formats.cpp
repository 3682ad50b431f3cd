#include "pd3/formats.hpp"

#include <algorithm>

#include "json_io.hpp"

namespace pd3 {
namespace io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

const json& array_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw FormatError(std::string("field \"") + name + "\" is not a list");
  return v;
}

std::string string_of(const json& j) {
  if (!j.is_string()) throw FormatError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::size_t size_of(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw FormatError("expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const GroupContext& group_of(const json& j) {
  try {
    return GroupContext::by_name(string_of(field(j, "group")));
  } catch (const UnknownSymbol& e) {
    throw FormatError(e.what());
  }
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) {
      throw FormatError("not an integer: " + j.dump());
    }
    return out;
  }
  throw FormatError("not an integer: " + j.dump());
}

json to_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

RingElement element_from(const json& j, const GroupContext& ctx) {
  if (j.is_number_integer()) return RingElement(ctx, j.get<long>());
  return parse_element(ctx, string_of(j));
}

RingMatrix ring_matrix_from(const json& rows, const GroupContext& ctx) {
  if (!rows.is_array()) throw FormatError("matrix rows must be a list");
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows[0].size() : 0;
  RingMatrix out(ctx, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) {
      throw FormatError("ragged matrix: row " + std::to_string(i));
    }
    for (std::size_t k = 0; k < m; ++k) out(i, k) = element_from(rows[i][k], ctx);
  }
  return out;
}

json rows_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_element(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Presentation presentation_from(const json& j) {
  Presentation p;
  std::string letters;
  for (const auto& g : array_field(j, "generators")) {
    const std::string s = string_of(g);
    if (s.size() != 1 || s[0] < 'a' || s[0] > 'c') throw FormatError("bad generator " + s);
    letters += s;
    p.generators.push_back(static_cast<Generator>(s[0]));
  }
  if (j.contains("group")) {
    p.group = &group_of(j);
  } else if (letters == "ab") {
    p.group = &GroupContext::get(GroupId::S3);
  } else if (letters == "abc") {
    p.group = &GroupContext::get(GroupId::Pi);
  } else {
    throw FormatError("cannot infer the group of generators \"" + letters + "\"");
  }
  for (const auto& r : array_field(j, "relators")) p.relators.push_back(parse_word(string_of(r)));
  if (j.contains("relator_names")) {
    for (const auto& r : array_field(j, "relator_names")) p.relator_names.push_back(string_of(r));
    if (p.relator_names.size() != p.relators.size()) {
      throw FormatError("relator_names and relators differ in length");
    }
  }
  return p;
}

json to_json(const Presentation& p) {
  json j;
  j["group"] = p.group->name();
  j["generators"] = json::array();
  for (auto g : p.generators) j["generators"].push_back(std::string(1, static_cast<char>(g)));
  j["relators"] = json::array();
  for (const auto& w : p.relators) j["relators"].push_back(format_word(w));
  if (!p.relator_names.empty()) j["relator_names"] = p.relator_names;
  return j;
}

FreeComplex complex_from(const json& j) {
  const GroupContext& ctx = group_of(j);
  std::vector<std::size_t> ranks;
  for (const auto& r : array_field(j, "ranks")) ranks.push_back(size_of(r));
  std::vector<RingMatrix> diffs;
  for (const auto& d : array_field(j, "differentials")) {
    const json& rows = d.is_object() ? field(d, "rows") : d;
    diffs.push_back(ring_matrix_from(rows, ctx));
  }
  // A zero-width matrix has no rows to carry its column count.
  for (std::size_t k = 0; k < diffs.size() && k + 1 < ranks.size(); ++k) {
    if (diffs[k].rows() == 0 && ranks[k] == 0) diffs[k] = RingMatrix(ctx, 0, ranks[k + 1]);
  }
  std::vector<std::vector<std::string>> labels;
  if (j.contains("basis_labels")) {
    for (const auto& row : array_field(j, "basis_labels")) {
      std::vector<std::string> l;
      for (const auto& s : row) l.push_back(string_of(s));
      labels.push_back(std::move(l));
    }
  }
  return FreeComplex(ctx, std::move(ranks), std::move(diffs), std::move(labels));
}

json to_json(const FreeComplex& cx) {
  json j;
  j["group"] = cx.context().name();
  j["ranks"] = cx.ranks();
  j["differentials"] = json::array();
  for (const auto& d : cx.differentials()) j["differentials"].push_back(json{{"rows", rows_json(d)}});
  j["basis_labels"] = cx.all_labels();
  return j;
}

Chain chain_from(const json& j, const GroupContext& ctx) {
  Chain c;
  const json& deg = field(j, "degree");
  if (!deg.is_number_integer()) throw FormatError("chain degree must be an integer");
  c.degree = deg.get<int>();
  for (const auto& x : array_field(j, "coords")) c.coords.push_back(element_from(x, ctx));
  return c;
}

json to_json(const Chain& c) {
  json coords = json::array();
  for (const auto& x : c.coords) coords.push_back(format_element(x));
  json j;
  if (!c.coords.empty()) j["group"] = c.coords.front().context().name();
  j["degree"] = c.degree;
  j["coords"] = std::move(coords);
  return j;
}

IntMatrix int_matrix_from(const json& j) {
  const json& rows = j.is_object() ? array_field(j, "rows") : j;
  if (!rows.is_array()) throw FormatError("integer matrix rows must be a list");
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows[0].size() : 0;
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) {
      throw FormatError("ragged matrix: row " + std::to_string(i));
    }
    for (std::size_t k = 0; k < m; ++k) out(i, k) = integer_from(rows[i][k]);
  }
  return out;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

BasisChange basis_change_from(const json& j) {
  const GroupContext& ctx = group_of(j);
  const json& degrees = field(j, "degrees");
  if (!degrees.is_object()) throw FormatError("\"degrees\" must map degree to entry");
  std::vector<std::optional<BasisChange::Entry>> entries;
  for (const auto& [key, e] : degrees.items()) {
    std::size_t d = 0;
    try {
      d = std::stoul(key);
    } catch (const std::exception&) {
      throw FormatError("bad degree key \"" + key + "\"");
    }
    if (entries.size() <= d) entries.resize(d + 1);
    BasisChange::Entry entry{ring_matrix_from(field(field(e, "forward"), "rows"), ctx),
                             ring_matrix_from(field(field(e, "inverse"), "rows"), ctx),
                             {}};
    if (e.contains("labels")) {
      for (const auto& s : array_field(e, "labels")) entry.labels.push_back(string_of(s));
    }
    entries[d] = std::move(entry);
  }
  return BasisChange(std::move(entries));
}

DiagonalTable diagonal_from(const json& j) {
  const GroupContext& ctx = group_of(j);
  DiagonalTable table;
  for (const auto& cell : array_field(j, "cells")) {
    const int degree = field(cell, "degree").get<int>();
    const std::size_t index = size_of(field(cell, "index"));
    TensorElement value;
    for (const auto& term : array_field(cell, "terms")) {
      const Integer sign = term.contains("sign") ? integer_from(term.at("sign")) : Integer(1);
      value += tensor(chain_from(field(term, "left"), ctx), chain_from(field(term, "right"), ctx)) *
               sign;
    }
    table.cells[{degree, index}] = std::move(value);
  }
  return table;
}

AbelianGroupDescriptor descriptor_from(const json& j) {
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    for (const auto& t : array_field(j, "torsion")) torsion.push_back(integer_from(t));
  }
  return AbelianGroupDescriptor::from_factors(size_of(field(j, "free_rank")), torsion);
}

json to_json(const AbelianGroupDescriptor& a) {
  json torsion = json::array();
  for (const auto& t : a.torsion) torsion.push_back(to_json(t));
  return json{{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}};
}

}  // namespace io

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Presentation read_presentation(std::string_view text) {
  return guarded([&] { return io::presentation_from(io::parse(text)); });
}

std::string write_presentation(const Presentation& p) { return io::to_json(p).dump(2) + "\n"; }

RingMatrix read_ring_matrix(std::string_view text) {
  return guarded([&] {
    const auto j = io::parse(text);
    return io::ring_matrix_from(j.at("rows"), io::group_of(j));
  });
}

std::string write_ring_matrix(const RingMatrix& m) {
  const io::json j{{"group", m.context().name()}, {"rows", io::rows_json(m)}};
  return j.dump(2) + "\n";
}

FreeComplex read_complex(std::string_view text) {
  return guarded([&] { return io::complex_from(io::parse(text)); });
}

std::string write_complex(const FreeComplex& cx) { return io::to_json(cx).dump(2) + "\n"; }

Chain read_chain(std::string_view text) {
  return guarded([&] {
    const auto j = io::parse(text);
    return io::chain_from(j, io::group_of(j));
  });
}

std::string write_chain(const Chain& c) { return io::to_json(c).dump(2) + "\n"; }

IntMatrix read_int_matrix(std::string_view text) {
  return guarded([&] { return io::int_matrix_from(io::parse(text)); });
}

std::string write_int_matrix(const IntMatrix& m) { return io::to_json(m).dump(2) + "\n"; }

std::string write_smith(const SmithDecomposition& s) {
  const io::json j{{"U", io::to_json(s.U)["rows"]},
                   {"D", io::to_json(s.D)["rows"]},
                   {"V", io::to_json(s.V)["rows"]},
                   {"rank", s.rank}};
  return j.dump(2) + "\n";
}

}  // namespace pd3
