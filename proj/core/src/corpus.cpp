#include "pd3/corpus.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "json_io.hpp"

namespace pd3 {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus();
}

namespace {

using io::json;

enum class Kind { Presentation, Complex, Chain, Basis, Element, Diagonal, CellularMap, Expected };

// File name decides the kind of every entry in it.
const std::map<std::string, Kind>& file_kinds() {
  static const std::map<std::string, Kind> kinds = {
      {"presentations.json", Kind::Presentation}, {"complexes.json", Kind::Complex},
      {"cycles.json", Kind::Chain},               {"bases.json", Kind::Basis},
      {"elements.json", Kind::Element},           {"diagonal_x.json", Kind::Diagonal},
      {"diagonal_y.json", Kind::Diagonal},        {"cellular_maps.json", Kind::CellularMap},
      {"expected.json", Kind::Expected},
  };
  return kinds;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Payload decode(Kind kind, const json& j) {
  switch (kind) {
    case Kind::Presentation:
      return io::presentation_from(j);
    case Kind::Complex:
      return io::complex_from(j);
    case Kind::Chain:
      return io::chain_from(j, io::group_of(j));
    case Kind::Basis:
      return io::basis_change_from(j);
    case Kind::Element:
      return io::element_from(j.at("value"), io::group_of(j));
    case Kind::Diagonal:
      return io::diagonal_from(j);
    case Kind::CellularMap: {
      CellularMapData m;
      m.hom = j.at("hom").get<std::string>();
      m.source = j.at("source").get<std::string>();
      m.target = j.at("target").get<std::string>();
      const GroupContext& ctx = io::group_of(j);
      for (const auto& c : j.at("cells")) m.cells.push_back(io::ring_matrix_from(c.at("rows"), ctx));
      return m;
    }
    case Kind::Expected: {
      ExpectedValue v;
      if (j.contains("groups")) {
        for (const auto& g : j.at("groups")) v.groups.push_back(io::descriptor_from(g));
      }
      if (j.contains("values")) v.values = j.at("values").get<std::vector<long>>();
      return v;
    }
  }
  throw Error("unreachable corpus kind");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Presentation: return "presentation";
    case Kind::Complex: return "complex";
    case Kind::Chain: return "chain";
    case Kind::Basis: return "basis change";
    case Kind::Element: return "element";
    case Kind::Diagonal: return "diagonal table";
    case Kind::CellularMap: return "cellular map";
    case Kind::Expected: return "expected value";
  }
  return "?";
}

// Ring-element strings live under these keys; labels, names and relator
// words do not.
bool element_key(const std::string& key) {
  return key == "rows" || key == "coords" || key == "value";
}

void collect_sites(const json& j, const std::string& pointer, const GroupContext* group,
                   bool in_elements, const std::string& file, std::vector<MutationSite>& out) {
  if (j.is_object()) {
    if (j.contains("group")) group = &io::group_of(j);
    for (const auto& [key, v] : j.items()) {
      collect_sites(v, pointer + "/" + key, group, in_elements || element_key(key), file, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      collect_sites(j[i], pointer + "/" + std::to_string(i), group, in_elements, file, out);
    }
  } else if (j.is_string() && in_elements && group) {
    const std::size_t n = parse_element(*group, j.get<std::string>()).support_size();
    for (std::size_t t = 0; t < n; ++t) out.push_back({file, pointer, t});
  }
}

}  // namespace

std::string MutationSite::describe() const {
  return file + "#" + pointer + " term " + std::to_string(term);
}

struct Catalog::Data {
  std::map<std::string, json> files;
  std::map<std::string, std::string> owner;  // entry name -> file
};

Catalog::Catalog(std::shared_ptr<const Data> data) : data_(std::move(data)) {
  std::string canonical;
  for (const auto& [name, j] : data_->files) canonical += name + '\n' + j.dump() + '\n';
  hash_ = sha256_hex(canonical);
}

std::shared_ptr<const Catalog::Data> Catalog::build(
    const std::vector<std::pair<std::string, std::string>>& files) {
  auto data = std::make_shared<Catalog::Data>();
  for (const auto& [name, text] : files) {
    if (!file_kinds().count(name)) throw FormatError("unexpected corpus file " + name);
    json j = io::parse(text);
    if (!j.is_object()) throw FormatError(name + ": top level must be an object");
    for (const auto& [entry, v] : j.items()) {
      if (!data->owner.emplace(entry, name).second) {
        throw FormatError("duplicate corpus entry \"" + entry + "\" in " + name);
      }
    }
    data->files.emplace(name, std::move(j));
  }
  for (const auto& [name, kind] : file_kinds()) {
    if (!data->files.count(name)) throw FormatError("missing corpus file " + name);
  }
  return data;
}

const Catalog& Catalog::embedded() {
  static const Catalog catalog = [] {
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& [name, text] : detail::embedded_corpus()) {
      files.emplace_back(std::string(name), std::string(text));
    }
    Catalog c(build(files));
    c.validate();
    return c;
  }();
  return catalog;
}

Catalog Catalog::from_directory(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& [name, kind] : file_kinds()) {
    std::ifstream in(dir / name, std::ios::binary);
    if (!in) throw FormatError("cannot read corpus file " + (dir / name).string());
    std::ostringstream text;
    text << in.rdbuf();
    files.emplace_back(name, text.str());
  }
  Catalog c(build(files));
  c.validate();
  return c;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, file] : data_->owner) out.push_back(name);
  return out;
}

bool Catalog::contains(const std::string& name) const { return data_->owner.count(name) > 0; }

Payload Catalog::get(const std::string& name) const {
  const auto it = data_->owner.find(name);
  if (it == data_->owner.end()) throw UnknownArtifact("no corpus entry named \"" + name + "\"");
  const Kind kind = file_kinds().at(it->second);
  try {
    return decode(kind, data_->files.at(it->second).at(name));
  } catch (const json::exception& e) {
    throw FormatError(name + ": " + e.what());
  }
}

namespace {

template <typename T>
T expect_kind(Payload p, const std::string& name, const char* wanted) {
  if (auto* v = std::get_if<T>(&p)) return std::move(*v);
  throw FormatError("corpus entry \"" + name + "\" is not a " + wanted);
}

}  // namespace

Presentation Catalog::presentation(const std::string& name) const {
  return expect_kind<Presentation>(get(name), name, kind_name(Kind::Presentation));
}
FreeComplex Catalog::complex(const std::string& name) const {
  return expect_kind<FreeComplex>(get(name), name, kind_name(Kind::Complex));
}
Chain Catalog::chain(const std::string& name) const {
  return expect_kind<Chain>(get(name), name, kind_name(Kind::Chain));
}
BasisChange Catalog::basis(const std::string& name) const {
  return expect_kind<BasisChange>(get(name), name, kind_name(Kind::Basis));
}
RingElement Catalog::element(const std::string& name) const {
  return expect_kind<RingElement>(get(name), name, kind_name(Kind::Element));
}
DiagonalTable Catalog::diagonal(const std::string& name) const {
  return expect_kind<DiagonalTable>(get(name), name, kind_name(Kind::Diagonal));
}
CellularMapData Catalog::cellular_map(const std::string& name) const {
  return expect_kind<CellularMapData>(get(name), name, kind_name(Kind::CellularMap));
}
ExpectedValue Catalog::expected(const std::string& name) const {
  return expect_kind<ExpectedValue>(get(name), name, kind_name(Kind::Expected));
}

std::string Catalog::entry_text(const std::string& name) const {
  const auto it = data_->owner.find(name);
  if (it == data_->owner.end()) throw UnknownArtifact("no corpus entry named \"" + name + "\"");
  return data_->files.at(it->second).at(name).dump(2);
}

void Catalog::validate() const {
  for (const auto& [name, file] : data_->owner) {
    try {
      get(name);
    } catch (const Error& e) {
      throw FormatError(file + ": entry \"" + name + "\": " + e.what());
    }
  }
}

std::vector<MutationSite> Catalog::mutation_sites() const {
  std::vector<MutationSite> out;
  for (const auto& [file, j] : data_->files) collect_sites(j, "", nullptr, false, file, out);
  return out;
}

Catalog Catalog::with_mutation(const MutationSite& site) const {
  auto data = std::make_shared<Data>(*data_);
  auto fit = data->files.find(site.file);
  if (fit == data->files.end()) throw UnknownArtifact("no corpus file " + site.file);
  json& leaf = fit->second.at(json::json_pointer(site.pointer));
  // The group is the one declared by the nearest enclosing object.
  const GroupContext* group = nullptr;
  json::json_pointer ptr(site.pointer);
  while (!ptr.empty()) {
    ptr = ptr.parent_pointer();
    const json& node = fit->second.at(ptr);
    if (node.is_object() && node.contains("group")) {
      group = &io::group_of(node);
      break;
    }
  }
  if (!group || !leaf.is_string()) throw FormatError("not a mutation site: " + site.describe());
  const RingElement x = parse_element(*group, leaf.get<std::string>());
  if (site.term >= x.support_size()) throw FormatError("no such term: " + site.describe());
  RingElement y(*group);
  std::size_t t = 0;
  for (const auto& [g, c] : x.terms()) y.add_term(g, t++ == site.term ? Integer(-c) : c);
  leaf = format_element(y);
  return Catalog(std::move(data));
}

}  // namespace pd3
