#pragma once

// The shipped constants: presentations, displayed complexes, cycles, bases,
// cellular maps, ring elements, diagonal tables and expected invariants.
// Entries are JSON documents compiled into the library; a directory with the
// same file names can replace them.  A catalog is read-only once built.

#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pd3/complex.hpp"
#include "pd3/homology.hpp"
#include "pd3/tensor.hpp"

namespace pd3 {

// A cellular map between the Fox-Lyndon complexes of two presentations
// (named as in presentations.json), given by its matrices in the Fox bases.
struct CellularMapData {
  std::string hom;
  std::string source;
  std::string target;
  std::vector<RingMatrix> cells;  // degree 0, 1, 2; entries in the target ring
};

struct ExpectedValue {
  std::vector<AbelianGroupDescriptor> groups;
  std::vector<long> values;
};

using Payload = std::variant<Presentation, FreeComplex, Chain, BasisChange, RingElement,
                             DiagonalTable, CellularMapData, ExpectedValue>;

// One coefficient of one ring element somewhere in the corpus.
struct MutationSite {
  std::string file;
  std::string pointer;  // JSON pointer to the element string
  std::size_t term = 0; // index in canonical term order
  std::string describe() const;
};

class Catalog {
 public:
  // Compiled-in corpus, parsed and validated once.
  static const Catalog& embedded();
  // Reads every corpus file from `dir`; throws FormatError on any defect.
  static Catalog from_directory(const std::filesystem::path& dir);

  // SHA-256 over the canonical form of every file, hex encoded.
  const std::string& content_hash() const noexcept { return hash_; }
  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;

  // Throws UnknownArtifact.
  Payload get(const std::string& name) const;

  // Typed access; FormatError when the entry has another kind.
  Presentation presentation(const std::string& name) const;
  FreeComplex complex(const std::string& name) const;
  Chain chain(const std::string& name) const;
  BasisChange basis(const std::string& name) const;
  RingElement element(const std::string& name) const;
  DiagonalTable diagonal(const std::string& name) const;
  CellularMapData cellular_map(const std::string& name) const;
  ExpectedValue expected(const std::string& name) const;

  // Raw JSON text of one entry, as shipped.
  std::string entry_text(const std::string& name) const;

  // Decodes every entry; throws on the first defect.
  void validate() const;

  std::vector<MutationSite> mutation_sites() const;
  // Copy with the coefficient at `site` negated.  Not validated: the checks
  // are expected to notice.
  Catalog with_mutation(const MutationSite& site) const;

 private:
  struct Data;
  explicit Catalog(std::shared_ptr<const Data> data);
  static std::shared_ptr<const Data> build(
      const std::vector<std::pair<std::string, std::string>>& files);
  std::shared_ptr<const Data> data_;
  std::string hash_;
};

}  // namespace pd3
