#pragma once

// Words, confluent rewriting systems and normal forms for the small groups
// used throughout the library: S3, the amalgam Pi = S3 *_{Z/2} S3, the
// cyclic groups Z2 = <a> and Z3 = <b>, the index-two subgroup Pi' = <b, c>,
// and the free group on a, b, c.
//
// Normal forms are strings of generator letters.  In every finite-order
// context the alphabet is {a, b, c} and the rules move a to the left:
// ba -> abb, ca -> acc.  The free group additionally uses the upper-case
// letters A, B, C for inverses.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pd3/error.hpp"

namespace pd3 {

enum class Generator : char { a = 'a', b = 'b', c = 'c' };

struct Syllable {
  Generator gen;
  int exponent;  // nonzero; negative only in free words such as relators

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// Grammar: `1` or `*`-separated factors `x` / `x^k` with x in {a,b,c} and k a
// nonzero integer.  Whitespace is ignored.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

enum class GroupId { S3, Pi, Z2, Z3, PiPrime, Free, Custom };

struct RewriteRule {
  std::string lhs;
  std::string rhs;
};

class GroupContext {
 public:
  // Built-in contexts live for the whole program.
  static const GroupContext& get(GroupId id);
  // Accepts "S3", "Pi", "Z2", "Z3", "PiPrime", "Free" (case-insensitive).
  static const GroupContext& by_name(std::string_view name);

  // Ad-hoc rule sets, mainly for exercising check_confluence.  The caller
  // owns the object and must keep it alive while elements refer to it.
  GroupContext(std::string name, std::string symbols,
               std::vector<RewriteRule> rules);

  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  GroupId id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  // Generator letters available in this context, e.g. "ab" for S3.
  const std::string& symbols() const noexcept { return symbols_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  bool is_finite() const noexcept;
  bool has_symbol(Generator g) const noexcept;

  // Letter string for x^k (k may be negative).
  std::string power(Generator g, int k) const;
  // Rewrites to the unique irreducible word, leftmost redex first.
  std::string reduce(std::string letters) const;
  bool is_irreducible(std::string_view letters) const;

 private:
  GroupContext(GroupId id, std::string name, std::string symbols,
               std::vector<RewriteRule> rules, bool free);

  GroupId id_;
  std::string name_;
  std::string symbols_;
  std::vector<RewriteRule> rules_;
  bool free_;
  std::size_t max_lhs_ = 0;
};

class GroupElement {
 public:
  explicit GroupElement(const GroupContext& ctx) : ctx_(&ctx) {}

  const GroupContext& context() const noexcept { return *ctx_; }
  const std::string& letters() const noexcept { return nf_; }
  Word word() const;
  bool is_identity() const noexcept { return nf_.empty(); }
  // a-prefix exponent (0 or 1); this is the image in Pi/Pi' = Z/2.
  int a_exponent() const noexcept { return !nf_.empty() && nf_[0] == 'a'; }
  // Syllable count of the normal form: epsilon plus the number of b/c
  // syllables in Pi, so b and b^2 both count once.
  int length() const noexcept;
  std::string to_string() const { return format_word(word()); }

  // Shortlex order on normal forms (length first, then a < b < c).
  friend std::strong_ordering operator<=>(const GroupElement& x,
                                          const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.ctx_ == y.ctx_ && x.nf_ == y.nf_;
  }

 private:
  friend GroupElement from_irreducible(const GroupContext&, std::string);
  const GroupContext* ctx_;
  std::string nf_;
};

// Wraps an already-irreducible letter string.  Used by hot loops that build
// normal forms structurally; no reduction is performed.
GroupElement from_irreducible(const GroupContext& ctx, std::string letters);

GroupElement normalize(const GroupContext& ctx, const Word& w);
GroupElement normalize(const GroupContext& ctx, std::string_view text);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
GroupElement generator(const GroupContext& ctx, Generator g);

// All elements of a finite context (max_len empty), or the ball of elements
// of length <= max_len, in shortlex order.
std::vector<GroupElement> enumerate(const GroupContext& ctx,
                                    std::optional<int> max_len);

struct CriticalPair {
  std::string overlap;
  std::string left_reduct;
  std::string right_reduct;
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t pairs_checked = 0;
  std::optional<CriticalPair> failure;
};

ConfluenceReport check_confluence(const GroupContext& ctx);

class GroupHom {
 public:
  // Throws InvalidHom unless every rewriting rule of the source holds in the
  // target under the given images.
  GroupHom(const GroupContext& source, const GroupContext& target,
           std::map<Generator, Word> images);

  static GroupHom identity(const GroupContext& ctx);

  const GroupContext& source() const noexcept { return *source_; }
  const GroupContext& target() const noexcept { return *target_; }
  const std::map<Generator, Word>& images() const noexcept { return images_; }

  GroupElement operator()(const GroupElement& x) const;

 private:
  const GroupContext* source_;
  const GroupContext* target_;
  std::map<Generator, Word> images_;
  std::map<char, std::string> letter_images_;
};

GroupElement apply_hom(const GroupHom& h, const GroupElement& x);

// The homomorphisms named in the construction.
namespace homs {
GroupHom retraction_b();     // Pi -> S3, c -> 1 (collapses {c, t})
GroupHom retraction_c();     // Pi -> S3, b -> 1 then c -> b (collapses {b, s})
GroupHom abelianization();   // Pi -> Z2
GroupHom inclusion_b();      // S3 -> Pi, b -> b
GroupHom inclusion_c();      // S3 -> Pi, b -> c
GroupHom inclusion_a_s3();   // Z2 -> S3
GroupHom inclusion_a_pi();   // Z2 -> Pi
GroupHom inclusion_b_s3();   // Z3 -> S3
}  // namespace homs

}  // namespace pd3

template <>
struct std::hash<pd3::GroupElement> {
  std::size_t operator()(const pd3::GroupElement& g) const noexcept {
    return std::hash<std::string>{}(g.letters());
  }
};
